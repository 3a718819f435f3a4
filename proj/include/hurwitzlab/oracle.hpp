#pragma once

#include "hurwitzlab/hurwitz.hpp"
#include "hurwitzlab/partition.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace hwl {

inline constexpr int kOracleDegreeBound = 6;

/// Dense multiplication/inversion tables for S_d, d <= 6, with conjugacy
/// classes indexed by cycle type. Permutations are ranked in lexicographic
/// order of their one-line form.
class SymmetricGroupTable {
public:
    explicit SymmetricGroupTable(int degree) : d_(degree) {
        if (degree < 1 || degree > kOracleDegreeBound)
            throw std::invalid_argument("SymmetricGroupTable: degree bound exceeded");
        std::vector<int> perm(static_cast<std::size_t>(d_));
        std::iota(perm.begin(), perm.end(), 0);
        do {
            elems_.push_back(perm);
        } while (std::next_permutation(perm.begin(), perm.end()));
        order_ = static_cast<int>(elems_.size());

        types_ = enumerate_partitions(d_);
        type_of_.resize(static_cast<std::size_t>(order_));
        classes_.resize(types_.size());
        for (int e = 0; e < order_; ++e) {
            int t = type_index(cycle_type(elems_[static_cast<std::size_t>(e)]));
            type_of_[static_cast<std::size_t>(e)] = static_cast<std::uint16_t>(t);
            classes_[static_cast<std::size_t>(t)].push_back(static_cast<std::uint16_t>(e));
        }

        mul_.resize(static_cast<std::size_t>(order_) * static_cast<std::size_t>(order_));
        inv_.resize(static_cast<std::size_t>(order_));
        std::vector<int> composed(static_cast<std::size_t>(d_));
        for (int a = 0; a < order_; ++a) {
            for (int b = 0; b < order_; ++b) {
                // (a*b)(x) = a(b(x))
                for (int x = 0; x < d_; ++x)
                    composed[static_cast<std::size_t>(x)] =
                        elems_[static_cast<std::size_t>(a)][static_cast<std::size_t>(
                            elems_[static_cast<std::size_t>(b)][static_cast<std::size_t>(x)])];
                std::uint16_t r = static_cast<std::uint16_t>(rank(composed));
                mul_[static_cast<std::size_t>(a) * static_cast<std::size_t>(order_) +
                     static_cast<std::size_t>(b)] = r;
                if (r == identity()) inv_[static_cast<std::size_t>(a)] = static_cast<std::uint16_t>(b);
            }
        }
    }

    int degree() const { return d_; }
    int order() const { return order_; }
    std::uint16_t identity() const { return 0; }  // lex rank of the identity

    std::uint16_t mul(std::uint16_t a, std::uint16_t b) const {
        return mul_[static_cast<std::size_t>(a) * static_cast<std::size_t>(order_) +
                    static_cast<std::size_t>(b)];
    }
    std::uint16_t inv(std::uint16_t a) const { return inv_[a]; }
    std::uint16_t type_of(std::uint16_t a) const { return type_of_[a]; }

    int type_index(const Partition& p) const {
        for (std::size_t i = 0; i < types_.size(); ++i)
            if (types_[i] == p) return static_cast<int>(i);
        throw std::invalid_argument("SymmetricGroupTable: unknown cycle type");
    }

    const std::vector<std::uint16_t>& class_members(const Partition& p) const {
        return classes_[static_cast<std::size_t>(type_index(p))];
    }

private:
    Partition cycle_type(const std::vector<int>& perm) const {
        std::vector<bool> seen(static_cast<std::size_t>(d_), false);
        std::vector<int> cycles;
        for (int s = 0; s < d_; ++s) {
            if (seen[static_cast<std::size_t>(s)]) continue;
            int len = 0;
            for (int x = s; !seen[static_cast<std::size_t>(x)]; x = perm[static_cast<std::size_t>(x)]) {
                seen[static_cast<std::size_t>(x)] = true;
                ++len;
            }
            cycles.push_back(len);
        }
        return Partition(std::move(cycles));
    }

    // Lehmer rank of a one-line permutation under lexicographic enumeration.
    int rank(const std::vector<int>& perm) const {
        int r = 0;
        for (int i = 0; i < d_; ++i) {
            int smaller = 0;
            for (int j = i + 1; j < d_; ++j)
                if (perm[static_cast<std::size_t>(j)] < perm[static_cast<std::size_t>(i)]) ++smaller;
            int f = 1;
            for (int k = 2; k <= d_ - 1 - i; ++k) f *= k;
            r += smaller * f;
        }
        return r;
    }

    int d_;
    int order_ = 0;
    std::vector<std::vector<int>> elems_;
    std::vector<std::uint16_t> mul_;
    std::vector<std::uint16_t> inv_;
    std::vector<std::uint16_t> type_of_;
    std::vector<Partition> types_;
    std::vector<std::vector<std::uint16_t>> classes_;
};

namespace detail {

// Counts tuples (free_1..free_k, X_1..X_F) with X_i in class C_{Delta^i} and
// prefix * X_1...X_F = identity, where prefix is built from the free
// generators by `shape` (commutators or squares). The last constrained factor
// is never enumerated: it is solved for and checked against its class.
template <typename PrefixFn>
std::uint64_t count_with_free_generators(const SymmetricGroupTable& table, int free_count,
                                         PrefixFn&& prefix_of, const std::vector<Partition>& profiles) {
    const int order = table.order();
    std::uint64_t count = 0;

    std::vector<std::uint16_t> gens(static_cast<std::size_t>(free_count), 0);
    auto count_constrained = [&](std::uint16_t prefix) {
        int f = static_cast<int>(profiles.size());
        if (f == 0) {
            if (prefix == table.identity()) ++count;
            return;
        }
        int last_type = table.type_index(profiles[static_cast<std::size_t>(f - 1)]);
        auto rec = [&](auto&& self, int slot, std::uint16_t acc) -> void {
            if (slot == f - 1) {
                // acc * X_last = e  =>  X_last = acc^{-1}
                if (table.type_of(table.inv(acc)) == last_type) ++count;
                return;
            }
            for (std::uint16_t x : table.class_members(profiles[static_cast<std::size_t>(slot)]))
                self(self, slot + 1, table.mul(acc, x));
        };
        rec(rec, 0, prefix);
    };

    auto rec_gens = [&](auto&& self, int slot) -> void {
        if (slot == free_count) {
            count_constrained(prefix_of(gens));
            return;
        }
        for (int v = 0; v < order; ++v) {
            gens[static_cast<std::size_t>(slot)] = static_cast<std::uint16_t>(v);
            self(self, slot + 1);
        }
    };
    rec_gens(rec_gens, 0);
    return count;
}

}  // namespace detail

struct OracleResult {
    std::uint64_t count = 0;   // solutions of the relator equation
    Rational value;            // count / d!
};

/// Orientable oracle: counts (a_1,b_1,..,a_g,b_g,X_1..X_F) in S_d with
/// prod [a_j,b_j] X_1...X_F = 1 and X_i in C_{Delta^i}; value = count/d!.
/// Equals the Frobenius formula at E = 2-2g.
inline OracleResult oracle_orientable(int genus, const std::vector<Partition>& profiles, int degree) {
    if (degree < 1 || degree > kOracleDegreeBound)
        throw std::invalid_argument("oracle_orientable: degree bound exceeded");
    if (genus < 0) throw std::invalid_argument("oracle_orientable: negative genus");
    for (const auto& p : profiles)
        if (p.weight() != degree) throw std::invalid_argument("oracle_orientable: profile weight mismatch");

    SymmetricGroupTable table(degree);
    auto prefix = [&](const std::vector<std::uint16_t>& gens) {
        std::uint16_t acc = table.identity();
        for (int j = 0; j < genus; ++j) {
            std::uint16_t a = gens[static_cast<std::size_t>(2 * j)];
            std::uint16_t b = gens[static_cast<std::size_t>(2 * j + 1)];
            std::uint16_t com = table.mul(table.mul(a, b), table.mul(table.inv(a), table.inv(b)));
            acc = table.mul(acc, com);
        }
        return acc;
    };
    OracleResult r;
    r.count = detail::count_with_free_generators(table, 2 * genus, prefix, profiles);
    r.value = Rational(Int(r.count), factorial(degree));
    return r;
}

/// Non-orientable oracle: counts (R_1..R_k,X_1..X_F) with
/// R_1^2...R_k^2 X_1...X_F = 1; cross-cap count k gives base Euler
/// characteristic E = 2-k (k=1 projective plane, k=2 Klein bottle).
inline OracleResult oracle_nonorientable(int crosscaps, const std::vector<Partition>& profiles,
                                         int degree) {
    if (degree < 1 || degree > kOracleDegreeBound)
        throw std::invalid_argument("oracle_nonorientable: degree bound exceeded");
    if (crosscaps < 1) throw std::invalid_argument("oracle_nonorientable: need at least one cross-cap");
    for (const auto& p : profiles)
        if (p.weight() != degree)
            throw std::invalid_argument("oracle_nonorientable: profile weight mismatch");

    SymmetricGroupTable table(degree);
    auto prefix = [&](const std::vector<std::uint16_t>& gens) {
        std::uint16_t acc = table.identity();
        for (std::uint16_t r : gens) acc = table.mul(acc, table.mul(r, r));
        return acc;
    };
    OracleResult r;
    r.count = detail::count_with_free_generators(table, crosscaps, prefix, profiles);
    r.value = Rational(Int(r.count), factorial(degree));
    return r;
}

}  // namespace hwl
