#pragma once

#include "hurwitzlab/partition.hpp"
#include "hurwitzlab/rational.hpp"

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace hwl {

namespace detail {

// Border-strip removal on the beta-number (first-column hook) encoding.
// Strips are removed for the cycle lengths of Delta in decreasing order;
// the value does not depend on that order.
inline Int chi_rec(const Partition& lambda, const std::vector<int>& cycles, std::size_t ci,
                   std::map<std::pair<Partition, std::vector<int>>, Int>& memo) {
    if (ci == cycles.size()) return 1;  // lambda is empty here as well
    auto key = std::make_pair(lambda, std::vector<int>(cycles.begin() + static_cast<long>(ci),
                                                       cycles.end()));
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    int r = cycles[ci];
    int len = lambda.length();
    std::vector<int> beta(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i) beta[static_cast<std::size_t>(i)] = lambda.part(i) + (len - 1 - i);

    Int total = 0;
    for (int i = 0; i < len; ++i) {
        int b = beta[static_cast<std::size_t>(i)];
        int target = b - r;
        if (target < 0) continue;
        bool occupied = false;
        int height = 0;
        for (int k = 0; k < len; ++k) {
            if (k == i) continue;
            int v = beta[static_cast<std::size_t>(k)];
            if (v == target) { occupied = true; break; }
            if (v > target && v < b) ++height;
        }
        if (occupied) continue;

        std::vector<int> nb = beta;
        nb[static_cast<std::size_t>(i)] = target;
        std::sort(nb.begin(), nb.end(), std::greater<int>());
        std::vector<int> parts;
        for (int k = 0; k < len; ++k) {
            int part = nb[static_cast<std::size_t>(k)] - (len - 1 - k);
            if (part > 0) parts.push_back(part);
        }
        Int sub = chi_rec(Partition(std::move(parts)), cycles, ci + 1, memo);
        total += (height % 2 == 0) ? sub : -sub;
    }
    memo.emplace(std::move(key), total);
    return total;
}

inline std::map<std::pair<Partition, std::vector<int>>, Int>& chi_memo() {
    // One cache per worker thread; chi is pure, so private caches agree.
    thread_local std::map<std::pair<Partition, std::vector<int>>, Int> memo;
    return memo;
}

}  // namespace detail

/// Irreducible character chi_lambda(Delta) of S_d via the Murnaghan-Nakayama
/// border-strip recursion. Requires weight(lambda) == weight(Delta).
inline Int chi(const Partition& lambda, const Partition& delta) {
    if (lambda.weight() != delta.weight())
        throw std::invalid_argument("chi: weight mismatch between lambda and Delta");
    return detail::chi_rec(lambda, delta.parts(), 0, detail::chi_memo());
}

/// Normalized central character phi_lambda(Delta) = |C_Delta| chi/dim, and 0
/// when the weights differ.
inline Rational phi(const Partition& lambda, const Partition& delta) {
    if (lambda.weight() != delta.weight()) return Rational(0);
    return Rational(class_size(delta) * chi(lambda, delta), dimension(lambda));
}

}  // namespace hwl
