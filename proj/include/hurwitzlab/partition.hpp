#pragma once

#include "hurwitzlab/rational.hpp"

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace hwl {

/// Integer partition in canonical form: weakly decreasing positive parts.
/// Doubles as a ramification profile and as a label for S_d irreducibles.
class Partition {
public:
    Partition() = default;

    Partition(std::initializer_list<int> parts) : parts_(parts) { canonicalize(); }

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) { canonicalize(); }

    int weight() const {
        int w = 0;
        for (int p : parts_) w += p;
        return w;
    }

    int length() const { return static_cast<int>(parts_.size()); }

    bool empty() const { return parts_.empty(); }

    const std::vector<int>& parts() const { return parts_; }

    int part(int i) const { return parts_.at(static_cast<std::size_t>(i)); }

    /// Transpose of the Young diagram.
    Partition conjugate() const {
        if (parts_.empty()) return {};
        std::vector<int> t(static_cast<std::size_t>(parts_[0]), 0);
        for (int p : parts_)
            for (int j = 0; j < p; ++j) ++t[static_cast<std::size_t>(j)];
        return Partition(std::move(t));
    }

    /// Multiplicity map: part value -> number of parts with that value.
    std::map<int, int> multiplicities() const {
        std::map<int, int> m;
        for (int p : parts_) ++m[p];
        return m;
    }

    auto operator<=>(const Partition&) const = default;

private:
    void canonicalize() {
        for (int p : parts_)
            if (p <= 0) throw std::invalid_argument("Partition: parts must be positive");
        std::sort(parts_.begin(), parts_.end(), std::greater<int>());
    }

    std::vector<int> parts_;
};

/// z_Delta = prod_i i^{m_i} m_i!, the centralizer order of a permutation of
/// cycle type Delta.
inline Int z_factor(const Partition& p) {
    Int z = 1;
    for (auto [value, mult] : p.multiplicities()) {
        z *= int_pow(Int(value), static_cast<unsigned>(mult));
        z *= factorial(mult);
    }
    return z;
}

/// |C_Delta| = d!/z_Delta, the size of the conjugacy class in S_d.
inline Int class_size(const Partition& p) {
    Int d_fact = factorial(p.weight());
    Int z = z_factor(p);
    // z always divides d!
    return d_fact / z;
}

/// dim lambda by the hook-length formula; strictly positive.
inline Int dimension(const Partition& p) {
    int d = p.weight();
    if (d == 0) return 1;
    Partition tr = p.conjugate();
    Int hooks = 1;
    for (int i = 0; i < p.length(); ++i)
        for (int j = 0; j < p.part(i); ++j)
            hooks *= (p.part(i) - j) + (tr.part(j) - i) - 1;
    return factorial(d) / hooks;
}

/// Sum of contents (column - row) over all cells of the diagram.
inline long long content_sum(const Partition& p) {
    long long s = 0;
    for (int i = 0; i < p.length(); ++i)
        for (int j = 0; j < p.part(i); ++j) s += j - i;
    return s;
}

inline constexpr int kPartitionEnumerationBound = 30;

/// All partitions of weight d in reverse lexicographic order, (d) first,
/// (1^d) last.
inline std::vector<Partition> enumerate_partitions(int d,
                                                   int bound = kPartitionEnumerationBound) {
    if (d < 0) throw std::invalid_argument("enumerate_partitions: negative weight");
    if (d > bound) throw std::invalid_argument("enumerate_partitions: weight exceeds bound");
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rest, int maxpart) -> void {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int v = std::min(maxpart, rest); v >= 1; --v) {
            cur.push_back(v);
            self(self, rest - v, v);
            cur.pop_back();
        }
    };
    rec(rec, d, d == 0 ? 1 : d);
    return out;
}

/// Canonical emission: "[3,1,1]"; the empty partition prints "[]".
inline std::string to_string(const Partition& p) {
    std::string s = "[";
    for (int i = 0; i < p.length(); ++i) {
        if (i) s += ",";
        s += std::to_string(p.part(i));
    }
    return s + "]";
}

/// Parses "[3,1,1]" (bracketed) or "1^2 3" (exponent notation).
inline Partition parse_partition(const std::string& text) {
    auto first = text.find_first_not_of(" \t");
    if (first == std::string::npos) throw std::invalid_argument("parse_partition: empty input");
    std::vector<int> parts;
    if (text[first] == '[') {
        auto close = text.find(']', first);
        if (close == std::string::npos)
            throw std::invalid_argument("parse_partition: missing ']'");
        std::string body = text.substr(first + 1, close - first - 1);
        std::stringstream ss(body);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.find_first_not_of(" \t") == std::string::npos) continue;
            parts.push_back(std::stoi(item));
        }
    } else {
        std::stringstream ss(text);
        std::string tok;
        while (ss >> tok) {
            auto caret = tok.find('^');
            if (caret == std::string::npos) {
                parts.push_back(std::stoi(tok));
            } else {
                int value = std::stoi(tok.substr(0, caret));
                int mult = std::stoi(tok.substr(caret + 1));
                if (mult < 0) throw std::invalid_argument("parse_partition: negative multiplicity");
                for (int k = 0; k < mult; ++k) parts.push_back(value);
            }
        }
    }
    return Partition(std::move(parts));
}

}  // namespace hwl
