#pragma once
// Symmetric groups as permutation lists; ground truth for block-permutation matrix groups.

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

namespace oracle {

using Perm = std::vector<int>;

inline std::vector<Perm> all_permutations(int n) {
    Perm p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::vector<Perm> out;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

inline int cycle_count(const Perm& p) {
    std::vector<bool> seen(p.size(), false);
    int cycles = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        ++cycles;
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p[j])) seen[j] = true;
    }
    return cycles;
}

/// Sorted cycle lengths.
inline std::vector<int> cycle_type(const Perm& p) {
    std::vector<bool> seen(p.size(), false);
    std::vector<int> out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p[j])) {
            seen[j] = true;
            ++len;
        }
        out.push_back(len);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Fixed-space codimension of sigma acting on (C^block)^n by permuting blocks.
inline int block_fixed_codim(const Perm& p, int block) {
    return block * (static_cast<int>(p.size()) - cycle_count(p));
}

/// Conjugacy class sizes of S_n, ascending (classes are cycle types).
inline std::vector<std::size_t> class_sizes(int n) {
    std::map<std::vector<int>, std::size_t> count;
    for (const auto& p : all_permutations(n)) ++count[cycle_type(p)];
    std::vector<std::size_t> out;
    for (const auto& [type, c] : count) out.push_back(c);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace oracle
