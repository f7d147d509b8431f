#include "biform/multi_index.hpp"

#include <algorithm>
#include <iterator>

namespace biform {

bool is_valid_multi_index(const MultiIndex& idx, int n) {
    if (static_cast<int>(idx.size()) > n) return false;
    int prev = 0;
    for (int i : idx) {
        if (i <= prev || i > n) return false;
        prev = i;
    }
    return true;
}

std::vector<MultiIndex> enumerate_multi_indices(int n, int p) {
    std::vector<MultiIndex> out;
    if (p < 0 || p > n) return out;
    MultiIndex cur(p);
    // iterative lexicographic combination generator
    for (int i = 0; i < p; ++i) cur[i] = i + 1;
    while (true) {
        out.push_back(cur);
        int i = p - 1;
        while (i >= 0 && cur[i] == n - (p - 1 - i)) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < p; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

std::size_t lex_rank(const MultiIndex& idx, int n) {
    // number of combinations lexicographically before idx
    auto choose = [](long long m, long long k) -> long long {
        if (k < 0 || k > m) return 0;
        long long r = 1;
        for (long long i = 0; i < k; ++i) r = r * (m - i) / (i + 1);
        return r;
    };
    const int p = static_cast<int>(idx.size());
    long long rank = 0;
    int prev = 0;
    for (int i = 0; i < p; ++i) {
        for (int v = prev + 1; v < idx[i]; ++v)
            rank += choose(n - v, p - i - 1);
        prev = idx[i];
    }
    return static_cast<std::size_t>(rank);
}

std::optional<std::pair<MultiIndex, int>> merge_with_sign(const MultiIndex& lhs,
                                                          const MultiIndex& rhs) {
    MultiIndex merged;
    merged.reserve(lhs.size() + rhs.size());
    std::size_t a = 0, b = 0;
    long long inversions = 0;
    while (a < lhs.size() && b < rhs.size()) {
        if (lhs[a] == rhs[b]) return std::nullopt;
        if (lhs[a] < rhs[b]) {
            merged.push_back(lhs[a++]);
        } else {
            // rhs[b] jumps over the remaining entries of lhs
            inversions += static_cast<long long>(lhs.size() - a);
            merged.push_back(rhs[b++]);
        }
    }
    while (a < lhs.size()) merged.push_back(lhs[a++]);
    while (b < rhs.size()) merged.push_back(rhs[b++]);
    return std::make_pair(std::move(merged), (inversions % 2 == 0) ? 1 : -1);
}

std::pair<MultiIndex, int> complement_with_sign(const MultiIndex& idx, int n) {
    MultiIndex comp;
    comp.reserve(n - idx.size());
    std::size_t a = 0;
    for (int v = 1; v <= n; ++v) {
        if (a < idx.size() && idx[a] == v) {
            ++a;
        } else {
            comp.push_back(v);
        }
    }
    auto merged = merge_with_sign(idx, comp);
    return {std::move(comp), merged->second};
}

bool contains_all(const MultiIndex& idx, const MultiIndex& sub) {
    return std::includes(idx.begin(), idx.end(), sub.begin(), sub.end());
}

MultiIndex difference(const MultiIndex& idx, const MultiIndex& sub) {
    MultiIndex out;
    out.reserve(idx.size() - sub.size());
    std::set_difference(idx.begin(), idx.end(), sub.begin(), sub.end(),
                        std::back_inserter(out));
    return out;
}

}  // namespace biform
