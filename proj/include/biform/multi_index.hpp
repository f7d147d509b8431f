#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace biform {

// Strictly increasing tuple of 1-based indices; the basis label of
// e_{i_1} ^ ... ^ e_{i_p} in Lambda^p. The empty tuple is degree 0.
using MultiIndex = std::vector<int>;

bool is_valid_multi_index(const MultiIndex& idx, int n);

// All C(n,p) multi-indices in lexicographic order; this order is the
// canonical basis order for operator blocks and serialization.
// Out-of-range p yields an empty list.
std::vector<MultiIndex> enumerate_multi_indices(int n, int p);

// Position of idx in enumerate_multi_indices(n, |idx|).
std::size_t lex_rank(const MultiIndex& idx, int n);

// e_I ^ e_J = sign * e_K for disjoint I, J; nullopt if they overlap.
std::optional<std::pair<MultiIndex, int>> merge_with_sign(const MultiIndex& lhs,
                                                          const MultiIndex& rhs);

// Complement Ic with e_I ^ e_Ic = sign * e_{1..n}.
std::pair<MultiIndex, int> complement_with_sign(const MultiIndex& idx, int n);

// True if sub is a subset of idx (both strictly increasing).
bool contains_all(const MultiIndex& idx, const MultiIndex& sub);

// idx minus sub, assuming sub is a subset.
MultiIndex difference(const MultiIndex& idx, const MultiIndex& sub);

}  // namespace biform
