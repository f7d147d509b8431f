#pragma once

#include "biform/multi_index.hpp"
#include "biform/rational.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace biform {

// Basis label e_I (x) e_J of a double form term.
struct TermKey {
    MultiIndex row;  // first slot, degree p
    MultiIndex col;  // second slot, degree q

    friend bool operator==(const TermKey&, const TermKey&) = default;
};

// Ordered by bidegree first so inhomogeneous values group naturally.
struct TermKeyLess {
    bool operator()(const TermKey& a, const TermKey& b) const {
        if (a.row.size() != b.row.size()) return a.row.size() < b.row.size();
        if (a.col.size() != b.col.size()) return a.col.size() < b.col.size();
        if (a.row != b.row) return a.row < b.row;
        return a.col < b.col;
    }
};

using TermMap = std::map<TermKey, Rational, TermKeyLess>;

// Sparse element of the bigraded algebra Lambda V* (x) Lambda V*.
// Inhomogeneous values (mixed bidegrees) are first-class; no zero
// coefficients are stored.
class DoubleForm {
public:
    DoubleForm() = default;
    explicit DoubleForm(int n) : n_(n) {}

    // Validating constructor; duplicate (I,J) entries are summed, zeros
    // dropped. Throws std::invalid_argument naming the offending entry.
    static DoubleForm make(int n,
                           const std::vector<std::tuple<MultiIndex, MultiIndex, Rational>>& entries);

    static DoubleForm zero(int n) { return DoubleForm(n); }
    static DoubleForm scalar(int n, const Rational& value);

    int dimension() const { return n_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational coefficient(const MultiIndex& row, const MultiIndex& col) const;

    // Accumulates, dropping the entry if it cancels.
    void add_term(MultiIndex row, MultiIndex col, const Rational& value);

    // The coefficient of the empty/empty term (the scalar part).
    Rational scalar_part() const { return coefficient({}, {}); }

    // (p,q) if every term shares that bidegree; nullopt for mixed or zero.
    std::optional<std::pair<int, int>> bidegree() const;
    bool is_homogeneous(int p, int q) const;

    // The (p,q)-homogeneous component.
    DoubleForm component(int p, int q) const;

    friend bool operator==(const DoubleForm&, const DoubleForm&);

private:
    int n_ = 0;
    TermMap terms_;
};

DoubleForm operator+(const DoubleForm& a, const DoubleForm& b);
DoubleForm operator-(const DoubleForm& a, const DoubleForm& b);
DoubleForm operator*(const Rational& s, const DoubleForm& a);

// Slot-wise wedge product, Kulkarni-Nomizu style on (1,1) forms.
DoubleForm exterior_product(const DoubleForm& a, const DoubleForm& b);

// k-fold exterior power; power 0 is the scalar 1.
DoubleForm exterior_power(const DoubleForm& a, int k);

// Swaps the two slots; an involution.
DoubleForm transpose(const DoubleForm& a);

// Sum of coefficient products over shared basis labels; terms of
// different bidegree are orthogonal.
Rational inner_product(const DoubleForm& a, const DoubleForm& b);

// Ricci contraction c: (p,q) -> (p-1,q-1); zero on p=0 or q=0 parts.
DoubleForm contraction(const DoubleForm& a);
DoubleForm contraction_power(const DoubleForm& a, int k);

// The flat metric g = sum e_i (x) e_i and its exterior powers.
DoubleForm metric(int n);
DoubleForm metric_power(int n, int p);

// g^p / p!, the unit of the composition algebra on bidegree (p,p).
DoubleForm metric_power_normalized(int n, int p);

// Volume double form g^n / n!.
DoubleForm volume(int n);

}  // namespace biform
