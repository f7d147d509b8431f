#pragma once

#include "biform/double_form.hpp"

#include <vector>

namespace biform {

// Dense matrix of the endomorphism T(omega) restricted to one bidegree.
// For omega homogeneous of bidegree (p,q), T(omega) maps Lambda^p
// coordinates to Lambda^q coordinates: rows are indexed by the
// lexicographic Lambda^q basis, columns by the Lambda^p basis, and
// entry[row J][col I] = omega(e_I, e_J). With this orientation
// T(omega1 o omega2) = T(omega1) * T(omega2) on compatible blocks.
struct OperatorBlock {
    int n = 0;
    int row_degree = 0;  // q, output degree
    int col_degree = 0;  // p, input degree
    std::vector<std::vector<Rational>> matrix;

    static OperatorBlock identity(int n, int p);

    friend bool operator==(const OperatorBlock&, const OperatorBlock&) = default;
};

OperatorBlock multiply(const OperatorBlock& a, const OperatorBlock& b);
OperatorBlock block_transpose(const OperatorBlock& a);

// Greub's composition product, computed termwise from
// (t1 (x) t2) o (t3 (x) t4) = <t1,t4> t3 (x) t2. Bidegree components
// (p,q) o (r,s) vanish unless p = s; the result lands in (r,q).
DoubleForm compose(const DoubleForm& a, const DoubleForm& b);

// T restricted to one bidegree; throws on non-homogeneous input.
// The two-argument overload infers the bidegree from the form and so
// rejects the zero form; pass (p, q) explicitly to allow it.
OperatorBlock to_operator(const DoubleForm& omega);
OperatorBlock to_operator(const DoubleForm& omega, int p, int q);
DoubleForm from_operator(const OperatorBlock& block);

// r-fold composition power of a (1,1) form; r = 0 gives the unit g.
DoubleForm comp_power(const DoubleForm& h, int r);

// Trace of the r-th composition power, the Newton power sum p_r(h).
Rational power_sum(const DoubleForm& h, int r);

}  // namespace biform
