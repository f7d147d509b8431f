#pragma once

#include "biform/composition.hpp"
#include "biform/double_form.hpp"

namespace biform {

// e^h = sum_{p=0}^{n} h^p/p! (exterior powers; h^p = 0 above n).
// The inhomogeneous double form associated to the exterior-algebra
// extension of the endomorphism of h.
DoubleForm exp_ext(const DoubleForm& h);

// Right and left extension endomorphisms: hat_R(h, w) = e^h o w,
// hat_L(h, w) = w o e^{h^t}. Both are exterior algebra endomorphisms.
DoubleForm hat_R(const DoubleForm& h, const DoubleForm& omega);
DoubleForm hat_L(const DoubleForm& h, const DoubleForm& omega);

// det h, read off from h^n/n! = det h * g^n/n!.
Rational determinant(const DoubleForm& h);

// s_p(h) = i_{h^p/p!}(g^p/p!), the p-th characteristic coefficient
// (elementary symmetric function of the eigenvalues).
Rational invariant_s(const DoubleForm& h, int p);

// t_p(h) = i_{h^p/p!}(g^{p+1}/(p+1)!), the p-th Newton transformation.
DoubleForm newton_t(const DoubleForm& h, int p);

// s_(r,p)(h) = i_{h^p/p!}(g^{p+r}/(p+r)!), the (r,p) cofactor
// transformation.
DoubleForm cofactor_s(const DoubleForm& h, int r, int p);

// Cofactor transformation of a (p,p) double form,
// *(g^{n-pq-r} w^q / (n-pq-r)!). The equivalent interior-product route
// i_{w^q}(g^{pq+r}/(pq+r)!) is evaluated on every call and a mismatch
// raises; the two routes are algebraically identical.
DoubleForm cofactor_general(const DoubleForm& omega, int r, int q);

}  // namespace biform
