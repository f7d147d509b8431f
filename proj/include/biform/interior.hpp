#pragma once

#include "biform/double_form.hpp"

namespace biform {

// Classical interior product on the first slot by a (1,0) vector.
DoubleForm interior_left(const DoubleForm& v, const DoubleForm& omega);

// Interior product on the second slot by a (0,1) vector,
// equal to (i_v(omega^t))^t.
DoubleForm interior_right(const DoubleForm& w, const DoubleForm& omega);

// General interior product i_psi, the adjoint of left exterior
// multiplication mu_psi. For psi in D^{r,s} it maps D^{p,q} into
// D^{p-r,q-s} and vanishes when p < r or q < s. Satisfies
// i_psi o i_phi = i_{phi psi}; i_g is the contraction c.
DoubleForm interior(const DoubleForm& psi, const DoubleForm& omega);

// Left exterior multiplication mu_psi(omega) = psi omega.
DoubleForm mu(const DoubleForm& psi, const DoubleForm& omega);

// Double Hodge star: (p,q) -> (n-p,n-q) per component, independent of
// orientation; the identity on the diagonal subalgebra when applied
// twice.
DoubleForm hodge_star(const DoubleForm& omega);

}  // namespace biform
