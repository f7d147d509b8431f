#pragma once

#include "biform/double_form.hpp"

#include <map>
#include <string>
#include <vector>

namespace biform {

// Sparse exterior form of one degree: coefficients against the
// orthonormal wedge basis e_{i_1} ^ ... ^ e_{i_d}.
class ExteriorForm {
public:
    ExteriorForm() = default;
    ExteriorForm(int n, int degree) : n_(n), degree_(degree) {}

    int dimension() const { return n_; }
    int degree() const { return degree_; }
    const std::map<MultiIndex, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational coefficient(const MultiIndex& idx) const;
    void add_term(MultiIndex idx, const Rational& value);

    friend bool operator==(const ExteriorForm&, const ExteriorForm&) = default;

private:
    int n_ = 0;
    int degree_ = 0;
    std::map<MultiIndex, Rational> terms_;
};

// Full antisymmetrization of a (p,p) double form into a 2p-form,
// computed as the shuffle-grouped form of the (2p)!-permutation
// definition: Alt(w) = (p!)^2/(2p)! sum over disjoint splits.
// Automatically zero when 2p > n; the zero form maps to the degree-0
// zero form.
ExteriorForm alt(const DoubleForm& omega);

// First Bianchi map S: (p,q) -> (p+1,q-1); zero when q = 0.
DoubleForm bianchi(const DoubleForm& omega);

// Normalization constant kept symbolic: value * pi^pi_exponent.
struct Normalization {
    Rational value;
    int pi_exponent = 0;

    friend bool operator==(const Normalization&, const Normalization&) = default;
};

// A (2,2) double form validated to be symmetric and first-Bianchi
// unless explicitly overridden.
class CurvatureTensor {
public:
    static CurvatureTensor make(const DoubleForm& form, bool allow_bianchi_violation = false);

    const DoubleForm& form() const { return form_; }
    int dimension() const { return form_.dimension(); }

private:
    explicit CurvatureTensor(DoubleForm form) : form_(std::move(form)) {}
    DoubleForm form_;
};

// P_k(R) = 1/((k!)^2 (2 pi)^{2k}) Alt(R^k o R^k): exact exterior part
// plus the symbolic constant. Zero form when 4k > n.
std::pair<ExteriorForm, Normalization> pontrjagin_form(const CurvatureTensor& R, int k);

// Alt[(R o R)^{k_1} (R^2 o R^2)^{k_2} ... (R^m o R^m)^{k_m}] with its
// displayed constant; exponents[i-1] = k_i, k = sum i*k_i, 4k <= n.
std::pair<ExteriorForm, Normalization> pontrjagin_product(const CurvatureTensor& R,
                                                          const std::vector<int>& exponents);

struct PurityReport {
    bool pure = false;
    // nonzero off-diagonal coefficients in the supplied basis
    std::vector<std::pair<std::pair<MultiIndex, MultiIndex>, Rational>> residual;
};

// Exact rational orthogonal matrix, columns are the basis vectors.
using BasisMatrix = std::vector<std::vector<Rational>>;

// Re-expresses omega in the supplied orthonormal basis and checks that
// every off-diagonal coefficient vanishes. Throws on a non-orthogonal
// basis.
PurityReport is_pure_in_basis(const DoubleForm& omega, const BasisMatrix& basis);

// Generators of purity examples.
// sum lambda_{ij} e_ij (x) e_ij over unordered pairs i < j.
CurvatureTensor pure_curvature(int n, const std::map<std::pair<int, int>, Rational>& lambda);
// c * g^2/2, constant sectional curvature.
CurvatureTensor constant_curvature(int n, const Rational& c);
// Exterior product chain of symmetric (1,1) forms.
DoubleForm product_of_bilinears(const std::vector<DoubleForm>& factors);

}  // namespace biform
