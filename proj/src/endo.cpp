#include "biform/endo.hpp"

#include "biform/interior.hpp"

#include <stdexcept>

namespace biform {

namespace {

void require_bilinear(const DoubleForm& h, const char* what) {
    if (!h.is_homogeneous(1, 1))
        throw std::invalid_argument(std::string(what) + " requires a (1,1) double form");
}

}  // namespace

DoubleForm exp_ext(const DoubleForm& h) {
    require_bilinear(h, "exp_ext");
    const int n = h.dimension();
    DoubleForm out = DoubleForm::scalar(n, 1);
    DoubleForm power = DoubleForm::scalar(n, 1);
    for (int p = 1; p <= n; ++p) {
        power = exterior_product(power, h);
        if (power.is_zero()) break;
        out = out + Rational(1) / factorial(p) * power;
    }
    return out;
}

DoubleForm hat_R(const DoubleForm& h, const DoubleForm& omega) {
    require_bilinear(h, "hat_R");
    return compose(exp_ext(h), omega);
}

DoubleForm hat_L(const DoubleForm& h, const DoubleForm& omega) {
    require_bilinear(h, "hat_L");
    return compose(omega, exp_ext(transpose(h)));
}

Rational determinant(const DoubleForm& h) {
    require_bilinear(h, "determinant");
    const int n = h.dimension();
    MultiIndex full(n);
    for (int i = 0; i < n; ++i) full[i] = i + 1;
    DoubleForm top = Rational(1) / factorial(n) * exterior_power(h, n);
    return top.coefficient(full, full);
}

Rational invariant_s(const DoubleForm& h, int p) {
    require_bilinear(h, "invariant_s");
    const int n = h.dimension();
    if (p < 0 || p > n) throw std::out_of_range("invariant_s requires 0 <= p <= n");
    DoubleForm hp = Rational(1) / factorial(p) * exterior_power(h, p);
    return interior(hp, metric_power_normalized(n, p)).scalar_part();
}

DoubleForm newton_t(const DoubleForm& h, int p) {
    require_bilinear(h, "newton_t");
    const int n = h.dimension();
    if (p < 0 || p > n - 1) throw std::out_of_range("newton_t requires 0 <= p <= n-1");
    DoubleForm hp = Rational(1) / factorial(p) * exterior_power(h, p);
    return interior(hp, metric_power_normalized(n, p + 1));
}

DoubleForm cofactor_s(const DoubleForm& h, int r, int p) {
    require_bilinear(h, "cofactor_s");
    const int n = h.dimension();
    if (r < 0 || p < 0 || p > n - r)
        throw std::out_of_range("cofactor_s requires 0 <= p <= n-r");
    DoubleForm hp = Rational(1) / factorial(p) * exterior_power(h, p);
    return interior(hp, metric_power_normalized(n, p + r));
}

DoubleForm cofactor_general(const DoubleForm& omega, int r, int q) {
    auto deg = omega.bidegree();
    if (!deg || deg->first != deg->second)
        throw std::invalid_argument("cofactor_general requires a (p,p) double form");
    const int p = deg->first;
    const int n = omega.dimension();
    const int pq = p * q;
    if (r < 0 || r > n - pq)
        throw std::out_of_range("cofactor_general requires 0 <= r <= n - p*q");
    DoubleForm wq = exterior_power(omega, q);
    DoubleForm star_route = hodge_star(
        Rational(1) / factorial(n - pq - r) *
        exterior_product(metric_power(n, n - pq - r), wq));
    DoubleForm interior_route = interior(wq, metric_power_normalized(n, pq + r));
    if (!(star_route == interior_route))
        throw std::logic_error("cofactor_general: star and interior routes disagree");
    return star_route;
}

}  // namespace biform
