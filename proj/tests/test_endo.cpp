#include "biform/endo.hpp"

#include "biform/interior.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace biform;

namespace {

DoubleForm diag(int n, std::vector<Rational> values) {
    DoubleForm h(n);
    for (int i = 1; i <= n; ++i) h.add_term({i}, {i}, values[i - 1]);
    return h;
}

}  // namespace

TEST_CASE("exponential extension") {
    CHECK(exp_ext(DoubleForm::zero(3)) == DoubleForm::scalar(3, 1));
    DoubleForm expected = DoubleForm::scalar(2, 1) + metric(2) +
                          Rational(1, 2) * metric_power(2, 2);
    CHECK(exp_ext(metric(2)) == expected);
    // (2,2) component of e^{diag(1,2,3)} carries the 2x2 principal minors
    DoubleForm c22 = exp_ext(diag(3, {1, 2, 3})).component(2, 2);
    CHECK(c22 == DoubleForm::make(3, {{{1, 2}, {1, 2}, 2},
                                      {{1, 3}, {1, 3}, 3},
                                      {{2, 3}, {2, 3}, 6}}));
}

TEST_CASE("hat extensions act as expected on metric powers") {
    DoubleForm h = diag(4, {1, 2, 3, 4});
    for (int p = 1; p <= 4; ++p) {
        DoubleForm hp = Rational(1) / factorial(p) * exterior_power(h, p);
        CHECK(hat_R(h, metric_power_normalized(4, p)) == hp);
        CHECK(hat_L(h, metric_power_normalized(4, p)) == hp);
    }
    DoubleForm w = DoubleForm::make(4, {{{1, 2}, {3}, 5}, {{1}, {2}, -2}});
    CHECK(hat_R(metric(4), w) == w);
}

TEST_CASE("determinant from the top exterior power") {
    CHECK(determinant(metric(3)) == 1);
    CHECK(determinant(diag(2, {2, 3})) == 6);
    DoubleForm h = DoubleForm::make(3, {{{1}, {2}, 1}, {{2}, {1}, 1}, {{3}, {3}, 2}});
    CHECK(determinant(h) == -2);
    CHECK(determinant(h) == determinant(transpose(h)));
    // strictly upper triangular is nilpotent
    DoubleForm nil = DoubleForm::make(3, {{{1}, {2}, 4}, {{1}, {3}, -1}, {{2}, {3}, 7}});
    CHECK(determinant(nil) == 0);
    for (int p = 1; p <= 3; ++p) CHECK(invariant_s(nil, p) == 0);
}

TEST_CASE("characteristic coefficients and Newton transformations") {
    DoubleForm h = diag(3, {1, 2, 3});
    CHECK(invariant_s(h, 0) == 1);
    CHECK(invariant_s(h, 1) == 6);
    CHECK(invariant_s(h, 2) == 11);
    CHECK(invariant_s(h, 3) == 6);
    CHECK(newton_t(h, 0) == metric(3));
    CHECK(newton_t(h, 1) == diag(3, {5, 4, 3}));
    CHECK(newton_t(h, 2) == diag(3, {6, 3, 2}));
    for (int p = 0; p <= 4; ++p)
        CHECK(invariant_s(metric(4), p) == binomial(4, p));
    CHECK_THROWS_AS(invariant_s(h, 4), std::out_of_range);
    CHECK_THROWS_AS(newton_t(h, 3), std::out_of_range);
    CHECK_THROWS_AS(cofactor_s(h, 2, 2), std::out_of_range);
}

TEST_CASE("general cofactor transformation specializations") {
    DoubleForm h = diag(4, {1, 2, 3, 4});
    CHECK(cofactor_general(h, 1, 1) == cofactor_s(h, 1, 1));
    CHECK(cofactor_general(h, 2, 1) == cofactor_s(h, 2, 1));
    // (p,p) input: *(g^2 (g^2/2)/2!) = *(g^4/4) = 6, matching the
    // interior route i_{g^2/2}(g^2/2!) by the metric-power closed form
    DoubleForm omega = metric_power_normalized(4, 2);
    CHECK(cofactor_general(omega, 0, 1) == DoubleForm::scalar(4, 6));
    CHECK(interior(omega, metric_power_normalized(4, 2)) == DoubleForm::scalar(4, 6));
}

TEST_CASE("Cayley-Hamilton for a small explicit form") {
    DoubleForm h = DoubleForm::make(2, {{{1}, {1}, 1}, {{1}, {2}, 2}, {{2}, {1}, 3},
                                        {{2}, {2}, 4}});
    DoubleForm residual = comp_power(h, 2) - invariant_s(h, 1) * h +
                          invariant_s(h, 2) * metric(2);
    CHECK(residual.is_zero());
}
