#include "biform/interior.hpp"

#include <doctest.h>

using namespace biform;

namespace {

DoubleForm diag(int n, std::vector<Rational> values) {
    DoubleForm h(n);
    for (int i = 1; i <= n; ++i) h.add_term({i}, {i}, values[i - 1]);
    return h;
}

DoubleForm term(int n, MultiIndex row, MultiIndex col, Rational value = 1) {
    DoubleForm out(n);
    out.add_term(std::move(row), std::move(col), value);
    return out;
}

}  // namespace

TEST_CASE("slot-wise interior products by basis vectors") {
    DoubleForm w = term(3, {1, 2}, {1, 2});
    CHECK(interior_left(term(3, {1}, {}), w) == term(3, {2}, {1, 2}));
    CHECK(interior_right(term(3, {}, {1}), w) == term(3, {1, 2}, {2}));
    CHECK(interior_left(term(3, {3}, {}), w).is_zero());
    // antiderivation sign on the second index
    CHECK(interior_left(term(3, {2}, {}), w) == term(3, {1}, {1, 2}, -1));
}

TEST_CASE("interior by the metric is the contraction") {
    DoubleForm w = DoubleForm::make(4, {{{1, 2}, {1, 3}, Rational(3, 2)},
                                        {{2, 3}, {2, 3}, -5},
                                        {{1}, {4}, 2}});
    CHECK(interior(metric(4), w) == contraction(w));
}

TEST_CASE("interior of bilinears is the inner product") {
    DoubleForm h = DoubleForm::make(3, {{{1}, {2}, 2}, {{3}, {3}, -1}});
    DoubleForm k = DoubleForm::make(3, {{{1}, {2}, 5}, {{2}, {1}, 7}, {{3}, {3}, 4}});
    CHECK(interior(h, k) == DoubleForm::scalar(3, 6));
    CHECK(interior(k, h) == DoubleForm::scalar(3, 6));
}

TEST_CASE("interior of metric powers closed form") {
    for (int n = 2; n <= 5; ++n)
        for (int p = 1; p <= n; ++p)
            for (int k = 1; k <= p; ++k)
                CHECK(interior(metric_power(n, k), metric_power_normalized(n, p)) ==
                      factorial(n + k - p) / (factorial(p - k) * factorial(n - p)) *
                          metric_power(n, p - k));
}

TEST_CASE("interior of h into g^2/2 gives (tr h) g - h^t") {
    DoubleForm h = diag(3, {1, 2, 3});
    CHECK(interior(h, metric_power_normalized(3, 2)) == diag(3, {5, 4, 3}));
}

TEST_CASE("hodge star on distinguished elements") {
    for (int n = 2; n <= 5; ++n) {
        CHECK(hodge_star(DoubleForm::scalar(n, 1)) == volume(n));
        CHECK(hodge_star(volume(n)) == DoubleForm::scalar(n, 1));
    }
    CHECK(hodge_star(term(2, {1}, {1})) == term(2, {2}, {2}));
}

TEST_CASE("mu is left exterior multiplication") {
    DoubleForm w = term(3, {1}, {2}, 3);
    CHECK(mu(DoubleForm::scalar(3, 1), w) == w);
    CHECK(mu(metric(3), w) == exterior_product(metric(3), w));
}
