#include "biform/double_form.hpp"

#include <doctest.h>

#include <stdexcept>

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

TEST_CASE("make validates, sums duplicates and drops zeros") {
    CHECK(DoubleForm::make(2, {{{1}, {1}, 1}, {{2}, {2}, 1}}) == metric(2));
    CHECK(DoubleForm::make(2, {{{1}, {1}, 1}, {{1}, {1}, -1}}).is_zero());
    DoubleForm one_term = DoubleForm::make(3, {{{1, 2}, {1, 2}, 5}});
    CHECK(one_term.coefficient({1, 2}, {1, 2}) == 5);
    CHECK(one_term.terms().size() == 1);
    CHECK_THROWS_AS(DoubleForm::make(2, {{{3}, {1}, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(DoubleForm::make(3, {{{2, 1}, {1}, 1}}), std::invalid_argument);
}

TEST_CASE("exterior product expands slot-wise wedges") {
    CHECK(exterior_product(term(2, {1}, {1}), term(2, {2}, {2})) ==
          term(2, {1, 2}, {1, 2}));
    CHECK(exterior_product(metric(2), metric(2)) == term(2, {1, 2}, {1, 2}, 2));
    DoubleForm h = diag(2, {2, 3});
    CHECK(exterior_product(h, h) == term(2, {1, 2}, {1, 2}, 12));
}

TEST_CASE("transpose swaps slots and is an involution") {
    CHECK(transpose(term(3, {1}, {2})) == term(3, {2}, {1}));
    CHECK(transpose(metric(3)) == metric(3));
    DoubleForm w = DoubleForm::make(3, {{{1, 2}, {3}, Rational(7, 2)}, {{1}, {2}, -4}});
    CHECK(transpose(transpose(w)) == w);
}

TEST_CASE("inner product is the orthonormal coefficient pairing") {
    for (int n = 2; n <= 5; ++n) CHECK(inner_product(metric(n), metric(n)) == n);
    CHECK(inner_product(term(2, {1}, {2}), term(2, {2}, {1})) == 0);
    DoubleForm unit3 = metric_power_normalized(3, 2);
    CHECK(inner_product(unit3, unit3) == 3);
}

TEST_CASE("contraction traces one index from each slot") {
    for (int n = 1; n <= 5; ++n)
        CHECK(contraction(metric(n)) == DoubleForm::scalar(n, n));
    for (int n = 2; n <= 5; ++n)
        for (int p = 1; p <= n; ++p)
            CHECK(contraction(metric_power(n, p)) ==
                  Rational(p * (n - p + 1)) * metric_power(n, p - 1));
    DoubleForm expected = DoubleForm::make(3, {{{1}, {1}, 1}, {{2}, {2}, 1}});
    CHECK(contraction(term(3, {1, 2}, {1, 2})) == expected);
    CHECK(contraction(DoubleForm::scalar(3, 5)).is_zero());
    CHECK(contraction(term(3, {1}, {})).is_zero());
}

TEST_CASE("metric powers and the composition unit") {
    CHECK(metric_power(2, 2) == DoubleForm::make(2, {{{1, 2}, {1, 2}, 2}}));
    CHECK(metric_power(4, 0) == DoubleForm::scalar(4, 1));
    CHECK(metric_power(3, 4).is_zero());
    for (int n = 2; n <= 5; ++n)
        for (int p = 0; p <= n; ++p) {
            DoubleForm unit = metric_power_normalized(n, p);
            for (const auto& I : enumerate_multi_indices(n, p))
                CHECK(unit.coefficient(I, I) == 1);
        }
}

TEST_CASE("bidegree bookkeeping") {
    DoubleForm w = DoubleForm::make(3, {{{1}, {2}, 1}, {{1, 2}, {1, 3}, 2}});
    CHECK_FALSE(w.bidegree().has_value());
    CHECK(w.component(1, 1) == term(3, {1}, {2}));
    CHECK(w.component(2, 2) == term(3, {1, 2}, {1, 3}, 2));
    CHECK(w.component(1, 2).is_zero());
    CHECK(term(3, {1}, {2}).is_homogeneous(1, 1));
    // the zero form has no single bidegree but is homogeneous of every bidegree
    CHECK_FALSE(DoubleForm::zero(3).bidegree().has_value());
    CHECK(DoubleForm::zero(3).is_homogeneous(1, 2));
}
