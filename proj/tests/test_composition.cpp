#include "biform/composition.hpp"

#include <doctest.h>

using namespace biform;

namespace {

DoubleForm diag(int n, std::vector<Rational> values) {
    DoubleForm h(n);
    for (int i = 1; i <= n; ++i) h.add_term({i}, {i}, values[i - 1]);
    return h;
}

}  // namespace

TEST_CASE("g^p/p! is the unit of each diagonal block") {
    DoubleForm w = DoubleForm::make(3, {{{1, 2}, {3}, Rational(5, 3)}, {{1, 3}, {2}, -1}});
    // w has bidegree (2,1): unit degrees are 2 on the right, 1 on the left
    CHECK(compose(metric_power_normalized(3, 1), w) == w);
    CHECK(compose(w, metric_power_normalized(3, 2)) == w);
}

TEST_CASE("diagonal decomposables compose to a delta") {
    for (int n = 2; n <= 4; ++n)
        for (const auto& I : enumerate_multi_indices(n, 2))
            for (const auto& J : enumerate_multi_indices(n, 2)) {
                DoubleForm eI = DoubleForm::make(n, {{I, I, 1}});
                DoubleForm eJ = DoubleForm::make(n, {{J, J, 1}});
                DoubleForm expected = I == J ? eI : DoubleForm::zero(n);
                CHECK(compose(eI, eJ) == expected);
            }
}

TEST_CASE("g^2 o g^2 = 2 g^2") {
    for (int n = 2; n <= 5; ++n)
        CHECK(compose(metric_power(n, 2), metric_power(n, 2)) ==
              Rational(2) * metric_power(n, 2));
}

TEST_CASE("mismatched bidegrees compose to zero") {
    DoubleForm a = DoubleForm::make(3, {{{1, 2}, {1, 3}, 1}});  // (2,2)
    DoubleForm b = DoubleForm::make(3, {{{1}, {2}, 1}});        // (1,1)
    CHECK(compose(a, b).is_zero());
}

TEST_CASE("operator blocks of basic forms") {
    OperatorBlock id2 = to_operator(metric_power_normalized(3, 2));
    CHECK(id2 == OperatorBlock::identity(3, 2));

    OperatorBlock d = to_operator(diag(3, {1, 2, 3}));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(d.matrix[i][j] == (i == j ? Rational(i + 1) : Rational(0)));

    DoubleForm w = DoubleForm::make(3, {{{1, 2}, {3}, Rational(5, 3)}, {{2, 3}, {1}, -2}});
    CHECK(from_operator(to_operator(w)) == w);
}

TEST_CASE("composition powers and power sums of a diagonal form") {
    DoubleForm h = diag(3, {1, 2, 3});
    CHECK(comp_power(h, 0) == metric(3));
    CHECK(comp_power(h, 1) == h);
    CHECK(comp_power(h, 2) == diag(3, {1, 4, 9}));
    CHECK(power_sum(h, 1) == 6);
    CHECK(power_sum(h, 2) == 14);
    CHECK(power_sum(h, 3) == 36);
}
