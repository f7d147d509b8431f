#include "biform/verify.hpp"

#include <doctest.h>

#include <set>

using namespace biform;

TEST_CASE("registry is well-formed") {
    std::set<std::string> names;
    for (const auto& spec : identity_registry()) {
        CHECK(names.insert(spec.name).second);
        CHECK(spec.default_n >= 2);
        CHECK_FALSE(spec.statement.empty());
    }
    CHECK(find_identity("laplace") != nullptr);
    CHECK(find_identity("no-such-identity") == nullptr);
    // exactly one negative control, excluded from default selections
    int controls = 0;
    for (const auto& spec : identity_registry()) controls += spec.negative_control;
    CHECK(controls == 1);
    CHECK(find_identity("laplace-wrong-sign")->negative_control);
}

TEST_CASE("runs are deterministic in the seed") {
    const auto* spec = find_identity("greub-vanstone");
    REQUIRE(spec != nullptr);
    auto a = run_identity(*spec, 3, 5, 42);
    auto b = run_identity(*spec, 3, 5, 42);
    CHECK(a.passed == b.passed);
    CHECK(a.counterexample == b.counterexample);
    CHECK(a.n == 3);
}

TEST_CASE("negative control produces a counterexample") {
    const auto* spec = find_identity("laplace-wrong-sign");
    REQUIRE(spec != nullptr);
    auto report = run_identity(*spec, std::nullopt, 3, 1);
    CHECK_FALSE(report.passed);
    CHECK_FALSE(report.counterexample.empty());
}

TEST_CASE("random generators respect their constraints") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 20; ++i) {
        Rational r = random_rational(rng);
        CHECK(numerator(r) >= -9);
        CHECK(numerator(r) <= 9);
        CHECK(denominator(r) <= 3);
        DoubleForm h = random_symmetric_bilinear(rng, 4);
        CHECK(transpose(h) == h);
        DoubleForm R = random_curvature_form(rng, 4);
        CHECK(transpose(R) == R);
        CHECK(R.is_homogeneous(2, 2));
    }
}
