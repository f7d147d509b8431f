#pragma once

#include "biform/double_form.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace biform {

struct VerificationReport {
    std::string identity;
    int n = 0;
    int trials = 0;
    std::uint64_t seed = 0;
    bool passed = false;
    std::string counterexample;  // serialized first failing inputs
};

// One registered identity. A trial returns an empty string on success
// or a failure description (with serialized inputs) on a counterexample.
struct IdentitySpec {
    std::string name;
    std::string statement;
    int default_n = 3;
    bool negative_control = false;
    std::function<std::string(std::mt19937_64&, int)> trial;
};

const std::vector<IdentitySpec>& identity_registry();
const IdentitySpec* find_identity(const std::string& name);

// Runs `trials` seeded trials of one identity; deterministic given
// (name, n, trials, seed).
VerificationReport run_identity(const IdentitySpec& spec, std::optional<int> n,
                                int trials, std::uint64_t seed);

// Random rational with numerator in [-9,9] and denominator in {1,2,3}.
Rational random_rational(std::mt19937_64& rng);

// Dense random (p,q) form with random_rational coefficients.
DoubleForm random_form(std::mt19937_64& rng, int n, int p, int q);
DoubleForm random_bilinear(std::mt19937_64& rng, int n);
DoubleForm random_symmetric_bilinear(std::mt19937_64& rng, int n);

// Random symmetric first-Bianchi (2,2) form, built as a sum of
// products of symmetric bilinear forms.
DoubleForm random_curvature_form(std::mt19937_64& rng, int n);

// Compact one-line serialization used in counterexample reports.
std::string describe(const DoubleForm& form);

}  // namespace biform
