#include "biform/io.hpp"

#include "biform/verify.hpp"

#include <doctest.h>

using namespace biform;

TEST_CASE("parsing a minimal metric document") {
    const std::string text = R"({
  "n": 2,
  "kind": "bilinear",
  "terms": [
    {"row": [1], "col": [1], "value": "1"},
    {"row": [2], "col": [2], "value": "1"}
  ]
})";
    auto doc = parse_document(text);
    CHECK(doc.n == 2);
    CHECK(doc.kind == "bilinear");
    CHECK(doc.form == metric(2));
}

TEST_CASE("serialize then parse is the identity") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 2 + static_cast<int>(rng() % 3);
        TensorDocument doc = TensorDocument::from_form(
            "doubleform", random_form(rng, n, 1 + static_cast<int>(rng() % 2),
                                      1 + static_cast<int>(rng() % 2)));
        std::string text = serialize_document(doc);
        auto parsed = parse_document(text);
        CHECK(parsed.n == doc.n);
        CHECK(parsed.kind == doc.kind);
        CHECK(parsed.form == doc.form);
        // canonical form is a fixed point of the round trip
        CHECK(serialize_document(parsed) == text);
    }
}

TEST_CASE("basis documents round-trip") {
    BasisMatrix m = {{Rational(3, 5), Rational(-4, 5)}, {Rational(4, 5), Rational(3, 5)}};
    auto doc = TensorDocument::from_basis(2, m);
    auto parsed = parse_document(serialize_document(doc));
    CHECK(parsed.kind == "basis");
    CHECK(parsed.matrix == m);
}

TEST_CASE("malformed documents are rejected with diagnostics") {
    auto expect_error = [](const std::string& text, const std::string& needle) {
        try {
            parse_document(text);
            FAIL("expected DocumentError for: " << text);
        } catch (const DocumentError& err) {
            CHECK(std::string(err.what()).find(needle) != std::string::npos);
        }
    };
    expect_error("[]", "object");
    expect_error(R"({"kind": "bilinear", "terms": []})", "'n'");
    expect_error(R"({"n": 2, "kind": "nonsense", "terms": []})", "unknown kind");
    expect_error(R"({"n": 2, "kind": "bilinear", "terms": [], "extra": 1})",
                 "unknown field");
    expect_error(
        R"({"n": 2, "kind": "bilinear", "terms": [{"row": [1], "col": [1], "value": "1/0"}]})",
        "zero denominator");
    expect_error(
        R"({"n": 2, "kind": "bilinear", "terms": [{"row": [1], "col": [1], "value": "x"}]})",
        "malformed rational");
    expect_error(
        R"({"n": 2, "kind": "bilinear", "terms": [{"row": [3], "col": [1], "value": "1"}]})",
        "out of range");
    expect_error(
        R"({"n": 3, "kind": "doubleform", "terms": [{"row": [2, 1], "col": [], "value": "1"}]})",
        "out of range or not strictly increasing");
    expect_error(R"({"n": 2, "kind": "bilinear", "terms": [
        {"row": [1], "col": [1], "value": "1"},
        {"row": [1], "col": [1], "value": "2"}]})",
                 "duplicate");
    expect_error(
        R"({"n": 2, "kind": "bilinear", "terms": [{"row": [1, 2], "col": [1, 2], "value": "1"}]})",
        "(1,1)");
    expect_error(R"({"n": 2, "kind": "curvature", "terms": [{"row": [1], "col": [1], "value": "1"}]})",
                 "(2,2)");
    expect_error("{not json", "invalid JSON");
}
