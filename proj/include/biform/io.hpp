#pragma once

#include "biform/curvature.hpp"
#include "biform/double_form.hpp"

#include <stdexcept>
#include <string>

namespace biform {

// Raised with a human-readable field diagnostic on malformed input.
class DocumentError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// JSON tensor file: {"n", "kind", "terms": [{"row", "col", "value"}]}
// for double forms, {"n", "kind": "basis", "matrix": [["a/b", ...]]}
// for bases. 1-based strictly increasing index tuples, values as exact
// rational strings.
struct TensorDocument {
    int n = 0;
    std::string kind;          // doubleform | bilinear | curvature | basis
    DoubleForm form;           // for the three form kinds
    BasisMatrix matrix;        // for kind == basis

    static TensorDocument from_form(std::string kind, const DoubleForm& form);
    static TensorDocument from_basis(int n, BasisMatrix matrix);
};

// Parses a document; unknown fields, bad kinds, malformed rationals,
// out-of-range indices and duplicate term keys are all rejected.
TensorDocument parse_document(const std::string& text);

// Canonical serialization; parse o serialize is the identity.
std::string serialize_document(const TensorDocument& doc);

}  // namespace biform
