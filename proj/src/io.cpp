#include "biform/io.hpp"

#include <json.hpp>

#include <set>

namespace biform {

using nlohmann::json;

TensorDocument TensorDocument::from_form(std::string kind, const DoubleForm& form) {
    TensorDocument doc;
    doc.n = form.dimension();
    doc.kind = std::move(kind);
    doc.form = form;
    return doc;
}

TensorDocument TensorDocument::from_basis(int n, BasisMatrix matrix) {
    TensorDocument doc;
    doc.n = n;
    doc.kind = "basis";
    doc.matrix = std::move(matrix);
    return doc;
}

namespace {

Rational parse_value(const json& value, const std::string& where) {
    if (value.is_number_integer())
        return Rational(value.get<long long>());
    if (!value.is_string())
        throw DocumentError(where + ": value must be a rational string");
    const std::string text = value.get<std::string>();
    if (text.find('/') != std::string::npos) {
        auto den = text.substr(text.find('/') + 1);
        if (den == "0") throw DocumentError(where + ": zero denominator");
    }
    auto parsed = parse_rational(text);
    if (!parsed) throw DocumentError(where + ": malformed rational '" + text + "'");
    return *parsed;
}

MultiIndex parse_index(const json& value, int n, const std::string& where) {
    if (!value.is_array())
        throw DocumentError(where + ": index must be an array of integers");
    MultiIndex idx;
    for (const auto& item : value) {
        if (!item.is_number_integer())
            throw DocumentError(where + ": index entries must be integers");
        idx.push_back(item.get<int>());
    }
    if (!is_valid_multi_index(idx, n))
        throw DocumentError(where + ": index out of range or not strictly increasing");
    return idx;
}

void reject_unknown_fields(const json& object, const std::set<std::string>& allowed,
                           const std::string& where) {
    for (const auto& [key, value] : object.items()) {
        (void)value;
        if (!allowed.count(key))
            throw DocumentError(where + ": unknown field '" + key + "'");
    }
}

}  // namespace

TensorDocument parse_document(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& err) {
        throw DocumentError(std::string("invalid JSON: ") + err.what());
    }
    if (!doc.is_object()) throw DocumentError("document must be a JSON object");
    if (!doc.contains("n") || !doc["n"].is_number_integer())
        throw DocumentError("missing integer field 'n'");
    if (!doc.contains("kind") || !doc["kind"].is_string())
        throw DocumentError("missing string field 'kind'");

    TensorDocument out;
    out.n = doc["n"].get<int>();
    out.kind = doc["kind"].get<std::string>();
    if (out.n < 0) throw DocumentError("'n' must be non-negative");

    if (out.kind == "basis") {
        reject_unknown_fields(doc, {"n", "kind", "matrix"}, "document");
        if (!doc.contains("matrix") || !doc["matrix"].is_array())
            throw DocumentError("basis document needs an array field 'matrix'");
        const auto& rows = doc["matrix"];
        if (static_cast<int>(rows.size()) != out.n)
            throw DocumentError("matrix must have n rows");
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (!rows[i].is_array() || static_cast<int>(rows[i].size()) != out.n)
                throw DocumentError("matrix row " + std::to_string(i) + " must have n entries");
            std::vector<Rational> row;
            for (std::size_t j = 0; j < rows[i].size(); ++j)
                row.push_back(parse_value(rows[i][j], "matrix[" + std::to_string(i) + "][" +
                                                          std::to_string(j) + "]"));
            out.matrix.push_back(std::move(row));
        }
        return out;
    }

    if (out.kind != "doubleform" && out.kind != "bilinear" && out.kind != "curvature")
        throw DocumentError("unknown kind '" + out.kind + "'");
    reject_unknown_fields(doc, {"n", "kind", "terms"}, "document");
    if (!doc.contains("terms") || !doc["terms"].is_array())
        throw DocumentError("form document needs an array field 'terms'");

    out.form = DoubleForm(out.n);
    std::set<std::pair<MultiIndex, MultiIndex>> seen;
    for (std::size_t i = 0; i < doc["terms"].size(); ++i) {
        const auto& term = doc["terms"][i];
        const std::string where = "terms[" + std::to_string(i) + "]";
        if (!term.is_object()) throw DocumentError(where + ": term must be an object");
        reject_unknown_fields(term, {"row", "col", "value"}, where);
        if (!term.contains("row") || !term.contains("col") || !term.contains("value"))
            throw DocumentError(where + ": term needs 'row', 'col' and 'value'");
        MultiIndex row = parse_index(term["row"], out.n, where + ".row");
        MultiIndex col = parse_index(term["col"], out.n, where + ".col");
        if (!seen.insert({row, col}).second)
            throw DocumentError(where + ": duplicate term key");
        out.form.add_term(std::move(row), std::move(col), parse_value(term["value"], where + ".value"));
    }

    if (out.kind == "bilinear" && !out.form.is_homogeneous(1, 1))
        throw DocumentError("bilinear document must contain only (1,1) terms");
    if (out.kind == "curvature" && !out.form.is_homogeneous(2, 2))
        throw DocumentError("curvature document must contain only (2,2) terms");
    return out;
}

std::string serialize_document(const TensorDocument& doc) {
    json out;
    out["n"] = doc.n;
    out["kind"] = doc.kind;
    if (doc.kind == "basis") {
        json rows = json::array();
        for (const auto& row : doc.matrix) {
            json r = json::array();
            for (const auto& v : row) r.push_back(rational_to_string(v));
            rows.push_back(std::move(r));
        }
        out["matrix"] = std::move(rows);
    } else {
        json terms = json::array();
        for (const auto& [key, value] : doc.form.terms()) {
            json term;
            term["row"] = key.row;
            term["col"] = key.col;
            term["value"] = rational_to_string(value);
            terms.push_back(std::move(term));
        }
        out["terms"] = std::move(terms);
    }
    return out.dump(2) + "\n";
}

}  // namespace biform
