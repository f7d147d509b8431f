#include "biform/composition.hpp"

#include <stdexcept>

namespace biform {

OperatorBlock OperatorBlock::identity(int n, int p) {
    auto basis = enumerate_multi_indices(n, p);
    OperatorBlock out{n, p, p, {}};
    out.matrix.assign(basis.size(), std::vector<Rational>(basis.size(), Rational(0)));
    for (std::size_t i = 0; i < basis.size(); ++i) out.matrix[i][i] = 1;
    return out;
}

OperatorBlock multiply(const OperatorBlock& a, const OperatorBlock& b) {
    if (a.n != b.n || a.col_degree != b.row_degree)
        throw std::invalid_argument("incompatible operator blocks");
    OperatorBlock out{a.n, a.row_degree, b.col_degree, {}};
    const std::size_t rows = a.matrix.size();
    const std::size_t inner = b.matrix.size();
    const std::size_t cols = inner ? b.matrix[0].size() : 0;
    out.matrix.assign(rows, std::vector<Rational>(cols, Rational(0)));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t k = 0; k < inner; ++k) {
            if (a.matrix[i][k] == 0) continue;
            for (std::size_t j = 0; j < cols; ++j)
                out.matrix[i][j] += a.matrix[i][k] * b.matrix[k][j];
        }
    return out;
}

OperatorBlock block_transpose(const OperatorBlock& a) {
    OperatorBlock out{a.n, a.col_degree, a.row_degree, {}};
    const std::size_t rows = a.matrix.size();
    const std::size_t cols = rows ? a.matrix[0].size() : 0;
    out.matrix.assign(cols, std::vector<Rational>(rows, Rational(0)));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) out.matrix[j][i] = a.matrix[i][j];
    return out;
}

DoubleForm compose(const DoubleForm& a, const DoubleForm& b) {
    if (a.dimension() != b.dimension())
        throw std::invalid_argument("dimension mismatch between double forms");
    // group the terms of a by first slot so each b term meets only
    // matching labels
    std::map<MultiIndex, std::vector<std::pair<const TermKey*, const Rational*>>> by_row;
    for (const auto& [key, value] : a.terms())
        by_row[key.row].emplace_back(&key, &value);

    DoubleForm out(a.dimension());
    for (const auto& [kb, vb] : b.terms()) {
        auto it = by_row.find(kb.col);
        if (it == by_row.end()) continue;
        for (const auto& [ka, va] : it->second)
            out.add_term(kb.row, ka->col, (*va) * vb);
    }
    return out;
}

OperatorBlock to_operator(const DoubleForm& omega) {
    auto deg = omega.bidegree();
    if (!deg) throw std::invalid_argument("to_operator requires a homogeneous double form");
    return to_operator(omega, deg->first, deg->second);
}

OperatorBlock to_operator(const DoubleForm& omega, int p, int q) {
    if (!omega.is_homogeneous(p, q))
        throw std::invalid_argument("to_operator: form is not homogeneous of the given bidegree");
    const int n = omega.dimension();
    auto rows = enumerate_multi_indices(n, q);
    auto cols = enumerate_multi_indices(n, p);
    OperatorBlock out{n, q, p, {}};
    out.matrix.assign(rows.size(), std::vector<Rational>(cols.size(), Rational(0)));
    for (const auto& [key, value] : omega.terms())
        out.matrix[lex_rank(key.col, n)][lex_rank(key.row, n)] = value;
    return out;
}

DoubleForm from_operator(const OperatorBlock& block) {
    auto rows = enumerate_multi_indices(block.n, block.row_degree);
    auto cols = enumerate_multi_indices(block.n, block.col_degree);
    DoubleForm out(block.n);
    for (std::size_t j = 0; j < rows.size(); ++j)
        for (std::size_t i = 0; i < cols.size(); ++i)
            out.add_term(cols[i], rows[j], block.matrix[j][i]);
    return out;
}

DoubleForm comp_power(const DoubleForm& h, int r) {
    if (!h.is_homogeneous(1, 1))
        throw std::invalid_argument("comp_power requires a (1,1) double form");
    if (r < 0) throw std::invalid_argument("comp_power requires r >= 0");
    DoubleForm out = metric(h.dimension());
    for (int i = 0; i < r; ++i) out = compose(out, h);
    return out;
}

Rational power_sum(const DoubleForm& h, int r) {
    return contraction(comp_power(h, r)).scalar_part();
}

}  // namespace biform
