#include "biform/double_form.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace biform {

namespace {

std::string describe_index(const MultiIndex& idx) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (i) os << ",";
        os << idx[i];
    }
    os << ")";
    return os.str();
}

}  // namespace

DoubleForm DoubleForm::make(
    int n, const std::vector<std::tuple<MultiIndex, MultiIndex, Rational>>& entries) {
    if (n < 0) throw std::invalid_argument("dimension must be non-negative");
    DoubleForm out(n);
    for (const auto& [row, col, value] : entries) {
        if (!is_valid_multi_index(row, n))
            throw std::invalid_argument("invalid row multi-index " + describe_index(row));
        if (!is_valid_multi_index(col, n))
            throw std::invalid_argument("invalid col multi-index " + describe_index(col));
        out.add_term(row, col, value);
    }
    return out;
}

DoubleForm DoubleForm::scalar(int n, const Rational& value) {
    DoubleForm out(n);
    out.add_term({}, {}, value);
    return out;
}

Rational DoubleForm::coefficient(const MultiIndex& row, const MultiIndex& col) const {
    auto it = terms_.find(TermKey{row, col});
    return it == terms_.end() ? Rational(0) : it->second;
}

void DoubleForm::add_term(MultiIndex row, MultiIndex col, const Rational& value) {
    if (value == 0) return;
    TermKey key{std::move(row), std::move(col)};
    auto [it, inserted] = terms_.try_emplace(std::move(key), value);
    if (!inserted) {
        it->second += value;
        if (it->second == 0) terms_.erase(it);
    }
}

std::optional<std::pair<int, int>> DoubleForm::bidegree() const {
    std::optional<std::pair<int, int>> deg;
    for (const auto& [key, value] : terms_) {
        std::pair<int, int> d{static_cast<int>(key.row.size()),
                              static_cast<int>(key.col.size())};
        if (!deg) {
            deg = d;
        } else if (*deg != d) {
            return std::nullopt;
        }
    }
    return deg;
}

bool DoubleForm::is_homogeneous(int p, int q) const {
    if (terms_.empty()) return true;
    auto deg = bidegree();
    return deg && deg->first == p && deg->second == q;
}

DoubleForm DoubleForm::component(int p, int q) const {
    DoubleForm out(n_);
    for (const auto& [key, value] : terms_) {
        if (static_cast<int>(key.row.size()) == p &&
            static_cast<int>(key.col.size()) == q) {
            out.add_term(key.row, key.col, value);
        }
    }
    return out;
}

bool operator==(const DoubleForm& a, const DoubleForm& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
}

namespace {

void require_same_dimension(const DoubleForm& a, const DoubleForm& b) {
    if (a.dimension() != b.dimension())
        throw std::invalid_argument("dimension mismatch between double forms");
}

}  // namespace

DoubleForm operator+(const DoubleForm& a, const DoubleForm& b) {
    require_same_dimension(a, b);
    DoubleForm out = a;
    for (const auto& [key, value] : b.terms()) out.add_term(key.row, key.col, value);
    return out;
}

DoubleForm operator-(const DoubleForm& a, const DoubleForm& b) {
    require_same_dimension(a, b);
    DoubleForm out = a;
    for (const auto& [key, value] : b.terms()) out.add_term(key.row, key.col, -value);
    return out;
}

DoubleForm operator*(const Rational& s, const DoubleForm& a) {
    DoubleForm out(a.dimension());
    if (s == 0) return out;
    for (const auto& [key, value] : a.terms()) out.add_term(key.row, key.col, s * value);
    return out;
}

DoubleForm exterior_product(const DoubleForm& a, const DoubleForm& b) {
    require_same_dimension(a, b);
    DoubleForm out(a.dimension());
    for (const auto& [ka, va] : a.terms()) {
        for (const auto& [kb, vb] : b.terms()) {
            auto row = merge_with_sign(ka.row, kb.row);
            if (!row) continue;
            auto col = merge_with_sign(ka.col, kb.col);
            if (!col) continue;
            out.add_term(std::move(row->first), std::move(col->first),
                         Rational(row->second * col->second) * va * vb);
        }
    }
    return out;
}

DoubleForm exterior_power(const DoubleForm& a, int k) {
    DoubleForm out = DoubleForm::scalar(a.dimension(), 1);
    for (int i = 0; i < k; ++i) out = exterior_product(out, a);
    return out;
}

DoubleForm transpose(const DoubleForm& a) {
    DoubleForm out(a.dimension());
    for (const auto& [key, value] : a.terms()) out.add_term(key.col, key.row, value);
    return out;
}

Rational inner_product(const DoubleForm& a, const DoubleForm& b) {
    require_same_dimension(a, b);
    Rational total = 0;
    // iterate over the smaller term set
    const DoubleForm& small = a.terms().size() <= b.terms().size() ? a : b;
    const DoubleForm& large = a.terms().size() <= b.terms().size() ? b : a;
    for (const auto& [key, value] : small.terms()) {
        auto it = large.terms().find(key);
        if (it != large.terms().end()) total += value * it->second;
    }
    return total;
}

DoubleForm contraction(const DoubleForm& a) {
    DoubleForm out(a.dimension());
    for (const auto& [key, value] : a.terms()) {
        if (key.row.empty() || key.col.empty()) continue;
        for (int x : key.row) {
            // e_x must occur in both slots; pulling it to the front of
            // each slot contributes the two position signs.
            auto pos_col = std::lower_bound(key.col.begin(), key.col.end(), x);
            if (pos_col == key.col.end() || *pos_col != x) continue;
            auto pos_row = std::lower_bound(key.row.begin(), key.row.end(), x);
            int sign_row = ((pos_row - key.row.begin()) % 2 == 0) ? 1 : -1;
            int sign_col = ((pos_col - key.col.begin()) % 2 == 0) ? 1 : -1;
            MultiIndex row = difference(key.row, {x});
            MultiIndex col = difference(key.col, {x});
            out.add_term(std::move(row), std::move(col),
                         Rational(sign_row * sign_col) * value);
        }
    }
    return out;
}

DoubleForm contraction_power(const DoubleForm& a, int k) {
    DoubleForm out = a;
    for (int i = 0; i < k; ++i) out = contraction(out);
    return out;
}

DoubleForm metric(int n) {
    DoubleForm out(n);
    for (int i = 1; i <= n; ++i) out.add_term({i}, {i}, 1);
    return out;
}

DoubleForm metric_power(int n, int p) {
    if (p > n) return DoubleForm::zero(n);
    return exterior_power(metric(n), p);
}

DoubleForm metric_power_normalized(int n, int p) {
    return Rational(1) / factorial(p) * metric_power(n, p);
}

DoubleForm volume(int n) { return metric_power_normalized(n, n); }

}  // namespace biform
