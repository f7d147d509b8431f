#include "biform/curvature.hpp"

#include "biform/composition.hpp"

#include <stdexcept>

namespace biform {

Rational ExteriorForm::coefficient(const MultiIndex& idx) const {
    auto it = terms_.find(idx);
    return it == terms_.end() ? Rational(0) : it->second;
}

void ExteriorForm::add_term(MultiIndex idx, const Rational& value) {
    if (value == 0) return;
    auto [it, inserted] = terms_.try_emplace(std::move(idx), value);
    if (!inserted) {
        it->second += value;
        if (it->second == 0) terms_.erase(it);
    }
}

ExteriorForm alt(const DoubleForm& omega) {
    if (omega.is_zero()) return ExteriorForm(omega.dimension(), 0);
    auto deg = omega.bidegree();
    if (!deg || deg->first != deg->second)
        throw std::invalid_argument("alt requires a (p,p) double form");
    const int p = deg->first;
    const int n = omega.dimension();
    ExteriorForm out(n, 2 * p);
    if (2 * p > n) return out;
    // Grouping the (2p)! definition by shuffle cosets:
    // Alt(e_I (x) e_J) = (p!)^2/(2p)! * eps(I,J) * e_{I u J} for
    // disjoint I, J, zero otherwise.
    const Rational weight = factorial(p) * factorial(p) / factorial(2 * p);
    for (const auto& [key, value] : omega.terms()) {
        auto merged = merge_with_sign(key.row, key.col);
        if (!merged) continue;
        out.add_term(std::move(merged->first),
                     weight * Rational(merged->second) * value);
    }
    return out;
}

DoubleForm bianchi(const DoubleForm& omega) {
    DoubleForm out(omega.dimension());
    for (const auto& [key, value] : omega.terms()) {
        const int p = static_cast<int>(key.row.size());
        // move one index y from the second slot into the first; the
        // coset sign is (-1)^{p+1-pos(y)} against the merged slot,
        // times the sign of pulling y to the front of the old slot.
        for (std::size_t yi = 0; yi < key.col.size(); ++yi) {
            int y = key.col[yi];
            auto merged = merge_with_sign({y}, key.row);
            if (!merged) continue;  // y already in the first slot
            const MultiIndex& row = merged->first;
            // position of y in the new first slot (1-based)
            int pos = 1;
            while (row[pos - 1] != y) ++pos;
            int coset = ((p + 1 - pos) % 2 == 0) ? 1 : -1;
            // e_y ^ e_{J\y} = s * e_J
            int pull = (yi % 2 == 0) ? 1 : -1;
            out.add_term(row, difference(key.col, {y}),
                         Rational(coset * pull) * value);
        }
    }
    return out;
}

CurvatureTensor CurvatureTensor::make(const DoubleForm& form, bool allow_bianchi_violation) {
    if (!form.is_homogeneous(2, 2))
        throw std::invalid_argument("curvature tensor must be a (2,2) double form");
    if (!(transpose(form) == form))
        throw std::invalid_argument("curvature tensor must be symmetric");
    if (!allow_bianchi_violation && !bianchi(form).is_zero())
        throw std::invalid_argument("curvature tensor violates the first Bianchi identity");
    return CurvatureTensor(form);
}

std::pair<ExteriorForm, Normalization> pontrjagin_form(const CurvatureTensor& R, int k) {
    const int n = R.dimension();
    if (k < 1) throw std::invalid_argument("pontrjagin_form requires k >= 1");
    Normalization norm{Rational(1) / (factorial(k) * factorial(k) *
                                      Rational(Integer(1) << (2 * k))),
                       -2 * k};
    if (4 * k > n) return {ExteriorForm(n, 4 * k), norm};
    DoubleForm Rk = exterior_power(R.form(), k);
    return {alt(compose(Rk, Rk)), norm};
}

std::pair<ExteriorForm, Normalization> pontrjagin_product(const CurvatureTensor& R,
                                                          const std::vector<int>& exponents) {
    const int n = R.dimension();
    int k = 0;
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        if (exponents[i] < 0) throw std::invalid_argument("exponents must be non-negative");
        k += static_cast<int>(i + 1) * exponents[i];
    }
    if (k == 0) {
        ExteriorForm one(n, 0);
        one.add_term({}, 1);
        return {one, Normalization{Rational(1), 0}};
    }
    if (4 * k > n) throw std::invalid_argument("degree 4k exceeds the dimension");

    Rational constant = factorial(4 * k) /
                        (factorial(2 * k) * factorial(2 * k) *
                         Rational(Integer(1) << (2 * k)));
    DoubleForm product = DoubleForm::scalar(n, 1);
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        const int ki = exponents[i];
        const int deg = static_cast<int>(i + 1);
        Rational fact_pow = 1;
        for (int e = 0; e < 2 * ki; ++e) fact_pow *= factorial(deg);
        constant *= factorial(2 * deg) * factorial(2 * deg) /
                    (fact_pow * factorial(4 * deg));
        if (ki == 0) continue;
        DoubleForm Ri = exterior_power(R.form(), deg);
        product = exterior_product(product, exterior_power(compose(Ri, Ri), ki));
    }
    return {alt(product), Normalization{constant, -2 * k}};
}

PurityReport is_pure_in_basis(const DoubleForm& omega, const BasisMatrix& basis) {
    const int n = omega.dimension();
    if (static_cast<int>(basis.size()) != n)
        throw std::invalid_argument("basis must be an n x n matrix");
    for (const auto& row : basis)
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("basis must be an n x n matrix");
    // exact orthonormality of the columns
    for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b) {
            Rational dot = 0;
            for (int i = 0; i < n; ++i) dot += basis[i][a] * basis[i][b];
            if (dot != Rational(a == b ? 1 : 0))
                throw std::invalid_argument("basis columns are not orthonormal");
        }

    auto deg = omega.bidegree();
    if (!deg || deg->first != deg->second)
        throw std::invalid_argument("purity check requires a (p,p) double form");
    const int p = deg->first;

    // minors det(basis[I, A]) give the wedge coordinates of the new
    // basis p-vectors f_A against the e_I
    auto labels = enumerate_multi_indices(n, p);
    auto minor = [&](const MultiIndex& rows, const MultiIndex& cols) {
        // Laplace-free small determinant over the rationals
        const int m = static_cast<int>(rows.size());
        std::vector<std::vector<Rational>> a(m, std::vector<Rational>(m));
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) a[i][j] = basis[rows[i] - 1][cols[j] - 1];
        // fraction-friendly Gaussian elimination
        Rational det = 1;
        for (int c = 0; c < m; ++c) {
            int pivot = -1;
            for (int r = c; r < m; ++r)
                if (a[r][c] != 0) { pivot = r; break; }
            if (pivot < 0) return Rational(0);
            if (pivot != c) { std::swap(a[pivot], a[c]); det = -det; }
            det *= a[c][c];
            for (int r = c + 1; r < m; ++r) {
                Rational f = a[r][c] / a[c][c];
                for (int cc = c; cc < m; ++cc) a[r][cc] -= f * a[c][cc];
            }
        }
        return det;
    };

    PurityReport report;
    report.pure = true;
    for (std::size_t ai = 0; ai < labels.size(); ++ai) {
        for (std::size_t bi = 0; bi < labels.size(); ++bi) {
            if (ai == bi) continue;
            Rational coeff = 0;
            for (const auto& [key, value] : omega.terms())
                coeff += minor(key.row, labels[ai]) * minor(key.col, labels[bi]) * value;
            if (coeff != 0) {
                report.pure = false;
                report.residual.push_back({{labels[ai], labels[bi]}, coeff});
            }
        }
    }
    return report;
}

CurvatureTensor pure_curvature(int n, const std::map<std::pair<int, int>, Rational>& lambda) {
    DoubleForm form(n);
    for (const auto& [pair, value] : lambda) {
        auto [i, j] = pair;
        if (i >= j || i < 1 || j > n)
            throw std::invalid_argument("pure_curvature wants unordered pairs i < j in 1..n");
        form.add_term({i, j}, {i, j}, value);
    }
    return CurvatureTensor::make(form);
}

CurvatureTensor constant_curvature(int n, const Rational& c) {
    return CurvatureTensor::make(c / 2 * metric_power(n, 2));
}

DoubleForm product_of_bilinears(const std::vector<DoubleForm>& factors) {
    if (factors.empty())
        throw std::invalid_argument("product_of_bilinears needs at least one factor");
    DoubleForm out = DoubleForm::scalar(factors.front().dimension(), 1);
    for (const auto& h : factors) {
        if (!h.is_homogeneous(1, 1) || !(transpose(h) == h))
            throw std::invalid_argument("factors must be symmetric (1,1) double forms");
        out = exterior_product(out, h);
    }
    return out;
}

}  // namespace biform
