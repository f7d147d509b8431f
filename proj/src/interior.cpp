#include "biform/interior.hpp"

#include <stdexcept>

namespace biform {

namespace {

// Sign s with e_A ^ e_{I\A} = s * e_I, or 0 when A is not inside I.
int split_sign(const MultiIndex& sub, const MultiIndex& idx) {
    if (!contains_all(idx, sub)) return 0;
    auto merged = merge_with_sign(sub, difference(idx, sub));
    return merged->second;
}

}  // namespace

DoubleForm interior_left(const DoubleForm& v, const DoubleForm& omega) {
    if (!v.is_homogeneous(1, 0))
        throw std::invalid_argument("interior_left requires a (1,0) contractor");
    DoubleForm out(omega.dimension());
    for (const auto& [kv, a] : v.terms()) {
        for (const auto& [kw, b] : omega.terms()) {
            int s = split_sign(kv.row, kw.row);
            if (s == 0) continue;
            out.add_term(difference(kw.row, kv.row), kw.col, Rational(s) * a * b);
        }
    }
    return out;
}

DoubleForm interior_right(const DoubleForm& w, const DoubleForm& omega) {
    if (!w.is_homogeneous(0, 1))
        throw std::invalid_argument("interior_right requires a (0,1) contractor");
    DoubleForm out(omega.dimension());
    for (const auto& [kv, a] : w.terms()) {
        for (const auto& [kw, b] : omega.terms()) {
            int s = split_sign(kv.col, kw.col);
            if (s == 0) continue;
            out.add_term(kw.row, difference(kw.col, kv.col), Rational(s) * a * b);
        }
    }
    return out;
}

DoubleForm interior(const DoubleForm& psi, const DoubleForm& omega) {
    if (psi.dimension() != omega.dimension())
        throw std::invalid_argument("dimension mismatch between double forms");
    // Termwise adjoint of mu: i_{e_A (x) e_B}(e_I (x) e_J) is the
    // signed pair (I\A, J\B) when A and B sit inside I and J.
    DoubleForm out(omega.dimension());
    for (const auto& [kp, a] : psi.terms()) {
        for (const auto& [kw, b] : omega.terms()) {
            int s1 = split_sign(kp.row, kw.row);
            if (s1 == 0) continue;
            int s2 = split_sign(kp.col, kw.col);
            if (s2 == 0) continue;
            out.add_term(difference(kw.row, kp.row), difference(kw.col, kp.col),
                         Rational(s1 * s2) * a * b);
        }
    }
    return out;
}

DoubleForm mu(const DoubleForm& psi, const DoubleForm& omega) {
    return exterior_product(psi, omega);
}

DoubleForm hodge_star(const DoubleForm& omega) {
    const int n = omega.dimension();
    DoubleForm out(n);
    for (const auto& [key, value] : omega.terms()) {
        const int p = static_cast<int>(key.row.size());
        const int q = static_cast<int>(key.col.size());
        auto rc = complement_with_sign(key.row, n).first;
        auto cc = complement_with_sign(key.col, n).first;
        // *(e_I (x) e_J) = (-1)^{(p+q)(n-p-q)} eps_{I^c} eps_{J^c}
        //                  e_{I^c} (x) e_{J^c}
        // with eps_K the classical star sign e_K ^ e_{K^c} = eps_K vol.
        int rsign = complement_with_sign(rc, n).second;
        int csign = complement_with_sign(cc, n).second;
        int global = (((p + q) * (n - p - q)) % 2 == 0) ? 1 : -1;
        out.add_term(std::move(rc), std::move(cc),
                     Rational(global * rsign * csign) * value);
    }
    return out;
}

}  // namespace biform
