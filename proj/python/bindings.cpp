// Python bindings for the biform core. Exact rationals cross the
// boundary as fractions.Fraction; multi-indices as tuples of ints.

#include "biform/composition.hpp"
#include "biform/curvature.hpp"
#include "biform/double_form.hpp"
#include "biform/endo.hpp"
#include "biform/interior.hpp"
#include "biform/io.hpp"
#include "biform/verify.hpp"

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <utility>
#include <vector>

namespace py = pybind11;

namespace pybind11::detail {

// biform::Rational <-> fractions.Fraction (ints and "a/b" strings also
// accepted on the way in; both stringify to something parse_rational
// understands).
template <>
struct type_caster<biform::Rational> {
    PYBIND11_TYPE_CASTER(biform::Rational, const_name("Fraction"));

    bool load(handle src, bool) {
        if (py::isinstance<py::float_>(src)) return false;  // no inexact input
        std::string text;
        try {
            text = py::cast<std::string>(py::str(src));
        } catch (const py::error_already_set&) {
            return false;
        }
        auto parsed = biform::parse_rational(text);
        if (!parsed) return false;
        value = *parsed;
        return true;
    }

    static handle cast(const biform::Rational& src, return_value_policy, handle) {
        py::object fraction = py::module_::import("fractions").attr("Fraction");
        return fraction(biform::rational_to_string(src)).release();
    }
};

}  // namespace pybind11::detail

namespace {

using namespace biform;

py::dict terms_dict(const DoubleForm& form) {
    py::dict out;
    for (const auto& [key, value] : form.terms())
        out[py::make_tuple(py::tuple(py::cast(key.row)), py::tuple(py::cast(key.col)))] =
            py::cast(value);
    return out;
}

py::dict report_dict(const VerificationReport& report) {
    py::dict out;
    out["identity"] = report.identity;
    out["n"] = report.n;
    out["trials"] = report.trials;
    out["seed"] = report.seed;
    out["passed"] = report.passed;
    out["counterexample"] = report.counterexample;
    return out;
}

}  // namespace

PYBIND11_MODULE(_biform, m) {
    m.doc() = "Exact bigraded double-form algebra over Euclidean space";

    py::register_exception<DocumentError>(m, "DocumentError", PyExc_ValueError);

    py::class_<DoubleForm>(m, "DoubleForm")
        .def(py::init<int>(), py::arg("n"))
        .def_static("make", &DoubleForm::make, py::arg("n"), py::arg("entries"))
        .def_static("zero", &DoubleForm::zero, py::arg("n"))
        .def_static("scalar", &DoubleForm::scalar, py::arg("n"), py::arg("value"))
        .def_property_readonly("n", &DoubleForm::dimension)
        .def("terms", &terms_dict)
        .def("is_zero", &DoubleForm::is_zero)
        .def("coefficient", &DoubleForm::coefficient, py::arg("row"), py::arg("col"))
        .def("add_term", &DoubleForm::add_term, py::arg("row"), py::arg("col"),
             py::arg("value"))
        .def("scalar_part", &DoubleForm::scalar_part)
        .def("bidegree", &DoubleForm::bidegree)
        .def("is_homogeneous", &DoubleForm::is_homogeneous, py::arg("p"), py::arg("q"))
        .def("component", &DoubleForm::component, py::arg("p"), py::arg("q"))
        .def(py::self == py::self)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def("__rmul__",
             [](const DoubleForm& a, const Rational& s) { return s * a; })
        .def("__repr__", [](const DoubleForm& a) {
            return "DoubleForm(" + std::to_string(a.dimension()) + ", " + describe(a) + ")";
        });

    py::class_<ExteriorForm>(m, "ExteriorForm")
        .def_property_readonly("n", &ExteriorForm::dimension)
        .def_property_readonly("degree", &ExteriorForm::degree)
        .def("is_zero", &ExteriorForm::is_zero)
        .def("coefficient", &ExteriorForm::coefficient, py::arg("index"))
        .def("terms",
             [](const ExteriorForm& f) {
                 py::dict out;
                 for (const auto& [idx, value] : f.terms())
                     out[py::tuple(py::cast(idx))] = py::cast(value);
                 return out;
             })
        .def(py::self == py::self);

    py::class_<Normalization>(m, "Normalization")
        .def_readonly("value", &Normalization::value)
        .def_readonly("pi_exponent", &Normalization::pi_exponent)
        .def(py::self == py::self);

    py::class_<CurvatureTensor>(m, "CurvatureTensor")
        .def_static("make", &CurvatureTensor::make, py::arg("form"),
                    py::arg("allow_bianchi_violation") = false)
        .def_property_readonly("form", &CurvatureTensor::form)
        .def_property_readonly("n", &CurvatureTensor::dimension);

    py::class_<PurityReport>(m, "PurityReport")
        .def_readonly("pure", &PurityReport::pure)
        .def_readonly("residual", &PurityReport::residual);

    // graded algebra
    m.def("exterior_product", &exterior_product);
    m.def("exterior_power", &exterior_power, py::arg("a"), py::arg("k"));
    m.def("transpose", &transpose);
    m.def("inner_product", &inner_product);
    m.def("contraction", &contraction);
    m.def("contraction_power", &contraction_power, py::arg("a"), py::arg("k"));
    m.def("metric", &metric, py::arg("n"));
    m.def("metric_power", &metric_power, py::arg("n"), py::arg("p"));
    m.def("metric_power_normalized", &metric_power_normalized, py::arg("n"), py::arg("p"));
    m.def("volume", &volume, py::arg("n"));

    // composition algebra
    m.def("compose", &compose);
    m.def("comp_power", &comp_power, py::arg("h"), py::arg("r"));
    m.def("power_sum", &power_sum, py::arg("h"), py::arg("r"));

    // interior products and the double star
    m.def("interior_left", &interior_left, py::arg("v"), py::arg("omega"));
    m.def("interior_right", &interior_right, py::arg("w"), py::arg("omega"));
    m.def("interior", &interior, py::arg("psi"), py::arg("omega"));
    m.def("mu", &mu, py::arg("psi"), py::arg("omega"));
    m.def("hodge_star", &hodge_star);

    // endomorphism extensions and invariants
    m.def("exp_ext", &exp_ext);
    m.def("hat_R", &hat_R, py::arg("h"), py::arg("omega"));
    m.def("hat_L", &hat_L, py::arg("h"), py::arg("omega"));
    m.def("determinant", &determinant);
    m.def("invariant_s", &invariant_s, py::arg("h"), py::arg("p"));
    m.def("newton_t", &newton_t, py::arg("h"), py::arg("p"));
    m.def("cofactor_s", &cofactor_s, py::arg("h"), py::arg("r"), py::arg("p"));
    m.def("cofactor_general", &cofactor_general, py::arg("omega"), py::arg("r"),
          py::arg("q"));

    // curvature structures
    m.def("alt", &alt);
    m.def("bianchi", &bianchi);
    m.def("pontrjagin_form", &pontrjagin_form, py::arg("R"), py::arg("k"));
    m.def("pontrjagin_product", &pontrjagin_product, py::arg("R"), py::arg("exponents"));
    m.def("is_pure_in_basis", &is_pure_in_basis, py::arg("omega"), py::arg("basis"));
    m.def("pure_curvature", &pure_curvature, py::arg("n"), py::arg("coefficients"));
    m.def("constant_curvature", &constant_curvature, py::arg("n"), py::arg("c"));
    m.def("product_of_bilinears", &product_of_bilinears, py::arg("factors"));

    // documents
    m.def("parse_document", [](const std::string& text) {
        TensorDocument doc = parse_document(text);
        py::dict out;
        out["n"] = doc.n;
        out["kind"] = doc.kind;
        if (doc.kind == "basis")
            out["matrix"] = py::cast(doc.matrix);
        else
            out["form"] = py::cast(doc.form);
        return out;
    });
    m.def("serialize_form", [](const std::string& kind, const DoubleForm& form) {
        return serialize_document(TensorDocument::from_form(kind, form));
    });
    m.def("serialize_basis", [](int n, const BasisMatrix& matrix) {
        return serialize_document(TensorDocument::from_basis(n, matrix));
    });

    // identity verification
    m.def("list_identities", [] {
        std::vector<py::dict> out;
        for (const auto& spec : identity_registry()) {
            py::dict entry;
            entry["name"] = spec.name;
            entry["statement"] = spec.statement;
            entry["default_n"] = spec.default_n;
            entry["negative_control"] = spec.negative_control;
            out.push_back(std::move(entry));
        }
        return out;
    });
    m.def(
        "run_identity",
        [](const std::string& name, std::optional<int> n, int trials,
           std::uint64_t seed) {
            const auto* spec = find_identity(name);
            if (!spec) throw py::value_error("unknown identity: " + name);
            return report_dict(run_identity(*spec, n, trials, seed));
        },
        py::arg("name"), py::arg("n") = std::nullopt, py::arg("trials") = 25,
        py::arg("seed") = 1);
}
