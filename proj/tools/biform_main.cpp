#include "biform/composition.hpp"
#include "biform/curvature.hpp"
#include "biform/endo.hpp"
#include "biform/io.hpp"
#include "biform/verify.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInputError = 2;

int max_dimension() {
    if (const char* env = std::getenv("BIFORM_MAX_N")) {
        try {
            int value = std::stoi(env);
            if (value >= 1) return value;
        } catch (const std::exception&) {
        }
        throw biform::DocumentError("BIFORM_MAX_N must be a positive integer");
    }
    return 6;
}

biform::TensorDocument load_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw biform::DocumentError("cannot open file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    auto doc = biform::parse_document(buffer.str());
    if (doc.n > max_dimension())
        throw biform::DocumentError("dimension " + std::to_string(doc.n) +
                                    " exceeds BIFORM_MAX_N=" + std::to_string(max_dimension()));
    return doc;
}

biform::DoubleForm load_bilinear(const std::string& path) {
    auto doc = load_document(path);
    if (doc.kind != "bilinear")
        throw biform::DocumentError("expected a document of kind 'bilinear', got '" +
                                    doc.kind + "'");
    return doc.form;
}

std::string normalization_line(const biform::Normalization& norm, bool decimal) {
    std::ostringstream os;
    os << "normalization = " << biform::rational_to_string(norm.value);
    if (norm.pi_exponent != 0) os << " * pi^" << norm.pi_exponent;
    if (decimal)
        os << " = "
           << norm.value.convert_to<double>() * std::pow(std::numbers::pi, norm.pi_exponent);
    return os.str();
}

void print_exterior_form(std::ostream& os, const biform::ExteriorForm& form) {
    os << "degree = " << form.degree() << "\n";
    if (form.is_zero()) {
        os << "form = 0\n";
        return;
    }
    for (const auto& [idx, value] : form.terms()) {
        os << "  e_(";
        for (std::size_t i = 0; i < idx.size(); ++i) os << (i ? "," : "") << idx[i];
        os << ") : " << biform::rational_to_string(value) << "\n";
    }
}

int cmd_verify(const std::vector<std::string>& suites, std::optional<int> n, int trials,
               std::uint64_t seed) {
    std::vector<const biform::IdentitySpec*> selected;
    if (suites.empty()) {
        for (const auto& spec : biform::identity_registry())
            if (!spec.negative_control) selected.push_back(&spec);
    } else {
        for (const auto& name : suites) {
            const auto* spec = biform::find_identity(name);
            if (!spec) throw biform::DocumentError("unknown identity '" + name + "'");
            selected.push_back(spec);
        }
    }
    if (n && (*n < 2 || *n > max_dimension()))
        throw biform::DocumentError("--n must lie in [2, " + std::to_string(max_dimension()) +
                                    "]");
    int failures = 0;
    for (const auto* spec : selected) {
        auto report = biform::run_identity(*spec, n, trials, seed);
        std::cout << report.identity << ": " << (report.passed ? "pass" : "FAIL") << " (n="
                  << report.n << ", trials=" << report.trials << ", seed=" << report.seed
                  << ")\n";
        if (!report.passed) {
            ++failures;
            const std::string path = "counterexample-" + report.identity + ".txt";
            std::ofstream out(path);
            out << "identity: " << report.identity << "\n"
                << "statement: " << spec->statement << "\n"
                << "n: " << report.n << "\ntrials: " << report.trials << "\nseed: "
                << report.seed << "\n" << report.counterexample << "\n";
            std::cout << "  counterexample: " << report.counterexample << "\n"
                      << "  written to " << path << "\n";
        }
    }
    std::cout << (failures == 0 ? "all identities passed"
                                : std::to_string(failures) + " identities failed")
              << "\n";
    return failures == 0 ? kExitPass : kExitFail;
}

int cmd_invariants(const std::string& path) {
    biform::DoubleForm h = load_bilinear(path);
    const int n = h.dimension();
    std::cout << "n = " << n << "\n";
    std::cout << "det = " << biform::rational_to_string(biform::determinant(h)) << "\n";
    for (int p = 0; p <= n; ++p)
        std::cout << "s_" << p << " = "
                  << biform::rational_to_string(biform::invariant_s(h, p)) << "\n";
    for (int r = 1; r <= n; ++r)
        std::cout << "p_" << r << " = "
                  << biform::rational_to_string(biform::power_sum(h, r)) << "\n";
    for (int p = 0; p <= n - 1; ++p)
        std::cout << "t_" << p << " = " << biform::describe(biform::newton_t(h, p)) << "\n";
    for (int r = 1; r <= n; ++r) {
        biform::Rational residual = biform::Rational(r) * biform::invariant_s(h, r);
        for (int i = 1; i <= r; ++i) {
            int sign = (i % 2 == 1) ? 1 : -1;
            residual -= biform::Rational(sign) * biform::invariant_s(h, r - i) *
                        biform::power_sum(h, i);
        }
        std::cout << "girard-newton residual r=" << r << " : "
                  << biform::rational_to_string(residual) << "\n";
    }
    return kExitPass;
}

int cmd_pontrjagin(const std::string& path, std::optional<int> k,
                   const std::string& exponents_text, bool decimal, bool force) {
    auto doc = load_document(path);
    if (doc.kind != "curvature")
        throw biform::DocumentError("expected a document of kind 'curvature', got '" +
                                    doc.kind + "'");
    auto R = biform::CurvatureTensor::make(doc.form, force);
    std::pair<biform::ExteriorForm, biform::Normalization> result;
    if (k) {
        if (4 * *k > doc.n)
            std::cout << "warning: 4k = " << 4 * *k << " exceeds n = " << doc.n
                      << "; the form vanishes identically\n";
        result = biform::pontrjagin_form(R, *k);
    } else {
        std::vector<int> exponents;
        std::stringstream ss(exponents_text);
        std::string item;
        while (std::getline(ss, item, ','))
            exponents.push_back(std::stoi(item));
        result = biform::pontrjagin_product(R, exponents);
    }
    std::cout << normalization_line(result.second, decimal) << "\n";
    print_exterior_form(std::cout, result.first);
    return kExitPass;
}

int cmd_purity(const std::string& path, int p, const std::string& basis_path) {
    auto doc = load_document(path);
    if (doc.kind != "curvature")
        throw biform::DocumentError("expected a document of kind 'curvature', got '" +
                                    doc.kind + "'");
    const int n = doc.n;
    biform::BasisMatrix basis;
    if (basis_path.empty()) {
        basis.assign(n, std::vector<biform::Rational>(n, biform::Rational(0)));
        for (int i = 0; i < n; ++i) basis[i][i] = 1;
    } else {
        auto basis_doc = load_document(basis_path);
        if (basis_doc.kind != "basis")
            throw biform::DocumentError("expected a document of kind 'basis', got '" +
                                        basis_doc.kind + "'");
        if (basis_doc.n != n)
            throw biform::DocumentError("basis dimension does not match the curvature");
        basis = basis_doc.matrix;
    }
    if (p < 1 || 2 * p > n)
        throw biform::DocumentError("--p must satisfy 1 <= p and 2p <= n");
    biform::DoubleForm power = biform::exterior_power(doc.form, p);
    auto report = biform::is_pure_in_basis(power, basis);
    std::cout << "p = " << p << "\n";
    if (2 * p == n)
        std::cout << "note: 2p = n, so R^p lies in the one-dimensional diagonal space "
                     "D^(n,n) and purity is automatic\n";
    std::cout << "verdict = " << (report.pure ? "pure" : "not pure") << "\n";
    for (const auto& [key, value] : report.residual) {
        std::cout << "  residual (";
        for (std::size_t i = 0; i < key.first.size(); ++i)
            std::cout << (i ? "," : "") << key.first[i];
        std::cout << "|";
        for (std::size_t i = 0; i < key.second.size(); ++i)
            std::cout << (i ? "," : "") << key.second[i];
        std::cout << ") = " << biform::rational_to_string(value) << "\n";
    }
    return report.pure ? kExitPass : kExitFail;
}

int cmd_det(const std::string& path) {
    biform::DoubleForm h = load_bilinear(path);
    std::cout << "det = " << biform::rational_to_string(biform::determinant(h)) << "\n";
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"biform: exact computer algebra for double forms"};
    app.require_subcommand(1);

    auto* verify = app.add_subcommand("verify", "run randomized identity suites");
    std::vector<std::string> suites;
    int trials = 25;
    std::uint64_t seed = 1;
    std::optional<int> n;
    verify->add_option("--suite", suites, "identity name (repeatable; default: all)");
    verify->add_option("--n", n, "dimension override");
    verify->add_option("--trials", trials, "trials per identity")->check(CLI::PositiveNumber);
    verify->add_option("--seed", seed, "random seed");

    auto* invariants = app.add_subcommand("invariants", "invariants of a bilinear form");
    std::string invariants_file;
    invariants->add_option("file", invariants_file, "bilinear JSON document")->required();

    auto* pontrjagin = app.add_subcommand("pontrjagin", "Pontrjagin forms of a curvature tensor");
    std::string pontrjagin_file, exponents_text;
    std::optional<int> k;
    bool decimal = false, force = false;
    pontrjagin->add_option("file", pontrjagin_file, "curvature JSON document")->required();
    auto* k_opt = pontrjagin->add_option("--k", k, "Pontrjagin index k");
    auto* e_opt =
        pontrjagin->add_option("--exponents", exponents_text, "comma-separated k_1,...,k_m");
    k_opt->excludes(e_opt);
    pontrjagin->add_flag("--decimal", decimal, "also render the constant as a decimal");
    pontrjagin->add_flag("--force", force, "accept curvature violating the Bianchi identity");

    auto* purity = app.add_subcommand("purity", "check p-purity of a curvature tensor");
    std::string purity_file, basis_file;
    int p = 1;
    purity->add_option("file", purity_file, "curvature JSON document")->required();
    purity->add_option("--p", p, "purity order")->required();
    purity->add_option("--basis", basis_file, "orthonormal basis JSON document");

    auto* det = app.add_subcommand("det", "determinant of a bilinear form");
    std::string det_file;
    det->add_option("file", det_file, "bilinear JSON document")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) return cmd_verify(suites, n, trials, seed);
        if (invariants->parsed()) return cmd_invariants(invariants_file);
        if (pontrjagin->parsed()) {
            if (!k && exponents_text.empty())
                throw biform::DocumentError("one of --k or --exponents is required");
            return cmd_pontrjagin(pontrjagin_file, k, exponents_text, decimal, force);
        }
        if (purity->parsed()) return cmd_purity(purity_file, p, basis_file);
        if (det->parsed()) return cmd_det(det_file);
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
