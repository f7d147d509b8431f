// Acceptance gate: one line per criterion, exit 0 iff all pass.
// Usage: acceptance <path-to-biform-cli>

#include "biform/io.hpp"
#include "biform/verify.hpp"

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <sys/wait.h>
#include <vector>

using namespace biform;

namespace {

int g_failures = 0;

void report(int number, const std::string& label, bool ok,
            const std::string& detail = {}) {
    std::cout << "criterion " << number << " (" << label << "): "
              << (ok ? "pass" : "FAIL") << "\n";
    if (!ok) {
        ++g_failures;
        if (!detail.empty()) std::cout << "  " << detail << "\n";
    }
}

// Runs the named identities, each at every listed dimension.
bool run_suites(const std::vector<std::string>& names, const std::vector<int>& dims,
                int trials, std::string& detail) {
    for (const auto& name : names) {
        const auto* spec = find_identity(name);
        if (!spec) {
            detail = "unknown identity " + name;
            return false;
        }
        for (int n : dims) {
            auto rep = run_identity(*spec, n, trials, 2026);
            if (!rep.passed) {
                detail = name + " at n=" + std::to_string(n) + ": " + rep.counterexample;
                return false;
            }
        }
    }
    return true;
}

void criterion(int number, const std::string& label, const std::vector<std::string>& names,
               const std::vector<int>& dims, int trials = 25) {
    std::string detail;
    bool ok = run_suites(names, dims, trials, detail);
    report(number, label, ok, detail);
}

std::pair<int, std::string> run_cmd(const std::string& cmd) {
    FILE* pipe = popen((cmd + " 2>&1").c_str(), "r");
    if (!pipe) return {-1, "popen failed"};
    std::string output;
    char buf[4096];
    while (std::size_t got = std::fread(buf, 1, sizeof buf, pipe)) output.append(buf, got);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, output};
}

void criterion_cli(int number, const std::string& cli) {
    std::string detail;
    bool ok = true;

    // round-trip property on 50 random documents
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 50 && ok; ++trial) {
        int n = 2 + static_cast<int>(rng() % 3);
        TensorDocument doc = TensorDocument::from_form(
            "doubleform", random_form(rng, n, static_cast<int>(rng() % 3),
                                      static_cast<int>(rng() % 3)));
        std::string text = serialize_document(doc);
        auto parsed = parse_document(text);
        if (!(parsed.form == doc.form) || serialize_document(parsed) != text) {
            ok = false;
            detail = "round trip failed on trial " + std::to_string(trial);
        }
    }

    // negative control: counterexample and exit code 1
    if (ok) {
        auto [code, output] = run_cmd(cli + " verify --suite laplace-wrong-sign --trials 2");
        if (code != 1 || output.find("counterexample") == std::string::npos) {
            ok = false;
            detail = "negative control: exit=" + std::to_string(code) + " output=" + output;
        }
    }

    // determinism: byte-identical reports for identical seeds
    if (ok) {
        const std::string cmd =
            cli + " verify --suite laplace --suite greub-vanstone --trials 5 --seed 11";
        auto first = run_cmd(cmd);
        auto second = run_cmd(cmd);
        if (first.first != 0 || first != second) {
            ok = false;
            detail = "reports are not byte-identical across reruns";
        }
    }

    report(number, "CLI round-trip, negative control, determinism", ok, detail);
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance <path-to-biform-cli>\n";
        return 2;
    }
    const std::string cli = argv[1];

    criterion(1, "metric/contraction adjointness, all bidegrees", {"adjoint-gc"},
              {2, 3, 4, 5});
    criterion(2, "star operator relations",
              {"hodge-contraction", "hodge-inner", "star-volume", "hodge-square"},
              {2, 3, 4, 5});
    criterion(3, "composition laws and operator blocks",
              {"compose-operator", "compose-transpose", "compose-unit",
               "compose-adjoint", "compose-associativity"},
              {2, 3, 4});
    criterion(4, "interior product laws",
              {"interior-chain", "interior-metric", "interior-metric-product",
               "interior-adjoint", "star-mu-star"},
              {2, 3, 4, 5});
    criterion(5, "endomorphism extensions, Laplace, star powers",
              {"hat-unit", "exp-compound", "laplace", "star-power"}, {3, 4});
    criterion(6, "exterior/composition exchange identities",
              {"greub-basic", "greub-contraction", "vanstone", "greub-vanstone"},
              {3, 4, 5});
    criterion(7, "Girard-Newton and Cayley-Hamilton",
              {"girard-newton", "cayley-hamilton"}, {4, 5, 6});
    criterion(8, "alternation kernel and curvature vanishing",
              {"alt-kernel", "alt-oracle", "pontrjagin-pure", "pontrjagin-witness",
               "stehney"},
              {4, 5, 6});
    criterion_cli(9, cli);

    // the Laplace sub-criterion additionally requires n = 5
    {
        std::string detail;
        bool ok = run_suites({"laplace"}, {5}, 10, detail);
        if (!ok) {
            std::cout << "criterion 5 addendum (laplace at n=5): FAIL\n  " << detail << "\n";
            ++g_failures;
        }
    }

    std::cout << (g_failures == 0 ? "acceptance: all criteria passed"
                                  : "acceptance: " + std::to_string(g_failures) +
                                        " criteria failed")
              << "\n";
    return g_failures == 0 ? 0 : 1;
}
