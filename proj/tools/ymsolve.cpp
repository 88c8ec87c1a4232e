// Command-line front end for the constant Yang-Mills solver.
// Exit codes: 0 ok, 1 check failed, 2 input error, 3 internal invariant violation.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <limits>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ym/cubic.hpp"
#include "ym/io.hpp"
#include "ym/oracle.hpp"
#include "ym/solver.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;
constexpr int kExitInternal = 3;

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream f(path, std::ios::binary);
    if (!f) throw ym::ParseError("input: cannot open '" + path + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

int run_solve(const std::string& path, const ym::Tolerances& tol, ym::io::ReportFormat fmt) {
    const ym::io::InputDocument doc = ym::io::parse_document(slurp(path));
    const ym::solver::SolutionReport rep = ym::solver::solve(ym::solver::Current{doc.J}, tol);
    std::cout << ym::io::render_solution(rep, tol, fmt);
    return kExitOk;
}

int run_classify(const std::string& path, const ym::Tolerances& tol, ym::io::ReportFormat fmt) {
    const ym::io::InputDocument doc = ym::io::parse_document(slurp(path));
    const ym::solver::Classification cls =
        ym::solver::classify(ym::solver::Current{doc.J}, tol);
    std::cout << ym::io::render_classification(cls, doc.n, tol, fmt);
    return kExitOk;
}

int run_verify(const std::string& path, double check_tol, const ym::Tolerances& tol,
               ym::io::ReportFormat fmt) {
    const ym::io::InputDocument doc = ym::io::parse_document(slurp(path));
    if (!doc.A) throw ym::ParseError("A: required for verification");
    const ym::MatR res =
        ym::solver::residual(ym::solver::Potential{*doc.A}, ym::solver::Current{doc.J}, tol);
    const double rmax = ym::max_abs(res);
    const bool pass = rmax <= check_tol;
    std::cout << ym::io::render_verification(res, rmax, check_tol, pass, fmt);
    return pass ? kExitOk : kExitCheckFailed;
}

/* Certification: (a) roundtrip recovery of random potentials through the
 * induced current, (b) closed-form diagonal solutions against a multi-start
 * Newton sweep (set equality both ways), (c) the auxiliary-cubic root against
 * bracketed bisection. */
int run_certify(int trials, int n_max, std::uint64_t seed, const ym::Tolerances& tol,
                ym::io::ReportFormat fmt) {
    const ym::oracle::CertifyReport rt = ym::oracle::roundtrip_certify(trials, n_max, seed, tol);

    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
    std::uniform_real_distribution<double> draw(0.4, 2.5);
    int sweep_passes = 0;
    double worst_root_gap = 0.0;
    double worst_t0_gap = 0.0;
    for (int t = 0; t < trials; ++t) {
        const ym::Vec3 j{draw(rng), draw(rng), draw(rng)};
        const ym::cubic::DiagSolutionSet ds = ym::cubic::solve_diag_n3(j, tol);
        const std::vector<ym::Vec3> roots = ym::oracle::newton_sweep(j);

        bool ok = roots.size() == ds.solutions.size();
        double local_gap = 0.0;
        for (const ym::Vec3& b : ds.solutions) {
            double best = std::numeric_limits<double>::infinity();
            for (const ym::Vec3& r : roots) {
                const ym::Vec3 diff{r[0] - b[0], r[1] - b[1], r[2] - b[2]};
                best = std::min(best, ym::max_abs(diff));
            }
            local_gap = std::max(local_gap, best);
            if (!(best <= 1e-8 * (1.0 + ym::max_abs(b)))) ok = false;
        }
        worst_root_gap = std::max(worst_root_gap, local_gap);

        if (ds.label == ym::cubic::CaseLabel::AllDistinct) {
            const double gap = std::abs(ym::oracle::bisect_t0(j, tol) - ym::cubic::solve_t0(j, tol));
            worst_t0_gap = std::max(worst_t0_gap, gap);
            if (!(gap <= 1e-11)) ok = false;
        }
        if (ok) ++sweep_passes;
    }

    const bool pass = rt.ok() && sweep_passes == trials;
    if (fmt == ym::io::ReportFormat::Structured) {
        nlohmann::json out;
        out["roundtrip"] = {{"trials", rt.trials},
                            {"passes", rt.passes},
                            {"worst_residual", rt.worst_residual},
                            {"worst_recovery", rt.worst_recovery},
                            {"failures", rt.failures}};
        out["sweep"] = {{"trials", trials},
                        {"passes", sweep_passes},
                        {"worst_root_gap", worst_root_gap},
                        {"worst_t0_gap", worst_t0_gap}};
        out["pass"] = pass;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "pass," << (pass ? "true" : "false") << "\n"
                  << "roundtrip_trials," << rt.trials << "\n"
                  << "roundtrip_passes," << rt.passes << "\n"
                  << "roundtrip_worst_residual," << rt.worst_residual << "\n"
                  << "roundtrip_worst_recovery," << rt.worst_recovery << "\n"
                  << "sweep_trials," << trials << "\n"
                  << "sweep_passes," << sweep_passes << "\n"
                  << "sweep_worst_root_gap," << worst_root_gap << "\n"
                  << "sweep_worst_t0_gap," << worst_t0_gap << "\n";
        for (const std::string& f : rt.failures) std::cout << "failure," << f << "\n";
    }
    return pass ? kExitOk : kExitCheckFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Constant SU(2) Yang-Mills solver: all constant potentials for a "
                 "constant non-Abelian current"};
    app.require_subcommand(1);

    const ym::Tolerances defaults{};
    std::string path = "-";
    std::string format = "structured";
    double check_tol = 1e-9;
    double tie_tol = defaults.tie_rel;
    double zero_tol = defaults.zero_rel;
    int trials = 200;
    int n_max = 6;
    std::uint64_t seed = 1;

    const std::string fmt_help = "report format: structured|csv";
    CLI::App* solve = app.add_subcommand("solve", "compute all constant solutions for a current");
    solve->add_option("input", path, "document (path or '-' for stdin)");
    solve->add_option("--format", format, fmt_help);
    solve->add_option("--tie-tol", tie_tol, "relative tie threshold for singular values");
    solve->add_option("--zero-tol", zero_tol, "relative zero threshold for singular values");

    CLI::App* verify = app.add_subcommand("verify", "check a potential against a current");
    verify->add_option("input", path, "document with J and A (path or '-')");
    verify->add_option("--format", format, fmt_help);
    verify->add_option("--tol", check_tol, "max-norm residual bound for acceptance");

    CLI::App* classify = app.add_subcommand("classify", "rank and case label only");
    classify->add_option("input", path, "document (path or '-')");
    classify->add_option("--format", format, fmt_help);
    classify->add_option("--tie-tol", tie_tol, "relative tie threshold for singular values");
    classify->add_option("--zero-tol", zero_tol, "relative zero threshold for singular values");

    CLI::App* certify = app.add_subcommand("certify", "randomized self-certification sweeps");
    certify->add_option("--trials", trials, "trials per sweep");
    certify->add_option("--n", n_max, "max dimension for roundtrip draws");
    certify->add_option("--seed", seed, "RNG seed");
    certify->add_option("--format", format, fmt_help);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInputError;
    }

    ym::Tolerances tol = defaults;
    tol.tie_rel = tie_tol;
    tol.zero_rel = zero_tol;

    try {
        const ym::io::ReportFormat fmt = ym::io::parse_format(format);
        if (solve->parsed()) return run_solve(path, tol, fmt);
        if (verify->parsed()) return run_verify(path, check_tol, tol, fmt);
        if (classify->parsed()) return run_classify(path, tol, fmt);
        if (certify->parsed()) return run_certify(trials, n_max, seed, tol, fmt);
        std::cerr << "ymsolve: no subcommand\n";
        return kExitInputError;
    } catch (const ym::InternalCheckFailure& e) {
        std::cerr << "ymsolve: internal: " << e.what() << "\n";
        return kExitInternal;
    } catch (const ym::Error& e) {
        std::cerr << "ymsolve: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "ymsolve: internal: " << e.what() << "\n";
        return kExitInternal;
    }
}
