#include "fracnabla/cli.hpp"

#include <cmath>
#include <fstream>
#include <ostream>

#include <CLI11.hpp>

#include "fracnabla/config.hpp"
#include "fracnabla/errors.hpp"
#include "fracnabla/output.hpp"
#include "fracnabla/verify.hpp"

namespace fracnabla {

namespace {

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file || !(file << contents) || !file.flush()) {
        throw ValidationError("cannot write '" + path + "'");
    }
}

struct SolveArgs {
    std::string config;
    std::string csv;
    std::string svg;
    double tol = 1e-9;
    bool paper_pq = false;
};

struct WeightsArgs {
    double mu = 0.0;
    std::size_t count = 0;
};

int run_solve(const SolveArgs& args, std::ostream& out, std::ostream& err) {
    const ProblemSpec problem = load_problem_file(args.config);
    SolveOptions options;
    if (args.paper_pq) {
        if (!is_two_term(problem.kind)) {
            err << "note: --paper-pq only affects two-term problems\n";
        }
        options.initial_vectors = InitialVectorForm::published;
    }
    Solution solution = solve(problem, options);
    const ResidualReport report = residual(problem, solution);
    solution.residual_max = report.max_abs;

    if (!args.csv.empty()) {
        write_file(args.csv, emit_csv(solution));
    }
    if (!args.svg.empty()) {
        write_file(args.svg, emit_svg(solution));
    }
    if (args.csv.empty() && args.svg.empty()) {
        out << emit_csv(solution);
    }
    err << problem.name << ": horizon " << problem.horizon
        << ", residual_max = " << format_real(report.max_abs)
        << ", relative_residual_max = " << format_real(report.max_relative) << '\n';
    if (!(report.max_abs <= args.tol)) {
        err << "error: residual " << format_real(report.max_abs) << " exceeds tolerance "
            << format_real(args.tol) << '\n';
        return kExitNumerical;
    }
    return kExitSuccess;
}

int run_verify(const SolveArgs& args, std::ostream& out, std::ostream& err) {
    const ProblemSpec problem = load_problem_file(args.config);
    const Solution solution = solve(problem);
    const ResidualReport report = residual(problem, solution);
    const Solution oracle = direct_step_solve(problem);

    double max_rel = 0.0;
    for (std::size_t t = 0; t <= problem.horizon; ++t) {
        const double x = solution.values(t);
        const double y = oracle.values(t);
        max_rel = std::max(max_rel, std::abs(x - y) / std::max(1.0, std::abs(y)));
    }
    out << "problem = " << problem.name << '\n'
        << "kind = " << to_string(problem.kind) << '\n'
        << "horizon = " << problem.horizon << '\n'
        << "residual_max = " << format_real(report.max_abs) << '\n'
        << "relative_residual_max = " << format_real(report.max_relative) << '\n'
        << "direct_step_max_rel_diff = " << format_real(max_rel) << '\n';
    if (!(report.max_abs <= args.tol)) {
        err << "error: residual " << format_real(report.max_abs) << " exceeds tolerance "
            << format_real(args.tol) << '\n';
        return kExitNumerical;
    }
    return kExitSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Initial value problems for linear fractional nabla difference equations",
                 "fracnabla"};
    app.require_subcommand(1);

    SolveArgs solve_args;
    auto* solve_cmd = app.add_subcommand("solve", "Solve a problem file and check its residual");
    solve_cmd->add_option("--config", solve_args.config, "Problem file")->required();
    solve_cmd->add_option("--csv", solve_args.csv, "Write the solution as CSV");
    solve_cmd->add_option("--svg", solve_args.svg, "Write the solution as an SVG chart");
    solve_cmd->add_option("--tol", solve_args.tol, "Residual tolerance")
        ->check(CLI::PositiveNumber);
    solve_cmd->add_flag("--paper-pq", solve_args.paper_pq,
                        "Use the published u(0)/u(1) vectors for two-term problems");

    SolveArgs verify_args;
    auto* verify_cmd = app.add_subcommand("verify", "Report residual and oracle agreement");
    verify_cmd->add_option("--config", verify_args.config, "Problem file")->required();
    verify_cmd->add_option("--tol", verify_args.tol, "Residual tolerance")
        ->check(CLI::PositiveNumber);

    WeightsArgs weights_args;
    auto* weights_cmd = app.add_subcommand("weights", "Dump h_mu(k, 0), k = 1..count, as CSV");
    weights_cmd->add_option("--mu", weights_args.mu, "Monomial order")->required();
    weights_cmd->add_option("--count", weights_args.count, "Number of terms")->required();

    std::vector<const char*> argv{"fracnabla"};
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitSuccess : kExitUsage;
    }

    try {
        if (*solve_cmd) {
            return run_solve(solve_args, out, err);
        }
        if (*verify_cmd) {
            return run_verify(verify_args, out, err);
        }
        if (!std::isfinite(weights_args.mu)) {
            throw ValidationError("--mu must be finite");
        }
        out << emit_weights_csv(monomial_weight_sequence(weights_args.mu, weights_args.count));
        return kExitSuccess;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const SingularSystemError& e) {
        err << "error: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitNumerical;
    }
}

}  // namespace fracnabla
