// chiralix - command line front end
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "chiralix/commands.hpp"
#include "chiralix/common.hpp"
#include "chiralix/io.hpp"
#include "chiralix/version.hpp"

namespace cli = chiralix::cli;

int main(int argc, char** argv) {
    CLI::App app{"Chiral-basis determinant toolkit for XX spin-helix relaxation"};
    app.set_version_flag("--version", chiralix::kVersion);
    app.set_config("--config", "", "Read options from an INI file");
    app.footer("Environment: CHIRALIX_THREADS caps worker threads.");
    app.require_subcommand(0, 1);

    std::string dump_path;
    app.add_option("--dump-config", dump_path,
                   "Write the resolved configuration to FILE and exit")
        ->configurable(false);

    cli::FiniteOptions fin;
    CLI::App* finite = app.add_subcommand(
        "finite", "Finite-chain relaxation S_N(t) from the momentum-sum determinant");
    finite->configurable();
    finite->add_option("--n", fin.n_qubits, "Chain length (even, at least 4)")
        ->capture_default_str();
    finite->add_option("--t-max", fin.t_max, "Last time on the grid")->capture_default_str();
    finite->add_option("--dt", fin.dt, "Grid spacing")->capture_default_str();
    finite->add_flag("--oracle", fin.oracle, "Add a brute-force diagonalization column");
    finite->add_option("--out", fin.output.out, "Output file, - for stdout")
        ->capture_default_str();
    finite->add_option("--format", fin.output.format, "csv or json")->capture_default_str();

    cli::InfiniteOptions inf;
    CLI::App* infinite = app.add_subcommand(
        "infinite", "Infinite-chain relaxation S(t) from the Bessel-kernel determinant");
    infinite->configurable();
    infinite->add_option("--t-max", inf.t_max, "Last time on the grid")->capture_default_str();
    infinite->add_option("--dt", inf.dt, "Grid spacing")->capture_default_str();
    infinite->add_option("--rank", inf.rank, "Truncation rank, 0 selects auto")
        ->capture_default_str();
    infinite->add_option("--margin", inf.margin, "Auto-rank validity margin in time units")
        ->capture_default_str();
    infinite->add_option("--out", inf.output.out, "Output file, - for stdout")
        ->capture_default_str();
    infinite->add_option("--format", inf.output.format, "csv or json")->capture_default_str();

    cli::RateOptions rate;
    CLI::App* rate_cmd =
        app.add_subcommand("rate", "Helix decay rate gamma(Q) over Q/pi in [0, 1/2]");
    rate_cmd->configurable();
    rate_cmd->add_option("--samples", rate.samples, "Number of Q samples")
        ->capture_default_str();
    rate_cmd->add_flag("--fitted", rate.fitted,
                       "Add a rate column measured from determinant decay");
    rate_cmd->add_option("--out", rate.output.out, "Output file, - for stdout")
        ->capture_default_str();
    rate_cmd->add_option("--format", rate.output.format, "csv or json")->capture_default_str();

    cli::TaylorOptions taylor;
    CLI::App* taylor_cmd =
        app.add_subcommand("taylor", "Short-time Taylor coefficients of S_N(t)");
    taylor_cmd->configurable();
    taylor_cmd->add_option("--n", taylor.n_qubits, "Chain length (even, at least 4)")
        ->capture_default_str();
    taylor_cmd->add_option("--order", taylor.order, "Highest Taylor order")
        ->capture_default_str();
    taylor_cmd->add_option("--out", taylor.output.out, "Output file, - for stdout")
        ->capture_default_str();
    taylor_cmd->add_option("--format", taylor.output.format, "csv or json")
        ->capture_default_str();

    cli::ValidateOptions val;
    CLI::App* validate_cmd =
        app.add_subcommand("validate", "Run the built-in cross-check suite");
    validate_cmd->configurable();
    validate_cmd->add_option("--level", val.level, "quick or full")->capture_default_str();
    validate_cmd->add_option("--report", val.report, "Write a JSON report to FILE");
    validate_cmd
        ->add_flag("--inject-kernel-defect", val.inject_kernel_defect,
                   "Perturb the kernel diagonal; the run must then fail")
        ->group("");  // hidden: harness self-test only

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? cli::kExitOk : cli::kExitUsage;
    }

    try {
        if (!dump_path.empty()) {
            chiralix::io::write_text(dump_path, app.config_to_str(true, false));
            return cli::kExitOk;
        }
        if (finite->parsed()) return cli::run_finite(fin);
        if (infinite->parsed()) return cli::run_infinite(inf);
        if (rate_cmd->parsed()) return cli::run_rate(rate);
        if (taylor_cmd->parsed()) return cli::run_taylor(taylor);
        if (validate_cmd->parsed()) return cli::run_validate(val, std::cout);
        std::cerr << app.help();
        return cli::kExitUsage;
    } catch (const chiralix::BudgetError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return cli::kExitBudget;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return cli::kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return cli::kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
}
