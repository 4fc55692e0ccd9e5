#include "chiralix/commands.hpp"

#include <cmath>
#include <ostream>
#include <vector>

#include "chiralix/exact_core.hpp"
#include "chiralix/helix_decay.hpp"
#include "chiralix/io.hpp"
#include "chiralix/numerics.hpp"
#include "chiralix/parallel.hpp"
#include "chiralix/spectral_series.hpp"
#include "chiralix/validate.hpp"
#include "chiralix/version.hpp"

namespace chiralix::cli {

namespace {

std::vector<double> time_grid(double t_max, double dt) {
    require(dt > 0.0, "dt must be positive");
    require(t_max >= 0.0, "t-max must be nonnegative");
    std::vector<double> ts;
    for (int i = 0;; ++i) {
        double t = i * dt;
        if (t > t_max + 1e-12) break;
        ts.push_back(t);
    }
    return ts;
}

void emit(const io::Table& table, const OutputOptions& output) {
    require(output.format == "csv" || output.format == "json", "format must be csv or json");
    io::write_text(output.out,
                   output.format == "csv" ? io::to_csv(table) : io::to_json(table));
}

std::string format_int(long long v) { return std::to_string(v); }

}  // namespace

int run_finite(const FiniteOptions& options) {
    require(options.n_qubits >= 4 && options.n_qubits % 2 == 0,
            "n must be even and at least 4");
    std::vector<double> ts = time_grid(options.t_max, options.dt);

    io::Table table;
    table.meta = {{"generator", std::string("chiralix ") + kVersion},
                  {"command", "finite"},
                  {"n_qubits", format_int(options.n_qubits)},
                  {"t_max", io::format_number(options.t_max)},
                  {"dt", io::format_number(options.dt)}};
    table.columns = {"t", "s", "log10_abs_s"};
    if (options.oracle) table.columns.push_back("s_oracle");

    std::vector<helix::SFiniteResult> results(ts.size());
    parallel::for_each_index(ts.size(), [&](std::size_t i) {
        results[i] = helix::s_finite_full(options.n_qubits, ts[i]);
    });

    TimeSeries oracle;
    if (options.oracle) oracle = core::oracle_sn(options.n_qubits, ts);

    for (std::size_t i = 0; i < ts.size(); ++i) {
        std::vector<std::optional<double>> row = {ts[i], results[i].value,
                                                  results[i].log10_abs};
        if (options.oracle) row.push_back(oracle.values[i]);
        table.rows.push_back(std::move(row));
    }
    emit(table, options.output);
    return kExitOk;
}

int run_infinite(const InfiniteOptions& options) {
    require(options.rank == 0 || (options.rank >= 1 && options.rank <= helix::kMaxRank),
            "rank must be 0 (auto) or in [1, 170]");
    require(options.margin >= 0.0, "margin must be nonnegative");
    std::vector<double> ts = time_grid(options.t_max, options.dt);

    io::Table table;
    table.meta = {{"generator", std::string("chiralix ") + kVersion},
                  {"command", "infinite"},
                  {"rank", options.rank == 0 ? "auto" : format_int(options.rank)},
                  {"margin", io::format_number(options.margin)},
                  {"t_max", io::format_number(options.t_max)},
                  {"dt", io::format_number(options.dt)}};
    table.columns = {"t", "rank", "s", "log10_s"};

    std::vector<int> ranks(ts.size());
    for (std::size_t i = 0; i < ts.size(); ++i)
        ranks[i] = options.rank > 0 ? options.rank : helix::auto_rank(ts[i], options.margin);

    std::vector<helix::SInfiniteResult> results(ts.size());
    parallel::for_each_index(ts.size(), [&](std::size_t i) {
        results[i] = helix::s_infinite_full(ranks[i], ts[i]);
    });

    for (std::size_t i = 0; i < ts.size(); ++i)
        table.rows.push_back({ts[i], static_cast<double>(ranks[i]), results[i].value,
                              results[i].log10_value});
    emit(table, options.output);
    return kExitOk;
}

int run_rate(const RateOptions& options) {
    require(options.samples >= 2, "samples must be at least 2");

    io::Table table;
    table.meta = {{"generator", std::string("chiralix ") + kVersion},
                  {"command", "rate"},
                  {"samples", format_int(options.samples)}};
    table.columns = {"q_over_pi", "gamma"};
    if (options.fitted) table.columns.push_back("gamma_fit");

    std::vector<double> qs(static_cast<std::size_t>(options.samples));
    for (int i = 0; i < options.samples; ++i)
        qs[static_cast<std::size_t>(i)] = 0.5 * i / (options.samples - 1);

    std::vector<double> fitted(qs.size(), 0.0);
    if (options.fitted)
        parallel::for_each_index(qs.size(), [&](std::size_t i) {
            fitted[i] = series::fit_decay_rate(qs[i]);
        });

    for (std::size_t i = 0; i < qs.size(); ++i) {
        std::vector<std::optional<double>> row = {qs[i], series::decay_rate(qs[i])};
        if (options.fitted) row.push_back(fitted[i]);
        table.rows.push_back(std::move(row));
    }
    emit(table, options.output);
    return kExitOk;
}

int run_taylor(const TaylorOptions& options) {
    series::TaylorTable coeffs = series::taylor_coefficients(options.n_qubits, options.order);
    std::vector<double> ref = series::reference_taylor();

    io::Table table;
    table.meta = {{"generator", std::string("chiralix ") + kVersion},
                  {"command", "taylor"},
                  {"n_qubits", format_int(options.n_qubits)},
                  {"order", format_int(options.order)},
                  {"stable_window", format_int(2 * options.n_qubits - 4)}};
    table.columns = {"order", "coefficient", "reference"};
    for (int n = 0; n <= options.order; ++n) {
        std::vector<std::optional<double>> row = {
            static_cast<double>(n), coeffs.coefficients[static_cast<std::size_t>(n)],
            std::nullopt};
        if (n < static_cast<int>(ref.size())) row[2] = ref[static_cast<std::size_t>(n)];
        table.rows.push_back(std::move(row));
    }
    emit(table, options.output);
    return kExitOk;
}

int run_validate(const ValidateOptions& options, std::ostream& log) {
    require(options.level == "quick" || options.level == "full",
            "level must be quick or full");
    validate::Options vopts;
    vopts.level = options.level == "full" ? validate::Level::full : validate::Level::quick;
    vopts.inject_kernel_defect = options.inject_kernel_defect;

    validate::Report report = validate::run(vopts);
    for (const auto& check : report.checks) {
        log << (check.passed ? "[PASS] " : "[FAIL] ") << check.name << "  max_error="
            << io::format_number(check.max_error) << "  tolerance="
            << io::format_number(check.tolerance);
        if (!check.detail.empty()) log << "  (" << check.detail << ")";
        log << '\n';
    }
    log << (report.all_passed() ? "validation passed" : "validation FAILED") << " ("
        << report.checks.size() << " checks, level " << options.level << ")\n";

    if (!options.report.empty()) io::write_text(options.report, validate::to_json(report));
    return report.all_passed() ? kExitOk : kExitValidation;
}

}  // namespace chiralix::cli
