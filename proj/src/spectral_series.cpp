#include "chiralix/spectral_series.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "chiralix/exact_core.hpp"
#include "chiralix/helix_decay.hpp"
#include "chiralix/numerics.hpp"

namespace chiralix::series {

namespace {

void check_taylor_args(int n_qubits, int max_order) {
    require(n_qubits >= 4 && n_qubits % 2 == 0, "chain length must be even and at least 4");
    if (n_qubits > kMaxDenseQubits)
        throw BudgetError("taylor budget exceeded: n_qubits > " + std::to_string(kMaxDenseQubits));
    require(max_order >= 0 && max_order <= 40, "max_order outside [0, 40]");
}

// i^a (-i)^b + i^b (-i)^a = 2 cos((b - a) pi / 2), exactly.
double paired_weight(int a, int b) {
    if (a == b) return 1.0;
    if ((b - a) % 2 != 0) return 0.0;
    return (b - a) % 4 == 0 ? 2.0 : -2.0;
}

// Krylov tower v_k = (H - N)^k |Omega>.
std::vector<Eigen::VectorXcd> shifted_tower(int n_qubits, int max_order) {
    std::vector<Eigen::VectorXcd> vs;
    vs.reserve(static_cast<std::size_t>(max_order) + 1);
    vs.push_back(core::omega_state(n_qubits).amplitudes());
    for (int k = 1; k <= max_order; ++k) {
        StateVector prev(n_qubits, vs.back());
        Eigen::VectorXcd next = core::apply_xx_hamiltonian(prev).amplitudes() -
                                static_cast<double>(n_qubits) * vs.back();
        vs.push_back(std::move(next));
    }
    return vs;
}

Eigen::MatrixXcd moment_table_complex(int n_qubits, int max_order) {
    auto vs = shifted_tower(n_qubits, max_order);
    const Eigen::Index dim = vs[0].size();
    Eigen::MatrixXcd m(max_order + 1, max_order + 1);
    for (int a = 0; a <= max_order; ++a) {
        // sigma_1^x permutes amplitudes; fold it into the bra once.
        Eigen::VectorXcd bra(dim);
        for (Eigen::Index s = 0; s < dim; ++s) bra(s) = vs[static_cast<std::size_t>(a)](s ^ 1);
        for (int b = a; b <= max_order; ++b) {
            Complex val = bra.dot(vs[static_cast<std::size_t>(b)]);
            m(a, b) = val;
            m(b, a) = std::conj(val);
        }
    }
    return m;
}

}  // namespace

Eigen::MatrixXd moment_table(int n_qubits, int max_order) {
    check_taylor_args(n_qubits, max_order);
    return moment_table_complex(n_qubits, max_order).real();
}

TaylorTable taylor_coefficients(int n_qubits, int max_order) {
    check_taylor_args(n_qubits, max_order);
    Eigen::MatrixXcd moments = moment_table_complex(n_qubits, max_order);

    std::vector<double> fact(static_cast<std::size_t>(max_order) + 1, 1.0);
    for (int k = 1; k <= max_order; ++k)
        fact[static_cast<std::size_t>(k)] = fact[static_cast<std::size_t>(k - 1)] * k;

    TaylorTable table;
    table.n_qubits = n_qubits;
    table.max_order = max_order;
    table.coefficients.resize(static_cast<std::size_t>(max_order) + 1);
    // Folding the (a,b)/(b,a) pairs keeps every term real, so odd orders
    // vanish identically instead of through cancellation.
    for (int n = 0; n <= max_order; ++n) {
        double c = 0.0;
        for (int a = 0; 2 * a <= n; ++a) {
            int b = n - a;
            double w = paired_weight(a, b);
            if (w == 0.0) continue;
            c += w * moments(a, b).real() /
                 (fact[static_cast<std::size_t>(a)] * fact[static_cast<std::size_t>(b)]);
        }
        table.coefficients[static_cast<std::size_t>(n)] = c;
    }
    for (int a = 0; a <= max_order; ++a)
        for (int b = a; a + b <= max_order; ++b)
            table.max_imag_residue =
                std::max(table.max_imag_residue,
                         std::abs(moments(a, b).imag()) /
                             (fact[static_cast<std::size_t>(a)] * fact[static_cast<std::size_t>(b)]));
    return table;
}

const std::vector<TaylorReference>& reference_taylor_rationals() {
    static const std::vector<TaylorReference> refs = {
        {0, 1, 1},
        {2, -4, 1},
        {4, 32, 3},
        {6, -64, 3},
        {8, 512, 15},
        {10, -2048, 45},
        {12, 733184, 14175},
        {14, -720896, 14175},
        {16, 195756032, 4465125},
        {18, -149946368, 4465125},
    };
    return refs;
}

std::vector<double> reference_taylor() {
    std::vector<double> out(19, 0.0);
    for (const TaylorReference& r : reference_taylor_rationals())
        out[static_cast<std::size_t>(r.order)] =
            static_cast<double>(r.numerator) / static_cast<double>(r.denominator);
    return out;
}

StablePatternReport stable_pattern_check(int n_qubits) {
    require(n_qubits >= 4 && n_qubits % 2 == 0, "chain length must be even and at least 4");
    if (n_qubits + 2 > kMaxDenseQubits)
        throw BudgetError("stable_pattern_check: comparison chain exceeds the budget");

    StablePatternReport report;
    report.n_small = n_qubits;
    report.n_large = n_qubits + 2;
    report.window = 2 * n_qubits - 4;
    int max_order = std::min(report.window + 4, 2 * n_qubits);

    TaylorTable small = taylor_coefficients(n_qubits, max_order);
    TaylorTable large = taylor_coefficients(n_qubits + 2, max_order);
    for (int n = 0; n <= max_order; n += 2) {
        double a = small.coefficients[static_cast<std::size_t>(n)];
        double b = large.coefficients[static_cast<std::size_t>(n)];
        double rel = std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-12});
        if (n <= report.window) {
            report.max_rel_dev = std::max(report.max_rel_dev, rel);
        } else if (report.first_violation < 0 && rel > 1e-3) {
            report.first_violation = n;
        }
    }
    report.stable = report.max_rel_dev < 1e-8;
    return report;
}

AsymptoticFit fit_asymptotics(int rank, double t_lo, double t_hi) {
    require(t_lo >= 1.0 && t_hi > t_lo, "fit_asymptotics: need 1 <= t_lo < t_hi");
    require(t_hi <= helix::t_validity_window(rank),
            "fit_asymptotics: window exceeds the truncation validity edge");

    const double step = 0.25;
    std::vector<double> ts, log_mag, phase;
    for (double t = t_lo; t <= t_hi + 1e-9; t += step) {
        num::LogDeterminant ld = num::logdet_complex(helix::a_matrix(rank, t));
        ts.push_back(t);
        log_mag.push_back(ld.log_magnitude);
        double ph = ld.phase;
        if (!phase.empty()) {
            // unwrap: per-step advance stays well inside (-pi, pi)
            double prev = phase.back();
            ph += 2.0 * std::numbers::pi * std::round((prev - ph) / (2.0 * std::numbers::pi));
        }
        phase.push_back(ph);
    }

    num::LineFit mag_fit = num::fit_line(ts, log_mag);
    num::LineFit phase_fit = num::fit_line(ts, phase);

    AsymptoticFit fit;
    fit.rank = rank;
    fit.t_lo = ts.front();
    fit.t_hi = ts.back();
    fit.rate = -mag_fit.slope;
    fit.amplitude = std::exp(mag_fit.intercept);
    fit.phase_rate = phase_fit.slope;
    fit.rms_residual = mag_fit.rms_residual;
    return fit;
}

double decay_rate(double q_over_pi) {
    return 8.0 / std::numbers::pi * std::abs(num::cos_pi(q_over_pi));
}

double fit_decay_rate(double q_over_pi) {
    double c = std::abs(num::cos_pi(q_over_pi));
    if (c < 1e-9) return 0.0;  // frozen helix, no relaxation

    const double tau_lo = 6.0, tau_hi = 14.0, step = 0.5;
    int rank = helix::auto_rank(tau_hi);
    std::vector<double> taus, log_s;
    for (double tau = tau_lo; tau <= tau_hi + 1e-9; tau += step) {
        taus.push_back(tau);
        log_s.push_back(2.0 * num::logdet_complex(helix::a_matrix(rank, tau)).log_magnitude);
    }
    num::LineFit fit = num::fit_line(taus, log_s);
    return -fit.slope * c;
}

}  // namespace chiralix::series
