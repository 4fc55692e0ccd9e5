#include "chiralix/helix_decay.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "chiralix/numerics.hpp"

namespace chiralix::helix {

namespace {

void check_finite_chain(int n_qubits) {
    require(n_qubits >= 4 && n_qubits % 2 == 0, "chain length must be even and at least 4");
    if (n_qubits > kMaxFiniteQubits)
        throw BudgetError("phi matrix budget exceeded: n_qubits > " +
                          std::to_string(kMaxFiniteQubits));
}

void check_time(double t) {
    if (!(std::abs(t) <= kMaxTime))
        throw std::domain_error("time outside validated range |t| <= 200");
}

void check_rank(int rank) {
    require(rank >= 1 && rank <= kMaxRank, "rank outside [1, 170]");
}

// J_{-k} = (-1)^k J_k lookup over a precomputed row.
struct BesselRow {
    std::vector<double> j;

    BesselRow(int max_order, double x) : j(num::bessel_j_array(max_order, x)) {}

    double operator()(int k) const {
        int a = std::abs(k);
        double v = j[static_cast<std::size_t>(a)];
        return (k < 0 && (a & 1)) ? -v : v;
    }
};

Complex kernel_entry(const BesselRow& j, int m, int n, double t) {
    if (m == n) {
        // Closed diagonal form; the sum of squares through order 2n-2 carries
        // the identity-column weight, hence the trailing -1.
        double acc = -j(0) * j(0) + j(2 * n - 1) * j(2 * n - 1) - 1.0;
        for (int q = 0; q <= 2 * n - 2; ++q) acc += 2.0 * j(q) * j(q);
        return Complex(acc, 0.0);
    }
    double d = static_cast<double>(m - n);
    double re = (t / d) * (j(2 * m) * j(2 * n - 1) - j(2 * n) * j(2 * m - 1)) +
                (t / d) * (j(2 * m - 1) * j(2 * n - 2) - j(2 * n - 1) * j(2 * m - 2));
    double im = (t / (d - 0.5)) * (j(2 * m - 2) * j(2 * n) - j(2 * n - 1) * j(2 * m - 1)) -
                (t / (d + 0.5)) * (j(2 * m - 1) * j(2 * n - 1) - j(2 * n - 2) * j(2 * m));
    return Complex(re, im);
}

}  // namespace

Complex phi_entry(int n_qubits, int m, int n, double t) {
    check_finite_chain(n_qubits);
    check_time(t);
    require(m >= 1 && m <= n_qubits / 2 && n >= 1 && n <= n_qubits / 2,
            "phi_entry: indices outside [1, N/2]");
    const int nn = n_qubits;
    const double step = 2.0 * std::numbers::pi / nn;
    Complex acc(0.0, 0.0);
    for (int a = -nn / 2; a < nn / 2; ++a) {
        double p = step * a;
        Complex fp = (1.0 + std::polar(1.0, -p)) *
                     std::polar(1.0, 2.0 * m * p + 4.0 * t * std::cos(p));
        for (int b = -nn / 2; b < nn / 2; ++b) {
            double q = step * (b + 0.5);
            Complex fq = (1.0 + std::polar(1.0, q)) *
                         std::polar(1.0, -2.0 * n * q - 4.0 * t * std::cos(q));
            acc += fp * fq / (std::polar(1.0, p - q) - 1.0);
        }
    }
    return acc / static_cast<double>(nn * nn);
}

Eigen::MatrixXcd phi_matrix(int n_qubits, double t) {
    check_finite_chain(n_qubits);
    check_time(t);
    const int nn = n_qubits;
    const int half = nn / 2;
    const double step = 2.0 * std::numbers::pi / nn;

    // Phi = (1/N^2) * U W V^T with W carrying everything index-free in (m,n).
    Eigen::VectorXd p(nn), q(nn);
    for (int a = 0; a < nn; ++a) {
        p(a) = step * (a - half);
        q(a) = step * (a - half + 0.5);
    }
    Eigen::VectorXcd fp(nn), fq(nn);
    for (int a = 0; a < nn; ++a) {
        fp(a) = (1.0 + std::polar(1.0, -p(a))) * std::polar(1.0, 4.0 * t * std::cos(p(a)));
        fq(a) = (1.0 + std::polar(1.0, q(a))) * std::polar(1.0, -4.0 * t * std::cos(q(a)));
    }
    Eigen::MatrixXcd w(nn, nn);
    for (int a = 0; a < nn; ++a)
        for (int b = 0; b < nn; ++b)
            w(a, b) = fp(a) * fq(b) / (std::polar(1.0, p(a) - q(b)) - 1.0);

    Eigen::MatrixXcd u(half, nn), vt(nn, half);
    for (int m = 1; m <= half; ++m)
        for (int a = 0; a < nn; ++a) u(m - 1, a) = std::polar(1.0, 2.0 * m * p(a));
    for (int n = 1; n <= half; ++n)
        for (int b = 0; b < nn; ++b) vt(b, n - 1) = std::polar(1.0, -2.0 * n * q(b));

    Eigen::MatrixXcd phi = u * w * vt;
    phi /= static_cast<double>(nn) * static_cast<double>(nn);
    return phi;
}

SFiniteResult s_finite_full(int n_qubits, double t) {
    num::LogDeterminant ld = num::logdet_complex(phi_matrix(n_qubits, t));
    if (ld.is_zero()) return {0.0, -std::numeric_limits<double>::infinity()};
    double cos_phase = std::cos(ld.phase);
    SFiniteResult out;
    out.value = std::exp(ld.log_magnitude) * cos_phase;
    out.log10_abs = cos_phase == 0.0
                        ? -std::numeric_limits<double>::infinity()
                        : ld.log10_magnitude() + std::log10(std::abs(cos_phase));
    return out;
}

double s_finite(int n_qubits, double t) { return s_finite_full(n_qubits, t).value; }

Complex kernel_k(int m, int n, double t) {
    check_time(t);
    require(m != n || n >= 1, "kernel_k: diagonal form requires n >= 1");
    int max_order = 2 * std::max({std::abs(m), std::abs(n), 1}) + 2;
    require(max_order <= num::kMaxBesselOrder, "kernel_k: index too large");
    BesselRow row(max_order, 4.0 * std::abs(t));
    return kernel_entry(row, m, n, t);
}

Eigen::MatrixXcd a_matrix(int rank, double t) {
    check_rank(rank);
    check_time(t);
    BesselRow row(2 * rank + 2, 4.0 * std::abs(t));
    Eigen::MatrixXcd a(rank, rank);
    for (int m = 1; m <= rank; ++m)
        for (int n = 1; n <= rank; ++n) {
            Complex entry = kernel_entry(row, m, n, t) + kernel_entry(row, m, 1 - n, t);
            if (m == n) entry += 1.0;
            if (!std::isfinite(entry.real()) || !std::isfinite(entry.imag()))
                throw std::runtime_error("a_matrix: non-finite kernel entry");
            a(m - 1, n - 1) = entry;
        }
    return a;
}

SInfiniteResult s_infinite_full(int rank, double t) {
    num::LogDeterminant ld = num::logdet_complex(a_matrix(rank, std::abs(t)));
    SInfiniteResult out;
    if (ld.is_zero()) {
        out.value = 0.0;
        out.log10_value = -std::numeric_limits<double>::infinity();
        return out;
    }
    out.log10_value = 2.0 * ld.log10_magnitude();
    out.value = std::exp(2.0 * ld.log_magnitude);
    return out;
}

double s_infinite(int rank, double t) { return s_infinite_full(rank, t).value; }

double t_validity_window(int rank) {
    check_rank(rank);
    return rank / 2.2 - 0.19;
}

int auto_rank(double t, double margin) {
    require(margin >= 0.0, "auto_rank: margin must be nonnegative");
    double target = std::abs(t) + margin;
    if (target > t_validity_window(kMaxRank))
        throw std::domain_error("auto_rank: time beyond the rank-170 validity window");
    int rank = static_cast<int>(std::ceil(2.2 * (target + 0.19)));
    return std::clamp(rank, 1, kMaxRank);
}

std::vector<HelixPoint> helix_profile(int n_sites, double q_over_pi, double t, int rank) {
    require(n_sites >= 1, "helix_profile: need at least one site");
    double c = num::cos_pi(q_over_pi);
    double ts = t * c;
    double amplitude;
    if (c == 0.0) {
        amplitude = 1.0;  // frozen helix: S(0) = 1
    } else {
        int r = rank > 0 ? rank : auto_rank(ts);
        amplitude = s_infinite(r, ts);
    }
    std::vector<HelixPoint> profile;
    profile.reserve(static_cast<std::size_t>(n_sites));
    for (int n = 1; n <= n_sites; ++n) {
        profile.push_back({amplitude * num::cos_pi(q_over_pi * n),
                           amplitude * num::sin_pi(q_over_pi * n), 0.0});
    }
    return profile;
}

}  // namespace chiralix::helix
