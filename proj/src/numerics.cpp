#include "chiralix/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace chiralix::num {

namespace {

constexpr double kRescaleLimit = 1e250;
constexpr double kRescaleFactor = 1e-250;

}  // namespace

std::vector<double> bessel_j_array(int max_order, double x) {
    if (max_order < 0 || max_order > kMaxBesselOrder)
        throw std::domain_error("bessel_j_array: order outside [0, 500]");
    if (!(x >= 0.0) || x > kMaxBesselArgument)
        throw std::domain_error("bessel_j_array: argument outside [0, 800]");

    std::vector<double> out(static_cast<std::size_t>(max_order) + 1, 0.0);
    if (x < 1e-6) {
        // Leading series terms; everything past J_4 is below 1e-32 here.
        double half = 0.5 * x;
        double term = 1.0;
        for (int k = 0; k <= std::min(max_order, 4); ++k) {
            out[static_cast<std::size_t>(k)] = term * (1.0 - x * x / (4.0 * (k + 1)));
            term *= half / (k + 1);
        }
        return out;
    }

    // Start the downward recurrence well above both the requested order and
    // the turning point so the seeded error has decayed away by k = max_order.
    int nu = std::max(max_order, static_cast<int>(std::ceil(x)));
    int start = nu + 20 + 2 * static_cast<int>(std::ceil(std::sqrt(nu + 1.0)));

    double fkp1 = 0.0;
    double fk = 1e-300;
    double norm = 0.0;
    for (int k = start; k >= 0; --k) {
        if (k <= max_order) out[static_cast<std::size_t>(k)] = fk;
        if (k == 0)
            norm += fk;
        else if ((k & 1) == 0)
            norm += 2.0 * fk;
        if (k == 0) break;

        double fkm1 = (2.0 * k / x) * fk - fkp1;
        fkp1 = fk;
        fk = fkm1;
        if (std::fabs(fk) > kRescaleLimit) {
            fk *= kRescaleFactor;
            fkp1 *= kRescaleFactor;
            norm *= kRescaleFactor;
            for (int j = k; j <= max_order; ++j) out[static_cast<std::size_t>(j)] *= kRescaleFactor;
        }
    }

    double scale = 1.0 / norm;
    for (double& v : out) v *= scale;
    return out;
}

double bessel_j(int order, double x) {
    int k = std::abs(order);
    double v = bessel_j_array(k, x)[static_cast<std::size_t>(k)];
    return (order < 0 && (k & 1)) ? -v : v;
}

namespace {

// In-place partial-pivot elimination. Returns the row-swap count, or -1 when
// a pivot column is exactly zero.
int eliminate(Eigen::MatrixXcd& m) {
    const Eigen::Index n = m.rows();
    int swaps = 0;
    for (Eigen::Index col = 0; col < n; ++col) {
        Eigen::Index piv = col;
        double best = std::abs(m(col, col));
        for (Eigen::Index r = col + 1; r < n; ++r) {
            double v = std::abs(m(r, col));
            if (v > best) {
                best = v;
                piv = r;
            }
        }
        if (best == 0.0) return -1;
        if (piv != col) {
            m.row(piv).swap(m.row(col));
            ++swaps;
        }
        for (Eigen::Index r = col + 1; r < n; ++r) {
            Complex f = m(r, col) / m(col, col);
            m(r, col) = Complex(0.0, 0.0);
            if (col + 1 < n)
                m.row(r).tail(n - col - 1) -= f * m.row(col).tail(n - col - 1);
        }
    }
    return swaps;
}

double wrap_phase(double phi) {
    const double two_pi = 2.0 * std::numbers::pi;
    phi = std::fmod(phi, two_pi);
    if (phi <= -std::numbers::pi) phi += two_pi;
    if (phi > std::numbers::pi) phi -= two_pi;
    return phi;
}

}  // namespace

Complex det_complex(Eigen::MatrixXcd a) {
    require(a.rows() == a.cols(), "det_complex: matrix must be square");
    if (a.rows() == 0) return Complex(1.0, 0.0);
    int swaps = eliminate(a);
    if (swaps < 0) return Complex(0.0, 0.0);
    Complex det = (swaps & 1) ? Complex(-1.0, 0.0) : Complex(1.0, 0.0);
    for (Eigen::Index i = 0; i < a.rows(); ++i) det *= a(i, i);
    return det;
}

bool LogDeterminant::is_zero() const { return std::isinf(log_magnitude) && log_magnitude < 0.0; }

double LogDeterminant::log10_magnitude() const { return log_magnitude / std::numbers::ln10; }

Complex LogDeterminant::value() const {
    if (is_zero()) return Complex(0.0, 0.0);
    return std::exp(log_magnitude) * Complex(std::cos(phase), std::sin(phase));
}

LogDeterminant logdet_complex(Eigen::MatrixXcd a) {
    require(a.rows() == a.cols(), "logdet_complex: matrix must be square");
    if (a.rows() == 0) return {0.0, 0.0};
    int swaps = eliminate(a);
    if (swaps < 0) return {-std::numeric_limits<double>::infinity(), 0.0};
    double log_mag = 0.0;
    double phase = (swaps & 1) ? std::numbers::pi : 0.0;
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        log_mag += std::log(std::abs(a(i, i)));
        phase = wrap_phase(phase + std::arg(a(i, i)));
    }
    return {log_mag, phase};
}

LineFit fit_line(std::span<const double> x, std::span<const double> y) {
    require(x.size() == y.size(), "fit_line: size mismatch");
    require(x.size() >= 2, "fit_line: need at least two points");
    const double n = static_cast<double>(x.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        double dx = x[i] - mx;
        sxx += dx * dx;
        sxy += dx * (y[i] - my);
    }
    require(sxx > 0.0, "fit_line: degenerate abscissa");
    LineFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    double ss = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        double r = y[i] - (fit.slope * x[i] + fit.intercept);
        ss += r * r;
    }
    fit.rms_residual = std::sqrt(ss / n);
    return fit;
}

double cos_pi(double x) {
    if (!std::isfinite(x)) return std::nan("");
    double r = std::fmod(x, 2.0);
    if (r < 0.0) r += 2.0;
    // Quadrant fold keeps the std::cos argument in [0, pi/2] and makes the
    // half-integer zeros exact.
    if (r == 0.5 || r == 1.5) return 0.0;
    if (r <= 0.5) return std::cos(std::numbers::pi * r);
    if (r <= 1.0) return -std::cos(std::numbers::pi * (1.0 - r));
    if (r <= 1.5) return -std::cos(std::numbers::pi * (r - 1.0));
    return std::cos(std::numbers::pi * (2.0 - r));
}

double sin_pi(double x) { return cos_pi(x - 0.5); }

}  // namespace chiralix::num
