// spectral_series.hpp - short-time Taylor data and long-time asymptotics
#pragma once

#include <Eigen/Dense>
#include <vector>

#include "chiralix/common.hpp"

namespace chiralix::series {

// Taylor coefficients of S_N(t) about t = 0. Moments are taken against the
// shifted generator H - <Omega|H|Omega> = H - N, which cancels the scalar
// phase exactly and keeps the alternating sums stable in double precision.
struct TaylorTable {
    int n_qubits = 0;
    int max_order = 0;
    std::vector<double> coefficients;  // index = order
    // Largest imaginary part seen in the scaled moment data; exactly zero for
    // the real XX generator, nonzero only if a convention drifts upstream.
    double max_imag_residue = 0.0;
};

TaylorTable taylor_coefficients(int n_qubits, int max_order);

// Moment matrix M_{a,b} = <Omega|(H-N)^a sigma_1^x (H-N)^b|Omega>, real parts.
Eigen::MatrixXd moment_table(int n_qubits, int max_order);

// Infinite-chain coefficients through order 18 (exact rationals; odd orders
// vanish). Entries beyond order 18 are not known in closed form.
struct TaylorReference {
    int order;
    long long numerator;
    long long denominator;
};
const std::vector<TaylorReference>& reference_taylor_rationals();
std::vector<double> reference_taylor();  // length 19, zeros at odd orders

// C_{N+2}(n) = C_N(n) for n <= 2N - 4; the first larger even order breaks it.
struct StablePatternReport {
    int n_small = 0;
    int n_large = 0;
    int window = 0;               // largest order expected to agree
    double max_rel_dev = 0.0;     // within the window
    int first_violation = -1;     // first even order past the window that disagrees
    bool stable = false;
};
StablePatternReport stable_pattern_check(int n_qubits);

// Fit log|det A(rank, t)| and its unwrapped phase on an evenly spaced window;
// det A -> a0 * e^{2it} * e^{-4t/pi}, so S -> a0^2 e^{-8t/pi}.
struct AsymptoticFit {
    int rank = 0;
    double t_lo = 0.0;
    double t_hi = 0.0;
    double rate = 0.0;        // decay rate of |det A|
    double amplitude = 0.0;   // a0
    double phase_rate = 0.0;  // d(arg det A)/dt
    double rms_residual = 0.0;
};
AsymptoticFit fit_asymptotics(int rank, double t_lo, double t_hi);

// Helix relaxation rate gamma(Q) = (8/pi)|cos Q|, Q = pi * q_over_pi.
double decay_rate(double q_over_pi);

// Same quantity measured from determinant data; exact zero at the frozen
// helix Q = pi/2.
double fit_decay_rate(double q_over_pi);

}  // namespace chiralix::series
