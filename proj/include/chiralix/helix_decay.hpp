// helix_decay.hpp - determinant formulas for the transverse relaxation S(t)
//
// Finite chains use the N/2 x N/2 momentum-sum matrix Phi; the infinite chain
// uses the Bessel kernel A = 1 + K + K(image). S values are squared
// determinant magnitudes and decay like e^{-8t/pi}, so log10 companions are
// reported alongside raw values that underflow.
#pragma once

#include <Eigen/Dense>
#include <vector>

#include "chiralix/common.hpp"

namespace chiralix::helix {

// Largest kernel rank with a validated determinant; auto_rank clamps here.
inline constexpr int kMaxRank = 170;
// Dense Phi assembly stays O(N^3); cap the chain length.
inline constexpr int kMaxFiniteQubits = 1024;
// Bessel argument is 4|t|, so |t| <= 200 keeps evaluation in-domain.
inline constexpr double kMaxTime = 200.0;

// Single entry of Phi^(N), direct double momentum sum. 1 <= m, n <= N/2.
Complex phi_entry(int n_qubits, int m, int n, double t);

// Full Phi^(N) via a bilinear factorization (two matrix products).
Eigen::MatrixXcd phi_matrix(int n_qubits, double t);

// S_N(t) = Re det Phi^(N), with a log10 companion for deep-decay values.
struct SFiniteResult {
    double value;
    double log10_abs;
};
SFiniteResult s_finite_full(int n_qubits, double t);
double s_finite(int n_qubits, double t);

// Bessel kernel entry K_{m,n}(t); any integer pair with m = n only allowed
// for n >= 1 (the closed diagonal form is derived there).
Complex kernel_k(int m, int n, double t);

// A_{m,n} = delta + K_{m,n} + K_{m,1-n}, m, n = 1..rank.
Eigen::MatrixXcd a_matrix(int rank, double t);

// S(t) = |det A|^2 at the given truncation rank; even in t.
struct SInfiniteResult {
    double value;    // flushes to zero below about 1e-308
    double log10_value;
};
SInfiniteResult s_infinite_full(int rank, double t);
double s_infinite(int rank, double t);

// Truncation is trustworthy for t below this window edge.
double t_validity_window(int rank);

// Smallest rank whose validity window covers t + margin.
int auto_rank(double t, double margin = 1.0);

// Infinite-chain helix magnetization at sites 1..n_sites via self-similarity:
// (cos(Qn), sin(Qn), 0) * S(t cos Q) with Q = pi * q_over_pi.
// rank <= 0 selects auto_rank at the rescaled time.
struct HelixPoint {
    double x;
    double y;
    double z;
};
std::vector<HelixPoint> helix_profile(int n_sites, double q_over_pi, double t, int rank = 0);

}  // namespace chiralix::helix
