// exact_core.hpp - brute-force spin-chain machinery on the full 2^N space
//
// Site convention: sites are 1-based around the periodic ring; site n lives on
// bit n-1 of the basis index, with bit value 0 meaning spin up. Chains must
// have even length between 4 and kMaxDenseQubits.
#pragma once

#include <Eigen/Dense>
#include <memory>
#include <optional>
#include <vector>

#include "chiralix/common.hpp"

namespace chiralix {

enum class Axis { x, y, z };

class StateVector {
  public:
    StateVector(int n_qubits, Eigen::VectorXcd amplitudes);
    static StateVector zero(int n_qubits);

    int n_qubits() const { return n_qubits_; }
    Eigen::Index dim() const { return amps_.size(); }
    const Eigen::VectorXcd& amplitudes() const { return amps_; }
    Eigen::VectorXcd& amplitudes() { return amps_; }

    double norm() const { return amps_.norm(); }
    Complex inner(const StateVector& other) const;  // <this|other>

  private:
    int n_qubits_;
    Eigen::VectorXcd amps_;
};

struct SpectralDecomposition {
    Eigen::VectorXd eigenvalues;   // ascending
    Eigen::MatrixXcd eigenvectors; // columns
};

// Immutable dense operator; the spectral decomposition is computed on first
// use and shared between copies.
class DenseOperator {
  public:
    DenseOperator(int n_qubits, Eigen::MatrixXcd entries, bool hermitian);

    int n_qubits() const { return n_qubits_; }
    const Eigen::MatrixXcd& entries() const { return entries_; }
    bool is_hermitian() const { return hermitian_; }

    // Lazy, cached; requires the Hermitian flag.
    const SpectralDecomposition& eigensystem() const;

  private:
    struct EigCache;
    int n_qubits_;
    Eigen::MatrixXcd entries_;
    bool hermitian_;
    std::shared_ptr<EigCache> cache_;
};

// Per-time expectation values with optional provenance fields carried into
// file output.
struct TimeSeries {
    std::vector<double> times;
    std::vector<double> values;
    std::optional<int> n_qubits;
    std::optional<int> rank;
    std::optional<double> wavevector;
};

namespace core {

// Sum over bonds of sigma^x sigma^x + sigma^y sigma^y, periodic.
DenseOperator build_xx_hamiltonian(int n_qubits);

// Chirality operator: sum_k sigma_{2k-1}^x sigma_{2k}^y - sigma_{2k}^y sigma_{2k+1}^x.
DenseOperator build_v_operator(int n_qubits);

// Product state with site-n qubit (1, e^{i n Q})/sqrt(2), Q = 2*pi*q_index/N.
// Integer q_index keeps the winding commensurate by construction.
StateVector build_helix_state(int n_qubits, int q_index);

// Fully x-polarized product state (the Q = 0 helix), uniform amplitudes.
StateVector omega_state(int n_qubits);

// e^{-iHt}|psi> through the cached eigensystem of a Hermitian operator.
StateVector evolve(const StateVector& state, const DenseOperator& hamiltonian, double t);

// <sigma_n^axis> for n = 1..N after evolving `initial` to time t.
std::vector<double> one_point_profile(const StateVector& initial, const DenseOperator& hamiltonian,
                                      double t, Axis axis);

// <Omega| sigma_1^x(t) |Omega> on a time grid; dense diagonalization inside,
// so n_qubits above kMaxDenseQubits raises BudgetError.
TimeSeries oracle_sn(int n_qubits, const std::vector<double>& t_grid);

// Matrix-free helpers (no 2^N x 2^N storage).
StateVector apply_xx_hamiltonian(const StateVector& state);
StateVector apply_sigma(const StateVector& state, int site, Axis axis);
double sigma_expectation(const StateVector& state, int site, Axis axis);

}  // namespace core
}  // namespace chiralix
