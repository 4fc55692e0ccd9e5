// chiral_basis.hpp - kink-labelled product basis and the XX eigenstates on it
//
// A basis label is an offset u (1 for the + chirality branch, 3 for -) plus an
// ordered list of kink positions; site k carries the qubit
// (1, e^{i pi (k - u_k)/2})/sqrt(2) where u_k shifts by +2 after every kink.
// The kink count M is tied to the ring length: M is even when N = 0 (mod 4)
// and odd when N = 2 (mod 4). States carry the prefactor (-i)^{sum of
// positions} unless the raw convention is requested.
#pragma once

#include <span>
#include <vector>

#include "chiralix/exact_core.hpp"

namespace chiralix::chiral {

struct KinkConfig {
    int n_qubits = 0;
    double u_offset = 1.0;           // 1 or 3 selects the chirality branch
    std::vector<int> kink_positions; // strictly increasing sites in [1, N]

    int kink_count() const { return static_cast<int>(kink_positions.size()); }
    void validate() const;
};

// Admissible kink counts for the given ring length, ascending.
std::vector<int> admissible_kink_counts(int n_qubits);

// All configurations with the given kink count, positions in lexicographic
// order. The count must satisfy the parity constraint.
std::vector<KinkConfig> enumerate_kink_configs(int n_qubits, int n_kinks);

struct ChiralLabel {
    KinkConfig config;
    bool phase_convention = true;  // include the (-i)^{sum n_j} prefactor
};

// Materializes the 2^N amplitude vector of a labelled basis state.
StateVector build_chiral_state(const ChiralLabel& label);

// Flipping sigma^z on sites first..last creates or moves kink pairs; this is
// the label-level image of that string.
KinkConfig apply_z_string(const KinkConfig& config, int first_site, int last_site);

enum class Sector { periodic, antiperiodic };

// Allowed single-particle momenta for a sector: 2*pi*k/N (periodic) or
// 2*pi*(k + 1/2)/N (antiperiodic), k = -N/2 .. N/2 - 1.
std::vector<double> sector_lattice(int n_qubits, Sector sector);

struct MomentumTuple {
    int n_qubits = 0;
    Sector sector = Sector::periodic;
    std::vector<double> momenta;  // strictly increasing, on the sector lattice

    static MomentumTuple from_indices(int n_qubits, Sector sector,
                                      const std::vector<int>& lattice_indices);
    double sector_sign() const;  // e^{i p_1 N}: +1 periodic, -1 antiperiodic
    double energy() const;       // 4 * sum cos p_j
    void validate() const;
};

// One tuple per sector and strictly increasing index set; 2 * sum_M C(N, M)
// = 2^N tuples in total over admissible M.
std::vector<MomentumTuple> enumerate_momentum_tuples(int n_qubits, int n_kinks);
std::vector<MomentumTuple> enumerate_all_momentum_tuples(int n_qubits);

// Slater amplitude (2 N^M)^{-1/2} det[e^{i n_j p_k}]. Repeated momenta give an
// exact zero.
Complex slater_amplitude(std::span<const int> positions, const MomentumTuple& momenta);

// Eigenstate of the XX ring built as a kink-wave superposition over both
// chirality branches. u_base picks the branch written first (1 by default).
StateVector build_xx_eigenstate(const MomentumTuple& momenta, double u_base = 1.0);

// <Omega|eigenstate>; vanishes unless the kink count is N/2.
Complex overlap_with_omega(const MomentumTuple& momenta);

struct SigmaXDiagonalReport {
    int n_states = 0;
    double max_deviation = 0.0;
    bool diagonal = false;
};

// Checks sigma_1^x |state> = kappa |state> across the whole labelled basis;
// u_base = 1 is the convention under which this holds.
SigmaXDiagonalReport check_sigma_x_diagonal(int n_qubits, double u_base = 1.0);

}  // namespace chiralix::chiral
