#include "chiralix/chiral_basis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "chiralix/numerics.hpp"

namespace chiralix::chiral {

namespace {

// Kink counts must have the parity of N/2: even for N = 0 (mod 4), odd for
// N = 2 (mod 4), otherwise the offsets do not close around the ring.
int required_parity(int n_qubits) { return (n_qubits / 2) % 2; }

void check_chain(int n_qubits) {
    require(n_qubits >= 4 && n_qubits % 2 == 0, "chain length must be even and at least 4");
}

void check_vector_budget(int n_qubits) {
    if (n_qubits > kMaxDenseQubits)
        throw BudgetError("state materialization budget exceeded: n_qubits > " +
                          std::to_string(kMaxDenseQubits));
}

std::vector<std::vector<int>> combinations(int n, int m, int lowest) {
    // Ascending m-subsets of {lowest, ..., lowest + n - 1}, lexicographic.
    std::vector<std::vector<int>> out;
    if (m < 0 || m > n) return out;
    std::vector<int> cur(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) cur[static_cast<std::size_t>(i)] = lowest + i;
    for (;;) {
        out.push_back(cur);
        int i = m - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == lowest + n - m + i) --i;
        if (i < 0) break;
        ++cur[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < m; ++j)
            cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

}  // namespace

void KinkConfig::validate() const {
    check_chain(n_qubits);
    require(kink_count() % 2 == required_parity(n_qubits),
            "kink count parity incompatible with chain length");
    int prev = 0;
    for (int n : kink_positions) {
        require(n >= 1 && n <= n_qubits, "kink position outside [1, N]");
        require(n > prev, "kink positions must be strictly increasing");
        prev = n;
    }
}

std::vector<int> admissible_kink_counts(int n_qubits) {
    check_chain(n_qubits);
    std::vector<int> counts;
    for (int m = required_parity(n_qubits); m <= n_qubits; m += 2) counts.push_back(m);
    return counts;
}

std::vector<KinkConfig> enumerate_kink_configs(int n_qubits, int n_kinks) {
    check_chain(n_qubits);
    require(n_kinks >= 0 && n_kinks <= n_qubits, "kink count outside [0, N]");
    require(n_kinks % 2 == required_parity(n_qubits),
            "kink count parity incompatible with chain length");
    std::vector<KinkConfig> configs;
    for (auto& positions : combinations(n_qubits, n_kinks, 1)) {
        KinkConfig cfg;
        cfg.n_qubits = n_qubits;
        cfg.u_offset = 1.0;
        cfg.kink_positions = std::move(positions);
        configs.push_back(std::move(cfg));
    }
    return configs;
}

StateVector build_chiral_state(const ChiralLabel& label) {
    const KinkConfig& cfg = label.config;
    check_chain(cfg.n_qubits);
    check_vector_budget(cfg.n_qubits);
    {
        int prev = 0;
        for (int n : cfg.kink_positions) {
            require(n >= 1 && n <= cfg.n_qubits, "kink position outside [1, N]");
            require(n > prev, "kink positions must be strictly increasing");
            prev = n;
        }
    }

    const int n = cfg.n_qubits;
    // Site offset u_k picks up +2 for every kink strictly left of site k.
    std::vector<double> u_site(static_cast<std::size_t>(n) + 1, cfg.u_offset);
    for (int k = 1; k <= n; ++k) {
        int passed = 0;
        for (int pos : cfg.kink_positions)
            if (pos < k) ++passed;
        u_site[static_cast<std::size_t>(k)] = cfg.u_offset + 2.0 * passed;
    }
    long kink_sum = 0;
    for (int pos : cfg.kink_positions) kink_sum += pos;

    const Eigen::Index dim = Eigen::Index{1} << n;
    const double scale = std::pow(2.0, -0.5 * n);
    Eigen::VectorXcd amps(dim);
    for (Eigen::Index s = 0; s < dim; ++s) {
        // Phase exponent in units of pi; the prefactor (-i)^{sum n_j}
        // contributes -sum/2.
        double theta = label.phase_convention ? -0.5 * static_cast<double>(kink_sum) : 0.0;
        for (int k = 1; k <= n; ++k)
            if ((s >> (k - 1)) & 1) theta += 0.5 * (k - u_site[static_cast<std::size_t>(k)]);
        amps(s) = scale * Complex(num::cos_pi(theta), num::sin_pi(theta));
    }
    return StateVector(n, std::move(amps));
}

KinkConfig apply_z_string(const KinkConfig& config, int first_site, int last_site) {
    config.validate();
    require(first_site >= 1 && last_site >= first_site && last_site <= config.n_qubits,
            "apply_z_string: need 1 <= first <= last <= N");

    KinkConfig out = config;
    auto toggle = [&out](int pos) {
        auto it = std::lower_bound(out.kink_positions.begin(), out.kink_positions.end(), pos);
        if (it != out.kink_positions.end() && *it == pos)
            out.kink_positions.erase(it);
        else
            out.kink_positions.insert(it, pos);
    };

    // The string shifts offsets by +2 on [first, last]; that is a kink toggle
    // at each end link. The left link of site 1 is the wrap link: toggling it
    // swaps the chirality branch and re-enters as a kink at N.
    if (first_site == 1) {
        out.u_offset = config.u_offset == 3.0 ? 1.0 : config.u_offset == 1.0 ? 3.0
                                                                             : config.u_offset + 2.0;
        toggle(config.n_qubits);
    } else {
        toggle(first_site - 1);
    }
    toggle(last_site);

    out.validate();
    return out;
}

std::vector<double> sector_lattice(int n_qubits, Sector sector) {
    check_chain(n_qubits);
    const double offset = sector == Sector::antiperiodic ? 0.5 : 0.0;
    std::vector<double> lattice;
    lattice.reserve(static_cast<std::size_t>(n_qubits));
    for (int k = -n_qubits / 2; k < n_qubits / 2; ++k)
        lattice.push_back(2.0 * std::numbers::pi * (k + offset) / n_qubits);
    return lattice;
}

MomentumTuple MomentumTuple::from_indices(int n_qubits, Sector sector,
                                          const std::vector<int>& lattice_indices) {
    check_chain(n_qubits);
    std::vector<int> canonical;
    canonical.reserve(lattice_indices.size());
    for (int k : lattice_indices) {
        int kk = ((k % n_qubits) + n_qubits) % n_qubits;
        if (kk >= n_qubits / 2) kk -= n_qubits;
        canonical.push_back(kk);
    }
    std::sort(canonical.begin(), canonical.end());
    require(std::adjacent_find(canonical.begin(), canonical.end()) == canonical.end(),
            "momentum indices must be distinct modulo N");

    MomentumTuple tuple;
    tuple.n_qubits = n_qubits;
    tuple.sector = sector;
    const double offset = sector == Sector::antiperiodic ? 0.5 : 0.0;
    for (int k : canonical)
        tuple.momenta.push_back(2.0 * std::numbers::pi * (k + offset) / n_qubits);
    return tuple;
}

double MomentumTuple::sector_sign() const {
    return sector == Sector::periodic ? 1.0 : -1.0;
}

double MomentumTuple::energy() const {
    double e = 0.0;
    for (double p : momenta) e += std::cos(p);
    return 4.0 * e;
}

void MomentumTuple::validate() const {
    check_chain(n_qubits);
    require(momenta.size() <= static_cast<std::size_t>(n_qubits), "too many momenta");
    const double offset = sector == Sector::antiperiodic ? 0.5 : 0.0;
    double prev = -1e30;
    for (double p : momenta) {
        require(p > prev, "momenta must be strictly increasing");
        prev = p;
        double k = p * n_qubits / (2.0 * std::numbers::pi) - offset;
        require(std::abs(k - std::round(k)) < 1e-10, "momentum off the sector lattice");
        double kr = std::round(k);
        require(kr >= -n_qubits / 2 && kr < n_qubits / 2, "momentum outside the canonical window");
    }
}

std::vector<MomentumTuple> enumerate_momentum_tuples(int n_qubits, int n_kinks) {
    check_chain(n_qubits);
    require(n_kinks >= 0 && n_kinks <= n_qubits, "kink count outside [0, N]");
    require(n_kinks % 2 == required_parity(n_qubits),
            "kink count parity incompatible with chain length");
    std::vector<MomentumTuple> tuples;
    for (Sector sector : {Sector::periodic, Sector::antiperiodic}) {
        for (auto& idx : combinations(n_qubits, n_kinks, -n_qubits / 2))
            tuples.push_back(MomentumTuple::from_indices(n_qubits, sector, idx));
    }
    return tuples;
}

std::vector<MomentumTuple> enumerate_all_momentum_tuples(int n_qubits) {
    std::vector<MomentumTuple> tuples;
    for (int m : admissible_kink_counts(n_qubits)) {
        auto part = enumerate_momentum_tuples(n_qubits, m);
        tuples.insert(tuples.end(), std::make_move_iterator(part.begin()),
                      std::make_move_iterator(part.end()));
    }
    return tuples;
}

Complex slater_amplitude(std::span<const int> positions, const MomentumTuple& momenta) {
    const std::size_t m = momenta.momenta.size();
    require(positions.size() == m, "slater_amplitude: position/momentum count mismatch");
    for (std::size_t i = 0; i + 1 < m; ++i)
        if (std::abs(momenta.momenta[i] - momenta.momenta[i + 1]) < 1e-12)
            return Complex(0.0, 0.0);  // antisymmetry forces an exact zero
    if (m == 0) {
        return Complex(std::exp(-0.5 * std::log(2.0)), 0.0);
    }
    Eigen::MatrixXcd mat(m, m);
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t k = 0; k < m; ++k) {
            double phase = positions[j] * momenta.momenta[k];
            mat(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k)) =
                Complex(std::cos(phase), std::sin(phase));
        }
    double log_norm = -0.5 * (std::log(2.0) + static_cast<double>(m) * std::log(momenta.n_qubits));
    return std::exp(log_norm) * num::det_complex(std::move(mat));
}

StateVector build_xx_eigenstate(const MomentumTuple& momenta, double u_base) {
    momenta.validate();
    check_vector_budget(momenta.n_qubits);
    const int n = momenta.n_qubits;
    const int m = static_cast<int>(momenta.momenta.size());
    require(m % 2 == required_parity(n), "kink count parity incompatible with chain length");

    const double sign = momenta.sector_sign();
    Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(Eigen::Index{1} << n);
    for (auto& positions : combinations(n, m, 1)) {
        Complex chi = slater_amplitude(positions, momenta);
        KinkConfig cfg;
        cfg.n_qubits = n;
        cfg.kink_positions = positions;
        cfg.u_offset = u_base;
        StateVector plus = build_chiral_state({cfg, true});
        cfg.u_offset = u_base + 2.0;
        StateVector minus = build_chiral_state({cfg, true});
        amps += chi * (plus.amplitudes() - sign * minus.amplitudes());
    }
    return StateVector(n, std::move(amps));
}

Complex overlap_with_omega(const MomentumTuple& momenta) {
    StateVector state = build_xx_eigenstate(momenta);
    return core::omega_state(momenta.n_qubits).inner(state);
}

SigmaXDiagonalReport check_sigma_x_diagonal(int n_qubits, double u_base) {
    check_chain(n_qubits);
    check_vector_budget(n_qubits);
    SigmaXDiagonalReport report;
    for (int m : admissible_kink_counts(n_qubits)) {
        for (const KinkConfig& base : enumerate_kink_configs(n_qubits, m)) {
            for (int branch = 0; branch < 2; ++branch) {
                KinkConfig cfg = base;
                cfg.u_offset = u_base + 2.0 * branch;
                double kappa = branch == 0 ? 1.0 : -1.0;
                StateVector psi = build_chiral_state({cfg, true});
                StateVector flipped = core::apply_sigma(psi, 1, Axis::x);
                double dev =
                    (flipped.amplitudes() - kappa * psi.amplitudes()).cwiseAbs().maxCoeff();
                report.max_deviation = std::max(report.max_deviation, dev);
                ++report.n_states;
            }
        }
    }
    report.diagonal = report.max_deviation < 1e-12;
    return report;
}

}  // namespace chiralix::chiral
