#include "chiralix/exact_core.hpp"

#include <cmath>
#include <mutex>

#include "chiralix/numerics.hpp"
#include "chiralix/parallel.hpp"

namespace chiralix {

namespace {

void check_chain_length(int n_qubits) {
    require(n_qubits >= 4 && n_qubits % 2 == 0, "chain length must be even and at least 4");
}

void check_dense_budget(int n_qubits) {
    if (n_qubits > kMaxDenseQubits)
        throw BudgetError("dense operator budget exceeded: n_qubits > " +
                          std::to_string(kMaxDenseQubits));
}

}  // namespace

StateVector::StateVector(int n_qubits, Eigen::VectorXcd amplitudes)
    : n_qubits_(n_qubits), amps_(std::move(amplitudes)) {
    require(n_qubits >= 1 && n_qubits <= 30, "StateVector: unsupported qubit count");
    require(amps_.size() == (Eigen::Index{1} << n_qubits), "StateVector: dimension mismatch");
}

StateVector StateVector::zero(int n_qubits) {
    require(n_qubits >= 1 && n_qubits <= 30, "StateVector: unsupported qubit count");
    return StateVector(n_qubits, Eigen::VectorXcd::Zero(Eigen::Index{1} << n_qubits));
}

Complex StateVector::inner(const StateVector& other) const {
    require(n_qubits_ == other.n_qubits_, "inner: qubit count mismatch");
    return amps_.dot(other.amps_);
}

struct DenseOperator::EigCache {
    std::once_flag once;
    SpectralDecomposition decomp;
};

DenseOperator::DenseOperator(int n_qubits, Eigen::MatrixXcd entries, bool hermitian)
    : n_qubits_(n_qubits),
      entries_(std::move(entries)),
      hermitian_(hermitian),
      cache_(std::make_shared<EigCache>()) {
    require(n_qubits >= 1 && n_qubits <= kMaxDenseQubits, "DenseOperator: unsupported qubit count");
    const Eigen::Index dim = Eigen::Index{1} << n_qubits;
    require(entries_.rows() == dim && entries_.cols() == dim, "DenseOperator: dimension mismatch");
    if (hermitian_) {
        double dev = (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff();
        require(dev < 1e-13, "DenseOperator: matrix flagged Hermitian is not");
    }
}

const SpectralDecomposition& DenseOperator::eigensystem() const {
    if (!hermitian_)
        throw std::invalid_argument("eigensystem: operator is not flagged Hermitian");
    std::call_once(cache_->once, [this] {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(entries_);
        if (solver.info() != Eigen::Success)
            throw std::runtime_error("eigensystem: diagonalization failed");
        cache_->decomp.eigenvalues = solver.eigenvalues();
        cache_->decomp.eigenvectors = solver.eigenvectors();
    });
    return cache_->decomp;
}

namespace core {

namespace {

inline int bit_of(Eigen::Index s, int site) { return static_cast<int>((s >> (site - 1)) & 1); }

}  // namespace

DenseOperator build_xx_hamiltonian(int n_qubits) {
    check_chain_length(n_qubits);
    check_dense_budget(n_qubits);
    const Eigen::Index dim = Eigen::Index{1} << n_qubits;
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);
    for (Eigen::Index s = 0; s < dim; ++s) {
        for (int site = 1; site <= n_qubits; ++site) {
            int next = site % n_qubits + 1;
            if (bit_of(s, site) != bit_of(s, next)) {
                Eigen::Index mask = (Eigen::Index{1} << (site - 1)) | (Eigen::Index{1} << (next - 1));
                h(s ^ mask, s) += 2.0;
            }
        }
    }
    return DenseOperator(n_qubits, std::move(h), true);
}

DenseOperator build_v_operator(int n_qubits) {
    check_chain_length(n_qubits);
    check_dense_budget(n_qubits);
    const Eigen::Index dim = Eigen::Index{1} << n_qubits;
    Eigen::MatrixXcd v = Eigen::MatrixXcd::Zero(dim, dim);
    for (Eigen::Index s = 0; s < dim; ++s) {
        for (int k = 1; k <= n_qubits / 2; ++k) {
            int a = 2 * k - 1;
            int b = 2 * k;
            int c = b % n_qubits + 1;
            // sigma^y on site b supplies the only complex factor.
            Complex phase = bit_of(s, b) == 0 ? Complex(0.0, 1.0) : Complex(0.0, -1.0);
            Eigen::Index mask_ab =
                (Eigen::Index{1} << (a - 1)) | (Eigen::Index{1} << (b - 1));
            Eigen::Index mask_bc =
                (Eigen::Index{1} << (b - 1)) | (Eigen::Index{1} << (c - 1));
            v(s ^ mask_ab, s) += phase;
            v(s ^ mask_bc, s) -= phase;
        }
    }
    return DenseOperator(n_qubits, std::move(v), true);
}

StateVector build_helix_state(int n_qubits, int q_index) {
    check_chain_length(n_qubits);
    require(n_qubits <= 30, "build_helix_state: chain too long");
    const Eigen::Index dim = Eigen::Index{1} << n_qubits;
    Eigen::VectorXcd amps(dim);
    const double scale = std::pow(2.0, -0.5 * n_qubits);
    for (Eigen::Index s = 0; s < dim; ++s) {
        long site_sum = 0;
        for (int site = 1; site <= n_qubits; ++site)
            if (bit_of(s, site)) site_sum += site;
        // Phase Q*sum with Q = 2*pi*q_index/N, expressed in units of pi so the
        // quarter-turn values come out exact.
        double phi = 2.0 * static_cast<double>(q_index) * static_cast<double>(site_sum) / n_qubits;
        amps(s) = scale * Complex(num::cos_pi(phi), num::sin_pi(phi));
    }
    return StateVector(n_qubits, std::move(amps));
}

StateVector omega_state(int n_qubits) {
    require(n_qubits >= 1 && n_qubits <= 30, "omega_state: unsupported qubit count");
    const Eigen::Index dim = Eigen::Index{1} << n_qubits;
    Eigen::VectorXcd amps =
        Eigen::VectorXcd::Constant(dim, Complex(std::pow(2.0, -0.5 * n_qubits), 0.0));
    return StateVector(n_qubits, std::move(amps));
}

StateVector evolve(const StateVector& state, const DenseOperator& hamiltonian, double t) {
    require(state.n_qubits() == hamiltonian.n_qubits(), "evolve: dimension mismatch");
    if (!hamiltonian.is_hermitian())
        throw std::invalid_argument("evolve: generator must be Hermitian");
    const SpectralDecomposition& eig = hamiltonian.eigensystem();
    Eigen::VectorXcd coeffs = eig.eigenvectors.adjoint() * state.amplitudes();
    for (Eigen::Index i = 0; i < coeffs.size(); ++i) {
        double theta = -eig.eigenvalues(i) * t;
        coeffs(i) *= Complex(std::cos(theta), std::sin(theta));
    }
    return StateVector(state.n_qubits(), eig.eigenvectors * coeffs);
}

std::vector<double> one_point_profile(const StateVector& initial, const DenseOperator& hamiltonian,
                                      double t, Axis axis) {
    StateVector psi = evolve(initial, hamiltonian, t);
    std::vector<double> profile(static_cast<std::size_t>(initial.n_qubits()));
    for (int site = 1; site <= initial.n_qubits(); ++site)
        profile[static_cast<std::size_t>(site - 1)] = sigma_expectation(psi, site, axis);
    return profile;
}

TimeSeries oracle_sn(int n_qubits, const std::vector<double>& t_grid) {
    require(n_qubits >= 4 && n_qubits % 2 == 0, "oracle_sn: chain length must be even and >= 4");
    check_dense_budget(n_qubits);
    DenseOperator h = build_xx_hamiltonian(n_qubits);
    const SpectralDecomposition& eig = h.eigensystem();
    const Eigen::VectorXcd coeffs = eig.eigenvectors.adjoint() * omega_state(n_qubits).amplitudes();

    TimeSeries series;
    series.times = t_grid;
    series.values.assign(t_grid.size(), 0.0);
    series.n_qubits = n_qubits;
    parallel::for_each_index(t_grid.size(), [&](std::size_t i) {
        double t = t_grid[i];
        Eigen::VectorXcd rotated = coeffs;
        for (Eigen::Index k = 0; k < rotated.size(); ++k) {
            double theta = -eig.eigenvalues(k) * t;
            rotated(k) *= Complex(std::cos(theta), std::sin(theta));
        }
        StateVector psi(n_qubits, eig.eigenvectors * rotated);
        Complex val = psi.inner(apply_sigma(psi, 1, Axis::x));
        if (std::abs(val.imag()) > 1e-12)
            throw std::runtime_error("oracle_sn: expectation has a non-real residue");
        series.values[i] = val.real();
    });
    return series;
}

StateVector apply_xx_hamiltonian(const StateVector& state) {
    const int n = state.n_qubits();
    check_chain_length(n);
    const Eigen::VectorXcd& in = state.amplitudes();
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(in.size());
    for (Eigen::Index s = 0; s < in.size(); ++s) {
        if (in(s) == Complex(0.0, 0.0)) continue;
        for (int site = 1; site <= n; ++site) {
            int next = site % n + 1;
            if (bit_of(s, site) != bit_of(s, next)) {
                Eigen::Index mask = (Eigen::Index{1} << (site - 1)) | (Eigen::Index{1} << (next - 1));
                out(s ^ mask) += 2.0 * in(s);
            }
        }
    }
    return StateVector(n, std::move(out));
}

StateVector apply_sigma(const StateVector& state, int site, Axis axis) {
    require(site >= 1 && site <= state.n_qubits(), "apply_sigma: site out of range");
    const Eigen::VectorXcd& in = state.amplitudes();
    Eigen::VectorXcd out(in.size());
    const Eigen::Index mask = Eigen::Index{1} << (site - 1);
    switch (axis) {
        case Axis::x:
            for (Eigen::Index s = 0; s < in.size(); ++s) out(s ^ mask) = in(s);
            break;
        case Axis::y:
            for (Eigen::Index s = 0; s < in.size(); ++s) {
                Complex phase = (s & mask) == 0 ? Complex(0.0, 1.0) : Complex(0.0, -1.0);
                out(s ^ mask) = phase * in(s);
            }
            break;
        case Axis::z:
            for (Eigen::Index s = 0; s < in.size(); ++s)
                out(s) = (s & mask) == 0 ? in(s) : -in(s);
            break;
    }
    return StateVector(state.n_qubits(), std::move(out));
}

double sigma_expectation(const StateVector& state, int site, Axis axis) {
    require(site >= 1 && site <= state.n_qubits(), "sigma_expectation: site out of range");
    const Eigen::VectorXcd& a = state.amplitudes();
    const Eigen::Index mask = Eigen::Index{1} << (site - 1);
    double acc = 0.0;
    switch (axis) {
        case Axis::x:
            for (Eigen::Index s = 0; s < a.size(); ++s)
                if ((s & mask) == 0) acc += 2.0 * (std::conj(a(s)) * a(s | mask)).real();
            break;
        case Axis::y:
            for (Eigen::Index s = 0; s < a.size(); ++s)
                if ((s & mask) == 0) acc += 2.0 * (std::conj(a(s)) * a(s | mask)).imag();
            break;
        case Axis::z:
            for (Eigen::Index s = 0; s < a.size(); ++s)
                acc += ((s & mask) == 0 ? 1.0 : -1.0) * std::norm(a(s));
            break;
    }
    return acc;
}

}  // namespace core
}  // namespace chiralix
