// common.hpp - shared aliases and error types
#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace chiralix {

using Complex = std::complex<double>;

// Dense spectral work is capped at 2^14 amplitudes; anything larger must be
// rejected up front rather than thrash memory.
inline constexpr int kMaxDenseQubits = 14;

// Raised when a request exceeds the dense-computation budget (exit code 4 in
// the CLI, as opposed to plain argument errors which map to usage failures).
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

}  // namespace chiralix
