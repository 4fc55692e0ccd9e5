// commands.hpp - subcommand bodies shared by the CLI binary and the tests
#pragma once

#include <iosfwd>
#include <string>

namespace chiralix::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitValidation = 3;
inline constexpr int kExitBudget = 4;

struct OutputOptions {
    std::string out = "-";      // "-" = stdout
    std::string format = "csv"; // csv | json
};

struct FiniteOptions {
    int n_qubits = 8;
    double t_max = 2.0;
    double dt = 0.1;
    bool oracle = false;  // add the brute-force column
    OutputOptions output;
};

struct InfiniteOptions {
    double t_max = 4.0;
    double dt = 0.1;
    int rank = 0;  // 0 = auto per time
    double margin = 1.0;
    OutputOptions output;
};

struct RateOptions {
    int samples = 9;      // Q/pi sweep over [0, 1/2]
    bool fitted = false;  // add the measured-rate column
    OutputOptions output;
};

struct TaylorOptions {
    int n_qubits = 8;
    int order = 12;
    OutputOptions output;
};

struct ValidateOptions {
    std::string level = "quick";  // quick | full
    std::string report;           // optional JSON report path
    bool inject_kernel_defect = false;
};

int run_finite(const FiniteOptions& options);
int run_infinite(const InfiniteOptions& options);
int run_rate(const RateOptions& options);
int run_taylor(const TaylorOptions& options);
int run_validate(const ValidateOptions& options, std::ostream& log);

}  // namespace chiralix::cli
