// validate.hpp - built-in cross checks between the independent constructions
#pragma once

#include <string>
#include <vector>

namespace chiralix::validate {

enum class Level { quick, full };

struct CheckResult {
    std::string name;
    bool passed = false;
    double max_error = 0.0;
    double tolerance = 0.0;
    std::string detail;
};

struct Options {
    Level level = Level::quick;
    // Perturbs the kernel diagonal before the kernel/momentum-sum comparison;
    // the run must then fail. Exists so the harness itself stays honest.
    bool inject_kernel_defect = false;
};

struct Report {
    std::vector<CheckResult> checks;
    bool all_passed() const;
};

Report run(const Options& options);

std::string to_json(const Report& report);

}  // namespace chiralix::validate
