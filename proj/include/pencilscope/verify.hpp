#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pencilscope/cmatrix.hpp"

namespace pencilscope {

struct VerifyOptions {
    std::uint64_t seed = 7;
    std::size_t trials = 100;
    std::size_t dim = 6;
    std::vector<unsigned> levels{0, 1, 2};
};

struct FailureRecord {
    std::uint64_t trial = 0;
    Complex lambda;
    double observed = 0.0;
    double bound = 0.0;
    std::string detail;
};

struct PropertyReport {
    std::string name;
    std::string module;
    std::size_t trials = 0;
    std::size_t checks = 0;
    std::size_t failure_count = 0;
    std::vector<FailureRecord> failures;  // first few, in trial order
    std::string note;
    std::size_t diagnostic_checks = 0;   // npseu: same sweep under the corrected inflation
    std::size_t diagnostic_failures = 0;
    double wall_seconds = 0.0;

    bool passed() const noexcept { return failure_count == 0 && checks > 0; }
};

/// Registered property names in run order.
std::vector<std::string> property_names();
bool is_property(const std::string& name);

/// Runs one property. Trials are independent substreams of opt.seed and may
/// run concurrently; results are merged in trial order.
PropertyReport run_property(const std::string& name, const VerifyOptions& opt);
std::vector<PropertyReport> run_all(const VerifyOptions& opt);

/// Machine-readable report. Wall time is left out so repeated runs produce
/// identical bytes.
std::string verify_report_json(const std::vector<PropertyReport>& reports, const VerifyOptions& opt);

}  // namespace pencilscope
