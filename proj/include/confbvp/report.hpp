#pragma once

#include <optional>
#include <string>

namespace confbvp {

/// Outcome of one numerical property check: worst violation found on a scan
/// plus the tolerance it was judged against.
struct VerifyReport {
    std::string property;
    bool pass = false;
    double worst_t = 0.0;
    std::optional<double> worst_s; // set for (t,s) grid scans
    double magnitude = 0.0;        // worst violation (signed margin for strict checks)
    double tolerance = 0.0;

    /// `property TAB pass|fail TAB location TAB magnitude TAB tolerance`.
    std::string to_line() const;
};

/// 17-significant-digit representation that round-trips doubles.
std::string fmt17(double v);

} // namespace confbvp
