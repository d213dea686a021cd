#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace relkin::audit {

/// One property battery: its worst observed deviation against the tolerance
/// it must stay under. A few batteries invert the sense (the recorded value
/// is a bound that must be respected, not an error): those clear
/// deviation_is_error and are skipped by the aggregate below.
struct BatteryResult {
    std::string name;
    double max_deviation = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    std::size_t trials = 0;
    bool deviation_is_error = true;
};

struct AuditReport {
    std::vector<BatteryResult> batteries;
    std::uint64_t seed = 0;

    bool all_pass() const {
        for (const auto& b : batteries) {
            if (!b.pass) return false;
        }
        return true;
    }

    double max_deviation() const {
        double m = 0.0;
        for (const auto& b : batteries) {
            if (b.deviation_is_error && b.max_deviation > m) {
                m = b.max_deviation;
            }
        }
        return m;
    }
};

/// Group-structure batteries over seeded random (eps, scale) draws:
/// closure through event application, associativity on parameters, identity
/// and inverse laws, velocity-composition closure, gamma identity, interval
/// invariance (unit scale) and interval scaling (general scale), plus the
/// scale-function reduction on 99 evenly spaced samples.
AuditReport group_audit(std::size_t samples, std::uint64_t seed,
                        double tolerance = 1e-10);

/// Light-speed covariance: random (L, eps) scenarios must give local-time
/// forth and back durations equal to L.
AuditReport covariance_audit(std::size_t samples, std::uint64_t seed,
                             double tolerance = 1e-12);

/// Observational equivalence over a random (L, eps) grid: the two pipelines'
/// observables agree field-wise, while the true-time audit channel stays
/// asymmetric by a scale-explicit margin whenever |eps| >= 0.1.
AuditReport equivalence_grid_audit(std::size_t points, std::uint64_t seed,
                                   double tolerance = 1e-10);

}  // namespace relkin::audit
