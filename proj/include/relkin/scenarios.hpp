#pragma once

#include "relkin/sync.hpp"
#include "relkin/velocity.hpp"

namespace relkin::scenarios {

using sync::Convention;

/// Rod lengths as seen from its own frame and from the frame it moves
/// relative to, under one convention.
struct RodMeasurement {
    double rest_length = 1.0;
    Velocity eps;
    Convention convention = Convention::Einstein;
    double measured_in_home_frame = 1.0;    // always the rest length
    double measured_from_other_frame = 1.0; // always rest_length / gamma
};

/// The quantities a co-moving laboratory can actually produce. Ether-frame
/// bookkeeping (true times, really contracted lengths) is deliberately not
/// constructible into this type; it travels in EtherAudit instead.
class ObservableSet {
public:
    ObservableSet(double forth_local, double back_local,
                  double rod_cross_measurement, double clock_rate_ratio)
        : forth_local_(forth_local),
          back_local_(back_local),
          rod_cross_measurement_(rod_cross_measurement),
          clock_rate_ratio_(clock_rate_ratio) {}

    double forth_local() const { return forth_local_; }
    double back_local() const { return back_local_; }
    double rod_cross_measurement() const { return rod_cross_measurement_; }
    double clock_rate_ratio() const { return clock_rate_ratio_; }

private:
    double forth_local_;
    double back_local_;
    double rod_cross_measurement_;
    double clock_rate_ratio_;
};

/// Hidden-variable channel of the ether pipeline: present in reports for
/// audit purposes, never part of the observables.
struct EtherAudit {
    double forth_true = 0.0;
    double back_true = 0.0;
    double real_length = 0.0;  // the really contracted ether-frame length
};

/// Measure a rod of rest length L at rest in K', moving at eps relative to
/// the observer frame K, under the given convention. The Einstein pipeline
/// marks both endpoints at equal observer time; the ether pipeline starts
/// from the really contracted rod and recovers the home length through the
/// transformation.
RodMeasurement measure_rod(double rest_length, Velocity eps, Convention c);

/// Same measurement with the roles of the frames reversed: rod at rest in K,
/// observed from K'. For the ether pipeline the ether is re-declared at rest
/// in K', exercising that the contraction is mutual under both conventions.
RodMeasurement measure_rod_swapped(double rest_length, Velocity eps,
                                   Convention c);

/// Local-time lapse per unit true-time lapse along the co-moving worldline
/// x = eps t; equals 1/gamma(eps). Derived by transporting two worldline
/// events through the local-time row, not by formula substitution.
double clock_rate_ratio(Velocity eps);

/// Both pipelines run over the full suite: round trip, rod, clock rate.
struct EquivalencePair {
    ObservableSet einstein;
    ObservableSet poincare;
    EtherAudit poincare_audit;
};

/// Run the Einstein pipeline and the ether pipeline on the same scenario and
/// return both observable sets; they agree field-wise, while the audit
/// channel keeps the asymmetric true-time bookkeeping.
EquivalencePair equivalence_audit(double rest_length, Velocity eps);

}  // namespace relkin::scenarios
