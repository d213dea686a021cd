#pragma once

#include "relkin/event.hpp"
#include "relkin/velocity.hpp"

namespace relkin::sync {

/// The two rival synchronization conventions. Einstein halves the round trip
/// by definition; the ether convention keeps true time in the rest frame of
/// the ether and hands co-moving observers the local time of the fourth
/// transformation row.
enum class Convention { Einstein, PoincareEther };

/// Which clock readings a report is expressed in. True time is ether-frame
/// bookkeeping; local time is what co-moving observers actually read.
enum class TimeBasis { TrueTime, LocalTime };

/// Local time gamma(eps) (t - eps x) of an ether-frame event for observers
/// moving at eps. This is the time row of a unit-scale boost.
double local_time(const Event& e, Velocity eps);

/// Einstein's criterion: clocks synchronize iff the forth split equals the
/// back split, tB - tA = tA_return - tB. Requires tA < tB < tA_return.
bool einstein_sync_check(double tA, double tB, double tA_return,
                         double tolerance = 1e-12);

/// The B-clock reading Einstein's definition assigns to the reflection:
/// tA + (tA_return - tA)/2. Requires tA_return > tA.
double einstein_offset(double tA, double tA_return);

/// Forth/back durations of the standard exchange plus their Reichenbach
/// ratio kappa = forth/(forth + back).
struct SyncReport {
    double forth = 0.0;
    double back = 0.0;
    double kappa = 0.5;
    Convention convention = Convention::Einstein;
    TimeBasis basis = TimeBasis::LocalTime;
};

/// kappa from measured durations.
double kappa_of(double forth, double back);

/// Simulate the round trip for stations a rest length L apart moving at eps
/// and report durations in the requested basis. TrueTime reports the ether
/// bookkeeping (convention PoincareEther, kappa = (1+eps)/2); LocalTime
/// reports what the co-moving clocks read (kappa = 1/2 for every eps, the
/// reading both conventions share).
SyncReport round_trip_report(double rest_length, Velocity eps, TimeBasis basis);

/// Closed form (1 + eps)/2 for the true-time Reichenbach parameter.
double kappa_true(Velocity eps);

}  // namespace relkin::sync
