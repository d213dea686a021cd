#include "relkin/sync.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "relkin/detail/formulas.hpp"
#include "relkin/ether.hpp"

namespace relkin::sync {

double local_time(const Event& e, Velocity eps) {
    const double kl = gamma(eps);  // scale 1
    return detail::boost_time_row(kl, eps.value(), e.t, e.x);
}

bool einstein_sync_check(double tA, double tB, double tA_return,
                         double tolerance) {
    if (!(tA < tB && tB < tA_return)) {
        throw std::invalid_argument(
            "einstein_sync_check: requires tA < tB < tA_return");
    }
    const double forth = tB - tA;
    const double back = tA_return - tB;
    return std::abs(forth - back) <=
           tolerance * std::max(1.0, std::abs(tA_return - tA));
}

double einstein_offset(double tA, double tA_return) {
    if (!(tA_return > tA)) {
        throw std::invalid_argument(
            "einstein_offset: requires tA_return > tA");
    }
    return tA + (tA_return - tA) / 2.0;
}

double kappa_of(double forth, double back) {
    return forth / (forth + back);
}

double kappa_true(Velocity eps) {
    return detail::kappa_true_of(eps.value());
}

SyncReport round_trip_report(double rest_length, Velocity eps,
                             TimeBasis basis) {
    const ether::RoundTripRecord rec = ether::round_trip_true(rest_length, eps);

    SyncReport report;
    report.basis = basis;
    if (basis == TimeBasis::TrueTime) {
        report.convention = Convention::PoincareEther;
        report.forth = rec.forth_true;
        report.back = rec.back_true;
    } else {
        // Map the three events through the local-time row; both conventions
        // agree on these readings inside the co-moving frame.
        report.convention = Convention::Einstein;
        const double l1 =
            local_time(Event{rec.t1, rec.xA1, 0.0, 0.0, "K"}, eps);
        const double l2 =
            local_time(Event{rec.t2, rec.xB2, 0.0, 0.0, "K"}, eps);
        const double l3 =
            local_time(Event{rec.t3, rec.xA3, 0.0, 0.0, "K"}, eps);
        report.forth = l2 - l1;
        report.back = l3 - l2;
    }
    report.kappa = kappa_of(report.forth, report.back);
    return report;
}

}  // namespace relkin::sync
