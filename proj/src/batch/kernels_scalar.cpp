#include "kernel_table.hpp"

#include "element_ops.hpp"
#include "relkin/detail/formulas.hpp"

namespace relkin::batch::detail {

namespace {

namespace f = relkin::detail;

void gamma_scalar(const double* eps, double* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = f::gamma_of(eps[i]);
    }
}

void compose_velocities_scalar(const double* a, const double* b, double* out,
                               std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = f::compose_velocity(a[i], b[i]);
    }
}

void boost_apply_scalar(const double* eps, const double* scale,
                        const double* t, const double* x, const double* y,
                        const double* z, double* t_out, double* x_out,
                        double* y_out, double* z_out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        const double kl = scale[i] * f::gamma_of(eps[i]);
        t_out[i] = f::boost_time_row(kl, eps[i], t[i], x[i]);
        x_out[i] = f::boost_space_row(kl, eps[i], t[i], x[i]);
        y_out[i] = scale[i] * y[i];
        z_out[i] = scale[i] * z[i];
    }
}

void interval_scalar(const double* t, const double* x, const double* y,
                     const double* z, double* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = f::interval_of(t[i], x[i], y[i], z[i]);
    }
}

void local_time_scalar(const double* eps, const double* t, const double* x,
                       double* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = f::boost_time_row(f::gamma_of(eps[i]), eps[i], t[i], x[i]);
    }
}

void round_trip_scalar(const double* rest_length, const double* eps,
                       double* t2, double* t3, double* xB2, double* xA3,
                       double* forth_local, double* back_local,
                       std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        const RoundTripElement e = round_trip_element(rest_length[i], eps[i]);
        t2[i] = e.t2;
        t3[i] = e.t3;
        xB2[i] = e.xB2;
        xA3[i] = e.xA3;
        forth_local[i] = e.forth_local;
        back_local[i] = e.back_local;
    }
}

void closed_form_scalar(const double* rest_length, const double* eps,
                        double* t2, double* t3, double* xB2, double* xA3,
                        std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        const ClosedFormElement e = closed_form_element(rest_length[i], eps[i]);
        t2[i] = e.t2;
        t3[i] = e.t3;
        xB2[i] = e.xB2;
        xA3[i] = e.xA3;
    }
}

void kappa_true_scalar(const double* eps, double* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = f::kappa_true_of(eps[i]);
    }
}

}  // namespace

const KernelTable& scalar_kernel_table() {
    static const KernelTable table{
        gamma_scalar,      compose_velocities_scalar,
        boost_apply_scalar, interval_scalar,
        local_time_scalar, round_trip_scalar,
        closed_form_scalar, kappa_true_scalar,
    };
    return table;
}

}  // namespace relkin::batch::detail
