#pragma once

// Raw-pointer kernel table shared by the backend lanes and the dispatcher.

#include <cstddef>

namespace relkin::batch::detail {

struct KernelTable {
    void (*gamma)(const double* eps, double* out, std::size_t n);
    void (*compose_velocities)(const double* a, const double* b, double* out,
                               std::size_t n);
    void (*boost_apply)(const double* eps, const double* scale,
                        const double* t, const double* x, const double* y,
                        const double* z, double* t_out, double* x_out,
                        double* y_out, double* z_out, std::size_t n);
    void (*interval)(const double* t, const double* x, const double* y,
                     const double* z, double* out, std::size_t n);
    void (*local_time)(const double* eps, const double* t, const double* x,
                       double* out, std::size_t n);
    void (*round_trip)(const double* rest_length, const double* eps,
                       double* t2, double* t3, double* xB2, double* xA3,
                       double* forth_local, double* back_local, std::size_t n);
    void (*closed_form)(const double* rest_length, const double* eps,
                        double* t2, double* t3, double* xB2, double* xA3,
                        std::size_t n);
    void (*kappa_true)(const double* eps, double* out, std::size_t n);
};

const KernelTable& scalar_kernel_table();

#if defined(RELKIN_HAVE_AVX2_LANE)
const KernelTable& avx2_kernel_table();
#endif

}  // namespace relkin::batch::detail
