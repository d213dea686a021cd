#include "relkin/batch.hpp"

#include <stdexcept>

#include "kernel_table.hpp"

namespace relkin::batch {

namespace {

using detail::KernelTable;

bool cpu_has_avx2() {
#if defined(RELKIN_HAVE_AVX2_LANE) && defined(__GNUC__)
    return __builtin_cpu_supports("avx2") != 0;
#else
    return false;
#endif
}

struct State {
    Backend backend;
    const KernelTable* table;
};

State resolve(Backend requested) {
#if defined(RELKIN_HAVE_AVX2_LANE)
    if (requested == Backend::Avx2 ||
        (requested == Backend::Auto && cpu_has_avx2())) {
        if (!cpu_has_avx2()) {
            throw std::runtime_error("batch: AVX2 backend not available");
        }
        return State{Backend::Avx2, &detail::avx2_kernel_table()};
    }
#else
    if (requested == Backend::Avx2) {
        throw std::runtime_error("batch: AVX2 lane not built");
    }
#endif
    return State{Backend::Scalar, &detail::scalar_kernel_table()};
}

State& state() {
    static State s = resolve(Backend::Auto);
    return s;
}

void check_sizes(std::initializer_list<std::size_t> sizes) {
    auto it = sizes.begin();
    const std::size_t n = *it;
    for (; it != sizes.end(); ++it) {
        if (*it != n) {
            throw std::invalid_argument("batch: span sizes must match");
        }
    }
}

}  // namespace

bool avx2_available() { return cpu_has_avx2(); }

void set_backend(Backend b) { state() = resolve(b); }

Backend active_backend() { return state().backend; }

std::string_view backend_name() {
    return state().backend == Backend::Avx2 ? "avx2" : "scalar";
}

void gamma_batch(std::span<const double> eps, std::span<double> out) {
    check_sizes({eps.size(), out.size()});
    state().table->gamma(eps.data(), out.data(), eps.size());
}

void compose_velocities_batch(std::span<const double> a,
                              std::span<const double> b,
                              std::span<double> out) {
    check_sizes({a.size(), b.size(), out.size()});
    state().table->compose_velocities(a.data(), b.data(), out.data(),
                                      a.size());
}

void boost_apply_batch(std::span<const double> eps,
                       std::span<const double> scale,
                       std::span<const double> t, std::span<const double> x,
                       std::span<const double> y, std::span<const double> z,
                       std::span<double> t_out, std::span<double> x_out,
                       std::span<double> y_out, std::span<double> z_out) {
    check_sizes({eps.size(), scale.size(), t.size(), x.size(), y.size(),
                 z.size(), t_out.size(), x_out.size(), y_out.size(),
                 z_out.size()});
    state().table->boost_apply(eps.data(), scale.data(), t.data(), x.data(),
                               y.data(), z.data(), t_out.data(), x_out.data(),
                               y_out.data(), z_out.data(), eps.size());
}

void interval_batch(std::span<const double> t, std::span<const double> x,
                    std::span<const double> y, std::span<const double> z,
                    std::span<double> out) {
    check_sizes({t.size(), x.size(), y.size(), z.size(), out.size()});
    state().table->interval(t.data(), x.data(), y.data(), z.data(),
                            out.data(), t.size());
}

void local_time_batch(std::span<const double> eps, std::span<const double> t,
                      std::span<const double> x, std::span<double> out) {
    check_sizes({eps.size(), t.size(), x.size(), out.size()});
    state().table->local_time(eps.data(), t.data(), x.data(), out.data(),
                              eps.size());
}

void round_trip_batch(std::span<const double> rest_length,
                      std::span<const double> eps, const RoundTripArrays& out) {
    check_sizes({rest_length.size(), eps.size(), out.t2.size(),
                 out.t3.size(), out.xB2.size(), out.xA3.size(),
                 out.forth_local.size(), out.back_local.size()});
    state().table->round_trip(rest_length.data(), eps.data(), out.t2.data(),
                              out.t3.data(), out.xB2.data(), out.xA3.data(),
                              out.forth_local.data(), out.back_local.data(),
                              rest_length.size());
}

void closed_form_batch(std::span<const double> rest_length,
                       std::span<const double> eps, std::span<double> t2,
                       std::span<double> t3, std::span<double> xB2,
                       std::span<double> xA3) {
    check_sizes({rest_length.size(), eps.size(), t2.size(), t3.size(),
                 xB2.size(), xA3.size()});
    state().table->closed_form(rest_length.data(), eps.data(), t2.data(),
                               t3.data(), xB2.data(), xA3.data(),
                               rest_length.size());
}

void kappa_true_batch(std::span<const double> eps, std::span<double> out) {
    check_sizes({eps.size(), out.size()});
    state().table->kappa_true(eps.data(), out.data(), eps.size());
}

}  // namespace relkin::batch
