#pragma once

// Batched elementwise kernels behind a runtime-selected backend. The scalar
// lane is the reference; the AVX2 lane mirrors its expression trees with
// 4-wide intrinsics (add/sub/mul/div/sqrt only, all correctly rounded), so
// every backend produces bit-identical results.

#include <cstddef>
#include <span>
#include <string_view>

namespace relkin::batch {

enum class Backend { Auto, Scalar, Avx2 };

/// True when this binary carries the AVX2 lane and the CPU can run it.
bool avx2_available();

/// Select the backend. Auto picks the widest available lane. Requesting
/// Avx2 on a machine without it throws std::runtime_error.
void set_backend(Backend b);

/// The lane actually in use (never Auto).
Backend active_backend();

std::string_view backend_name();

// All kernels are elementwise over equally sized arrays; output spans must
// not alias inputs. Size mismatches throw std::invalid_argument.

/// out[i] = 1/sqrt(1 - eps[i]^2)
void gamma_batch(std::span<const double> eps, std::span<double> out);

/// out[i] = (a[i] + b[i])/(1 + a[i] b[i])
void compose_velocities_batch(std::span<const double> a,
                              std::span<const double> b,
                              std::span<double> out);

/// Per-element boost of events in SoA layout, one (eps, scale) per element.
void boost_apply_batch(std::span<const double> eps,
                       std::span<const double> scale,
                       std::span<const double> t, std::span<const double> x,
                       std::span<const double> y, std::span<const double> z,
                       std::span<double> t_out, std::span<double> x_out,
                       std::span<double> y_out, std::span<double> z_out);

/// out[i] = t[i]^2 - (x[i]^2 + y[i]^2 + z[i]^2)
void interval_batch(std::span<const double> t, std::span<const double> x,
                    std::span<const double> y, std::span<const double> z,
                    std::span<double> out);

/// out[i] = gamma(eps[i]) (t[i] - eps[i] x[i])
void local_time_batch(std::span<const double> eps, std::span<const double> t,
                      std::span<const double> x, std::span<double> out);

/// Outputs of the geometric forth/back light exchange, per element.
struct RoundTripArrays {
    std::span<double> t2;
    std::span<double> t3;
    std::span<double> xB2;
    std::span<double> xA3;
    std::span<double> forth_local;
    std::span<double> back_local;
};

/// Geometric round trip for stations rest_length[i] apart moving at eps[i]:
/// ray/worldline intersections in true time plus the local-time durations.
/// Matches the scalar simulation path bit for bit.
void round_trip_batch(std::span<const double> rest_length,
                      std::span<const double> eps, const RoundTripArrays& out);

/// The closed forms for the same exchange (the oracle column in sweeps).
void closed_form_batch(std::span<const double> rest_length,
                       std::span<const double> eps, std::span<double> t2,
                       std::span<double> t3, std::span<double> xB2,
                       std::span<double> xA3);

/// out[i] = (1 + eps[i])/2
void kappa_true_batch(std::span<const double> eps, std::span<double> out);

}  // namespace relkin::batch
