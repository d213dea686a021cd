// AVX2 lane. Only add/sub/mul/div/sqrt are used (all IEEE correctly
// rounded), in the same order as the scalar reference, so results are
// bit-identical to the scalar lane. Compiled with -mavx2; only dispatched
// to when the CPU reports AVX2.

#include "kernel_table.hpp"

#if defined(RELKIN_HAVE_AVX2_LANE)

#include <immintrin.h>

#include "element_ops.hpp"
#include "relkin/detail/formulas.hpp"

namespace relkin::batch::detail {

namespace {

namespace f = relkin::detail;

constexpr std::size_t kWidth = 4;

inline __m256d gamma_pd(__m256d e) {
    const __m256d one = _mm256_set1_pd(1.0);
    return _mm256_div_pd(
        one, _mm256_sqrt_pd(_mm256_sub_pd(one, _mm256_mul_pd(e, e))));
}

void gamma_avx2(const double* eps, double* out, std::size_t n) {
    std::size_t i = 0;
    for (; i + kWidth <= n; i += kWidth) {
        _mm256_storeu_pd(&out[i], gamma_pd(_mm256_loadu_pd(&eps[i])));
    }
    for (; i < n; ++i) {
        out[i] = f::gamma_of(eps[i]);
    }
}

void compose_velocities_avx2(const double* a, const double* b, double* out,
                             std::size_t n) {
    const __m256d one = _mm256_set1_pd(1.0);
    std::size_t i = 0;
    for (; i + kWidth <= n; i += kWidth) {
        const __m256d va = _mm256_loadu_pd(&a[i]);
        const __m256d vb = _mm256_loadu_pd(&b[i]);
        const __m256d num = _mm256_add_pd(va, vb);
        const __m256d den = _mm256_add_pd(one, _mm256_mul_pd(va, vb));
        _mm256_storeu_pd(&out[i], _mm256_div_pd(num, den));
    }
    for (; i < n; ++i) {
        out[i] = f::compose_velocity(a[i], b[i]);
    }
}

void boost_apply_avx2(const double* eps, const double* scale, const double* t,
                      const double* x, const double* y, const double* z,
                      double* t_out, double* x_out, double* y_out,
                      double* z_out, std::size_t n) {
    std::size_t i = 0;
    for (; i + kWidth <= n; i += kWidth) {
        const __m256d e = _mm256_loadu_pd(&eps[i]);
        const __m256d l = _mm256_loadu_pd(&scale[i]);
        const __m256d vt = _mm256_loadu_pd(&t[i]);
        const __m256d vx = _mm256_loadu_pd(&x[i]);
        const __m256d kl = _mm256_mul_pd(l, gamma_pd(e));
        _mm256_storeu_pd(
            &t_out[i],
            _mm256_mul_pd(kl, _mm256_sub_pd(vt, _mm256_mul_pd(e, vx))));
        _mm256_storeu_pd(
            &x_out[i],
            _mm256_mul_pd(kl, _mm256_sub_pd(vx, _mm256_mul_pd(e, vt))));
        _mm256_storeu_pd(&y_out[i],
                         _mm256_mul_pd(l, _mm256_loadu_pd(&y[i])));
        _mm256_storeu_pd(&z_out[i],
                         _mm256_mul_pd(l, _mm256_loadu_pd(&z[i])));
    }
    for (; i < n; ++i) {
        const double kl = scale[i] * f::gamma_of(eps[i]);
        t_out[i] = f::boost_time_row(kl, eps[i], t[i], x[i]);
        x_out[i] = f::boost_space_row(kl, eps[i], t[i], x[i]);
        y_out[i] = scale[i] * y[i];
        z_out[i] = scale[i] * z[i];
    }
}

void interval_avx2(const double* t, const double* x, const double* y,
                   const double* z, double* out, std::size_t n) {
    std::size_t i = 0;
    for (; i + kWidth <= n; i += kWidth) {
        const __m256d vt = _mm256_loadu_pd(&t[i]);
        const __m256d vx = _mm256_loadu_pd(&x[i]);
        const __m256d vy = _mm256_loadu_pd(&y[i]);
        const __m256d vz = _mm256_loadu_pd(&z[i]);
        const __m256d space = _mm256_add_pd(
            _mm256_add_pd(_mm256_mul_pd(vx, vx), _mm256_mul_pd(vy, vy)),
            _mm256_mul_pd(vz, vz));
        _mm256_storeu_pd(&out[i],
                         _mm256_sub_pd(_mm256_mul_pd(vt, vt), space));
    }
    for (; i < n; ++i) {
        out[i] = f::interval_of(t[i], x[i], y[i], z[i]);
    }
}

void local_time_avx2(const double* eps, const double* t, const double* x,
                     double* out, std::size_t n) {
    std::size_t i = 0;
    for (; i + kWidth <= n; i += kWidth) {
        const __m256d e = _mm256_loadu_pd(&eps[i]);
        const __m256d vt = _mm256_loadu_pd(&t[i]);
        const __m256d vx = _mm256_loadu_pd(&x[i]);
        _mm256_storeu_pd(&out[i],
                         _mm256_mul_pd(gamma_pd(e), _mm256_sub_pd(
                                           vt, _mm256_mul_pd(e, vx))));
    }
    for (; i < n; ++i) {
        out[i] = f::boost_time_row(f::gamma_of(eps[i]), eps[i], t[i], x[i]);
    }
}

void round_trip_avx2(const double* rest_length, const double* eps, double* t2,
                     double* t3, double* xB2, double* xA3,
                     double* forth_local, double* back_local, std::size_t n) {
    const __m256d zero = _mm256_setzero_pd();
    const __m256d one = _mm256_set1_pd(1.0);
    const __m256d minus_one = _mm256_set1_pd(-1.0);
    std::size_t i = 0;
    for (; i + kWidth <= n; i += kWidth) {
        const __m256d L = _mm256_loadu_pd(&rest_length[i]);
        const __m256d e = _mm256_loadu_pd(&eps[i]);

        const __m256d xB0 = _mm256_mul_pd(
            L, _mm256_sqrt_pd(_mm256_sub_pd(one, _mm256_mul_pd(e, e))));
        const __m256d vt2 = _mm256_div_pd(xB0, _mm256_sub_pd(one, e));
        const __m256d vxB2 = _mm256_add_pd(xB0, _mm256_mul_pd(e, vt2));
        const __m256d vt3 = _mm256_div_pd(
            _mm256_add_pd(_mm256_sub_pd(zero, vxB2),
                          _mm256_mul_pd(minus_one, vt2)),
            _mm256_sub_pd(minus_one, e));
        const __m256d vxA3 = _mm256_add_pd(zero, _mm256_mul_pd(e, vt3));

        const __m256d g = gamma_pd(e);
        const __m256d l1 = _mm256_mul_pd(
            g, _mm256_sub_pd(zero, _mm256_mul_pd(e, zero)));
        const __m256d l2 = _mm256_mul_pd(
            g, _mm256_sub_pd(vt2, _mm256_mul_pd(e, vxB2)));
        const __m256d l3 = _mm256_mul_pd(
            g, _mm256_sub_pd(vt3, _mm256_mul_pd(e, vxA3)));

        _mm256_storeu_pd(&t2[i], vt2);
        _mm256_storeu_pd(&t3[i], vt3);
        _mm256_storeu_pd(&xB2[i], vxB2);
        _mm256_storeu_pd(&xA3[i], vxA3);
        _mm256_storeu_pd(&forth_local[i], _mm256_sub_pd(l2, l1));
        _mm256_storeu_pd(&back_local[i], _mm256_sub_pd(l3, l2));
    }
    for (; i < n; ++i) {
        const RoundTripElement el = round_trip_element(rest_length[i], eps[i]);
        t2[i] = el.t2;
        t3[i] = el.t3;
        xB2[i] = el.xB2;
        xA3[i] = el.xA3;
        forth_local[i] = el.forth_local;
        back_local[i] = el.back_local;
    }
}

void closed_form_avx2(const double* rest_length, const double* eps,
                      double* t2, double* t3, double* xB2, double* xA3,
                      std::size_t n) {
    const __m256d one = _mm256_set1_pd(1.0);
    const __m256d two = _mm256_set1_pd(2.0);
    std::size_t i = 0;
    for (; i + kWidth <= n; i += kWidth) {
        const __m256d L = _mm256_loadu_pd(&rest_length[i]);
        const __m256d e = _mm256_loadu_pd(&eps[i]);

        const __m256d ratio_root = _mm256_sqrt_pd(
            _mm256_div_pd(_mm256_add_pd(one, e), _mm256_sub_pd(one, e)));
        const __m256d vt2 = _mm256_mul_pd(L, ratio_root);
        const __m256d root = _mm256_sqrt_pd(
            _mm256_sub_pd(one, _mm256_mul_pd(e, e)));
        const __m256d vt3 = _mm256_div_pd(_mm256_mul_pd(two, L), root);
        const __m256d vxB2 = _mm256_add_pd(_mm256_mul_pd(e, vt2),
                                           _mm256_mul_pd(L, root));
        const __m256d vxA3 = _mm256_div_pd(
            _mm256_mul_pd(_mm256_mul_pd(two, e), L), root);

        _mm256_storeu_pd(&t2[i], vt2);
        _mm256_storeu_pd(&t3[i], vt3);
        _mm256_storeu_pd(&xB2[i], vxB2);
        _mm256_storeu_pd(&xA3[i], vxA3);
    }
    for (; i < n; ++i) {
        const ClosedFormElement el = closed_form_element(rest_length[i], eps[i]);
        t2[i] = el.t2;
        t3[i] = el.t3;
        xB2[i] = el.xB2;
        xA3[i] = el.xA3;
    }
}

void kappa_true_avx2(const double* eps, double* out, std::size_t n) {
    const __m256d one = _mm256_set1_pd(1.0);
    const __m256d two = _mm256_set1_pd(2.0);
    std::size_t i = 0;
    for (; i + kWidth <= n; i += kWidth) {
        const __m256d e = _mm256_loadu_pd(&eps[i]);
        _mm256_storeu_pd(&out[i], _mm256_div_pd(_mm256_add_pd(one, e), two));
    }
    for (; i < n; ++i) {
        out[i] = f::kappa_true_of(eps[i]);
    }
}

}  // namespace

const KernelTable& avx2_kernel_table() {
    static const KernelTable table{
        gamma_avx2,      compose_velocities_avx2,
        boost_apply_avx2, interval_avx2,
        local_time_avx2, round_trip_avx2,
        closed_form_avx2, kappa_true_avx2,
    };
    return table;
}

}  // namespace relkin::batch::detail

#endif  // RELKIN_HAVE_AVX2_LANE
