#include <immintrin.h>

#include "ngsocx/kernels.hpp"

namespace ngsocx::kernels {

namespace {

constexpr std::size_t kLanes = 4;

void propagate_circular_avx2(const CircularPropagation& a)
{
    const __m256d cos_nt = _mm256_set1_pd(a.cos_nt);
    const __m256d sin_nt = _mm256_set1_pd(a.sin_nt);
    const __m256d radius = _mm256_set1_pd(a.radius_km);
    const __m256d cos_th = _mm256_set1_pd(a.cos_theta);
    const __m256d sin_th = _mm256_set1_pd(a.sin_theta);
    std::size_t i = 0;
    for (; i + kLanes <= a.n; i += kLanes) {
        const __m256d cu0 = _mm256_loadu_pd(a.cos_u0 + i);
        const __m256d su0 = _mm256_loadu_pd(a.sin_u0 + i);
        const __m256d c = _mm256_sub_pd(_mm256_mul_pd(cu0, cos_nt), _mm256_mul_pd(su0, sin_nt));
        const __m256d s = _mm256_add_pd(_mm256_mul_pd(su0, cos_nt), _mm256_mul_pd(cu0, sin_nt));
        const __m256d xi = _mm256_mul_pd(
            radius, _mm256_add_pd(_mm256_mul_pd(c, _mm256_loadu_pd(a.px + i)), _mm256_mul_pd(s, _mm256_loadu_pd(a.qx + i))));
        const __m256d yi = _mm256_mul_pd(
            radius, _mm256_add_pd(_mm256_mul_pd(c, _mm256_loadu_pd(a.py + i)), _mm256_mul_pd(s, _mm256_loadu_pd(a.qy + i))));
        const __m256d zi = _mm256_mul_pd(
            radius, _mm256_add_pd(_mm256_mul_pd(c, _mm256_loadu_pd(a.pz + i)), _mm256_mul_pd(s, _mm256_loadu_pd(a.qz + i))));
        _mm256_storeu_pd(a.x + i, _mm256_add_pd(_mm256_mul_pd(cos_th, xi), _mm256_mul_pd(sin_th, yi)));
        _mm256_storeu_pd(a.y + i, _mm256_sub_pd(_mm256_mul_pd(cos_th, yi), _mm256_mul_pd(sin_th, xi)));
        _mm256_storeu_pd(a.z + i, zi);
    }
    if (i < a.n) {
        CircularPropagation tail = a;
        tail.px += i, tail.py += i, tail.pz += i;
        tail.qx += i, tail.qy += i, tail.qz += i;
        tail.cos_u0 += i, tail.sin_u0 += i;
        tail.x += i, tail.y += i, tail.z += i;
        tail.n = a.n - i;
        scalar_kernels().propagate_circular(tail);
    }
}

void look_angles_avx2(const LookAngles& a)
{
    const __m256d sx = _mm256_set1_pd(a.site_x);
    const __m256d sy = _mm256_set1_pd(a.site_y);
    const __m256d sz = _mm256_set1_pd(a.site_z);
    const __m256d ux = _mm256_set1_pd(a.up_x);
    const __m256d uy = _mm256_set1_pd(a.up_y);
    const __m256d uz = _mm256_set1_pd(a.up_z);
    std::size_t i = 0;
    for (; i + kLanes <= a.n; i += kLanes) {
        const __m256d dx = _mm256_sub_pd(_mm256_loadu_pd(a.x + i), sx);
        const __m256d dy = _mm256_sub_pd(_mm256_loadu_pd(a.y + i), sy);
        const __m256d dz = _mm256_sub_pd(_mm256_loadu_pd(a.z + i), sz);
        const __m256d r2 =
            _mm256_add_pd(_mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy)), _mm256_mul_pd(dz, dz));
        const __m256d r = _mm256_sqrt_pd(r2);
        const __m256d h =
            _mm256_add_pd(_mm256_add_pd(_mm256_mul_pd(dx, ux), _mm256_mul_pd(dy, uy)), _mm256_mul_pd(dz, uz));
        _mm256_storeu_pd(a.sin_elevation + i, _mm256_div_pd(h, r));
        _mm256_storeu_pd(a.range_km + i, r);
    }
    if (i < a.n) {
        LookAngles tail = a;
        tail.x += i, tail.y += i, tail.z += i;
        tail.sin_elevation += i, tail.range_km += i;
        tail.n = a.n - i;
        scalar_kernels().look_angles(tail);
    }
}

void max_cosine_avx2(const MaxCosine& a)
{
    std::size_t i = 0;
    for (; i + kLanes <= a.n; i += kLanes) {
        const __m256d ux = _mm256_loadu_pd(a.ux + i);
        const __m256d uy = _mm256_loadu_pd(a.uy + i);
        const __m256d uz = _mm256_loadu_pd(a.uz + i);
        __m256d best = _mm256_set1_pd(-2.0);
        for (std::size_t j = 0; j < a.m; ++j) {
            const __m256d d = _mm256_add_pd(
                _mm256_add_pd(_mm256_mul_pd(ux, _mm256_set1_pd(a.cx[j])), _mm256_mul_pd(uy, _mm256_set1_pd(a.cy[j]))),
                _mm256_mul_pd(uz, _mm256_set1_pd(a.cz[j])));
            // max_pd(d, best) returns best unless d > best, matching the scalar select.
            best = _mm256_max_pd(d, best);
        }
        _mm256_storeu_pd(a.out + i, best);
    }
    if (i < a.n) {
        MaxCosine tail = a;
        tail.ux += i, tail.uy += i, tail.uz += i;
        tail.out += i;
        tail.n = a.n - i;
        scalar_kernels().max_cosine(tail);
    }
}

}  // namespace

const KernelTable& avx2_kernel_table()
{
    static const KernelTable table{Isa::Avx2, "avx2", propagate_circular_avx2, look_angles_avx2, max_cosine_avx2};
    return table;
}

}  // namespace ngsocx::kernels
