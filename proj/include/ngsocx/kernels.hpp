#pragma once

// Data-parallel inner loops of the simulator. Every kernel has a scalar
// reference implementation and, where the CPU allows, a SIMD variant picked
// at runtime. Variants perform the same IEEE operations in the same order
// (no FMA), so their outputs are bit-identical to the scalar reference.

#include <cstddef>

namespace ngsocx::kernels {

enum class Isa { Scalar, Avx2 };

/// Circular-orbit positions rotated into the Earth-fixed frame:
///   u = u0 + n t,  r = R (cos u P + sin u Q),  then rotate by -theta about z.
struct CircularPropagation {
    const double* px;
    const double* py;
    const double* pz;
    const double* qx;
    const double* qy;
    const double* qz;
    const double* cos_u0;
    const double* sin_u0;
    std::size_t n;
    double radius_km;
    double cos_nt;
    double sin_nt;
    double cos_theta;
    double sin_theta;
    double* x;
    double* y;
    double* z;
};

/// Range and sine of elevation of each satellite from one site.
struct LookAngles {
    const double* x;
    const double* y;
    const double* z;
    std::size_t n;
    double site_x, site_y, site_z;
    double up_x, up_y, up_z;
    double* sin_elevation;
    double* range_km;
};

/// For each candidate unit vector, the largest dot product against a set of
/// constraint unit vectors (cosine of the smallest angular separation).
/// Output is -2 when there are no constraints.
struct MaxCosine {
    const double* ux;
    const double* uy;
    const double* uz;
    std::size_t n;
    const double* cx;
    const double* cy;
    const double* cz;
    std::size_t m;
    double* out;
};

struct KernelTable {
    Isa isa;
    const char* name;
    void (*propagate_circular)(const CircularPropagation&);
    void (*look_angles)(const LookAngles&);
    void (*max_cosine)(const MaxCosine&);
};

const KernelTable& scalar_kernels();
/// nullptr when the AVX2 variant was not compiled in or the CPU lacks AVX2.
const KernelTable* avx2_kernels();

/// Kernels used by the simulator. Chosen on first use: the best supported
/// variant, unless NGSOCX_KERNEL=scalar|avx2 says otherwise.
const KernelTable& active();
/// Override the runtime choice; throws ConfigError if unsupported.
void select(Isa isa);

}  // namespace ngsocx::kernels
