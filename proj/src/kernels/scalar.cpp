#include "ngsocx/kernels.hpp"

namespace ngsocx::kernels {
namespace {

void propagate_circular_scalar(const CircularPropagation& a)
{
    for (std::size_t i = 0; i < a.n; ++i) {
        const double c = a.cos_u0[i] * a.cos_nt - a.sin_u0[i] * a.sin_nt;
        const double s = a.sin_u0[i] * a.cos_nt + a.cos_u0[i] * a.sin_nt;
        const double xi = a.radius_km * (c * a.px[i] + s * a.qx[i]);
        const double yi = a.radius_km * (c * a.py[i] + s * a.qy[i]);
        const double zi = a.radius_km * (c * a.pz[i] + s * a.qz[i]);
        a.x[i] = a.cos_theta * xi + a.sin_theta * yi;
        a.y[i] = a.cos_theta * yi - a.sin_theta * xi;
        a.z[i] = zi;
    }
}

void look_angles_scalar(const LookAngles& a)
{
    for (std::size_t i = 0; i < a.n; ++i) {
        const double dx = a.x[i] - a.site_x;
        const double dy = a.y[i] - a.site_y;
        const double dz = a.z[i] - a.site_z;
        const double r = __builtin_sqrt(dx * dx + dy * dy + dz * dz);
        const double h = dx * a.up_x + dy * a.up_y + dz * a.up_z;
        a.sin_elevation[i] = h / r;
        a.range_km[i] = r;
    }
}

void max_cosine_scalar(const MaxCosine& a)
{
    for (std::size_t i = 0; i < a.n; ++i) {
        double best = -2.0;
        for (std::size_t j = 0; j < a.m; ++j) {
            const double d = a.ux[i] * a.cx[j] + a.uy[i] * a.cy[j] + a.uz[i] * a.cz[j];
            best = d > best ? d : best;
        }
        a.out[i] = best;
    }
}

}  // namespace

const KernelTable& scalar_kernels()
{
    static const KernelTable table{Isa::Scalar, "scalar", propagate_circular_scalar, look_angles_scalar,
                                   max_cosine_scalar};
    return table;
}

}  // namespace ngsocx::kernels
