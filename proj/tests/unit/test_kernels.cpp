#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <string>
#include <random>
#include <vector>

#include "ngsocx/catalog.hpp"
#include "ngsocx/kernels.hpp"
#include "ngsocx/orbits.hpp"

using namespace ngsocx;

namespace {

bool bit_equal(const std::vector<double>& a, const std::vector<double>& b)
{
    return a.size() == b.size() && std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

std::vector<double> random_vec(std::mt19937_64& g, std::size_t n, double lo, double hi)
{
    std::uniform_real_distribution<double> u(lo, hi);
    std::vector<double> v(n);
    for (auto& x : v) x = u(g);
    return v;
}

}  // namespace

TEST_CASE("scalar kernels: reference values")
{
    const auto& k = kernels::scalar_kernels();
    CHECK(k.isa == kernels::Isa::Scalar);

    double px = 1, py = 0, pz = 0, qx = 0, qy = 1, qz = 0, c0 = 1, s0 = 0;
    double x, y, z;
    kernels::CircularPropagation p{&px, &py, &pz, &qx, &qy, &qz, &c0, &s0, 1, 7000.0, 0.0, 1.0, 1.0, 0.0, &x, &y, &z};
    k.propagate_circular(p);
    CHECK(x == doctest::Approx(0.0).epsilon(1e-12).scale(1));
    CHECK(y == doctest::Approx(7000.0));
    CHECK(z == 0.0);

    double sx = 7000.0, sy = 0, sz = 0, se, rg;
    kernels::LookAngles la{&sx, &sy, &sz, 1, 6371.0, 0, 0, 1, 0, 0, &se, &rg};
    k.look_angles(la);
    CHECK(rg == doctest::Approx(629.0));
    CHECK(se == doctest::Approx(1.0));

    double ux = 1, uy = 0, uz = 0, out;
    double cx[2] = {0, 0.6}, cy[2] = {1, 0.8}, cz[2] = {0, 0};
    kernels::MaxCosine mc{&ux, &uy, &uz, 1, cx, cy, cz, 2, &out};
    k.max_cosine(mc);
    CHECK(out == doctest::Approx(0.6));
    mc.m = 0;
    k.max_cosine(mc);
    CHECK(out == -2.0);
}

TEST_CASE("AVX2 kernels are bit-identical to the scalar reference")
{
    const auto* avx = kernels::avx2_kernels();
    if (!avx) {
        MESSAGE("AVX2 not available on this CPU; equivalence test skipped");
        return;
    }
    const auto& sc = kernels::scalar_kernels();
    std::mt19937_64 g(99);
    for (std::size_t n : {0u, 1u, 3u, 4u, 5u, 17u, 1000u, 4425u}) {
        auto px = random_vec(g, n, -1, 1), py = random_vec(g, n, -1, 1), pz = random_vec(g, n, -1, 1);
        auto qx = random_vec(g, n, -1, 1), qy = random_vec(g, n, -1, 1), qz = random_vec(g, n, -1, 1);
        auto c0 = random_vec(g, n, -1, 1), s0 = random_vec(g, n, -1, 1);
        std::vector<double> x1(n), y1(n), z1(n), x2(n), y2(n), z2(n);
        kernels::CircularPropagation a{px.data(), py.data(), pz.data(), qx.data(), qy.data(), qz.data(),
                                       c0.data(), s0.data(), n, 7571.0, 0.3, 0.954, -0.2, 0.98, x1.data(), y1.data(), z1.data()};
        auto b = a;
        b.x = x2.data();
        b.y = y2.data();
        b.z = z2.data();
        sc.propagate_circular(a);
        avx->propagate_circular(b);
        CHECK(bit_equal(x1, x2));
        CHECK(bit_equal(y1, y2));
        CHECK(bit_equal(z1, z2));

        std::vector<double> se1(n), rg1(n), se2(n), rg2(n);
        kernels::LookAngles la{x1.data(), y1.data(), z1.data(), n, 1000.0, 2000.0, 5800.0, 0.15, 0.31, 0.94,
                               se1.data(), rg1.data()};
        auto lb = la;
        lb.sin_elevation = se2.data();
        lb.range_km = rg2.data();
        sc.look_angles(la);
        avx->look_angles(lb);
        CHECK(bit_equal(se1, se2));
        CHECK(bit_equal(rg1, rg2));

        for (std::size_t m : {0u, 1u, 6u}) {
            auto cx = random_vec(g, m, -1, 1), cy = random_vec(g, m, -1, 1), cz = random_vec(g, m, -1, 1);
            std::vector<double> o1(n), o2(n);
            kernels::MaxCosine ma{px.data(), py.data(), pz.data(), n, cx.data(), cy.data(), cz.data(), m, o1.data()};
            auto mb = ma;
            mb.out = o2.data();
            sc.max_cosine(ma);
            avx->max_cosine(mb);
            CHECK(bit_equal(o1, o2));
        }
    }
}

TEST_CASE("constellation state is identical under both kernel tables")
{
    if (!kernels::avx2_kernels()) return;
    const Catalog cat = builtin_catalog();
    const ConstellationModel model(cat.constellation("SpaceX"));
    const auto previous = kernels::active().isa;
    kernels::select(kernels::Isa::Scalar);
    const SystemState a = model.state_at(1234.0, 0.7);
    kernels::select(kernels::Isa::Avx2);
    const SystemState b = model.state_at(1234.0, 0.7);
    CHECK(bit_equal(a.x_km, b.x_km));
    CHECK(bit_equal(a.y_km, b.y_km));
    CHECK(bit_equal(a.z_km, b.z_km));
    kernels::select(previous);
}

TEST_CASE("environment override of the kernel choice")
{
    const char* env = std::getenv("NGSOCX_KERNEL");
    if (env && std::string(env) == "scalar") CHECK(kernels::active().isa == kernels::Isa::Scalar);
    if (!kernels::avx2_kernels()) CHECK_THROWS(kernels::select(kernels::Isa::Avx2));
}
