#include <doctest.h>

#include <cmath>
#include <set>
#include <vector>

#include "ngsocx/rng.hpp"

using namespace ngsocx;

TEST_CASE("philox4x32-10 known-answer vectors")
{
    using C = Philox4x32::Counter;
    using K = Philox4x32::Key;
    CHECK(Philox4x32::generate(C{0, 0, 0, 0}, K{0, 0}) == C{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8});
    CHECK(Philox4x32::generate(C{0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff}, K{0xffffffff, 0xffffffff}) ==
          C{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd});
    CHECK(Philox4x32::generate(C{0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}, K{0xa4093822, 0x299f31d0}) ==
          C{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1});
}

TEST_CASE("fnv1a64 reference values")
{
    CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
    CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
    CHECK(fnv1a64("foobar") == 0x85944171f73967e8ULL);
}

TEST_CASE("streams are reproducible and independent")
{
    RngStream a(42, 7, stream_id_for("SpaceX"), DrawPurpose::Epoch);
    RngStream b(42, 7, stream_id_for("SpaceX"), DrawPurpose::Epoch);
    RngStream c(42, 7, stream_id_for("SpaceX"), DrawPurpose::Unavailability);
    RngStream d(42, 8, stream_id_for("SpaceX"), DrawPurpose::Epoch);
    RngStream e(43, 7, stream_id_for("SpaceX"), DrawPurpose::Epoch);
    std::set<std::uint64_t> firsts;
    for (int i = 0; i < 16; ++i) {
        const auto x = a.next_u64();
        CHECK(x == b.next_u64());
        firsts.insert(x);
    }
    CHECK(firsts.size() == 16);
    RngStream a2(42, 7, stream_id_for("SpaceX"), DrawPurpose::Epoch);
    const auto first = a2.next_u64();
    CHECK(first != c.next_u64());
    CHECK(first != d.next_u64());
    CHECK(first != e.next_u64());
}

TEST_CASE("uniform variates stay in range with the right moments")
{
    RngStream r(1, 0, 3, DrawPurpose::Visibility);
    const int n = 200000;
    double sum = 0.0, sum2 = 0.0;
    for (int i = 0; i < n; ++i) {
        const double u = r.uniform();
        REQUIRE(u >= 0.0);
        REQUIRE(u < 1.0);
        const double o = r.uniform_open();
        REQUIRE(o > 0.0);
        REQUIRE(o < 1.0);
        sum += u;
        sum2 += u * u;
    }
    const double mean = sum / n, var = sum2 / n - mean * mean;
    CHECK(std::abs(mean - 0.5) < 0.005);
    CHECK(std::abs(var - 1.0 / 12.0) < 0.002);
}

TEST_CASE("uniform_index covers its range evenly")
{
    RngStream r(9, 1, 2, DrawPurpose::InterfererSelection);
    std::vector<int> counts(7, 0);
    const int n = 70000;
    for (int i = 0; i < n; ++i) {
        const auto k = r.uniform_index(7);
        REQUIRE(k < 7);
        ++counts[k];
    }
    for (int c : counts) CHECK(std::abs(c - n / 7) < 500);
    CHECK(r.uniform_index(1) == 0);
}
