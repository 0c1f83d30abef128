#pragma once

#include <array>
#include <cstdint>
#include <string_view>

namespace ngsocx {

/// Philox4x32-10 block function (Salmon et al., SC'11), the counter-based
/// generator from Random123.
class Philox4x32 {
public:
    using Counter = std::array<std::uint32_t, 4>;
    using Key = std::array<std::uint32_t, 2>;

    static Counter generate(Counter ctr, Key key);
};

/// What a substream is used for. Part of the counter, so adding a new purpose
/// never perturbs existing draws.
enum class DrawPurpose : std::uint32_t {
    Epoch = 1,
    VictimSelection = 2,
    InterfererSelection = 3,
    Unavailability = 4,
    Visibility = 5,
};

/// FNV-1a 64-bit hash; used for stream ids and scenario fingerprints.
std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t h = 0xcbf29ce484222325ULL);

/// Independent stream of uniform variates addressed by
/// (seed, iteration, stream id, purpose). Streams with different addresses
/// never share a Philox block.
class RngStream {
public:
    RngStream(std::uint64_t seed, std::uint64_t iteration, std::uint32_t stream_id, DrawPurpose purpose);

    std::uint64_t next_u64();
    /// Uniform in [0, 1) with 53 random bits.
    double uniform();
    /// Uniform in the open interval (0, 1).
    double uniform_open();
    /// Uniform integer in [0, n); n must be > 0.
    std::uint64_t uniform_index(std::uint64_t n);

private:
    void refill();

    Philox4x32::Key key_{};
    Philox4x32::Counter ctr_{};
    std::array<std::uint32_t, 4> block_{};
    int used_ = 4;
};

/// Stream id for a named system (constellation or GSO satellite).
std::uint32_t stream_id_for(std::string_view system_name);

}  // namespace ngsocx
