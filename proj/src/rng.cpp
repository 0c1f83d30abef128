#include "ngsocx/rng.hpp"

namespace ngsocx {
namespace {

constexpr std::uint32_t kMul0 = 0xD2511F53u;
constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi, std::uint32_t& lo)
{
    const std::uint64_t p = static_cast<std::uint64_t>(a) * b;
    hi = static_cast<std::uint32_t>(p >> 32);
    lo = static_cast<std::uint32_t>(p);
}

}  // namespace

Philox4x32::Counter Philox4x32::generate(Counter ctr, Key key)
{
    for (int round = 0; round < 10; ++round) {
        if (round > 0) {
            key[0] += kWeyl0;
            key[1] += kWeyl1;
        }
        std::uint32_t hi0, lo0, hi1, lo1;
        mulhilo(kMul0, ctr[0], hi0, lo0);
        mulhilo(kMul1, ctr[2], hi1, lo1);
        ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
    }
    return ctr;
}

std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t h)
{
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::uint32_t stream_id_for(std::string_view system_name)
{
    const std::uint64_t h = fnv1a64(system_name);
    return static_cast<std::uint32_t>(h ^ (h >> 32));
}

RngStream::RngStream(std::uint64_t seed, std::uint64_t iteration, std::uint32_t stream_id,
                     DrawPurpose purpose)
{
    key_ = {static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
    // ctr_[0] is the block index within the stream; the rest is the address.
    ctr_ = {0u, static_cast<std::uint32_t>(iteration), stream_id,
            (static_cast<std::uint32_t>(purpose) << 24) ^ static_cast<std::uint32_t>(iteration >> 32)};
}

void RngStream::refill()
{
    block_ = Philox4x32::generate(ctr_, key_);
    ++ctr_[0];
    used_ = 0;
}

std::uint64_t RngStream::next_u64()
{
    if (used_ > 2) refill();
    const std::uint64_t v = (static_cast<std::uint64_t>(block_[used_]) << 32) | block_[used_ + 1];
    used_ += 2;
    return v;
}

double RngStream::uniform()
{
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::uniform_open()
{
    // (k + 0.5) / 2^53 never hits 0 or 1.
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

std::uint64_t RngStream::uniform_index(std::uint64_t n)
{
    const unsigned __int128 p = static_cast<unsigned __int128>(next_u64()) * n;
    return static_cast<std::uint64_t>(p >> 64);
}

}  // namespace ngsocx
