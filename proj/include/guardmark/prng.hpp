#pragma once

#include <cstdint>
#include <string_view>

namespace guardmark::rng {

// xoshiro256++ seeded through SplitMix64. Substreams are derived from
// (master_seed, purpose_tag, index) so parallel consumers never share state.
class Stream {
  public:
    Stream() : Stream(0) {}
    explicit Stream(std::uint64_t seed);

    std::uint64_t next_u64();
    // [0, 1) with 53 random bits
    double next_double();
    float next_float();
    // uniform in [0, bound), bound > 0, via rejection
    std::uint64_t next_below(std::uint64_t bound);
    // uniform in [lo, hi)
    double uniform(double lo, double hi);
    // standard normal, Box-Muller with cached spare
    double gaussian();

  private:
    std::uint64_t s_[4];
    bool has_spare_ = false;
    double spare_ = 0.0;
};

std::uint64_t hash_tag(std::string_view tag);

// Deterministic substream for (master_seed, purpose, index).
Stream substream(std::uint64_t master_seed, std::string_view purpose, std::uint64_t index = 0);

} // namespace guardmark::rng
