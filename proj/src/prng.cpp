#include "guardmark/prng.hpp"

#include <cmath>
#include <numbers>

namespace guardmark::rng {
namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
    x += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
}

} // namespace

Stream::Stream(std::uint64_t seed) {
    std::uint64_t sm = seed;
    for (auto& w : s_) w = splitmix64(sm);
}

std::uint64_t Stream::next_u64() {
    std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

double Stream::next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

float Stream::next_float() {
    return static_cast<float>(next_u64() >> 40) * 0x1.0p-24f;
}

std::uint64_t Stream::next_below(std::uint64_t bound) {
    std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        std::uint64_t r = next_u64();
        if (r >= threshold) return r % bound;
    }
}

double Stream::uniform(double lo, double hi) {
    return lo + (hi - lo) * next_double();
}

double Stream::gaussian() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    double u1 = next_double();
    double u2 = next_double();
    double r = std::sqrt(-2.0 * std::log1p(-u1));
    double a = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(a);
    has_spare_ = true;
    return r * std::cos(a);
}

std::uint64_t hash_tag(std::string_view tag) {
    // FNV-1a 64
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : tag) {
        h ^= static_cast<std::uint64_t>(static_cast<unsigned char>(c));
        h *= 0x100000001b3ULL;
    }
    return h;
}

Stream substream(std::uint64_t master_seed, std::string_view purpose, std::uint64_t index) {
    std::uint64_t x = master_seed;
    std::uint64_t a = splitmix64(x);
    x ^= hash_tag(purpose);
    std::uint64_t b = splitmix64(x);
    x ^= index * 0x9e3779b97f4a7c15ULL + 0x2545f4914f6cdd1dULL;
    std::uint64_t c = splitmix64(x);
    return Stream(a ^ rotl(b, 29) ^ rotl(c, 47));
}

} // namespace guardmark::rng
