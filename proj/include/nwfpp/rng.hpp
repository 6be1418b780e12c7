#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>

namespace nwfpp {

// xoshiro256++ with splitmix64 seeding. Hand-rolled so that every stream is
// bit-reproducible across platforms; <random> distributions are
// implementation-defined and would break the byte-identical-output contract.
class rng_stream {
public:
    explicit rng_stream(std::uint64_t seed) {
        std::uint64_t x = seed;
        for (auto& w : state_) w = splitmix64(x);
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // uniform in [0,1), 53-bit resolution
    double next_double() { return (next_u64() >> 11) * 0x1.0p-53; }

    // uniform in (0,1); safe for log()
    double next_double_open() { return ((next_u64() >> 11) + 0.5) * 0x1.0p-53; }

    // Exp(1) by inversion
    double exp1() { return -std::log1p(-next_double()); }

    double exponential(double rate) { return exp1() / rate; }

    // bounded uniform integer via Lemire-style rejection-free 128-bit trick
    std::uint64_t next_below(std::uint64_t bound) {
        unsigned __int128 m = static_cast<unsigned __int128>(next_u64()) * bound;
        return static_cast<std::uint64_t>(m >> 64);
    }

    // exact Poisson: multiplicative inversion, chunked through
    // Poi(a+b) = Poi(a) + Poi(b) so large means stay exact
    std::uint64_t poisson(double mean) {
        std::uint64_t total = 0;
        while (mean > 30.0) {
            total += poisson_small(30.0);
            mean -= 30.0;
        }
        return total + poisson_small(mean);
    }

    static std::uint64_t splitmix64(std::uint64_t& x) {
        std::uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    std::uint64_t poisson_small(double mean) {
        if (mean <= 0.0) return 0;
        double p = std::exp(-mean);
        double cum = p;
        const double u = next_double();
        std::uint64_t k = 0;
        while (u > cum) {
            ++k;
            p *= mean / static_cast<double>(k);
            cum += p;
            if (p < 1e-300) break;
        }
        return k;
    }

    std::uint64_t state_[4];
};

// Seed derived from (master seed, purpose tag, indices): FNV-1a over the tag,
// everything funneled through splitmix64. Consumers get independent streams.
inline std::uint64_t derive_seed(std::uint64_t master, std::string_view tag,
                                 std::uint64_t a = 0, std::uint64_t b = 0) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (const char ch : tag) {
        h ^= static_cast<unsigned char>(ch);
        h *= 0x100000001b3ULL;
    }
    std::uint64_t x = master;
    std::uint64_t s = rng_stream::splitmix64(x);
    x ^= h;
    s ^= rng_stream::splitmix64(x);
    x ^= 0x9e3779b97f4a7c15ULL * (a + 1);
    s ^= rng_stream::splitmix64(x);
    x ^= 0xd1b54a32d192ed03ULL * (b + 1);
    s ^= rng_stream::splitmix64(x);
    return s;
}

inline rng_stream derive_stream(std::uint64_t master, std::string_view tag,
                                std::uint64_t a = 0, std::uint64_t b = 0) {
    return rng_stream(derive_seed(master, tag, a, b));
}

} // namespace nwfpp
