#ifndef FPDEA_RNG_HPP
#define FPDEA_RNG_HPP

#include <cmath>
#include <cstdint>

namespace fpdea {

// splitmix64. Every replication gets its own stream derived from
// (seed, stream_id), so draw sequences do not depend on execution order.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

  private:
    std::uint64_t state_;
};

inline std::uint64_t mix_bits(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

inline std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t stream_id) {
    return mix_bits(seed + 0x9e3779b97f4a7c15ull) ^
           mix_bits(stream_id * 0xda942042e4dd58b5ull + 0x8bb84b93962eacc9ull);
}

class ReplicationRng {
  public:
    ReplicationRng(std::uint64_t seed, std::uint64_t stream_id)
        : gen_(derive_stream(seed, stream_id)) {}

    std::uint64_t next_u64() { return gen_.next(); }

    // [0, 1)
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // (0, 1), safe under log()
    double uniform_open() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    // Box-Muller, cosine branch only so every call consumes exactly two
    // draws.
    double normal(double sigma) {
        const double u1 = uniform_open();
        const double u2 = uniform_open();
        return sigma * std::sqrt(-2.0 * std::log(u1)) *
               std::cos(2.0 * 3.14159265358979323846 * u2);
    }

    double half_normal(double sigma) { return std::fabs(normal(sigma)); }

  private:
    SplitMix64 gen_;
};

}  // namespace fpdea

#endif
