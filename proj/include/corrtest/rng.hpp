#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>

namespace corrtest {

// Counter-based pseudorandom generator used everywhere in this project.
//
// The generator is the SplitMix64 finalizer evaluated at equally spaced
// points of a 64-bit base value:
//
//     value(base, i) = mix64(base + (i+1) * 0x9E3779B97F4A7C15)   for i = 0,1,2,...
//
// with mix64 the three-step avalanche below. Both parties, all trial
// workers, and every test oracle reproduce a stream from (base, i) alone,
// so no generator state ever has to be shared or synchronized. This
// mapping is frozen: changing it invalidates every recorded seed.
inline constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ULL;

constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Combines an ordered list of fields into one stream base. Each step is
// a bijection of the accumulator for a fixed field, so distinct field
// tuples of equal length never collide through the chain's last step
// alone; a collision test over the ranges used in practice lives in the
// test suite.
constexpr std::uint64_t derive_seed(std::uint64_t master,
                                    std::initializer_list<std::uint64_t> fields) {
  std::uint64_t h = master;
  for (std::uint64_t f : fields) h = mix64(h + kGoldenGamma + f);
  return h;
}

// Stream purposes. Values are part of the frozen seed-derivation scheme.
enum class SeedRole : std::uint64_t {
  kTrial = 0x01,
  kRepetition = 0x02,
  kSampleX = 0x03,
  kSampleNoise = 0x04,
  kCodebook = 0x05,
  kProjection = 0x06,
};

constexpr std::uint64_t derive_seed(std::uint64_t base, SeedRole role,
                                    std::uint64_t index = 0) {
  return derive_seed(base, {static_cast<std::uint64_t>(role), index});
}

// Sequential view over one counter-based stream.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t base) : base_(base) {}

  std::uint64_t next_u64() { return mix64(base_ + (++ctr_) * kGoldenGamma); }

  // Uniform on the open interval (0,1).
  double next_unit() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  // Standard normal via the Marsaglia polar method; the rejected-pair
  // consumption is part of the frozen mapping.
  double next_normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u, v, s;
    do {
      u = 2.0 * next_unit() - 1.0;
      v = 2.0 * next_unit() - 1.0;
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double scale = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * scale;
    have_spare_ = true;
    return u * scale;
  }

  int next_sign() { return (next_u64() >> 63) ? 1 : -1; }

 private:
  std::uint64_t base_;
  std::uint64_t ctr_ = 0;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace corrtest
