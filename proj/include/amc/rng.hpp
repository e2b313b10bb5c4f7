#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace amc {

// Seed stream tags. Every random draw in the toolkit comes from an Rng seeded
// by derive_seed(master, stream, index). Separate streams keep symbol, noise
// and SNR draws independent, so a noisy signal shares its symbol sequence with
// the noiseless twin generated from the same seed.
inline constexpr std::uint64_t kStreamSymbols = 0x53594d424f4c5331ULL;
inline constexpr std::uint64_t kStreamNoise = 0x4e4f495345535432ULL;
inline constexpr std::uint64_t kStreamSnrDraw = 0x534e524452415733ULL;
inline constexpr std::uint64_t kStreamExemplar = 0x4558454d504c5234ULL;
inline constexpr std::uint64_t kStreamTest = 0x5445535452454335ULL;

inline constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream,
                                           std::uint64_t index = 0) {
  return splitmix64(splitmix64(master ^ stream) + 0x9e3779b97f4a7c15ULL * (index + 1));
}

// mt19937_64 is fully specified by the standard; the transforms below avoid
// std::*_distribution, whose output is implementation-defined. Together they
// make every generated dataset byte-identical across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next_u64() { return eng_(); }

  // uniform in [0, 1) with 53-bit resolution
  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // uniform integer in [0, bound), bound >= 1
  std::uint64_t uniform_int(std::uint64_t bound) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(eng_()) * bound) >> 64);
  }

  // standard normal via Box-Muller; the second value of each pair is cached
  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = 1.0 - uniform();  // (0, 1], keeps log() finite
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 6.283185307179586477 * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

 private:
  std::mt19937_64 eng_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace amc
