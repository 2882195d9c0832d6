#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

namespace iovtsim {

// Sub-seed offsets so regenerating one layer never perturbs the others.
inline constexpr std::uint64_t kTopologySeedOffset = 0x7401;
inline constexpr std::uint64_t kDeviceSeedOffset = 0x7402;
inline constexpr std::uint64_t kFadingSeedOffset = 0x7403;

// mt19937_64 with fixed-layout draws. The standard pins the engine output but
// not the distributions, and generation here must be bit-identical across
// standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // [0, 1), 53-bit resolution
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Box-Muller; the sine twin is discarded to keep the draw count fixed at
  // two engine words per normal.
  double standard_normal() {
    double u1;
    do {
      u1 = uniform01();
    } while (u1 == 0.0);
    const double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
  }

  // CN(0,1): unit total variance, each component N(0, 1/2)
  std::complex<double> complex_normal() {
    const double re = standard_normal() * kInvSqrt2;
    const double im = standard_normal() * kInvSqrt2;
    return {re, im};
  }

 private:
  static constexpr double kTwoPi = 6.283185307179586476925286766559;
  static constexpr double kInvSqrt2 = 0.70710678118654752440084436210485;
  std::mt19937_64 engine_;
};

}  // namespace iovtsim
