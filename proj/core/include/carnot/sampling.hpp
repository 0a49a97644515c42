#pragma once

#include <cstdint>

#include "carnot/algebra.hpp"
#include "carnot/endpoint.hpp"

namespace carnot {

/// Deterministic generator (splitmix64) used everywhere randomness is needed,
/// so that the same seed yields the same stream on every platform.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [lo, hi], inclusive, by rejection.
  int64_t int_in(int64_t lo, int64_t hi);

  /// Uniform in [0, 1).
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Numerator in [-max_num, max_num], denominator in [1, max_den].
  Rational rational(int max_num = 6, int max_den = 4);

 private:
  uint64_t state_;
};

AlgebraVector random_vector(const StratifiedAlgebra& alg, Rng& rng, int max_num = 6,
                            int max_den = 4);

AlgebraVector random_horizontal(const StratifiedAlgebra& alg, Rng& rng,
                                bool nonzero = false, int max_num = 6, int max_den = 4);

HorizontalTuple random_tuple(const StratifiedAlgebra& alg, Rng& rng, int p,
                             int max_num = 6, int max_den = 4);

/// Random control with `pieces` pieces over random strictly increasing
/// rational breakpoints.
PiecewiseConstantControl random_control(const StratifiedAlgebra& alg, Rng& rng,
                                        int pieces, int max_num = 6, int max_den = 4);

}  // namespace carnot
