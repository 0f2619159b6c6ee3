#pragma once

#include <cstdint>
#include <vector>

#include "corrtest/rng.hpp"

namespace corrtest {

enum class SourceKind { kGaussian, kRademacher };

// The correlation parameter rho in [-1,1]^d. Gaussian sources require
// ||rho||_2 <= 1, the Rademacher source requires ||rho||_1 <= 1 (so the
// conditional law of Y given any sign pattern is a probability).
struct CorrelationVector {
  std::vector<double> rho;

  int dim() const { return static_cast<int>(rho.size()); }
  double l1_norm() const;
  double l2_norm() const;

  static CorrelationVector zeros(int d);
  // The equal-coordinate vector with ||rho||_2 = tau used throughout the
  // experiments: rho(i) = tau / sqrt(d).
  static CorrelationVector equal_coords(double tau, int d);
};

struct SamplePair {
  std::vector<double> x;  // length d
  double y;
};

// n i.i.d. draws; xs is row-major n x d.
struct SampleBlock {
  std::vector<double> xs;
  std::vector<double> ys;
  int n = 0;
  int d = 0;

  const double* row(int t) const { return xs.data() + static_cast<std::size_t>(t) * d; }
};

// X ~ N(0, I_d), Y = rho'X + sqrt(1 - ||rho||_2^2) Z.
SamplePair sample_pair_gaussian(const CorrelationVector& rho, RandomStream& rs);

// X uniform on {-1,+1}^d, Y = +1 with probability (1 + rho'x)/2 given X = x.
SamplePair sample_pair_rademacher(const CorrelationVector& rho, RandomStream& rs);

SampleBlock sample_block(const CorrelationVector& rho, int n, SourceKind kind,
                         RandomStream& rs);

}  // namespace corrtest
