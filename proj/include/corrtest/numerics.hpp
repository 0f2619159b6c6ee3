#pragma once

namespace corrtest {

// Upper-tail probability of a standard Gaussian.
struct TailProb {
  double value;  // in [0, 1]
};

// Q(x) = P(N(0,1) >= x). Absolute error <= 1e-12 on [-8, 8].
// Throws std::invalid_argument for non-finite x.
TailProb q_tail(double x);

// log2 Q(x), stable far into the tail where Q itself underflows.
// Direct evaluation below x = 8, asymptotic expansion of ln Q above it;
// relative error <= 1e-9 on [-8, 40].
double log2_q_tail(double x);

}  // namespace corrtest
