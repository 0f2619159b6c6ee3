#pragma once

namespace corrtest {

// One test instance: distinguish ||rho||_2 >= tau from rho = 0 in
// dimension d, with false-alarm target delta and missed-detection
// target epsilon.
struct TestSpec {
  double tau = 0.5;
  double delta = 0.1;
  double epsilon = 0.1;
  int d = 1;

  void validate() const;  // throws std::invalid_argument
};

// Protocol knobs for one one-sided instance: threshold multiplier r (in
// units of sqrt(n)), decision fraction theta, message width k bits.
struct DerivedParams {
  double r = 0.0;
  double theta = 0.0;
  int k = 0;
  // Numeric verification of ln(3/delta) <= 2^k Q(r) <= 2 ln(3/delta);
  // the ceiling form guarantees it in exact arithmetic.
  bool sandwich_ok = true;
};

// Repetition plan that amplifies an (alpha, beta) test to (delta, epsilon).
struct BoostPlan {
  double alpha = 0.0;
  double beta = 0.0;
  int m = 1;
  double t = 0.5;  // vote threshold: declare null iff sum D_i > m*t
};

// Value of a communication lower bound, in bits.
struct BoundResult {
  double bits = 0.0;
  bool clamped = false;        // negative square-root difference clamped to 0
  bool hypothesis_ok = true;   // stated admissibility hypothesis held
};

enum class BoundSide { kEps, kDelta };
enum class RibbonKind { kHyper, kReverse };

// Knobs for the one-sided scalar test at (tau, delta, epsilon).
// Accepts delta in (0, 3) so that ln(3/delta) > 0.
DerivedParams one_sided_params(double tau, double delta, double epsilon);

// Knobs for the simple binary test rho = rho0 versus rho = rho1,
// 0 < rho1 < rho0 < 1.
DerivedParams binary_params(double rho0, double rho1, double delta, double epsilon);

// Repetition count and vote threshold. The default denominator is the
// Hoeffding-consistent (1 - beta - alpha)^2; `printed_constant` switches
// to the (1 - beta + alpha)^2 variant for comparison.
BoostPlan median_plan(double alpha, double beta, double delta, double epsilon,
                      bool printed_constant = false);

// The scalar sub-problem a d-dimensional instance reduces to: threshold
// tau/sqrt(2d) with constant error targets (1/56, 1/112).
TestSpec ddim_inner_spec(double tau, int d);

// One-way bounds for d = 1 (epsilon-side and delta-side forms).
BoundResult lb_oneway_eps(double tau, double delta, double epsilon);
BoundResult lb_oneway_delta(double tau, double delta, double epsilon);
// One-way bound for general d.
BoundResult lb_ddim(int d, double tau, double delta, double epsilon, BoundSide side);
// Bound valid for any number of interaction rounds.
BoundResult lb_interactive(int d, double tau, double delta, double epsilon);
// Bound for correlation estimation; below d = 12 falls back to the
// testing bound d/tau^2.
BoundResult lb_estimation(int d, double tau);

// Membership test for the (reverse) hypercontractivity ribbon of a
// bivariate Gaussian pair with correlation rho.
bool ribbon_check(double p, double q, double rho, RibbonKind kind);

// Heuristic default sample size: 10 * ceil(1/Q(r)), capped at 1e6.
int default_sample_size(double r);

// Total bits of the constructed test for this spec: k for d = 1, m*k of
// the boosted inner test for d > 1. The baseline for upper-vs-lower
// consistency checks.
long long upper_bound_bits(const TestSpec& spec);

}  // namespace corrtest
