#include "corrtest/params.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "corrtest/numerics.hpp"

namespace corrtest {

namespace {

constexpr double kLn2 = 0.6931471805599453;

double log2_inv(double p) { return -std::log2(p); }  // log2(1/p)

void check_unit_open(double v, const char* name) {
  if (!(v > 0.0 && v < 1.0)) {
    throw std::invalid_argument(std::string(name) + " must lie in (0,1)");
  }
}

// k = ceil(log2 1/Q(r) + log2 ln(3/delta)), with the sandwich
// ln(3/delta) <= 2^k Q(r) <= 2 ln(3/delta) re-checked numerically.
void fill_message_width(DerivedParams& p, double delta) {
  const double log2_ln3d = std::log2(std::log(3.0 / delta));
  const double l2q = log2_q_tail(p.r);
  p.k = static_cast<int>(std::max(1.0, std::ceil(-l2q + log2_ln3d)));
  const double excess = static_cast<double>(p.k) + l2q - log2_ln3d;  // in [0,1]
  p.sandwich_ok = excess >= -1e-9 && excess <= 1.0 + 1e-9;
}

double sqrt_clamped(double v) { return std::sqrt(std::max(0.0, v)); }

BoundResult squared_diff_bound(double scale, double lead, double discount) {
  // scale * (sqrt(lead) - sqrt(discount))^2, clamped at zero when the
  // difference is negative.
  BoundResult out;
  const double diff = sqrt_clamped(lead) - sqrt_clamped(discount);
  if (diff <= 0.0) {
    out.bits = 0.0;
    out.clamped = diff < 0.0;
  } else {
    out.bits = scale * diff * diff;
  }
  return out;
}

bool corollary_hypothesis(double tau, double delta, double epsilon) {
  return delta + std::pow(epsilon, (1.0 - tau) / (1.0 + tau)) <= 1.0 + 1e-12;
}

}  // namespace

void TestSpec::validate() const {
  if (!(tau > 0.0 && tau <= 1.0)) throw std::invalid_argument("tau must lie in (0,1]");
  check_unit_open(delta, "delta");
  check_unit_open(epsilon, "epsilon");
  if (d < 1) throw std::invalid_argument("d must be >= 1");
}

DerivedParams one_sided_params(double tau, double delta, double epsilon) {
  if (!(tau > 0.0 && tau <= 1.0)) throw std::invalid_argument("tau must lie in (0,1]");
  if (!(delta > 0.0 && delta < 3.0))
    throw std::invalid_argument("delta must lie in (0,3) so ln(3/delta) > 0");
  check_unit_open(epsilon, "epsilon");

  const double ln3d = std::log(3.0 / delta);
  const double a = log2_inv(epsilon) + std::log2(ln3d) + 1.0;
  const double b = (1.0 - tau * tau) * std::log2(3.0 / delta);
  if (!(a > 0.0)) throw std::invalid_argument("spec too lax: log2(1/eps) + log2 ln(3/delta) + 1 <= 0");

  const double sa = std::sqrt(a);
  const double sb = std::sqrt(b);
  DerivedParams p;
  p.r = std::sqrt(2.0 * kLn2) * (sa + sb) / tau;
  p.theta = tau * sa / (sa + sb);
  fill_message_width(p, delta);
  return p;
}

DerivedParams binary_params(double rho0, double rho1, double delta, double epsilon) {
  if (!(rho1 > 0.0 && rho1 < rho0 && rho0 < 1.0))
    throw std::invalid_argument("binary_params requires 0 < rho1 < rho0 < 1");
  if (!(delta > 0.0 && delta < 3.0))
    throw std::invalid_argument("delta must lie in (0,3) so ln(3/delta) > 0");
  check_unit_open(epsilon, "epsilon");

  const double ln3d = std::log(3.0 / delta);
  const double a = (1.0 - rho1 * rho1) * log2_inv(epsilon) + std::log2(ln3d) + 1.0;
  const double b = (1.0 - rho0 * rho0) * std::log2(3.0 / delta);
  if (!(a > 0.0)) throw std::invalid_argument("spec too lax: leading log term <= 0");

  const double sa = std::sqrt(a);
  const double sb = std::sqrt(b);
  DerivedParams p;
  p.r = std::sqrt(2.0 * kLn2) * (sa + sb) / (rho0 - rho1);
  // The source only pins theta to (rho1, rho0); interpolate with the same
  // sqrt(a)/(sqrt(a)+sqrt(b)) weight as the one-sided optimum, which the
  // rho1 -> 0 limit reduces to.
  p.theta = rho1 + (rho0 - rho1) * sa / (sa + sb);
  fill_message_width(p, delta);
  return p;
}

BoostPlan median_plan(double alpha, double beta, double delta, double epsilon,
                      bool printed_constant) {
  check_unit_open(alpha, "alpha");
  check_unit_open(beta, "beta");
  check_unit_open(delta, "delta");
  check_unit_open(epsilon, "epsilon");
  if (!(alpha + beta < 1.0)) throw std::invalid_argument("median_plan requires alpha + beta < 1");

  BoostPlan plan;
  plan.alpha = alpha;
  plan.beta = beta;
  plan.t = 0.5 * (1.0 - beta + alpha);
  const double gap = printed_constant ? (1.0 - beta + alpha) : (1.0 - beta - alpha);
  const double need = 2.0 / (gap * gap) * std::max(std::log(1.0 / delta), std::log(1.0 / epsilon));
  plan.m = static_cast<int>(std::max(1.0, std::ceil(need)));
  return plan;
}

TestSpec ddim_inner_spec(double tau, int d) {
  if (!(tau > 0.0 && tau <= 1.0)) throw std::invalid_argument("tau must lie in (0,1]");
  if (d < 1) throw std::invalid_argument("d must be >= 1");
  return TestSpec{tau / std::sqrt(2.0 * d), 1.0 / 56.0, 1.0 / 112.0, 1};
}

BoundResult lb_oneway_eps(double tau, double delta, double epsilon) {
  TestSpec{tau, delta, epsilon, 1}.validate();
  BoundResult out = squared_diff_bound(1.0 / (tau * tau), log2_inv(epsilon),
                                       (1.0 - tau * tau) * log2_inv(1.0 - delta));
  out.hypothesis_ok = corollary_hypothesis(tau, delta, epsilon);
  return out;
}

BoundResult lb_oneway_delta(double tau, double delta, double epsilon) {
  TestSpec{tau, delta, epsilon, 1}.validate();
  return squared_diff_bound(1.0 / (tau * tau), log2_inv(1.0 - epsilon),
                            (1.0 - tau * tau) * log2_inv(delta));
}

BoundResult lb_ddim(int d, double tau, double delta, double epsilon, BoundSide side) {
  TestSpec{tau, delta, epsilon, d}.validate();
  const double scale = d / (tau * tau);
  const double discount_factor = 1.0 - tau * tau / d;
  BoundResult out;
  if (side == BoundSide::kEps) {
    out = squared_diff_bound(scale, log2_inv(epsilon),
                             discount_factor * log2_inv(1.0 - delta));
    out.hypothesis_ok = corollary_hypothesis(tau, delta, epsilon);
  } else {
    out = squared_diff_bound(scale, log2_inv(1.0 - epsilon),
                             discount_factor * log2_inv(delta));
  }
  return out;
}

BoundResult lb_interactive(int d, double tau, double delta, double epsilon) {
  TestSpec{tau, delta, epsilon, d}.validate();
  BoundResult out;
  const double v = d / (tau * tau) * ((1.0 - delta) * log2_inv(epsilon) - 1.0);
  out.clamped = v < 0.0;
  out.bits = std::max(0.0, v);
  return out;
}

BoundResult lb_estimation(int d, double tau) {
  if (d < 1) throw std::invalid_argument("d must be >= 1");
  if (!(tau > 0.0 && tau <= 1.0)) throw std::invalid_argument("tau must lie in (0,1]");
  BoundResult out;
  if (d >= 12) {
    out.bits = static_cast<double>(d) * d / (768.0 * tau * tau);
  } else {
    // Constant-free testing bound; the d^2 form only kicks in at d >= 12.
    out.bits = d / (tau * tau);
  }
  return out;
}

bool ribbon_check(double p, double q, double rho, RibbonKind kind) {
  if (!(rho >= -1.0 && rho <= 1.0)) throw std::invalid_argument("rho must lie in [-1,1]");
  const double rho2 = rho * rho;
  const double slack = 1e-12;
  if (kind == RibbonKind::kHyper) {
    if (!(1.0 <= q && q <= p)) throw std::invalid_argument("hyper ribbon requires 1 <= q <= p");
    return q - 1.0 >= rho2 * (p - 1.0) - slack;
  }
  if (!(q <= 1.0 && p <= q)) throw std::invalid_argument("reverse ribbon requires p <= q <= 1");
  return 1.0 - q >= rho2 * (1.0 - p) - slack;
}

int default_sample_size(double r) {
  const double l2q = log2_q_tail(r);
  if (-l2q > 50.0) return 1000000;  // 1/Q(r) > 2^50, far past the cap
  const double inv_q = std::exp2(-l2q);
  const double n = 10.0 * std::ceil(inv_q);
  return static_cast<int>(std::min(n, 1e6));
}

long long upper_bound_bits(const TestSpec& spec) {
  spec.validate();
  if (spec.d == 1) {
    return one_sided_params(spec.tau, spec.delta, spec.epsilon).k;
  }
  // Inner two-sided scalar test at tau/sqrt(2d) with targets (1/56, 1/112)
  // needs a one-sided instance at half the missed-detection budget; the
  // composite pre-boost pair is (55/56, 1/112).
  const TestSpec inner = ddim_inner_spec(spec.tau, spec.d);
  const DerivedParams ip =
      one_sided_params(inner.tau, inner.delta, inner.epsilon / 2.0);
  const BoostPlan plan = median_plan(55.0 / 56.0, 1.0 / 112.0, spec.delta, spec.epsilon);
  return static_cast<long long>(plan.m) * ip.k;
}

}  // namespace corrtest
