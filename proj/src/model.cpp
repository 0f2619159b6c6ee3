#include "corrtest/model.hpp"

#include <cmath>
#include <stdexcept>

namespace corrtest {

namespace {

void check_dim(const CorrelationVector& rho) {
  if (rho.rho.empty()) throw std::invalid_argument("CorrelationVector: d >= 1 required");
  for (double c : rho.rho)
    if (!std::isfinite(c) || c < -1.0 || c > 1.0)
      throw std::invalid_argument("CorrelationVector: coordinates must lie in [-1,1]");
}

}  // namespace

double CorrelationVector::l1_norm() const {
  double s = 0.0;
  for (double c : rho) s += std::abs(c);
  return s;
}

double CorrelationVector::l2_norm() const {
  double s = 0.0;
  for (double c : rho) s += c * c;
  return std::sqrt(s);
}

CorrelationVector CorrelationVector::zeros(int d) {
  return CorrelationVector{std::vector<double>(static_cast<std::size_t>(d), 0.0)};
}

CorrelationVector CorrelationVector::equal_coords(double tau, int d) {
  return CorrelationVector{
      std::vector<double>(static_cast<std::size_t>(d), tau / std::sqrt(static_cast<double>(d)))};
}

SamplePair sample_pair_gaussian(const CorrelationVector& rho, RandomStream& rs) {
  check_dim(rho);
  const double norm2 = rho.l2_norm();
  if (norm2 > 1.0 + 1e-12)
    throw std::invalid_argument("gaussian source: ||rho||_2 <= 1 required");

  const int d = rho.dim();
  SamplePair out;
  out.x.resize(static_cast<std::size_t>(d));
  double dot = 0.0;
  for (int i = 0; i < d; ++i) {
    out.x[static_cast<std::size_t>(i)] = rs.next_normal();
    dot += rho.rho[static_cast<std::size_t>(i)] * out.x[static_cast<std::size_t>(i)];
  }
  const double noise_coeff = std::sqrt(std::max(0.0, 1.0 - norm2 * norm2));
  out.y = dot + noise_coeff * rs.next_normal();
  return out;
}

SamplePair sample_pair_rademacher(const CorrelationVector& rho, RandomStream& rs) {
  check_dim(rho);
  if (rho.l1_norm() > 1.0 + 1e-12)
    throw std::invalid_argument("rademacher source: ||rho||_1 <= 1 required");

  const int d = rho.dim();
  SamplePair out;
  out.x.resize(static_cast<std::size_t>(d));
  double dot = 0.0;
  for (int i = 0; i < d; ++i) {
    out.x[static_cast<std::size_t>(i)] = static_cast<double>(rs.next_sign());
    dot += rho.rho[static_cast<std::size_t>(i)] * out.x[static_cast<std::size_t>(i)];
  }
  const double p_plus = 0.5 * (1.0 + dot);
  out.y = (rs.next_unit() < p_plus) ? 1.0 : -1.0;
  return out;
}

SampleBlock sample_block(const CorrelationVector& rho, int n, SourceKind kind,
                         RandomStream& rs) {
  if (n < 1) throw std::invalid_argument("sample_block: n >= 1 required");
  const int d = rho.dim();
  SampleBlock block;
  block.n = n;
  block.d = d;
  block.xs.resize(static_cast<std::size_t>(n) * d);
  block.ys.resize(static_cast<std::size_t>(n));
  for (int t = 0; t < n; ++t) {
    SamplePair p = (kind == SourceKind::kGaussian) ? sample_pair_gaussian(rho, rs)
                                                   : sample_pair_rademacher(rho, rs);
    for (int i = 0; i < d; ++i)
      block.xs[static_cast<std::size_t>(t) * d + i] = p.x[static_cast<std::size_t>(i)];
    block.ys[static_cast<std::size_t>(t)] = p.y;
  }
  return block;
}

}  // namespace corrtest
