#include "risnoma/quadrature.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace risnoma::specfun {

namespace {

struct LaguerreEval {
  double pn;       // L_n(x), scaled
  double pn1;      // L_{n-1}(x), same scale
  double log_scale;
};

// Three-term recurrence for the standard Laguerre polynomials with
// rescaling, since L_n grows like x^n / n! far out on the axis.
LaguerreEval eval_laguerre(int n, double x) {
  constexpr double kBig = 1e100;
  const double kLogBig = std::log(kBig);
  double p1 = 1.0;
  double p2 = 0.0;
  double log_scale = 0.0;
  for (int j = 1; j <= n; ++j) {
    const double p3 = p2;
    p2 = p1;
    p1 = ((2.0 * j - 1.0 - x) * p2 - (j - 1.0) * p3) / j;
    if (std::fabs(p1) > kBig) {
      p1 /= kBig;
      p2 /= kBig;
      log_scale += kLogBig;
    }
  }
  return {p1, p2, log_scale};
}

}  // namespace

QuadRule gauss_laguerre_rule(int n) {
  if (n < 1 || n > 1000) {
    throw std::domain_error("gauss_laguerre_rule: order must lie in [1, 1000]");
  }
  QuadRule rule;
  rule.kind = QuadKind::GaussLaguerre;
  rule.order = n;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  rule.log_weights.resize(n);

  constexpr int kMaxIter = 200;
  double z = 0.0;
  for (int i = 0; i < n; ++i) {
    // Asymptotic starting points (Stroud & Secrest style, alpha = 0).
    if (i == 0) {
      z = 3.0 / (1.0 + 2.4 * n);
    } else if (i == 1) {
      z += 15.0 / (1.0 + 2.5 * n);
    } else {
      const double ai = i - 1;
      z += ((1.0 + 2.55 * ai) / (1.9 * ai)) * (z - rule.nodes[i - 2]);
    }

    LaguerreEval ev{};
    double deriv = 0.0;
    bool converged = false;
    double prev_step = std::numeric_limits<double>::infinity();
    for (int it = 0; it < kMaxIter; ++it) {
      ev = eval_laguerre(n, z);
      deriv = n * (ev.pn - ev.pn1) / z;
      const double z_old = z;
      z = z_old - ev.pn / deriv;
      const double step = std::fabs(z - z_old);
      // Either converged outright, or Newton has hit the rounding floor of
      // the recurrence and stopped contracting.
      if (step <= 1e-14 * std::fabs(z) || (step >= prev_step && step <= 1e-10 * std::fabs(z))) {
        converged = true;
        break;
      }
      prev_step = step;
    }
    if (!converged) {
      throw std::runtime_error("gauss_laguerre_rule: Newton iteration did not converge for root " +
                               std::to_string(i) + " of order " + std::to_string(n));
    }
    ev = eval_laguerre(n, z);
    deriv = n * (ev.pn - ev.pn1) / z;

    // w = -1 / (n L_n'(x) L_{n-1}(x)), equivalently x / ((n+1) L_{n+1}(x))^2.
    const double prod = static_cast<double>(n) * deriv * ev.pn1;
    rule.nodes[i] = z;
    rule.log_weights[i] = -std::log(std::fabs(prod)) - 2.0 * ev.log_scale;
    rule.weights[i] = std::exp(rule.log_weights[i]);
  }

  for (int i = 1; i < n; ++i) {
    if (!(rule.nodes[i] > rule.nodes[i - 1])) {
      throw std::runtime_error("gauss_laguerre_rule: root ordering broken at order " +
                               std::to_string(n));
    }
  }
  return rule;
}

QuadRule gauss_chebyshev_nodes(int K) {
  if (K < 1) throw std::domain_error("gauss_chebyshev_nodes: order must be positive");
  QuadRule rule;
  rule.kind = QuadKind::GaussChebyshev1;
  rule.order = K;
  rule.nodes.resize(K);
  for (int k = 1; k <= K; ++k) {
    rule.nodes[k - 1] = std::cos((2.0 * k - 1.0) * std::numbers::pi / (2.0 * K));
  }
  return rule;
}

namespace {

template <class Build>
const QuadRule& cached(std::map<int, std::unique_ptr<const QuadRule>>& store, std::mutex& mu,
                       int n, Build build) {
  std::lock_guard lock(mu);
  auto it = store.find(n);
  if (it == store.end()) {
    it = store.emplace(n, std::make_unique<const QuadRule>(build(n))).first;
  }
  return *it->second;
}

}  // namespace

const QuadRule& cached_gauss_laguerre(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<const QuadRule>> store;
  return cached(store, mu, n, gauss_laguerre_rule);
}

const QuadRule& cached_gauss_chebyshev(int K) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<const QuadRule>> store;
  return cached(store, mu, K, gauss_chebyshev_nodes);
}

}  // namespace risnoma::specfun
