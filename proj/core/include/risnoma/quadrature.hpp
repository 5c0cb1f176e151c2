#pragma once

#include <vector>

namespace risnoma::specfun {

enum class QuadKind { GaussLaguerre, GaussChebyshev1 };

// A fixed quadrature rule. Immutable once built and safe to share.
//
// GaussLaguerre approximates the integral of f(x) e^-x over [0, inf) as
// sum(weights[i] * f(nodes[i])). Nodes ascend. For large orders the outer
// weights underflow a double, so `log_weights` is the authoritative copy and
// `weights` holds exp(log_weights) (possibly 0).
//
// GaussChebyshev1 stores only x_k = cos((2k-1) pi / (2K)), k = 1..K, in
// descending order. The caller applies the common weight pi/K.
struct QuadRule {
  QuadKind kind = QuadKind::GaussLaguerre;
  int order = 0;
  std::vector<double> nodes;
  std::vector<double> weights;
  std::vector<double> log_weights;
};

/// Gauss-Laguerre rule of order n (1 <= n <= 1000), exact for f of degree
/// <= 2n-1. Nodes come from Newton iteration on the three-term recurrence;
/// throws std::runtime_error if a root fails to converge.
QuadRule gauss_laguerre_rule(int n);

/// Gauss-Chebyshev (first kind) nodes of order K >= 1.
QuadRule gauss_chebyshev_nodes(int K);

/// Process-wide caches; rules are built on first use and never mutated.
const QuadRule& cached_gauss_laguerre(int n);
const QuadRule& cached_gauss_chebyshev(int K);

}  // namespace risnoma::specfun
