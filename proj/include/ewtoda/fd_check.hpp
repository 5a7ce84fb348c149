#pragma once

#include <algorithm>
#include <cmath>
#include <functional>

#include "ewtoda/jet.hpp"

namespace ewtoda {

template <std::size_t N>
using ScalarField = std::function<Jet2<N>(const Point<N>&)>;

/// Max over all first and second partials of |jet - fd| / (1 + |jet|).
///
/// First partials are compared with central differences of the value. Second
/// partials are compared with central differences of the jet gradient, which the
/// first stage has already tied to the value; this keeps the stencil roundoff at
/// O(eps/step) instead of O(eps/step^2).
template <std::size_t N>
double fd_crosscheck(const ScalarField<N>& expr, const Point<N>& p, double step) {
  const Jet2<N> center = expr(p);
  double worst = 0.0;
  auto record = [&worst](double jet, double fd) {
    worst = std::max(worst, std::abs(jet - fd) / (1.0 + std::abs(jet)));
  };
  for (std::size_t k = 0; k < N; ++k) {
    Point<N> plus = p;
    Point<N> minus = p;
    plus[k] += step;
    minus[k] -= step;
    const Jet2<N> jp = expr(plus);
    const Jet2<N> jm = expr(minus);
    record(center.grad[k], (jp.value - jm.value) / (2.0 * step));
    for (std::size_t i = 0; i < N; ++i) {
      record(center.hess[k][i], (jp.grad[i] - jm.grad[i]) / (2.0 * step));
    }
  }
  return worst;
}

}  // namespace ewtoda
