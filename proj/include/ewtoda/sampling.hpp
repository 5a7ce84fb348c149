#pragma once

// Reproducible random draws: a seeded 64-bit generator, random polynomial
// parameters, and rejection sampling of admissible chart points.

#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "ewtoda/holo.hpp"
#include "ewtoda/jet.hpp"

namespace ewtoda {

inline constexpr std::uint64_t kDefaultSeed = 0xE3;
inline constexpr int kMaxDrawAttempts = 1000;

/// Raised when the admissible set could not be hit within kMaxDrawAttempts.
class CoverageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// std::mt19937_64 with a uniform built from the top 53 bits, so draws are
/// identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = kDefaultSeed) : engine_(seed) {}

  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform point of the closed unit disc.
  Complex unit_disc() {
    const double r = std::sqrt(uniform());
    const double a = uniform(0.0, 2.0 * std::numbers::pi);
    return {r * std::cos(a), r * std::sin(a)};
  }

  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

/// Box for chart points: zeta in the annulus r_min <= |zeta| <= r_max, the
/// third coordinate in [z_min, z_max], and the fourth in [t_min, t_max].
struct SampleDomain {
  double r_min = 0.1;
  double r_max = 1.5;
  double z_min = 0.2;
  double z_max = 3.0;
  double t_min = 0.0;
  double t_max = 1.0;
};

/// Polynomial of degree <= max_degree with coefficients in the unit disc, the
/// constant term shifted so that Re h >= 0.5 on |zeta| <= radius.
inline HoloFn random_polynomial(Rng& rng, int max_degree = 3, double radius = 1.5) {
  const int degree = static_cast<int>(rng.next() % static_cast<std::uint64_t>(max_degree + 1));
  std::vector<Complex> c(static_cast<std::size_t>(degree) + 1);
  for (auto& x : c) x = rng.unit_disc();
  double bound = 0.0;
  double rk = 1.0;
  for (std::size_t k = 1; k < c.size(); ++k) {
    rk *= radius;
    bound += std::abs(c[k]) * rk;
  }
  c[0] = Complex{0.5 + bound + std::abs(c[0].real()), c[0].imag()};
  return HoloFn::polynomial(std::move(c));
}

/// Draws a point of the stereographic chart domain: (x, y, z[, t]).
template <std::size_t N>
Point<N> draw_chart_point(Rng& rng, const SampleDomain& d) {
  static_assert(N == 3 || N == 4);
  const double r = std::sqrt(rng.uniform(d.r_min * d.r_min, d.r_max * d.r_max));
  const double a = rng.uniform(0.0, 2.0 * std::numbers::pi);
  Point<N> p{};
  p[0] = r * std::cos(a);
  p[1] = r * std::sin(a);
  p[2] = rng.uniform(d.z_min, d.z_max);
  if constexpr (N == 4) p[3] = rng.uniform(d.t_min, d.t_max);
  return p;
}

/// count admissible points, each re-drawn up to kMaxDrawAttempts times.
template <std::size_t N>
std::vector<Point<N>> draw_admissible(Rng& rng, std::size_t count, const std::function<Point<N>(Rng&)>& draw,
                                      const std::function<bool(const Point<N>&)>& admissible) {
  std::vector<Point<N>> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    bool found = false;
    for (int attempt = 0; attempt < kMaxDrawAttempts && !found; ++attempt) {
      const Point<N> p = draw(rng);
      if (admissible(p)) {
        out.push_back(p);
        found = true;
      }
    }
    if (!found)
      throw CoverageError("no admissible point after " + std::to_string(kMaxDrawAttempts) + " draws (point " +
                          std::to_string(i) + ")");
  }
  return out;
}

}  // namespace ewtoda
