#pragma once

// Truncated Taylor arithmetic: values carrying exact first and second partial
// derivatives in N real coordinates, plus complex jets built from real pairs.

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace ewtoda {

/// Raised whenever an evaluation leaves the domain of a formula (pole,
/// nonpositive logarithm argument, positivity predicate, ...).
class DomainError : public std::domain_error {
public:
  DomainError(const std::string& what, double offending_value)
      : std::domain_error(what + " (value " + std::to_string(offending_value) + ")"),
        value_(offending_value) {}

  double value() const noexcept { return value_; }

private:
  double value_;
};

template <std::size_t N>
using Point = std::array<double, N>;

/// Order-1 jet: value and gradient. Christoffel symbols live here, since
/// curvature only needs their first derivatives.
template <std::size_t N>
struct Jet1 {
  double value = 0.0;
  std::array<double, N> grad{};

  Jet1() = default;
  Jet1(double v) : value(v) {}  // NOLINT(google-explicit-constructor)

  Jet1& operator+=(const Jet1& o) {
    value += o.value;
    for (std::size_t i = 0; i < N; ++i) grad[i] += o.grad[i];
    return *this;
  }
  Jet1& operator-=(const Jet1& o) {
    value -= o.value;
    for (std::size_t i = 0; i < N; ++i) grad[i] -= o.grad[i];
    return *this;
  }
  Jet1& operator*=(double s) {
    value *= s;
    for (auto& g : grad) g *= s;
    return *this;
  }
};

template <std::size_t N>
Jet1<N> operator+(Jet1<N> a, const Jet1<N>& b) { return a += b; }
template <std::size_t N>
Jet1<N> operator-(Jet1<N> a, const Jet1<N>& b) { return a -= b; }
template <std::size_t N>
Jet1<N> operator-(Jet1<N> a) { return a *= -1.0; }
template <std::size_t N>
Jet1<N> operator*(Jet1<N> a, double s) { return a *= s; }
template <std::size_t N>
Jet1<N> operator*(double s, Jet1<N> a) { return a *= s; }

template <std::size_t N>
Jet1<N> operator*(const Jet1<N>& a, const Jet1<N>& b) {
  Jet1<N> r;
  r.value = a.value * b.value;
  for (std::size_t i = 0; i < N; ++i) r.grad[i] = a.value * b.grad[i] + b.value * a.grad[i];
  return r;
}

template <std::size_t N>
Jet1<N> inverse(const Jet1<N>& a) {
  if (a.value == 0.0) throw DomainError("division by a zero jet", a.value);
  Jet1<N> r;
  r.value = 1.0 / a.value;
  const double d = -r.value * r.value;
  for (std::size_t i = 0; i < N; ++i) r.grad[i] = d * a.grad[i];
  return r;
}

template <std::size_t N>
Jet1<N> operator/(const Jet1<N>& a, const Jet1<N>& b) { return a * inverse(b); }

template <std::size_t N>
Jet1<N> sqrt(const Jet1<N>& a) {
  if (!(a.value > 0.0)) throw DomainError("sqrt of a nonpositive jet", a.value);
  Jet1<N> r;
  r.value = std::sqrt(a.value);
  const double d = 0.5 / r.value;
  for (std::size_t i = 0; i < N; ++i) r.grad[i] = d * a.grad[i];
  return r;
}

/// Order-2 jet. The Hessian is kept dense and is symmetric bit-for-bit: every
/// operation writes the upper triangle and mirrors it.
template <std::size_t N>
struct Jet2 {
  static constexpr std::size_t dim = N;

  double value = 0.0;
  std::array<double, N> grad{};
  std::array<std::array<double, N>, N> hess{};

  Jet2() = default;
  Jet2(double v) : value(v) {}  // NOLINT(google-explicit-constructor)

  Jet2& operator+=(const Jet2& o) {
    value += o.value;
    for (std::size_t i = 0; i < N; ++i) {
      grad[i] += o.grad[i];
      for (std::size_t j = 0; j < N; ++j) hess[i][j] += o.hess[i][j];
    }
    return *this;
  }
  Jet2& operator-=(const Jet2& o) {
    value -= o.value;
    for (std::size_t i = 0; i < N; ++i) {
      grad[i] -= o.grad[i];
      for (std::size_t j = 0; j < N; ++j) hess[i][j] -= o.hess[i][j];
    }
    return *this;
  }
  Jet2& operator*=(double s) {
    value *= s;
    for (std::size_t i = 0; i < N; ++i) {
      grad[i] *= s;
      for (std::size_t j = 0; j < N; ++j) hess[i][j] *= s;
    }
    return *this;
  }
  Jet2& operator*=(const Jet2& o);
  Jet2& operator/=(const Jet2& o);

  /// First partial in coordinate k, as an order-1 jet.
  Jet1<N> d(std::size_t k) const {
    Jet1<N> r;
    r.value = grad[k];
    r.grad = hess[k];
    return r;
  }

  Jet1<N> truncate() const {
    Jet1<N> r;
    r.value = value;
    r.grad = grad;
    return r;
  }
};

/// Independent variable i at x0: grad = e_i, hess = 0.
template <std::size_t N>
Jet2<N> seed_coordinate(std::size_t i, double x0) {
  if (i >= N) throw std::out_of_range("seed_coordinate: index " + std::to_string(i) +
                                      " outside " + std::to_string(N) + " coordinates");
  Jet2<N> r(x0);
  r.grad[i] = 1.0;
  return r;
}

template <std::size_t N>
Jet2<N> operator+(Jet2<N> a, const Jet2<N>& b) { return a += b; }
template <std::size_t N>
Jet2<N> operator-(Jet2<N> a, const Jet2<N>& b) { return a -= b; }
template <std::size_t N>
Jet2<N> operator-(Jet2<N> a) { return a *= -1.0; }
template <std::size_t N>
Jet2<N> operator*(Jet2<N> a, double s) { return a *= s; }
template <std::size_t N>
Jet2<N> operator*(double s, Jet2<N> a) { return a *= s; }
template <std::size_t N>
Jet2<N> operator+(Jet2<N> a, double s) { a.value += s; return a; }
template <std::size_t N>
Jet2<N> operator+(double s, Jet2<N> a) { a.value += s; return a; }
template <std::size_t N>
Jet2<N> operator-(Jet2<N> a, double s) { a.value -= s; return a; }
template <std::size_t N>
Jet2<N> operator-(double s, const Jet2<N>& a) { return s + (-a); }

template <std::size_t N>
Jet2<N> operator*(const Jet2<N>& a, const Jet2<N>& b) {
  Jet2<N> r;
  r.value = a.value * b.value;
  for (std::size_t i = 0; i < N; ++i) r.grad[i] = a.value * b.grad[i] + b.value * a.grad[i];
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = i; j < N; ++j) {
      const double h = a.value * b.hess[i][j] + b.value * a.hess[i][j] + a.grad[i] * b.grad[j] +
                       a.grad[j] * b.grad[i];
      r.hess[i][j] = h;
      r.hess[j][i] = h;
    }
  }
  return r;
}

/// Chain rule through order two for a scalar function with derivatives f0, f1, f2
/// at a.value.
template <std::size_t N>
Jet2<N> compose(const Jet2<N>& a, double f0, double f1, double f2) {
  Jet2<N> r;
  r.value = f0;
  for (std::size_t i = 0; i < N; ++i) r.grad[i] = f1 * a.grad[i];
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = i; j < N; ++j) {
      const double h = f1 * a.hess[i][j] + f2 * a.grad[i] * a.grad[j];
      r.hess[i][j] = h;
      r.hess[j][i] = h;
    }
  }
  return r;
}

template <std::size_t N>
Jet2<N> inverse(const Jet2<N>& a) {
  if (a.value == 0.0) throw DomainError("division by a zero jet", a.value);
  const double v = 1.0 / a.value;
  return compose(a, v, -v * v, 2.0 * v * v * v);
}

template <std::size_t N>
Jet2<N> operator/(const Jet2<N>& a, const Jet2<N>& b) { return a * inverse(b); }
template <std::size_t N>
Jet2<N> operator/(const Jet2<N>& a, double s) {
  if (s == 0.0) throw DomainError("division by zero", s);
  return a * (1.0 / s);
}
template <std::size_t N>
Jet2<N> operator/(double s, const Jet2<N>& a) { return s * inverse(a); }

template <std::size_t N>
Jet2<N>& Jet2<N>::operator*=(const Jet2<N>& o) { return *this = *this * o; }
template <std::size_t N>
Jet2<N>& Jet2<N>::operator/=(const Jet2<N>& o) { return *this = *this / o; }

template <std::size_t N>
Jet2<N> exp(const Jet2<N>& a) {
  const double e = std::exp(a.value);
  return compose(a, e, e, e);
}

template <std::size_t N>
Jet2<N> log(const Jet2<N>& a) {
  if (!(a.value > 0.0)) throw DomainError("log of a nonpositive jet", a.value);
  const double v = 1.0 / a.value;
  return compose(a, std::log(a.value), v, -v * v);
}

template <std::size_t N>
Jet2<N> sqrt(const Jet2<N>& a) {
  if (!(a.value > 0.0)) throw DomainError("sqrt of a nonpositive jet", a.value);
  const double s = std::sqrt(a.value);
  return compose(a, s, 0.5 / s, -0.25 / (s * a.value));
}

template <std::size_t N>
Jet2<N> sin(const Jet2<N>& a) {
  const double s = std::sin(a.value);
  return compose(a, s, std::cos(a.value), -s);
}

template <std::size_t N>
Jet2<N> cos(const Jet2<N>& a) {
  const double c = std::cos(a.value);
  return compose(a, c, -std::sin(a.value), -c);
}

/// Integer power by repeated squaring; negative exponents go through inverse().
template <std::size_t N>
Jet2<N> pow(const Jet2<N>& a, int n) {
  if (n < 0) return inverse(pow(a, -n));
  Jet2<N> result(1.0);
  Jet2<N> base = a;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

template <std::size_t N>
Jet2<N> square(const Jet2<N>& a) { return a * a; }

/// Complex jet: real and imaginary parts each an order-2 jet.
template <std::size_t N>
struct CJet2 {
  Jet2<N> re;
  Jet2<N> im;

  CJet2() = default;
  CJet2(const Jet2<N>& r, const Jet2<N>& i) : re(r), im(i) {}
  CJet2(std::complex<double> c) : re(c.real()), im(c.imag()) {}  // NOLINT

  std::complex<double> value() const { return {re.value, im.value}; }
  CJet2 conj() const { return {re, -im}; }
  /// |z|^2 as a real jet.
  Jet2<N> norm() const { return re * re + im * im; }
};

template <std::size_t N>
CJet2<N> operator+(const CJet2<N>& a, const CJet2<N>& b) { return {a.re + b.re, a.im + b.im}; }
template <std::size_t N>
CJet2<N> operator-(const CJet2<N>& a, const CJet2<N>& b) { return {a.re - b.re, a.im - b.im}; }
template <std::size_t N>
CJet2<N> operator-(const CJet2<N>& a) { return {-a.re, -a.im}; }

template <std::size_t N>
CJet2<N> operator*(const CJet2<N>& a, const CJet2<N>& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
template <std::size_t N>
CJet2<N> operator*(const CJet2<N>& a, std::complex<double> c) {
  return {a.re * c.real() - a.im * c.imag(), a.re * c.imag() + a.im * c.real()};
}
template <std::size_t N>
CJet2<N> operator*(std::complex<double> c, const CJet2<N>& a) { return a * c; }
template <std::size_t N>
CJet2<N> operator*(const CJet2<N>& a, const Jet2<N>& s) { return {a.re * s, a.im * s}; }
template <std::size_t N>
CJet2<N> operator*(const Jet2<N>& s, const CJet2<N>& a) { return a * s; }
template <std::size_t N>
CJet2<N> operator+(const CJet2<N>& a, const Jet2<N>& s) { return {a.re + s, a.im}; }
template <std::size_t N>
CJet2<N> operator+(const Jet2<N>& s, const CJet2<N>& a) { return a + s; }

template <std::size_t N>
CJet2<N> inverse(const CJet2<N>& a) {
  const double n0 = a.re.value * a.re.value + a.im.value * a.im.value;
  if (n0 == 0.0) throw DomainError("division by a zero complex jet", n0);
  const Jet2<N> inv_norm = inverse(a.norm());
  return {a.re * inv_norm, -a.im * inv_norm};
}

template <std::size_t N>
CJet2<N> operator/(const CJet2<N>& a, const CJet2<N>& b) { return a * inverse(b); }

/// Holomorphic coordinate zeta = x + i y, with x, y the first two chart coordinates.
template <std::size_t N>
CJet2<N> seed_zeta(const Point<N>& p) {
  static_assert(N >= 2);
  return {seed_coordinate<N>(0, p[0]), seed_coordinate<N>(1, p[1])};
}

/// Seeds every coordinate of p; component k is the jet of coordinate k.
template <std::size_t N>
std::array<Jet2<N>, N> seed_point(const Point<N>& p) {
  std::array<Jet2<N>, N> r;
  for (std::size_t i = 0; i < N; ++i) r[i] = seed_coordinate<N>(i, p[i]);
  return r;
}

}  // namespace ewtoda
