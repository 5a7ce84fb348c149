#pragma once

// Rational holomorphic functions of one complex variable, evaluated as complex
// jets in the stereographic coordinate zeta = x + i y.
//
// Textual grammar (shared with the CLI):
//   const:C            C a complex literal
//   poly:c0,c1,...     ascending coefficients
//   ratio:poly:.../poly:...
// where a complex literal is RE, RE+IMi or RE-IMi (e.g. 1, 1+2i, 0-0.5i).

#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ewtoda/jet.hpp"

namespace ewtoda {

using Complex = std::complex<double>;

/// Malformed holo string; position() is the 0-based column of the offending text.
class ParseError : public std::invalid_argument {
public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at column " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

namespace detail {

inline std::vector<Complex> poly_mul(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  std::vector<Complex> r(a.size() + b.size() - 1, Complex{0.0, 0.0});
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

inline std::vector<Complex> poly_add(std::vector<Complex> a, const std::vector<Complex>& b) {
  if (a.size() < b.size()) a.resize(b.size(), Complex{0.0, 0.0});
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  return a;
}

inline std::vector<Complex> poly_scale(std::vector<Complex> a, Complex s) {
  for (auto& c : a) c *= s;
  return a;
}

inline std::vector<Complex> poly_derivative(const std::vector<Complex>& a) {
  if (a.size() <= 1) return {Complex{0.0, 0.0}};
  std::vector<Complex> r(a.size() - 1);
  for (std::size_t k = 1; k < a.size(); ++k) r[k - 1] = a[k] * static_cast<double>(k);
  return r;
}

inline bool poly_is_zero(const std::vector<Complex>& a) {
  for (const auto& c : a)
    if (c != Complex{0.0, 0.0}) return false;
  return true;
}

inline bool poly_is_one(const std::vector<Complex>& a) {
  if (a.empty() || a[0] != Complex{1.0, 0.0}) return false;
  for (std::size_t k = 1; k < a.size(); ++k)
    if (a[k] != Complex{0.0, 0.0}) return false;
  return true;
}

template <typename T>
T horner(const std::vector<Complex>& coeffs, const T& z) {
  T acc = T(coeffs.back());
  for (std::size_t k = coeffs.size() - 1; k-- > 0;) acc = acc * z + T(coeffs[k]);
  return acc;
}

template <std::size_t N>
CJet2<N> horner_jet(const std::vector<Complex>& coeffs, const CJet2<N>& z) {
  CJet2<N> acc(coeffs.back());
  for (std::size_t k = coeffs.size() - 1; k-- > 0;) acc = acc * z + CJet2<N>(coeffs[k]);
  return acc;
}

inline std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace detail

inline std::string format_complex(Complex c) {
  std::string s = detail::format_real(c.real());
  if (c.imag() != 0.0) {
    if (!std::signbit(c.imag())) s += '+';
    s += detail::format_real(c.imag());
    s += 'i';
  }
  return s;
}

/// Parses RE, RE+IMi or RE-IMi. `offset` only shifts reported error columns.
inline Complex parse_complex(std::string_view text, std::size_t offset = 0) {
  const std::string buf(text);
  if (buf.empty()) throw ParseError("empty complex literal", offset);
  const char* begin = buf.c_str();
  char* end = nullptr;
  const double re = std::strtod(begin, &end);
  if (end == begin) throw ParseError("expected a real number in '" + buf + "'", offset);
  std::size_t pos = static_cast<std::size_t>(end - begin);
  if (pos == buf.size()) return {re, 0.0};
  if (buf[pos] != '+' && buf[pos] != '-')
    throw ParseError("expected '+IMi' or '-IMi' after real part in '" + buf + "'", offset + pos);
  const char* im_begin = begin + pos;
  const double im = std::strtod(im_begin, &end);
  if (end == im_begin) throw ParseError("expected an imaginary part in '" + buf + "'", offset + pos);
  pos = static_cast<std::size_t>(end - begin);
  if (pos >= buf.size() || buf[pos] != 'i')
    throw ParseError("imaginary part must end with 'i' in '" + buf + "'", offset + pos);
  if (pos + 1 != buf.size()) throw ParseError("trailing characters in '" + buf + "'", offset + pos + 1);
  return {re, im};
}

/// A rational function numerator(zeta) / denominator(zeta), coefficients ascending.
class HoloFn {
public:
  HoloFn() : num_{Complex{0.0, 0.0}}, den_{Complex{1.0, 0.0}} {}

  HoloFn(std::vector<Complex> numerator, std::vector<Complex> denominator)
      : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (num_.empty()) num_ = {Complex{0.0, 0.0}};
    if (den_.empty() || detail::poly_is_zero(den_))
      throw std::invalid_argument("HoloFn: denominator is the zero polynomial");
  }

  static HoloFn constant(Complex c) { return HoloFn({c}, {Complex{1.0, 0.0}}); }
  static HoloFn polynomial(std::vector<Complex> coeffs) {
    return HoloFn(std::move(coeffs), {Complex{1.0, 0.0}});
  }
  /// The identity function zeta.
  static HoloFn identity() { return polynomial({Complex{0.0, 0.0}, Complex{1.0, 0.0}}); }

  const std::vector<Complex>& numerator() const { return num_; }
  const std::vector<Complex>& denominator() const { return den_; }

  bool is_polynomial() const { return detail::poly_is_one(den_); }
  bool is_constant() const {
    if (!is_polynomial()) return false;
    for (std::size_t k = 1; k < num_.size(); ++k)
      if (num_[k] != Complex{0.0, 0.0}) return false;
    return true;
  }

  Complex operator()(Complex z) const {
    const Complex d = detail::horner(den_, z);
    if (d == Complex{0.0, 0.0}) throw DomainError("HoloFn pole at |zeta| = " + detail::format_real(std::abs(z)), std::abs(z));
    return detail::horner(num_, z) / d;
  }

  /// Value at zeta(p) as a complex jet in all N chart coordinates.
  template <std::size_t N>
  CJet2<N> eval(const Point<N>& p) const {
    const CJet2<N> z = seed_zeta<N>(p);
    const CJet2<N> d = detail::horner_jet(den_, z);
    const double dn = std::norm(d.value());
    if (dn == 0.0) throw DomainError("HoloFn pole at the evaluation point", std::hypot(p[0], p[1]));
    const CJet2<N> n = detail::horner_jet(num_, z);
    if (is_polynomial()) return n;
    return n / d;
  }

  HoloFn derivative() const {
    if (is_polynomial()) return polynomial(detail::poly_derivative(num_));
    auto top = detail::poly_add(detail::poly_mul(detail::poly_derivative(num_), den_),
                                detail::poly_scale(detail::poly_mul(num_, detail::poly_derivative(den_)), -1.0));
    return HoloFn(std::move(top), detail::poly_mul(den_, den_));
  }

  HoloFn reciprocal() const {
    if (detail::poly_is_zero(num_)) throw std::invalid_argument("HoloFn: reciprocal of zero");
    return HoloFn(den_, num_);
  }

  HoloFn scaled(Complex s) const { return HoloFn(detail::poly_scale(num_, s), den_); }

  /// s * this + c.
  HoloFn affine(Complex s, Complex c) const {
    return HoloFn(detail::poly_add(detail::poly_scale(num_, s), detail::poly_scale(den_, c)), den_);
  }

  std::string to_string() const {
    auto list = [](const std::vector<Complex>& cs) {
      std::string s;
      for (std::size_t k = 0; k < cs.size(); ++k) {
        if (k) s += ',';
        s += format_complex(cs[k]);
      }
      return s;
    };
    if (is_polynomial()) {
      if (num_.size() == 1) return "const:" + format_complex(num_[0]);
      return "poly:" + list(num_);
    }
    return "ratio:poly:" + list(num_) + "/poly:" + list(den_);
  }

  static HoloFn parse(std::string_view text) {
    constexpr std::string_view kConst = "const:";
    constexpr std::string_view kPoly = "poly:";
    constexpr std::string_view kRatio = "ratio:";
    if (text.substr(0, kConst.size()) == kConst) {
      return constant(parse_complex(text.substr(kConst.size()), kConst.size()));
    }
    if (text.substr(0, kPoly.size()) == kPoly) {
      return polynomial(parse_list(text.substr(kPoly.size()), kPoly.size()));
    }
    if (text.substr(0, kRatio.size()) == kRatio) {
      const std::string_view body = text.substr(kRatio.size());
      const std::size_t slash = body.find('/');
      if (slash == std::string_view::npos) throw ParseError("ratio: missing '/' separator", text.size());
      const std::string_view top = body.substr(0, slash);
      const std::string_view bottom = body.substr(slash + 1);
      const std::size_t top_at = kRatio.size();
      const std::size_t bottom_at = kRatio.size() + slash + 1;
      if (top.substr(0, kPoly.size()) != kPoly) throw ParseError("ratio numerator must start with 'poly:'", top_at);
      if (bottom.substr(0, kPoly.size()) != kPoly)
        throw ParseError("ratio denominator must start with 'poly:'", bottom_at);
      auto n = parse_list(top.substr(kPoly.size()), top_at + kPoly.size());
      auto d = parse_list(bottom.substr(kPoly.size()), bottom_at + kPoly.size());
      if (detail::poly_is_zero(d)) throw ParseError("ratio denominator is the zero polynomial", bottom_at);
      return HoloFn(std::move(n), std::move(d));
    }
    throw ParseError("expected 'const:', 'poly:' or 'ratio:' in '" + std::string(text) + "'", 0);
  }

private:
  static std::vector<Complex> parse_list(std::string_view body, std::size_t offset) {
    std::vector<Complex> out;
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = body.find(',', start);
      const std::string_view item = body.substr(start, comma == std::string_view::npos ? body.npos : comma - start);
      out.push_back(parse_complex(item, offset + start));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    return out;
  }

  std::vector<Complex> num_;
  std::vector<Complex> den_;
};

}  // namespace ewtoda
