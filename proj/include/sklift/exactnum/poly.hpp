#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "sklift/errors.hpp"
#include "sklift/exactnum/bigint.hpp"

namespace sklift {

// Dense univariate polynomial, coefficients lowest degree first. The
// representation is kept trimmed, so the leading coefficient is nonzero
// unless the polynomial is zero (empty coefficient vector).
template <class T>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }

  static Poly constant(const T& c) { return Poly(std::vector<T>{c}); }
  static Poly monomial(const T& c, std::size_t deg) {
    std::vector<T> v(deg + 1, T(0));
    v[deg] = c;
    return Poly(std::move(v));
  }
  static Poly x() { return monomial(T(1), 1); }

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  std::size_t size() const { return c_.size(); }
  const std::vector<T>& coeffs() const { return c_; }

  T coeff(std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }
  const T& leading() const {
    if (c_.empty()) throw DomainError("leading coefficient of zero polynomial");
    return c_.back();
  }

  template <class U>
  U eval(const U& at) const {
    U acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) {
      acc = acc * at;
      acc = acc + U(c_[i]);
    }
    return acc;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<T> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * T(static_cast<long>(i));
    return Poly(std::move(d));
  }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
    trim();
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(const Poly& a) {
    std::vector<T> v(a.c_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = -a.c_[i];
    return Poly(std::move(v));
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<T> v(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (sklift::is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] = v[i + j] + a.c_[i] * b.c_[j];
    }
    return Poly(std::move(v));
  }
  friend Poly operator*(const T& s, const Poly& a) {
    std::vector<T> v(a.c_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = s * a.c_[i];
    return Poly(std::move(v));
  }
  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (!(a.c_[i] == b.c_[i])) return false;
    }
    return true;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

 private:
  void trim() {
    while (!c_.empty() && sklift::is_zero(c_.back())) c_.pop_back();
  }
  std::vector<T> c_;
};

using QPoly = Poly<BigRational>;
using ZPoly = Poly<BigInt>;

// Euclidean division over a field coefficient ring.
template <class T>
std::pair<Poly<T>, Poly<T>> divmod(const Poly<T>& a, const Poly<T>& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<T> rem = a.coeffs();
  if (a.degree() < b.degree()) return {Poly<T>(), a};
  std::vector<T> quo(a.degree() - b.degree() + 1, T(0));
  const T& lb = b.leading();
  for (int k = a.degree() - b.degree(); k >= 0; --k) {
    T q = rem[k + b.degree()] / lb;
    quo[k] = q;
    if (is_zero(q)) continue;
    for (int j = 0; j <= b.degree(); ++j) rem[k + j] = rem[k + j] - q * b.coeffs()[j];
  }
  rem.resize(b.degree() > 0 ? b.degree() : 0, T(0));
  return {Poly<T>(std::move(quo)), Poly<T>(std::move(rem))};
}

template <class T>
Poly<T> monic(const Poly<T>& a) {
  if (a.is_zero()) return a;
  T inv = T(1) / a.leading();
  return inv * a;
}

template <class T>
Poly<T> gcd(Poly<T> a, Poly<T> b) {
  while (!b.is_zero()) {
    Poly<T> r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

// Rational-coefficient helpers.
QPoly to_qpoly(const ZPoly& z);
// Primitive integer polynomial proportional to q (positive leading coefficient).
ZPoly primitive_part(const QPoly& q);
BigInt content(const ZPoly& z);
ZPoly exact_divide(const ZPoly& a, const ZPoly& b);  // throws if not exact

// Resultant via the Sylvester matrix (fraction-free determinant).
BigRational resultant(const QPoly& f, const QPoly& g);
// disc(f) = (-1)^{n(n-1)/2} Res(f, f') / lc(f).
BigRational poly_discriminant(const QPoly& f);

// Human/machine readable form, e.g. "x^4 + 68476320*x^3 - 5*x + 7".
std::string poly_to_string(const QPoly& f, const std::string& var = "x");
QPoly parse_poly(const std::string& text, const std::string& var = "x");

}  // namespace sklift
