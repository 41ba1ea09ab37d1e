#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sklift/errors.hpp"
#include "sklift/exactnum/bigint.hpp"
#include "sklift/exactnum/numberfield.hpp"

namespace sklift {

// Truncated q-expansion of a level-1 form: coefficients a(0..precision-1)
// are known exactly, nothing beyond.
template <class T>
class QExpansionT {
 public:
  QExpansionT() = default;
  QExpansionT(int weight, std::vector<T> coeffs) : weight_(weight), c_(std::move(coeffs)) {}
  static QExpansionT zero(int weight, std::size_t prec) {
    return QExpansionT(weight, std::vector<T>(prec, T(0)));
  }

  int weight() const { return weight_; }
  std::size_t precision() const { return c_.size(); }
  const std::vector<T>& coeffs() const { return c_; }
  const T& operator[](std::size_t n) const {
    if (n >= c_.size())
      throw PrecisionError("coefficient " + std::to_string(n) + " beyond precision " +
                           std::to_string(c_.size()));
    return c_[n];
  }
  bool is_zero() const {
    for (const auto& x : c_)
      if (!sklift::is_zero(x)) return false;
    return true;
  }
  QExpansionT truncate(std::size_t prec) const {
    if (prec > c_.size()) throw PrecisionError("cannot extend precision by truncation");
    return QExpansionT(weight_, std::vector<T>(c_.begin(), c_.begin() + prec));
  }

  friend QExpansionT operator+(const QExpansionT& a, const QExpansionT& b) {
    if (a.weight_ != b.weight_) throw DomainError("adding forms of different weight");
    std::size_t n = std::min(a.c_.size(), b.c_.size());
    std::vector<T> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = a.c_[i] + b.c_[i];
    return QExpansionT(a.weight_, std::move(v));
  }
  friend QExpansionT operator-(const QExpansionT& a, const QExpansionT& b) {
    if (a.weight_ != b.weight_) throw DomainError("subtracting forms of different weight");
    std::size_t n = std::min(a.c_.size(), b.c_.size());
    std::vector<T> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = a.c_[i] - b.c_[i];
    return QExpansionT(a.weight_, std::move(v));
  }
  friend QExpansionT operator*(const T& s, const QExpansionT& a) {
    std::vector<T> v(a.c_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = s * a.c_[i];
    return QExpansionT(a.weight_, std::move(v));
  }
  friend bool operator==(const QExpansionT& a, const QExpansionT& b) {
    return a.weight_ == b.weight_ && a.c_ == b.c_;
  }

 private:
  int weight_ = 0;
  std::vector<T> c_;
};

using QExpansion = QExpansionT<BigRational>;
using NFExpansion = QExpansionT<NFElement>;

// Product with precision min(prec a, prec b). NTT above the schoolbook
// threshold, after clearing denominators.
QExpansion operator*(const QExpansion& a, const QExpansion& b);
QExpansion power(const QExpansion& a, unsigned e, std::size_t prec);

// Bernoulli numbers B_n with B_1 = -1/2.
BigRational bernoulli_number(unsigned n);
// sigma_{k}(n) for 1 <= n < count (index 0 unused, set to 0).
std::vector<BigInt> divisor_sums(unsigned k, std::size_t count);

QExpansion eisenstein(int k, std::size_t prec);
// Also compares against q prod(1-q^n)^24; throws std::logic_error on mismatch.
QExpansion delta(std::size_t prec);
QExpansion delta_product(std::size_t prec);

// T(l) for prime l: a(n) -> a(ln) + l^{w-1} a(n/l). Output precision is
// floor(prec/l), or `out_prec` when given (must satisfy l*out_prec <= prec).
template <class T>
QExpansionT<T> hecke_t(const QExpansionT<T>& f, unsigned long ell, std::size_t out_prec) {
  if (ell < 2) throw DomainError("Hecke operator needs a prime");
  if (ell * out_prec > f.precision())
    throw PrecisionError("T(" + std::to_string(ell) + ") to precision " + std::to_string(out_prec) +
                         " needs input precision " + std::to_string(ell * out_prec) + ", have " +
                         std::to_string(f.precision()));
  if (f.weight() < 1) throw DomainError("Hecke operator needs positive weight");
  T lw = T(ipow(BigInt(ell), f.weight() - 1));
  std::vector<T> v(out_prec, T(0));
  for (std::size_t n = 0; n < out_prec; ++n) {
    v[n] = f.coeffs()[ell * n];
    if (n % ell == 0) v[n] = v[n] + lw * f.coeffs()[n / ell];
  }
  return QExpansionT<T>(f.weight(), std::move(v));
}

template <class T>
QExpansionT<T> hecke_t(const QExpansionT<T>& f, unsigned long ell) {
  return hecke_t(f, ell, f.precision() / ell);
}

std::string to_string(const QExpansion& f, std::size_t terms);

}  // namespace sklift
