#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "sklift/exactnum/bigint.hpp"
#include "sklift/exactnum/matrix.hpp"
#include "sklift/exactnum/modp.hpp"
#include "sklift/exactnum/poly.hpp"

namespace sklift {

// Q[x]/(g) for an irreducible g. The stored modulus is g made monic, so the
// generator is a root of the polynomial the caller supplied.
class NumberField {
 public:
  // Throws DomainError if g is reducible or constant.
  static std::shared_ptr<const NumberField> create(const QPoly& g, const std::string& var = "a");

  int degree() const { return modulus_.degree(); }
  const QPoly& modulus() const { return modulus_; }
  const QPoly& defining() const { return defining_; }
  const std::string& variable() const { return var_; }
  const std::string& certificate() const { return certificate_; }

 private:
  NumberField() = default;
  QPoly defining_, modulus_;
  std::string var_, certificate_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

// Element of a number field as a coefficient vector in the power basis
// 1, a, ..., a^{d-1}. A null field marks a rational constant, which mixes
// freely with elements of any field.
class NFElement {
 public:
  NFElement() = default;
  NFElement(long c) : c_{BigRational(c)} { trim(); }
  NFElement(const BigInt& c) : c_{BigRational(c)} { trim(); }
  NFElement(const BigRational& c) : c_{c} { trim(); }
  NFElement(FieldPtr field, std::vector<BigRational> coeffs);

  static NFElement generator(const FieldPtr& field);

  const FieldPtr& field() const { return field_; }
  // Coefficient vector, trimmed (empty for zero).
  const std::vector<BigRational>& coeffs() const { return c_; }
  BigRational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : BigRational(0); }
  bool is_rational() const { return c_.size() <= 1; }
  BigRational rational_value() const;  // throws unless is_rational()

  friend NFElement operator+(const NFElement& a, const NFElement& b);
  friend NFElement operator-(const NFElement& a, const NFElement& b);
  friend NFElement operator-(const NFElement& a);
  friend NFElement operator*(const NFElement& a, const NFElement& b);
  friend NFElement operator/(const NFElement& a, const NFElement& b);
  friend bool operator==(const NFElement& a, const NFElement& b);
  friend bool operator!=(const NFElement& a, const NFElement& b) { return !(a == b); }

  NFElement inverse() const;
  // Matrix of multiplication by this element on the power basis of `field`.
  QMatrix multiplication_matrix(const FieldPtr& field) const;
  BigRational norm(const FieldPtr& field) const;
  BigRational trace(const FieldPtr& field) const;
  NFElement pow(unsigned long e) const;

  std::string to_string() const;

 private:
  void trim();
  FieldPtr field_;
  std::vector<BigRational> c_;
};

inline bool is_zero(const NFElement& e) { return e.coeffs().empty(); }

// Field shared by two operands, or null if both are rational.
FieldPtr common_field(const NFElement& a, const NFElement& b);

// Evaluates e's coefficient vector at `root` mod p. The root must be a
// root of the defining polynomial mod p.
PrimeFieldElement nf_reduce_deg1(const NFElement& e, std::uint64_t p, std::uint64_t root);

// Roots of a rational polynomial mod p; p must not divide a denominator or
// the leading coefficient.
std::vector<std::uint64_t> roots_mod_p(const QPoly& f, std::uint64_t p);

// A prime of the field above p, for p not dividing disc(g) nor any
// denominator of g. Then Z[a] is p-maximal and the prime is (p, h(a)) for a
// monic irreducible factor h of g mod p.
struct PrimeIdeal {
  std::uint64_t p = 0;
  int residue_degree = 0;
  modp::Poly factor;  // h mod p, monic
};

std::vector<PrimeIdeal> primes_above(const FieldPtr& field, std::uint64_t p);

// Valuation of a nonzero element at the prime. Computed in the completion
// Z_p[a]/(h^), h^ the Hensel lift of the factor.
long valuation(const NFElement& e, const FieldPtr& field, const PrimeIdeal& prime);

}  // namespace sklift
