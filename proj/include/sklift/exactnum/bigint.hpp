#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace sklift {

using BigInt = mpz_class;
// Always canonical: gcd(num, den) = 1 and den > 0 (mpq_class canonicalizes on
// construction from strings/integers; arithmetic results are canonical).
using BigRational = mpq_class;

inline bool is_zero(const BigInt& x) { return sgn(x) == 0; }
inline bool is_zero(const BigRational& x) { return sgn(x) == 0; }

BigRational make_rational(const BigInt& num, const BigInt& den);

// "num/den", or "num" when den == 1.
std::string to_string(const BigRational& q);
std::string to_string(const BigInt& z);
BigRational parse_rational(const std::string& text);
BigInt parse_integer(const std::string& text);

BigInt ipow(const BigInt& base, unsigned long exp);
BigRational qpow(const BigRational& base, long exp);

// p-adic valuation of a nonzero integer/rational; p >= 2.
long valuation(const BigInt& z, const BigInt& p);
long valuation(const BigRational& q, const BigInt& p);

// Residue of q mod p; throws DomainError if p divides the denominator.
std::uint64_t reduce_mod(const BigRational& q, std::uint64_t p);
std::uint64_t reduce_mod(const BigInt& z, std::uint64_t p);

}  // namespace sklift
