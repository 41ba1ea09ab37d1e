#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace sklift {

namespace modp {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 add(u64 a, u64 b, u64 p) {
  u64 s = a + b;
  return (s >= p || s < a) ? s - p : s;
}
inline u64 sub(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + (p - b); }
inline u64 mul(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }
u64 pow(u64 base, u64 exp, u64 p);
// Modular inverse by extended Euclid; a must be a unit mod p.
u64 inv(u64 a, u64 p);
// Deterministic for all 64-bit inputs.
bool is_prime_u64(u64 n);

// Polynomials over Z/p, lowest degree first, trimmed.
using Poly = std::vector<u64>;

void trim(Poly& f);
Poly add(const Poly& a, const Poly& b, u64 p);
Poly sub(const Poly& a, const Poly& b, u64 p);
Poly mul(const Poly& a, const Poly& b, u64 p);
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b, u64 p);
Poly rem(const Poly& a, const Poly& b, u64 p);
Poly make_monic(const Poly& f, u64 p);
Poly gcd(Poly a, Poly b, u64 p);
// s*a + t*b = g (monic gcd); returns {g, s, t}.
struct ExtGcd {
  Poly g, s, t;
};
ExtGcd ext_gcd(const Poly& a, const Poly& b, u64 p);
Poly derivative(const Poly& f, u64 p);
u64 eval(const Poly& f, u64 x, u64 p);
// base^e mod m.
Poly powmod(const Poly& base, u64 e, const Poly& m, u64 p);

// Distinct roots of f in F_p (f nonzero). Cantor-Zassenhaus splitting of
// gcd(f, x^p - x) for large p; exhaustive evaluation for small p.
std::vector<u64> roots(const Poly& f, u64 p);

// Factorization of a squarefree polynomial into monic irreducibles,
// sorted by (degree, coefficients). p must be odd.
std::vector<Poly> factor_squarefree(const Poly& f, u64 p);
bool is_squarefree(const Poly& f, u64 p);

}  // namespace modp

// Element of F_p for an odd prime p; residue kept in [0, p).
struct PrimeFieldElement {
  std::uint64_t residue = 0;
  std::uint64_t modulus = 0;

  PrimeFieldElement() = default;
  PrimeFieldElement(std::uint64_t r, std::uint64_t p) : residue(r % p), modulus(p) {}

  friend PrimeFieldElement operator+(PrimeFieldElement a, PrimeFieldElement b) {
    return {modp::add(a.residue, b.residue, a.modulus), a.modulus};
  }
  friend PrimeFieldElement operator-(PrimeFieldElement a, PrimeFieldElement b) {
    return {modp::sub(a.residue, b.residue, a.modulus), a.modulus};
  }
  friend PrimeFieldElement operator*(PrimeFieldElement a, PrimeFieldElement b) {
    return {modp::mul(a.residue, b.residue, a.modulus), a.modulus};
  }
  friend bool operator==(PrimeFieldElement a, PrimeFieldElement b) {
    return a.residue == b.residue && a.modulus == b.modulus;
  }
};

}  // namespace sklift
