#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sklift/exactnum/bigint.hpp"
#include "sklift/exactnum/poly.hpp"

namespace sklift {

struct PrimePower {
  BigInt prime;
  unsigned exponent = 0;
  // false when `prime` is a composite cofactor that could not be split.
  bool proven = true;
};

struct IntegerFactorization {
  int sign = 1;
  std::vector<PrimePower> factors;  // ascending
  bool complete = true;

  BigInt value() const;
  // "-2^48 * 3^3 * 11"
  std::string to_string() const;
};

inline constexpr std::uint64_t kTrialDivisionBound = 10'000'000;

bool is_probable_prime(const BigInt& n);

// Trial division up to `trial_bound`, then probabilistic primality on the
// cofactor and Pollard-Brent rho (at most `rho_iterations` steps per split)
// for composite cofactors. n must be nonzero.
IntegerFactorization factor_integer(const BigInt& n,
                                    std::uint64_t trial_bound = kTrialDivisionBound,
                                    std::uint64_t rho_iterations = 4'000'000);

// Lifts f = prod(factors) mod p (factors monic, pairwise coprime mod p, f
// monic over Z) to a factorization modulo p^e. Coefficients in [0, p^e).
std::vector<ZPoly> hensel_lift(const ZPoly& f, const std::vector<std::vector<std::uint64_t>>& factors,
                               std::uint64_t p, unsigned e);

// Irreducible factors over Q of a nonzero polynomial, as primitive integer
// polynomials with positive leading coefficient, with multiplicity.
struct PolyFactor {
  ZPoly factor;
  unsigned multiplicity = 1;
};
std::vector<PolyFactor> factor_over_q(const QPoly& f);

struct IrreducibilityCertificate {
  bool irreducible = false;
  // Human-readable evidence: the primes used and their factor-degree
  // patterns, or the nontrivial factorization found.
  std::string evidence;
};
IrreducibilityCertificate irreducibility_certificate(const QPoly& f);

}  // namespace sklift
