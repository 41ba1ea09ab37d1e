#pragma once

#include <cstdint>
#include <vector>

namespace sklift {

// Kronecker symbol (D/n) for n >= 1; completely multiplicative in n.
int kronecker(long D, unsigned long n);

std::vector<unsigned long> divisors(unsigned long n);
int mobius(unsigned long n);
bool is_squarefree(unsigned long n);
bool is_fundamental_discriminant(long D);

// Disc = D0 * f^2 with D0 fundamental; Disc must be a nonzero discriminant
// (Disc = 0 or 1 mod 4, not a square when positive is allowed: D0 = 1).
struct FundamentalPart {
  long fundamental = 1;
  unsigned long conductor = 1;
};
FundamentalPart fundamental_part(long disc);

}  // namespace sklift
