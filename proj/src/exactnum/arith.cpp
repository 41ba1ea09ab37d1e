#include "sklift/exactnum/arith.hpp"

#include <algorithm>
#include <cstdlib>

#include "sklift/errors.hpp"

namespace sklift {

namespace {

// Jacobi symbol (a/n) for odd n > 0.
int jacobi(long a_in, unsigned long n) {
  long long a = a_in % static_cast<long long>(n);
  if (a < 0) a += n;
  unsigned long long aa = a, nn = n;
  int r = 1;
  while (aa != 0) {
    while (aa % 2 == 0) {
      aa /= 2;
      unsigned long long m = nn % 8;
      if (m == 3 || m == 5) r = -r;
    }
    std::swap(aa, nn);
    if (aa % 4 == 3 && nn % 4 == 3) r = -r;
    aa %= nn;
  }
  return nn == 1 ? r : 0;
}

}  // namespace

int kronecker(long D, unsigned long n) {
  if (n == 0) throw DomainError("kronecker symbol needs n >= 1");
  int r = 1;
  while (n % 2 == 0) {
    n /= 2;
    if (D % 2 == 0) return 0;
    long m = ((D % 8) + 8) % 8;
    if (m == 3 || m == 5) r = -r;
  }
  if (n == 1) return r;
  return r * jacobi(D, n);
}

std::vector<unsigned long> divisors(unsigned long n) {
  std::vector<unsigned long> small, large;
  for (unsigned long d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    small.push_back(d);
    if (d * d != n) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

int mobius(unsigned long n) {
  if (n == 0) throw DomainError("mobius(0)");
  int r = 1;
  for (unsigned long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    r = -r;
  }
  if (n > 1) r = -r;
  return r;
}

bool is_squarefree(unsigned long n) { return n != 0 && mobius(n) != 0; }

bool is_fundamental_discriminant(long D) {
  if (D == 0 || D == 1) return false;
  unsigned long a = static_cast<unsigned long>(std::labs(D));
  long m4 = ((D % 4) + 4) % 4;
  if (m4 == 1) return is_squarefree(a);
  if (m4 == 0) {
    long q = D / 4;
    long q4 = ((q % 4) + 4) % 4;
    return (q4 == 2 || q4 == 3) && is_squarefree(static_cast<unsigned long>(std::labs(q)));
  }
  return false;
}

FundamentalPart fundamental_part(long disc) {
  long m4 = ((disc % 4) + 4) % 4;
  if (disc == 0 || (m4 != 0 && m4 != 1)) throw DomainError("not a discriminant: " + std::to_string(disc));
  unsigned long a = static_cast<unsigned long>(std::labs(disc));
  // Largest f with disc / f^2 a discriminant that is fundamental (or 1).
  FundamentalPart best;
  bool found = false;
  for (unsigned long f = 1; f * f <= a; ++f) {
    if (a % (f * f)) continue;
    long d0 = disc / static_cast<long>(f * f);
    if (d0 == 1 || is_fundamental_discriminant(d0)) {
      best = {d0, f};
      found = true;
    }
  }
  if (!found) throw DomainError("no fundamental part for " + std::to_string(disc));
  return best;
}

}  // namespace sklift
