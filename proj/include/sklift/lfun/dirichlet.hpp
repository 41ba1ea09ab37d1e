#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sklift/exactnum/bigint.hpp"
#include "sklift/exactnum/numberfield.hpp"

namespace sklift {

struct NewformData;

// Dirichlet character with values in {-1, 0, 1}: the trivial character or
// a quadratic one. Stored as a value table on Z/N.
class DirichletChar {
 public:
  static DirichletChar trivial();
  // Kronecker character (D/.) of a fundamental discriminant D (D = 1 gives
  // the trivial character).
  static DirichletChar quadratic(long D);
  // Validates multiplicativity, chi(1) = 1 and vanishing off units.
  static DirichletChar from_table(std::uint64_t modulus, std::vector<int> values);

  std::uint64_t modulus() const { return modulus_; }
  long discriminant() const { return disc_; }  // 1 for trivial, 0 if built from a table
  int operator()(long a) const;
  bool is_trivial() const { return modulus_ == 1; }
  int parity() const { return (*this)(-1); }  // chi(-1)
  std::string name() const;

 private:
  std::uint64_t modulus_ = 1;
  long disc_ = 1;
  std::vector<int> values_{1};
};

// B_{n,chi} from the generating function sum_{a=1}^N chi(a) t e^{at}/(e^{Nt}-1),
// expanded as an exact truncated power series.
BigRational gen_bernoulli(unsigned n, const DirichletChar& chi);
// Same number from N^{n-1} sum_a chi(a) B_n(a/N) (Bernoulli polynomials).
BigRational gen_bernoulli_closed(unsigned n, const DirichletChar& chi);

// L(1-n, chi) = -B_{n,chi}/n, n >= 1.
BigRational dirichlet_l_neg(unsigned n, const DirichletChar& chi);

// Multiplies `value` (an L-value at s) by the Euler factors at the primes
// in `sigma`: (1 - chi(l) l^{-s}) for Dirichlet L, or, when `f` is given,
// 1 - chi(l) a_f(l) l^{-s} + chi(l)^2 l^{w-1-2s}.
NFElement remove_euler(const NFElement& value, long s, const DirichletChar& chi, const NewformData* f,
                       const std::vector<std::uint64_t>& sigma);

}  // namespace sklift
