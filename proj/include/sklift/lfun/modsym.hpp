#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "sklift/exactnum/bigint.hpp"
#include "sklift/exactnum/matrix.hpp"

namespace sklift {

// Homogeneous polynomial of degree n: P[i] is the coefficient of X^i Y^{n-i}.
using HomPoly = std::vector<BigInt>;

// (P o g)(X, Y) = P(aX + bY, cX + dY).
HomPoly compose(const HomPoly& P, long a, long b, long c, long d);

// Level-1 modular symbols of weight w: Manin symbols [P] = P{0, oo} for the
// monomials X^i Y^{w-2-i}, modulo P + P|S and P + P|U + P|U^2.
class SymbolSpace {
 public:
  // `order` permutes the monomials before relation reduction (changes the
  // chosen basis, not the space). Empty means 0..w-2.
  static SymbolSpace build(int w, const std::vector<std::size_t>& order = {});

  int weight() const { return w_; }
  int degree() const { return w_ - 2; }
  std::size_t dim() const { return free_.size(); }
  // Monomial exponents i whose symbols form the basis.
  const std::vector<std::size_t>& basis_monomials() const { return free_; }

  // Coordinates of [P] in the basis.
  std::vector<BigRational> reduce(const HomPoly& P) const;
  std::vector<BigRational> reduce_monomial(std::size_t i) const;
  // P{0, a/b} and P{a/b, oo} via continued fractions.
  std::vector<BigRational> symbol_from_zero(const HomPoly& P, long a, long b) const;
  std::vector<BigRational> symbol_to_infinity(const HomPoly& P, long a, long b) const;

  // Matrices act on column coordinate vectors: column i is the image of
  // basis element i.
  const QMatrix& star() const { return star_; }  // [P] -> -[P(-X, Y)]
  QMatrix hecke(unsigned long ell) const;           // Heilbronn matrices, cached
  QMatrix hecke_by_cosets(unsigned long ell) const;  // P(X, lY) + sum_r P(lX - rY, Y){r/l, oo}
  // delta([P]) = c_n(P) - c_0(P) on the basis; the cuspidal part is its kernel.
  const std::vector<BigRational>& boundary() const { return boundary_; }
  // Dimensions of the +1 and -1 star eigenspaces inside the cuspidal part.
  std::pair<std::size_t, std::size_t> cuspidal_sign_dims() const;

 private:
  int w_ = 0;
  std::vector<std::size_t> order_;     // column j <-> monomial order_[j]
  QMatrix rref_;
  std::vector<std::size_t> pivots_;    // columns
  std::vector<std::size_t> free_cols_;
  std::vector<std::size_t> free_;      // monomials of the free columns
  QMatrix star_;
  std::vector<BigRational> boundary_;
  struct Cache {
    std::mutex mu;
    std::map<unsigned long, QMatrix> hecke;
  };
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

}  // namespace sklift
