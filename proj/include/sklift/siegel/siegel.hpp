#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "sklift/exactnum/bigint.hpp"
#include "sklift/qexp/qexp.hpp"

namespace sklift {

// Index (n, r, m) of the half-integral matrix [[n, r/2], [r/2, m]].
struct SiegelTriple {
  long n = 0, r = 0, m = 0;
  auto operator<=>(const SiegelTriple&) const = default;
  std::string to_string() const;
};

// GL2(Z)-reduced representative: 0 <= r <= n <= m, or (0, 0, g) for
// semidefinite forms (g the content). DomainError if r^2 > 4nm or n, m < 0.
SiegelTriple reduce_triple(long n, long r, long m);

// Reduced classes stored for bound B: every positive definite class with
// 4nm - r^2 <= 4B^2 and the semidefinite (0,0,c), c <= B. This resolves
// every triple with 0 <= n, m <= B and the right side of the Maass relation.
std::vector<SiegelTriple> siegel_classes(std::size_t bound);

// Genus-2 level-1 expansion of even weight. Coefficients are keyed by the
// reduced class, so A(n,r,m) = A(m,r,n) = A(n,-r,m) hold by construction.
class SiegelExpansion {
 public:
  SiegelExpansion() = default;
  SiegelExpansion(int weight, std::size_t bound) : weight_(weight), bound_(bound) {}
  static SiegelExpansion zero(int weight, std::size_t bound);

  int weight() const { return weight_; }
  std::size_t bound() const { return bound_; }
  const std::map<SiegelTriple, BigRational>& coeffs() const { return c_; }

  // A(n, r, m) through the reduced class; PrecisionError if not stored.
  const BigRational& at(long n, long r, long m) const;
  bool has(long n, long r, long m) const;
  void set(long n, long r, long m, const BigRational& v);

  bool is_zero() const;
  friend SiegelExpansion operator+(const SiegelExpansion& a, const SiegelExpansion& b);
  friend SiegelExpansion operator*(const BigRational& s, const SiegelExpansion& a);
  friend bool operator==(const SiegelExpansion& a, const SiegelExpansion& b);

 private:
  int weight_ = 0;
  std::size_t bound_ = 0;
  std::map<SiegelTriple, BigRational> c_;
};

// Stored classes with n, m >= 1 violating
// A(n,r,m) = sum_{d | (n,r,m)} d^{k-1} A(nm/d^2, r/d, 1).
std::vector<SiegelTriple> maass_check(const SiegelExpansion& F);
// The same relation at one (not necessarily reduced) triple.
bool maass_relation_holds(const SiegelExpansion& F, long n, long r, long m);

// sum_n A(n, 0, 0) q^n, n <= bound.
QExpansion phi_operator(const SiegelExpansion& F);

// One left coset Gamma (A B; 0 D) of the similitude-l double coset,
// D in row Hermite form, A = l D^{-T}.
struct SymplecticCoset {
  long D[2][2];
  long B[2][2];
};
std::vector<SymplecticCoset> hecke_cosets(unsigned long ell);

// T(l) for prime l, normalized as l^{2k-3} sum det(D)^{-k} F((AZ+B)D^{-1}).
// Output bound floor(B/l).
SiegelExpansion hecke_t2(const SiegelExpansion& F, unsigned long ell);

struct EigenRatio {
  SiegelTriple index;
  BigRational f, tf;
};
struct EigenvalueReport {
  BigRational lambda;
  std::vector<EigenRatio> checked;
};

// lambda with TF = lambda F on every class stored in both. DomainError if
// F vanishes there; CheckFailure naming the first conflicting class.
EigenvalueReport eigenvalue_extract(const SiegelExpansion& F, const SiegelExpansion& TF);

}  // namespace sklift
