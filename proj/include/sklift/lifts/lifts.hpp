#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sklift/exactnum/arith.hpp"
#include "sklift/exactnum/numberfield.hpp"
#include "sklift/jacobi/jacobi.hpp"
#include "sklift/qexp/qexp.hpp"
#include "sklift/siegel/siegel.hpp"

namespace sklift {

// zeta_D g: a(n) = sum_{d|n} (D/d) d^{k-2} c_g(|D| n^2/d^2) for 1 <= n < prec.
// D fundamental with (-1)^{k-1} D > 0; g must be cuspidal (a_g(0) = 0).
QExpansion shimura_lift(const KohnenForm& g, long D, int k, std::size_t prec);

// A(n,r,m) = sum_{d | (n,r,m)} d^{k-1} c((r^2 - 4nm)/d^2) on the classes of
// siegel_classes(bound). A(0,0,c) uses c_g(0) too, so an Eisenstein input
// gives a non-cuspidal expansion; `a000` is then the constant term.
SiegelExpansion maass_lift(const KohnenForm& g, int k, std::size_t bound, const BigRational& a000 = 0);

// Index-m Jacobi coefficients c'(n, r), 0 <= n < prec, r^2 <= 4nm.
struct JacobiTable {
  int weight = 0;
  unsigned long index = 0;
  std::map<std::pair<long, long>, BigRational> c;
};
JacobiTable v_operator(const JacobiForm1& phi, unsigned long m, std::size_t prec);
// m-th Fourier-Jacobi coefficient of F: A(n, r, m) for the same range.
JacobiTable fourier_jacobi(const SiegelExpansion& F, unsigned long m, std::size_t prec);

enum class EulerTag { spinor, standard, elliptic, dirichlet };

// 1 + c_1 x + ... with coefficients in the eigenfield.
struct EulerFactor {
  unsigned long ell = 0;
  EulerTag tag = EulerTag::elliptic;
  std::vector<NFElement> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  std::string to_string(const std::string& var = "x") const;
  friend bool operator==(const EulerFactor& a, const EulerFactor& b) { return a.coeffs == b.coeffs; }
};

EulerFactor euler_product(const EulerFactor& a, const EulerFactor& b, EulerTag tag);

// (1 - l^{k-1} x)(1 - l^{k-2} x)(1 - a x + l^{2k-3} x^2).
EulerFactor spinor_euler_factor(const NFElement& a, int k, unsigned long ell);

// Degree 5 in t = l^{-2s}: reciprocal roots chi l^2 and chi alpha l^{3-k},
// chi beta l^{3-k}, chi alpha l^{4-k}, chi beta l^{4-k}, with alpha + beta = a,
// alpha beta = l^{2k-3}. Built from power sums and Newton's identities.
EulerFactor standard_euler_factor(const NFElement& a, int k, unsigned long ell, int chi);

// 1 - chi l^{-s} as a polynomial in u = l^{-s} scaled: 1 - c t, c given.
EulerFactor dirichlet_euler_factor(unsigned long ell, const NFElement& c);
// 1 - chi a l^{-s} + chi^2 l^{w-1-2s} at s = 2s' + shift, in t = l^{-2s'}:
// 1 - chi a l^{-shift} t + chi^2 l^{w-1-2 shift} t^2.
EulerFactor elliptic_euler_factor(const NFElement& a, int w, unsigned long ell, int chi, long shift);

}  // namespace sklift
