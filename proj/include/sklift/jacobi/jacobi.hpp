#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "sklift/exactnum/bigint.hpp"
#include "sklift/qexp/qexp.hpp"

namespace sklift {

// Index-1 Jacobi form of even weight, stored through c(D): the coefficient
// of q^n zeta^r depends only on D = r^2 - 4n. Entry N of `coeffs` is c(-N)
// for 0 <= N <= dmax.
struct JacobiForm1 {
  int weight = 0;
  std::vector<BigRational> coeffs;

  std::size_t dmax() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  // c(D) for D <= 0; zero when D = 2,3 mod 4; PrecisionError beyond dmax.
  BigRational c(long D) const;
  // c(n, r) = c(r^2 - 4n).
  BigRational c(long n, long r) const { return c(r * r - 4 * n); }
  bool is_zero() const;
};

// Weight k - 1/2 plus-space form; a[n] for 0 <= n < a.size().
struct KohnenForm {
  int k = 0;
  std::vector<BigRational> a;

  std::size_t precision() const { return a.size(); }
  const BigRational& operator[](std::size_t n) const;
};

// Cohen's number H(r, N).
BigRational cohen_number(unsigned r, unsigned long N);

// E_{k,1}: c(-N) = H(k-1, N)/H(k-1, 0); k even >= 4.
JacobiForm1 eisenstein_jacobi(int k, std::size_t dmax);

// f * phi; f needs precision > dmax/4.
JacobiForm1 multiply(const QExpansion& f, const JacobiForm1& phi);
JacobiForm1 operator+(const JacobiForm1& a, const JacobiForm1& b);
JacobiForm1 operator-(const JacobiForm1& a, const JacobiForm1& b);
JacobiForm1 operator*(const BigRational& s, const JacobiForm1& a);

// phi_10 = (E6 E_{4,1} - E4 E_{6,1})/144, phi_12 = (E4^2 E_{4,1} - E6 E_{6,1})/144;
// both have c(-3) = 1. dmax >= 4.
std::pair<JacobiForm1, JacobiForm1> jacobi_generators(std::size_t dmax);

struct JacobiBasis {
  int weight = 0;
  std::vector<JacobiForm1> forms;
  std::string note;
};

// M_{k-10} phi_10 + M_{k-12} phi_12.
JacobiBasis jacobi_cusp_basis(int k, std::size_t dmax);

KohnenForm ez_to_kohnen(const JacobiForm1& phi);
// Indices n with a(n) != 0 although (-1)^{k-1} n = 2,3 mod 4.
std::vector<std::size_t> plus_space_check(const KohnenForm& g);

// Cohen's H_{r+1/2} = sum H(r, N) q^N as a plus-space form of k = r + 1.
KohnenForm cohen_eisenstein(unsigned r, std::size_t prec);

// Plus space of weight k - 1/2 directly on Gamma0(4), for any k >= 3
// (odd k included, where the Jacobi route gives nothing):
//   M_l(4z) theta + M_{l-2}(4z) H_{5/2} + M_{l-3}(4z) H_{7/2} + M_{l-5}(4z) H_{11/2},
// l = k - 1. Dimension dim M_{2k-2}; checked.
std::vector<KohnenForm> kohnen_plus_basis(int k, std::size_t prec);
// Cusp part: the plus space meets the Eisenstein line C H_{k-1/2} only
// there, so it is the subspace with a(0) = 0. Echelon form.
std::vector<KohnenForm> kohnen_cusp_basis(int k, std::size_t prec);

// T^+(p^2): b(n) = a(p^2 n) + ((-1)^l n / p) p^{l-1} a(n) + p^{2l-1} a(n/p^2),
// l = k - 1, on plus-space indices n only (zero elsewhere). Output precision floor((prec-1)/p^2) + 1.
KohnenForm kohnen_hecke(const KohnenForm& g, unsigned long p);

}  // namespace sklift
