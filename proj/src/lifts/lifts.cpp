#include "sklift/lifts/lifts.hpp"

#include <cstdlib>
#include <numeric>

#include "sklift/errors.hpp"
#include "sklift/exactnum/modp.hpp"

namespace sklift {

QExpansion shimura_lift(const KohnenForm& g, long D, int k, std::size_t prec) {
  if (!is_fundamental_discriminant(D)) throw DomainError(std::to_string(D) + " is not a fundamental discriminant");
  if (((k - 1) % 2 == 0 ? D : -D) <= 0) throw DomainError("shimura_lift needs (-1)^{k-1} D > 0");
  const unsigned long absD = static_cast<unsigned long>(std::labs(D));
  if (prec > 0 && g.precision() <= absD * (prec - 1) * (prec - 1))
    throw PrecisionError("shimura_lift needs g up to |D| (prec-1)^2 = " + std::to_string(absD * (prec - 1) * (prec - 1)));
  if (g.precision() > 0 && sgn(g.a[0]) != 0) throw DomainError("shimura_lift is only defined here for cusp forms");
  std::vector<BigRational> c(prec, BigRational(0));
  for (std::size_t n = 1; n < prec; ++n) {
    BigRational s = 0;
    for (unsigned long d : divisors(n)) {
      int chi = kronecker(D, d);
      if (chi == 0) continue;
      unsigned long q = n / d;
      s += BigRational(chi) * ipow(BigInt(d), k - 2) * g[absD * q * q];
    }
    c[n] = s;
  }
  return QExpansion(2 * k - 2, std::move(c));
}

SiegelExpansion maass_lift(const KohnenForm& g, int k, std::size_t bound, const BigRational& a000) {
  const std::size_t need = 4 * bound * bound;
  if (g.precision() <= need)
    throw PrecisionError("maass_lift at bound " + std::to_string(bound) + " needs g up to " + std::to_string(need));
  SiegelExpansion F(k, bound);
  for (const auto& t : siegel_classes(bound)) {
    long gg = std::gcd(std::gcd(t.n, t.r), t.m);
    if (gg == 0) {
      F.set(0, 0, 0, a000);
      continue;
    }
    const long N = 4 * t.n * t.m - t.r * t.r;
    BigRational s = 0;
    for (unsigned long d : divisors(static_cast<unsigned long>(gg))) {
      long dd = static_cast<long>(d);
      s += BigRational(ipow(BigInt(dd), k - 1)) * g[static_cast<std::size_t>(N / (dd * dd))];
    }
    F.set(t.n, t.r, t.m, s);
  }
  return F;
}

JacobiTable v_operator(const JacobiForm1& phi, unsigned long m, std::size_t prec) {
  if (m == 0) throw DomainError("V_0 is not an index-shifting operator here");
  JacobiTable out;
  out.weight = phi.weight;
  out.index = m;
  const long M = static_cast<long>(m);
  for (long n = 0; n < static_cast<long>(prec); ++n)
    for (long r = 0; r * r <= 4 * n * M; ++r) {
      long gg = std::gcd(std::gcd(n, r), M);
      BigRational s = 0;
      for (unsigned long d : divisors(static_cast<unsigned long>(gg))) {
        long dd = static_cast<long>(d);
        // c(nm/d^2, r/d) for the index-1 form
        s += BigRational(ipow(BigInt(dd), phi.weight - 1)) * phi.c(n * M / (dd * dd), r / dd);
      }
      out.c[{n, r}] = s;
      out.c[{n, -r}] = s;
    }
  return out;
}

JacobiTable fourier_jacobi(const SiegelExpansion& F, unsigned long m, std::size_t prec) {
  JacobiTable out;
  out.weight = F.weight();
  out.index = m;
  const long M = static_cast<long>(m);
  for (long n = 0; n < static_cast<long>(prec); ++n)
    for (long r = -2 * n * M; r <= 2 * n * M; ++r)
      if (r * r <= 4 * n * M) out.c[{n, r}] = F.at(n, r, M);
  return out;
}

std::string EulerFactor::to_string(const std::string& var) const {
  std::string s;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (is_zero(coeffs[i])) continue;
    if (!s.empty()) s += " + ";
    s += "(" + coeffs[i].to_string() + ")";
    if (i > 0) s += "*" + var + (i > 1 ? "^" + std::to_string(i) : "");
  }
  return s.empty() ? "0" : s;
}

EulerFactor euler_product(const EulerFactor& a, const EulerFactor& b, EulerTag tag) {
  if (a.ell != b.ell) throw DomainError("Euler factors at different primes");
  EulerFactor out{a.ell, tag, std::vector<NFElement>(a.coeffs.size() + b.coeffs.size() - 1, NFElement(0))};
  for (std::size_t i = 0; i < a.coeffs.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) out.coeffs[i + j] = out.coeffs[i + j] + a.coeffs[i] * b.coeffs[j];
  return out;
}

namespace {

void require_prime(unsigned long ell) {
  if (!modp::is_prime_u64(ell)) throw DomainError(std::to_string(ell) + " is not prime");
}

NFElement lpow(unsigned long ell, long e) { return NFElement(qpow(BigRational(ell), e)); }

}  // namespace

EulerFactor spinor_euler_factor(const NFElement& a, int k, unsigned long ell) {
  require_prime(ell);
  EulerFactor f1{ell, EulerTag::dirichlet, {NFElement(1), -lpow(ell, k - 1)}};
  EulerFactor f2{ell, EulerTag::dirichlet, {NFElement(1), -lpow(ell, k - 2)}};
  EulerFactor f3{ell, EulerTag::elliptic, {NFElement(1), -a, lpow(ell, 2 * k - 3)}};
  return euler_product(euler_product(f1, f2, EulerTag::spinor), f3, EulerTag::spinor);
}

EulerFactor standard_euler_factor(const NFElement& a, int k, unsigned long ell, int chi) {
  require_prime(ell);
  if (chi < -1 || chi > 1) throw DomainError("chi(l) must be -1, 0 or 1");
  // s_j = alpha^j + beta^j
  const int deg = 5;
  const NFElement q = lpow(ell, 2 * k - 3);
  std::vector<NFElement> s(deg + 1);
  s[0] = NFElement(2);
  s[1] = a;
  for (int j = 2; j <= deg; ++j) s[j] = a * s[j - 1] - q * s[j - 2];
  // power sums of the five reciprocal roots
  std::vector<NFElement> p(deg + 1);
  for (int j = 1; j <= deg; ++j) {
    NFElement c = NFElement(chi).pow(j);
    p[j] = c * (lpow(ell, 2 * j) + (lpow(ell, (3 - k) * j) + lpow(ell, (4 - k) * j)) * s[j]);
  }
  // Newton: j e_j = sum_{i=1}^j (-1)^{i-1} e_{j-i} p_i
  std::vector<NFElement> e(deg + 1);
  e[0] = NFElement(1);
  for (int j = 1; j <= deg; ++j) {
    NFElement acc = NFElement(0);
    for (int i = 1; i <= j; ++i) {
      NFElement term = e[j - i] * p[i];
      acc = (i % 2 == 1) ? acc + term : acc - term;
    }
    e[j] = acc / NFElement(j);
  }
  EulerFactor out{ell, EulerTag::standard, {}};
  for (int j = 0; j <= deg; ++j) out.coeffs.push_back(j % 2 == 0 ? e[j] : -e[j]);
  return out;
}

EulerFactor dirichlet_euler_factor(unsigned long ell, const NFElement& c) {
  require_prime(ell);
  return {ell, EulerTag::dirichlet, {NFElement(1), -c}};
}

EulerFactor elliptic_euler_factor(const NFElement& a, int w, unsigned long ell, int chi, long shift) {
  require_prime(ell);
  return {ell,
          EulerTag::elliptic,
          {NFElement(1), -(NFElement(chi) * a * lpow(ell, -shift)), NFElement(chi * chi) * lpow(ell, w - 1 - 2 * shift)}};
}

}  // namespace sklift
