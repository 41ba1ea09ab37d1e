#include "sklift/lfun/dirichlet.hpp"

#include <cstdlib>
#include <numeric>

#include "sklift/errors.hpp"
#include "sklift/exactnum/arith.hpp"
#include "sklift/level1/level1.hpp"
#include "sklift/qexp/qexp.hpp"

namespace sklift {

DirichletChar DirichletChar::trivial() { return DirichletChar(); }

DirichletChar DirichletChar::quadratic(long D) {
  if (D == 1) return trivial();
  if (!is_fundamental_discriminant(D)) throw DomainError(std::to_string(D) + " is not a fundamental discriminant");
  DirichletChar c;
  c.modulus_ = static_cast<std::uint64_t>(std::labs(D));
  c.disc_ = D;
  c.values_.assign(c.modulus_, 0);
  for (std::uint64_t a = 1; a < c.modulus_; ++a) c.values_[a] = kronecker(D, a);
  return c;
}

DirichletChar DirichletChar::from_table(std::uint64_t modulus, std::vector<int> values) {
  if (modulus == 0 || values.size() != modulus) throw DomainError("character table has the wrong size");
  DirichletChar c;
  c.modulus_ = modulus;
  c.disc_ = 0;
  c.values_ = std::move(values);
  if (modulus == 1) {
    c.values_ = {1};
    c.disc_ = 1;
    return c;
  }
  if (c.values_[1] != 1) throw DomainError("chi(1) must be 1");
  for (std::uint64_t a = 0; a < modulus; ++a) {
    bool unit = std::gcd(a, modulus) == 1;
    int v = c.values_[a];
    if (!unit && v != 0) throw DomainError("character must vanish off units");
    if (unit && v != 1 && v != -1) throw DomainError("only real characters are supported");
    for (std::uint64_t b = 0; b < modulus; ++b)
      if (c.values_[a * b % modulus] != v * c.values_[b]) throw DomainError("table is not multiplicative");
  }
  return c;
}

int DirichletChar::operator()(long a) const {
  long m = static_cast<long>(modulus_);
  long r = ((a % m) + m) % m;
  return values_[r];
}

std::string DirichletChar::name() const {
  if (is_trivial()) return "trivial";
  if (disc_ != 0) return "chi_" + std::to_string(disc_);
  return "chi_mod_" + std::to_string(modulus_);
}

BigRational gen_bernoulli(unsigned n, const DirichletChar& chi) {
  const long N = static_cast<long>(chi.modulus());
  const std::size_t len = n + 1;
  // t/(e^{Nt}-1): invert (e^{Nt}-1)/t = sum N^{k+1} t^k/(k+1)!.
  std::vector<BigRational> den(len), inv(len);
  BigRational fact = 1;
  for (std::size_t k = 0; k < len; ++k) {
    fact *= static_cast<unsigned long>(k + 1);
    den[k] = BigRational(ipow(BigInt(N), k + 1)) / fact;
  }
  inv[0] = BigRational(1) / den[0];
  for (std::size_t k = 1; k < len; ++k) {
    BigRational s = 0;
    for (std::size_t j = 1; j <= k; ++j) s += den[j] * inv[k - j];
    inv[k] = -s / den[0];
  }
  // sum_a chi(a) e^{at}, then multiply; read the t^n coefficient.
  std::vector<BigRational> ex(len, BigRational(0));
  for (long a = 1; a <= N; ++a) {
    int c = chi(a);
    if (c == 0) continue;
    BigRational term = c;
    for (std::size_t j = 0; j < len; ++j) {
      ex[j] += term;
      term = term * a / static_cast<unsigned long>(j + 1);
    }
  }
  BigRational coeff = 0;
  for (std::size_t j = 0; j <= n; ++j) coeff += ex[j] * inv[n - j];
  BigInt nfact = 1;
  for (unsigned i = 2; i <= n; ++i) nfact *= i;
  return coeff * nfact;
}

BigRational gen_bernoulli_closed(unsigned n, const DirichletChar& chi) {
  const long N = static_cast<long>(chi.modulus());
  if (N == 1) {
    // Generating-function convention: B_{1,1} = +1/2.
    return n == 1 ? BigRational(1, 2) : bernoulli_number(n);
  }
  // N^{n-1} sum_a chi(a) sum_k C(n,k) B_k (a/N)^{n-k}
  //   = sum_a chi(a) sum_k C(n,k) B_k a^{n-k} N^{k-1}.
  std::vector<BigRational> bk(n + 1);
  for (unsigned k = 0; k <= n; ++k) bk[k] = bernoulli_number(k);
  BigRational total = 0;
  for (long a = 1; a <= N; ++a) {
    int c = chi(a);
    if (c == 0) continue;
    BigRational s = 0;
    BigInt binom = 1;
    for (unsigned k = 0; k <= n; ++k) {
      if (sgn(bk[k]) != 0) s += binom * bk[k] * ipow(BigInt(a), n - k) * qpow(BigRational(N), static_cast<long>(k) - 1);
      binom = binom * (n - k) / (k + 1);
    }
    total += c * s;
  }
  return total;
}

BigRational dirichlet_l_neg(unsigned n, const DirichletChar& chi) {
  if (n == 0) throw DomainError("L(1-n, chi) needs n >= 1");
  return -gen_bernoulli_closed(n, chi) / BigRational(n);
}

NFElement remove_euler(const NFElement& value, long s, const DirichletChar& chi, const NewformData* f,
                       const std::vector<std::uint64_t>& sigma) {
  NFElement out = value;
  for (std::uint64_t l : sigma) {
    if (!modp::is_prime_u64(l)) throw DomainError(std::to_string(l) + " is not prime");
    const int c = chi(static_cast<long>(l));
    BigRational ls = qpow(BigRational(static_cast<unsigned long>(l)), -s);  // l^{-s}
    NFElement factor;
    if (!f) {
      factor = NFElement(BigRational(1) - c * ls);
    } else {
      NFElement a = hecke_eigenvalue(*f, l);
      BigRational top = qpow(BigRational(static_cast<unsigned long>(l)), f->weight - 1 - 2 * s);
      factor = NFElement(1) - NFElement(BigRational(c) * ls) * a + NFElement(BigRational(c * c) * top);
    }
    if (is_zero(factor)) throw DomainError("Euler factor at " + std::to_string(l) + " vanishes");
    out = out * factor;
  }
  return out;
}

}  // namespace sklift
