#include "sklift/qexp/qexp.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "sklift/exactnum/ntt.hpp"

namespace sklift {

namespace {

BigInt common_denominator(const std::vector<BigRational>& v, std::size_t n) {
  BigInt l = 1;
  for (std::size_t i = 0; i < n; ++i) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v[i].get_den().get_mpz_t());
  return l;
}

std::vector<BigInt> scaled(const std::vector<BigRational>& v, std::size_t n, const BigInt& l) {
  std::vector<BigInt> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    BigRational s = v[i] * l;
    out[i] = s.get_num();
  }
  return out;
}

}  // namespace

QExpansion operator*(const QExpansion& a, const QExpansion& b) {
  const std::size_t n = std::min(a.precision(), b.precision());
  BigInt la = common_denominator(a.coeffs(), n), lb = common_denominator(b.coeffs(), n);
  auto prod = ntt::multiply(scaled(a.coeffs(), n, la), scaled(b.coeffs(), n, lb), n);
  BigInt l = la * lb;
  std::vector<BigRational> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = make_rational(i < prod.size() ? prod[i] : BigInt(0), l);
  return QExpansion(a.weight() + b.weight(), std::move(v));
}

QExpansion power(const QExpansion& a, unsigned e, std::size_t prec) {
  QExpansion base = a.truncate(std::min(prec, a.precision()));
  std::vector<BigRational> one(base.precision(), BigRational(0));
  if (!one.empty()) one[0] = 1;
  QExpansion r(0, std::move(one));
  while (e) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

BigRational bernoulli_number(unsigned n) {
  static std::mutex mu;
  static std::vector<BigRational> cache{BigRational(1)};
  std::lock_guard<std::mutex> lock(mu);
  // sum_{j=0}^{m} C(m+1, j) B_j = 0
  while (cache.size() <= n) {
    const unsigned m = cache.size();
    BigRational s = 0;
    BigInt binom = 1;  // C(m+1, j)
    for (unsigned j = 0; j < m; ++j) {
      s += binom * cache[j];
      binom = binom * (m + 1 - j) / (j + 1);
    }
    cache.push_back(-s / BigRational(m + 1));
  }
  return cache[n];
}

std::vector<BigInt> divisor_sums(unsigned k, std::size_t count) {
  std::vector<BigInt> s(count, BigInt(0));
  for (std::size_t d = 1; d < count; ++d) {
    BigInt dk = ipow(BigInt(static_cast<unsigned long>(d)), k);
    for (std::size_t m = d; m < count; m += d) s[m] += dk;
  }
  return s;
}

QExpansion eisenstein(int k, std::size_t prec) {
  if (k < 4 || k % 2 != 0) throw DomainError("Eisenstein series needs even weight >= 4");
  BigRational c = BigRational(-2 * k) / bernoulli_number(k);
  auto sig = divisor_sums(k - 1, prec);
  std::vector<BigRational> v(prec);
  if (prec > 0) v[0] = 1;
  for (std::size_t n = 1; n < prec; ++n) v[n] = c * sig[n];
  return QExpansion(k, std::move(v));
}

QExpansion delta_product(std::size_t prec) {
  // prod (1 - q^n) from the pentagonal number theorem, then the 24th power.
  std::vector<BigInt> eta(prec, BigInt(0));
  if (prec > 0) eta[0] = 1;
  for (long k = 1;; ++k) {
    bool any = false;
    for (long s : {1L, -1L}) {
      long e = k * (3 * k - s) / 2;
      if (e < static_cast<long>(prec)) {
        eta[e] += (k % 2 == 0) ? 1 : -1;
        any = true;
      }
    }
    if (!any) break;
  }
  std::vector<BigRational> ev(prec);
  for (std::size_t i = 0; i < prec; ++i) ev[i] = eta[i];
  QExpansion e(0, std::move(ev));
  QExpansion e24 = power(e, 24, prec);
  std::vector<BigRational> v(prec, BigRational(0));
  for (std::size_t i = 1; i < prec; ++i) v[i] = e24.coeffs()[i - 1];
  return QExpansion(12, std::move(v));
}

QExpansion delta(std::size_t prec) {
  if (prec < 1) throw DomainError("delta needs precision >= 1");
  QExpansion e4 = eisenstein(4, prec), e6 = eisenstein(6, prec);
  QExpansion d = BigRational(1, 1728) * (power(e4, 3, prec) - power(e6, 2, prec));
  if (!(d == delta_product(prec))) throw std::logic_error("delta self-check failed");
  return d;
}

std::string to_string(const QExpansion& f, std::size_t terms) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t n = 0; n < std::min(terms, f.precision()); ++n) {
    const auto& c = f.coeffs()[n];
    if (sgn(c) == 0) continue;
    if (!first) out << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) out << "-";
    first = false;
    BigRational a = abs(c);
    if (n == 0 || a != 1) out << to_string(a);
    if (n > 0) out << (a != 1 ? "*" : "") << "q" << (n > 1 ? "^" + std::to_string(n) : "");
  }
  if (first) out << "0";
  out << " + O(q^" << f.precision() << ")";
  return out.str();
}

}  // namespace sklift
