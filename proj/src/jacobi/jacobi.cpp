#include "sklift/jacobi/jacobi.hpp"

#include <map>
#include <mutex>

#include "sklift/errors.hpp"
#include "sklift/exactnum/arith.hpp"
#include "sklift/level1/level1.hpp"
#include "sklift/lfun/dirichlet.hpp"

namespace sklift {

BigRational JacobiForm1::c(long D) const {
  if (D > 0) throw DomainError("c(D) is only defined for D <= 0");
  long m = ((D % 4) + 4) % 4;
  if (m == 2 || m == 3) return 0;
  std::size_t N = static_cast<std::size_t>(-D);
  if (N >= coeffs.size())
    throw PrecisionError("c(" + std::to_string(D) + ") beyond |D| <= " + std::to_string(dmax()));
  return coeffs[N];
}

bool JacobiForm1::is_zero() const {
  for (const auto& x : coeffs)
    if (sgn(x) != 0) return false;
  return true;
}

const BigRational& KohnenForm::operator[](std::size_t n) const {
  if (n >= a.size()) throw PrecisionError("a(" + std::to_string(n) + ") beyond precision");
  return a[n];
}

namespace {

BigRational cached_l_value(unsigned r, long D) {
  static std::mutex mu;
  static std::map<std::pair<unsigned, long>, BigRational> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({r, D});
    if (it != cache.end()) return it->second;
  }
  BigRational v = dirichlet_l_neg(r, DirichletChar::quadratic(D));
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(std::make_pair(r, D), v);
  return v;
}

}  // namespace

BigRational cohen_number(unsigned r, unsigned long N) {
  if (r < 1) throw DomainError("Cohen number needs r >= 1");
  if (N == 0) return -bernoulli_number(2 * r) / BigRational(2 * r);
  long disc = (r % 2 == 0 ? 1 : -1) * static_cast<long>(N);
  long m = ((disc % 4) + 4) % 4;
  if (m == 2 || m == 3) return 0;
  FundamentalPart fp = fundamental_part(disc);
  BigRational L = fp.fundamental == 1 ? BigRational(-bernoulli_number(r) / BigRational(r))
                                      : cached_l_value(r, fp.fundamental);
  BigRational s = 0;
  for (unsigned long d : divisors(fp.conductor)) {
    int mu = mobius(d);
    if (mu == 0) continue;
    int chi = kronecker(fp.fundamental, d);
    if (chi == 0) continue;
    BigInt sigma = 0;
    for (unsigned long e : divisors(fp.conductor / d)) sigma += ipow(BigInt(e), 2 * r - 1);
    s += BigRational(mu * chi) * ipow(BigInt(d), r - 1) * sigma;
  }
  return L * s;
}

JacobiForm1 eisenstein_jacobi(int k, std::size_t dmax) {
  if (k < 4 || k % 2 != 0) throw DomainError("E_{k,1} needs even k >= 4");
  const unsigned r = k - 1;
  BigRational h0 = cohen_number(r, 0);
  JacobiForm1 e;
  e.weight = k;
  e.coeffs.resize(dmax + 1);
  for (std::size_t N = 0; N <= dmax; ++N) e.coeffs[N] = cohen_number(r, N) / h0;
  return e;
}

JacobiForm1 multiply(const QExpansion& f, const JacobiForm1& phi) {
  const std::size_t len = phi.coeffs.size();
  if (f.precision() * 4 < len)
    throw PrecisionError("modular form precision too small for Jacobi product");
  std::vector<BigRational> stretched(len, BigRational(0));
  for (std::size_t j = 0; 4 * j < len; ++j) stretched[4 * j] = f.coeffs()[j];
  QExpansion a(0, std::move(stretched)), b(0, phi.coeffs);
  JacobiForm1 out;
  out.weight = f.weight() + phi.weight;
  out.coeffs = (a * b).coeffs();
  return out;
}

JacobiForm1 operator+(const JacobiForm1& a, const JacobiForm1& b) {
  if (a.weight != b.weight) throw DomainError("adding Jacobi forms of different weight");
  JacobiForm1 out{a.weight, {}};
  std::size_t n = std::min(a.coeffs.size(), b.coeffs.size());
  out.coeffs.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.coeffs[i] = a.coeffs[i] + b.coeffs[i];
  return out;
}

JacobiForm1 operator-(const JacobiForm1& a, const JacobiForm1& b) {
  return a + BigRational(-1) * b;
}

JacobiForm1 operator*(const BigRational& s, const JacobiForm1& a) {
  JacobiForm1 out = a;
  for (auto& x : out.coeffs) x *= s;
  return out;
}

std::pair<JacobiForm1, JacobiForm1> jacobi_generators(std::size_t dmax) {
  if (dmax < 4) throw PrecisionError("Jacobi generators need dmax >= 4");
  const std::size_t prec = dmax / 4 + 1;
  JacobiForm1 e41 = eisenstein_jacobi(4, dmax), e61 = eisenstein_jacobi(6, dmax);
  QExpansion e4 = eisenstein(4, prec), e6 = eisenstein(6, prec);
  BigRational s(1, 144);
  JacobiForm1 phi10 = s * (multiply(e6, e41) - multiply(e4, e61));
  JacobiForm1 phi12 = s * (multiply(e4 * e4, e41) - multiply(e6, e61));
  return {phi10, phi12};
}

JacobiBasis jacobi_cusp_basis(int k, std::size_t dmax) {
  JacobiBasis b;
  b.weight = k;
  if (k % 2 != 0) {
    b.note = "odd-weight vanishing: index-1 Jacobi forms of odd weight are zero";
    return b;
  }
  if (k < 10) {
    b.note = "no cusp forms below weight 10";
    return b;
  }
  const std::size_t work = std::max<std::size_t>(dmax, 4);
  auto [phi10, phi12] = jacobi_generators(work);
  const std::size_t prec = work / 4 + 1;
  for (const auto& m : modular_basis(k - 10, prec)) b.forms.push_back(multiply(m, phi10));
  for (const auto& m : modular_basis(k - 12, prec)) b.forms.push_back(multiply(m, phi12));
  for (auto& f : b.forms) f.coeffs.resize(dmax + 1);
  return b;
}

KohnenForm ez_to_kohnen(const JacobiForm1& phi) {
  KohnenForm g;
  g.k = phi.weight;
  g.a = phi.coeffs;
  return g;
}

std::vector<std::size_t> plus_space_check(const KohnenForm& g) {
  std::vector<std::size_t> bad;
  const bool odd = (g.k - 1) % 2 != 0;
  for (std::size_t n = 0; n < g.a.size(); ++n) {
    if (sgn(g.a[n]) == 0) continue;
    long v = odd ? -static_cast<long>(n) : static_cast<long>(n);
    long m = ((v % 4) + 4) % 4;
    if (m == 2 || m == 3) bad.push_back(n);
  }
  return bad;
}

KohnenForm cohen_eisenstein(unsigned r, std::size_t prec) {
  KohnenForm g;
  g.k = static_cast<int>(r) + 1;
  g.a.resize(prec);
  for (std::size_t N = 0; N < prec; ++N) g.a[N] = cohen_number(r, N);
  return g;
}

namespace {

// f(4z) times h, both as plain series of length prec
std::vector<BigRational> times_q4(const QExpansion& f, const std::vector<BigRational>& h, std::size_t prec) {
  std::vector<BigRational> s(prec, BigRational(0));
  for (std::size_t j = 0; 4 * j < prec; ++j) s[4 * j] = f.coeffs()[j];
  return (QExpansion(0, std::move(s)) * QExpansion(0, h)).coeffs();
}

}  // namespace

std::vector<KohnenForm> kohnen_plus_basis(int k, std::size_t prec) {
  if (k < 3) throw DomainError("plus space needs k >= 3");
  if (prec == 0) throw PrecisionError("plus space needs precision >= 1");
  const int l = k - 1;
  const std::size_t fprec = (prec - 1) / 4 + 1;
  std::vector<BigRational> theta(prec, BigRational(0));
  for (std::size_t n = 0; n * n < prec; ++n) theta[n * n] = n == 0 ? 1 : 2;
  std::vector<std::pair<int, std::vector<BigRational>>> gens{{0, theta}};
  for (unsigned r : {2u, 3u, 5u})
    if (l >= static_cast<int>(r)) gens.push_back({static_cast<int>(r), cohen_eisenstein(r, prec).a});
  std::vector<KohnenForm> out;
  for (const auto& [wt, h] : gens) {
    const int mw = l - wt;
    if (mw < 0 || mw % 2 != 0 || mw == 2) continue;
    for (const auto& f : modular_basis(mw, fprec)) out.push_back(KohnenForm{k, times_q4(f, h, prec)});
  }
  const std::size_t expect = static_cast<std::size_t>(dim_modular(2 * l));
  if (out.size() != expect)
    throw std::logic_error("plus space spanning set has " + std::to_string(out.size()) + " forms, expected " +
                           std::to_string(expect));
  QMatrix M(out.size(), prec);
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = 0; j < prec; ++j) M(i, j) = out[i].a[j];
  if (rank(M) != expect) throw PrecisionError("precision too small to separate the plus space basis");
  return out;
}

std::vector<KohnenForm> kohnen_cusp_basis(int k, std::size_t prec) {
  auto all = kohnen_plus_basis(k, prec);
  QMatrix M(all.size(), prec);
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = 0; j < prec; ++j) M(i, j) = all[i].a[j];
  auto piv = rref(M);
  std::vector<KohnenForm> out;
  for (std::size_t i = 0; i < piv.size(); ++i) {
    if (piv[i] == 0) continue;  // the row with a(0) != 0
    KohnenForm g{k, M.row(i)};
    out.push_back(std::move(g));
  }
  return out;
}

KohnenForm kohnen_hecke(const KohnenForm& g, unsigned long p) {
  if (p < 2) throw DomainError("T(p^2) needs a prime p");
  for (unsigned long d = 2; d * d <= p; ++d)
    if (p % d == 0) throw DomainError("T(p^2) needs a prime p");
  if (g.a.empty()) throw PrecisionError("empty plus-space form");
  const int l = g.k - 1;
  const std::size_t p2 = p * p;
  const std::size_t out_prec = (g.a.size() - 1) / p2 + 1;
  const BigInt pl1 = ipow(BigInt(p), l - 1), p2l1 = ipow(BigInt(p), 2 * l - 1);
  KohnenForm out{g.k, std::vector<BigRational>(out_prec)};
  for (std::size_t n = 0; n < out_prec; ++n) {
    const long D = (l % 2 == 0 ? 1 : -1) * static_cast<long>(n);
    const long m4 = ((D % 4) + 4) % 4;
    if (m4 == 2 || m4 == 3) continue;  // stays in the plus space; matters for p = 2
    BigRational b = g.a[p2 * n];
    const int chi = kronecker(D, p);
    if (chi != 0) b += BigRational(chi * pl1) * g.a[n];
    if (n % p2 == 0) b += BigRational(p2l1) * g.a[n / p2];
    out.a[n] = b;
  }
  return out;
}

}  // namespace sklift
