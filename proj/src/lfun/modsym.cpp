#include "sklift/lfun/modsym.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "sklift/errors.hpp"
#include "sklift/exactnum/modp.hpp"

namespace sklift {

HomPoly compose(const HomPoly& P, long a, long b, long c, long d) {
  const std::size_t n = P.size() - 1;
  HomPoly out(n + 1, BigInt(0));
  // binomial rows
  std::vector<std::vector<BigInt>> binom(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    binom[i].assign(i + 1, BigInt(1));
    for (std::size_t s = 1; s < i; ++s) binom[i][s] = binom[i - 1][s - 1] + binom[i - 1][s];
  }
  auto powers = [n](long x) {
    std::vector<BigInt> v(n + 1);
    v[0] = 1;
    for (std::size_t i = 1; i <= n; ++i) v[i] = v[i - 1] * x;
    return v;
  };
  auto pa = powers(a), pb = powers(b), pc = powers(c), pd = powers(d);
  for (std::size_t i = 0; i <= n; ++i) {
    if (sgn(P[i]) == 0) continue;
    // (aX + bY)^i (cX + dY)^{n-i}
    std::vector<BigInt> A(i + 1), B(n - i + 1);
    for (std::size_t s = 0; s <= i; ++s) A[s] = binom[i][s] * pa[s] * pb[i - s];
    for (std::size_t t = 0; t <= n - i; ++t) B[t] = binom[n - i][t] * pc[t] * pd[n - i - t];
    for (std::size_t s = 0; s <= i; ++s) {
      if (sgn(A[s]) == 0) continue;
      BigInt x = P[i] * A[s];
      for (std::size_t t = 0; t <= n - i; ++t)
        if (sgn(B[t]) != 0) out[s + t] += x * B[t];
    }
  }
  return out;
}

namespace {

HomPoly monomial(std::size_t n, std::size_t i) {
  HomPoly P(n + 1, BigInt(0));
  P[i] = 1;
  return P;
}

std::vector<BigRational>& add_into(std::vector<BigRational>& a, const std::vector<BigRational>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

}  // namespace

SymbolSpace SymbolSpace::build(int w, const std::vector<std::size_t>& order) {
  if (w < 4 || w % 2 != 0) throw DomainError("symbol_space needs even weight >= 4");
  SymbolSpace S;
  S.w_ = w;
  const std::size_t n = static_cast<std::size_t>(w - 2);
  if (order.empty()) {
    S.order_.resize(n + 1);
    std::iota(S.order_.begin(), S.order_.end(), 0);
  } else {
    std::vector<std::size_t> chk = order;
    std::sort(chk.begin(), chk.end());
    for (std::size_t i = 0; i < chk.size(); ++i)
      if (chk[i] != i || chk.size() != n + 1) throw DomainError("generator order is not a permutation");
    S.order_ = order;
  }
  QMatrix R(2 * (n + 1), n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    HomPoly P = monomial(n, i);
    HomPoly s = compose(P, 0, -1, 1, 0);
    HomPoly u1 = compose(P, 0, -1, 1, -1);
    HomPoly u2 = compose(u1, 0, -1, 1, -1);
    for (std::size_t j = 0; j <= n; ++j) {
      std::size_t m = S.order_[j];
      R(2 * i, j) = BigRational(P[m] + s[m]);
      R(2 * i + 1, j) = BigRational(P[m] + u1[m] + u2[m]);
    }
  }
  S.pivots_ = rref(R);
  S.rref_ = R;
  std::vector<bool> is_piv(n + 1, false);
  for (auto c : S.pivots_) is_piv[c] = true;
  for (std::size_t j = 0; j <= n; ++j)
    if (!is_piv[j]) {
      S.free_cols_.push_back(j);
      S.free_.push_back(S.order_[j]);
    }
  const std::size_t d = S.free_.size();
  S.star_ = QMatrix(d, d);
  S.boundary_.assign(d, BigRational(0));
  for (std::size_t c = 0; c < d; ++c) {
    std::size_t i = S.free_[c];
    HomPoly Q = monomial(n, i);
    // -P(-X, Y)
    Q[i] = (i % 2 == 0) ? -1 : 1;
    auto v = S.reduce(Q);
    for (std::size_t r = 0; r < d; ++r) S.star_(r, c) = v[r];
    S.boundary_[c] = BigRational((i == n ? 1 : 0) - (i == 0 ? 1 : 0));
  }
  return S;
}

std::vector<BigRational> SymbolSpace::reduce(const HomPoly& P) const {
  const std::size_t n = static_cast<std::size_t>(w_ - 2);
  if (P.size() != n + 1) throw DomainError("polynomial degree does not match the weight");
  std::vector<BigRational> v(n + 1);
  for (std::size_t j = 0; j <= n; ++j) v[j] = BigRational(P[order_[j]]);
  for (std::size_t r = 0; r < pivots_.size(); ++r) {
    const std::size_t pc = pivots_[r];
    if (sgn(v[pc]) == 0) continue;
    BigRational x = v[pc];
    for (std::size_t j = 0; j <= n; ++j)
      if (sgn(rref_(r, j)) != 0) v[j] -= x * rref_(r, j);
  }
  std::vector<BigRational> out;
  out.reserve(free_cols_.size());
  for (auto c : free_cols_) out.push_back(v[c]);
  return out;
}

std::vector<BigRational> SymbolSpace::reduce_monomial(std::size_t i) const {
  return reduce(monomial(static_cast<std::size_t>(w_ - 2), i));
}

std::vector<BigRational> SymbolSpace::symbol_from_zero(const HomPoly& P, long a, long b) const {
  if (b <= 0) throw DomainError("cusp a/b needs b > 0");
  // convergents p_k/q_k of a/b, starting from p_{-2}/q_{-2} = 0/1, p_{-1}/q_{-1} = 1/0
  std::vector<long> ps{0, 1}, qs{1, 0};
  long x = a, y = b;
  while (y != 0) {
    long q = x / y;
    if ((x % y != 0) && ((x < 0) != (y < 0))) --q;
    long r = x - q * y;
    x = y;
    y = r;
    ps.push_back(q * ps.back() + ps[ps.size() - 2]);
    qs.push_back(q * qs.back() + qs[qs.size() - 2]);
  }
  // {0, a/b} = {0, oo} + sum_k g_k {0, oo}
  auto tot = reduce(P);
  for (std::size_t k = 2; k < ps.size(); ++k) {
    long kk = static_cast<long>(k) - 2;
    long s = ((kk - 1) % 2 == 0) ? 1 : -1;
    add_into(tot, reduce(compose(P, s * ps[k], ps[k - 1], s * qs[k], qs[k - 1])));
  }
  return tot;
}

std::vector<BigRational> SymbolSpace::symbol_to_infinity(const HomPoly& P, long a, long b) const {
  auto r = reduce(P);
  auto s = symbol_from_zero(P, a, b);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= s[i];
  return r;
}

QMatrix SymbolSpace::hecke_by_cosets(unsigned long ell) const {
  if (!modp::is_prime_u64(ell)) throw DomainError("T(l) on symbols needs a prime l");
  const std::size_t n = static_cast<std::size_t>(w_ - 2), d = dim();
  const long l = static_cast<long>(ell);
  QMatrix T(d, d);
  for (std::size_t c = 0; c < d; ++c) {
    HomPoly P = monomial(n, free_[c]);
    auto tot = reduce(compose(P, 1, 0, 0, l));
    for (long r = 0; r < l; ++r) add_into(tot, symbol_to_infinity(compose(P, l, -r, 0, 1), r, l));
    for (std::size_t i = 0; i < d; ++i) T(i, c) = tot[i];
  }
  return T;
}

QMatrix SymbolSpace::hecke(unsigned long ell) const {
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->hecke.find(ell);
    if (it != cache_->hecke.end()) return it->second;
  }
  if (ell < 2) throw DomainError("T(l) needs l >= 2");
  const std::size_t n = static_cast<std::size_t>(w_ - 2), d = dim();
  const long l = static_cast<long>(ell);
  // ad - bc = l, a > b >= 0, d > c >= 0
  std::vector<std::array<long, 4>> H;
  for (long a = 1; a <= l; ++a)
    for (long b = 0; b < a; ++b)
      for (long dd = 1; dd <= l; ++dd)
        for (long c = 0; c < dd; ++c)
          if (a * dd - b * c == l) H.push_back({a, b, c, dd});
  QMatrix T(d, d);
  for (std::size_t col = 0; col < d; ++col) {
    HomPoly P = monomial(n, free_[col]);
    HomPoly acc(n + 1, BigInt(0));
    for (const auto& h : H) {
      HomPoly Q = compose(P, h[0], h[1], h[2], h[3]);
      for (std::size_t i = 0; i <= n; ++i) acc[i] += Q[i];
    }
    auto v = reduce(acc);
    for (std::size_t i = 0; i < d; ++i) T(i, col) = v[i];
  }
  std::lock_guard<std::mutex> lock(cache_->mu);
  cache_->hecke.emplace(ell, T);
  return T;
}

std::pair<std::size_t, std::size_t> SymbolSpace::cuspidal_sign_dims() const {
  const std::size_t d = dim();
  // kernel of boundary intersected with the star eigenspaces
  std::pair<std::size_t, std::size_t> out;
  for (int s : {1, -1}) {
    QMatrix M(d + 1, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) M(i, j) = star_(i, j) - (i == j ? BigRational(s) : BigRational(0));
    for (std::size_t j = 0; j < d; ++j) M(d, j) = boundary_[j];
    std::size_t k = d - rank(M);
    (s == 1 ? out.first : out.second) = k;
  }
  return out;
}

}  // namespace sklift
