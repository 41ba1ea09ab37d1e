#include "sklift/lfun/lvalues.hpp"

#include "sklift/errors.hpp"

namespace sklift {

namespace {

using NFMatrix = Matrix<NFElement>;

HomPoly twisted_poly(std::size_t n, int j, long N, long a) {
  // (N X - a Y)^{j-1} Y^{n-j+1}
  HomPoly P(n + 1, BigInt(0));
  BigInt binom = 1;
  for (int s = 0; s <= j - 1; ++s) {
    P[s] = binom * ipow(BigInt(N), s) * ipow(BigInt(-a), j - 1 - s);
    binom = binom * (j - 1 - s) / (s + 1);
  }
  return P;
}

std::string poly_mod_p_string(const modp::Poly& f) {
  std::string s;
  for (std::size_t i = f.size(); i-- > 0;) {
    if (f[i] == 0) continue;
    if (!s.empty()) s += " + ";
    if (f[i] != 1 || i == 0) s += std::to_string(f[i]) + (i > 0 ? "*" : "");
    if (i > 0) s += i > 1 ? "x^" + std::to_string(i) : "x";
  }
  return s.empty() ? "0" : s;
}

NFElement pair(const std::vector<NFElement>& phi, const std::vector<BigRational>& v) {
  NFElement s(0);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (sgn(v[i]) != 0) s = s + phi[i] * NFElement(v[i]);
  return s;
}

}  // namespace

EigenFunctional eigen_functional(const SymbolSpace& S, const NewformData& f, int sign) {
  if (sign != 1 && sign != -1) throw DomainError("sign must be +1 or -1");
  if (S.weight() != f.weight) throw DomainError("symbol space and newform weights differ");
  const std::size_t d = S.dim();
  QMatrix T = S.hecke(2);
  NFElement alpha = hecke_eigenvalue(f, 2);
  NFMatrix M(d, 2 * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      M(i, j) = NFElement(T(i, j)) - (i == j ? alpha : NFElement(0));
      M(i, d + j) = NFElement(S.star()(i, j) - (i == j ? BigRational(sign) : BigRational(0)));
    }
  auto ker = left_kernel(M);
  if (ker.size() != 1)
    throw CheckFailure("eigenfunctional kernel has dimension " + std::to_string(ker.size()) + ", expected 1");
  EigenFunctional out;
  out.sign = sign;
  out.phi = ker[0];
  NFElement lead(0);
  for (const auto& x : out.phi)
    if (!is_zero(x)) {
      lead = x;
      break;
    }
  for (auto& x : out.phi) x = x / lead;
  for (std::size_t i = 0; i <= static_cast<std::size_t>(S.degree()); ++i)
    out.on_generators.push_back(pair(out.phi, S.reduce_monomial(i)));
  return out;
}

std::vector<BigRational> winding_element(const SymbolSpace& S, int j, const DirichletChar& chi) {
  const int w = S.weight();
  if (j <= 0 || j >= w) throw DomainError("j = " + std::to_string(j) + " is outside the critical strip 0 < j < " +
                                          std::to_string(w));
  const std::size_t n = static_cast<std::size_t>(S.degree());
  if (chi.is_trivial()) {
    HomPoly P(n + 1, BigInt(0));
    P[j - 1] = 1;
    return S.reduce(P);
  }
  const long N = static_cast<long>(chi.modulus());
  std::vector<BigRational> tot(S.dim(), BigRational(0));
  for (long a = 0; a < N; ++a) {
    int c = chi(a);
    if (c == 0) continue;
    auto v = S.symbol_to_infinity(twisted_poly(n, j, N, a), a, N);
    for (std::size_t i = 0; i < tot.size(); ++i) tot[i] += c * v[i];
  }
  return tot;
}

AlgebraicLValue l_alg(const SymbolSpace& S, const NewformData& f, int j, const DirichletChar& chi) {
  if (chi.modulus() > 1 && chi.discriminant() == 0) throw DomainError("only quadratic or trivial twists are supported");
  const int sign = ((j % 2 == 0) ? 1 : -1) * chi.parity();
  auto e = winding_element(S, j, chi);
  auto phi = eigen_functional(S, f, sign);
  AlgebraicLValue out;
  out.value = pair(phi.phi, e);
  out.j = j;
  out.character = chi.name();
  out.sign = sign;
  return out;
}

AlgebraicLValue l_alg(const NewformData& f, int j, const DirichletChar& chi) {
  return l_alg(SymbolSpace::build(f.weight), f, j, chi);
}

LValueProduct l_alg_products(const SymbolSpace& S, const NewformData& f, int j, const DirichletChar& chi,
                             std::uint64_t p) {
  auto L = l_alg(S, f, j, chi);
  auto phi = eigen_functional(S, f, L.sign);
  LValueProduct out;
  out.weight = f.weight;
  out.j = j;
  out.character = L.character;
  out.p = p;
  out.zero = is_zero(L.value);
  out.norm = out.zero ? BigRational(0) : L.value.norm(f.field);
  long total = 0;
  for (const auto& P : primes_above(f.field, p)) {
    PrimeValuation pv;
    pv.residue_degree = P.residue_degree;
    pv.factor = poly_mod_p_string(P.factor);
    bool first = true;
    for (const auto& g : phi.on_generators) {
      if (is_zero(g)) continue;
      long v = valuation(g, f.field, P);
      if (first || v < pv.content) pv.content = v;
      first = false;
    }
    if (!out.zero) {
      pv.valuation = valuation(L.value, f.field, P) - pv.content;
      total += P.residue_degree * *pv.valuation;
    }
    out.primes.push_back(pv);
  }
  if (!out.zero) out.valuation = total;
  return out;
}

LValueProduct l_alg_products(int w, int j, const DirichletChar& chi, std::uint64_t p) {
  auto f = newform(w);
  return l_alg_products(SymbolSpace::build(w), f, j, chi, p);
}

}  // namespace sklift
