#include "sklift/exactnum/factor.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

#include "sklift/errors.hpp"
#include "sklift/exactnum/modp.hpp"

namespace sklift {

namespace {

const std::vector<std::uint32_t>& small_primes(std::uint64_t bound) {
  static std::mutex mu;
  static std::vector<std::uint32_t> primes;
  static std::uint64_t sieved = 0;
  std::lock_guard<std::mutex> lock(mu);
  if (sieved < bound) {
    std::vector<bool> comp(bound + 1, false);
    primes.clear();
    for (std::uint64_t i = 2; i <= bound; ++i) {
      if (comp[i]) continue;
      primes.push_back(static_cast<std::uint32_t>(i));
      for (std::uint64_t j = i * i; j <= bound; j += i) comp[j] = true;
    }
    sieved = bound;
  }
  return primes;
}

// One nontrivial factor of composite n, or 0 if the budget runs out.
BigInt pollard_brent(const BigInt& n, std::uint64_t budget) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1; c < 64; ++c) {
    BigInt y = 2, x, q = 1, g = 1, ys;
    std::uint64_t r = 1, spent = 0;
    const std::uint64_t m = 128;
    auto step = [&](BigInt& v) {
      v = v * v + c;
      v %= n;
    };
    while (g == 1 && spent < budget) {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) step(y);
      std::uint64_t k = 0;
      while (k < r && g == 1) {
        ys = y;
        for (std::uint64_t i = 0; i < std::min(m, r - k); ++i) {
          step(y);
          BigInt d = abs(x - y);
          q = (q * d) % n;
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      }
      spent += r;
      r *= 2;
    }
    if (g == n) {
      do {
        step(ys);
        BigInt d = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n && g != 1) return g;
    if (spent >= budget) return 0;
  }
  return 0;
}

void split(const BigInt& n, std::uint64_t budget, std::map<BigInt, PrimePower>& out) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    auto& pp = out[n];
    pp.prime = n;
    ++pp.exponent;
    return;
  }
  BigInt d = pollard_brent(n, budget);
  if (d == 0) {
    auto& pp = out[n];
    pp.prime = n;
    pp.proven = false;
    ++pp.exponent;
    return;
  }
  split(d, budget, out);
  split(BigInt(n / d), budget, out);
}

// ---- polynomial helpers over Z/m ---------------------------------------

BigInt mod_pos(const BigInt& a, const BigInt& m) {
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

ZPoly reduce(const ZPoly& f, const BigInt& m) {
  std::vector<BigInt> v;
  for (const auto& c : f.coeffs()) v.push_back(mod_pos(c, m));
  return ZPoly(std::move(v));
}

ZPoly symmetric(const ZPoly& f, const BigInt& m) {
  BigInt half = m / 2;
  std::vector<BigInt> v;
  for (const auto& c : f.coeffs()) {
    BigInt r = mod_pos(c, m);
    if (r > half) r -= m;
    v.push_back(r);
  }
  return ZPoly(std::move(v));
}

modp::Poly to_modp(const ZPoly& f, std::uint64_t p) {
  modp::Poly v;
  for (const auto& c : f.coeffs()) v.push_back(reduce_mod(c, p));
  modp::trim(v);
  return v;
}

ZPoly from_modp(const modp::Poly& f) {
  std::vector<BigInt> v;
  for (auto c : f) v.emplace_back(static_cast<unsigned long>(c));
  return ZPoly(std::move(v));
}

// F(y) = a^{n-1} f(y/a) is monic when a = lc(f).
ZPoly monicize(const ZPoly& f, BigInt& a) {
  a = f.leading();
  const int n = f.degree();
  std::vector<BigInt> v(n + 1);
  for (int i = 0; i < n; ++i) v[i] = f.coeff(i) * ipow(a, n - 1 - i);
  v[n] = 1;
  return ZPoly(std::move(v));
}

ZPoly scale_back(const ZPoly& g, const BigInt& a) {
  // g(a x), then primitive part.
  std::vector<BigInt> v;
  for (int i = 0; i <= g.degree(); ++i) v.push_back(g.coeff(i) * ipow(a, i));
  return primitive_part(to_qpoly(ZPoly(std::move(v))));
}

// Squarefree monic integer polynomial into irreducible factors (Zassenhaus).
std::vector<ZPoly> zassenhaus(const ZPoly& f) {
  const int n = f.degree();
  if (n <= 1) return {f};
  // Choose a prime keeping f squarefree; prefer few modular factors.
  std::uint64_t best_p = 0;
  std::vector<modp::Poly> best;
  int tried = 0;
  for (std::uint64_t p = 3; tried < 8 && p < 100000; p += 2) {
    if (!modp::is_prime_u64(p)) continue;
    modp::Poly fp = to_modp(f, p);
    if (static_cast<int>(fp.size()) - 1 != n || !modp::is_squarefree(fp, p)) continue;
    ++tried;
    auto fac = modp::factor_squarefree(fp, p);
    if (best_p == 0 || fac.size() < best.size()) {
      best_p = p;
      best = std::move(fac);
    }
    if (best.size() == 1) break;
  }
  if (best_p == 0) throw DomainError("no suitable prime for factorization");
  if (best.size() == 1) return {f};
  // Mignotte-type bound on factor coefficients: 2^n * ||f||_2.
  BigInt norm2 = 0;
  for (const auto& c : f.coeffs()) norm2 += c * c;
  BigInt root;
  mpz_sqrt(root.get_mpz_t(), norm2.get_mpz_t());
  root += 1;
  BigInt bound = 2 * ipow(BigInt(2), n) * root + 1;
  unsigned e = 1;
  BigInt pe = best_p;
  while (pe <= bound) {
    pe *= best_p;
    ++e;
  }
  std::vector<ZPoly> lifted = hensel_lift(f, best, best_p, e);
  std::vector<ZPoly> result;
  ZPoly rest = f;
  std::size_t s = 1;
  while (2 * s <= lifted.size()) {
    bool found = false;
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    while (true) {
      ZPoly prod = ZPoly::constant(BigInt(1));
      for (auto i : idx) prod = reduce(prod * lifted[i], pe);
      ZPoly cand = symmetric(prod, pe);
      auto [q, r] = divmod(to_qpoly(rest), to_qpoly(cand));
      bool integral = r.is_zero();
      for (const auto& c : q.coeffs())
        if (c.get_den() != 1) integral = false;
      if (integral) {
        result.push_back(cand);
        rest = primitive_part(q);
        for (std::size_t k = s; k-- > 0;) lifted.erase(lifted.begin() + idx[k]);
        found = true;
        break;
      }
      // next combination
      std::size_t k = s;
      while (k > 0 && idx[k - 1] == lifted.size() - s + k - 1) --k;
      if (k == 0) break;
      ++idx[k - 1];
      for (std::size_t j = k; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++s;
  }
  result.push_back(rest);
  return result;
}

}  // namespace

BigInt IntegerFactorization::value() const {
  BigInt v = sign;
  for (const auto& f : factors) v *= ipow(f.prime, f.exponent);
  return v;
}

std::string IntegerFactorization::to_string() const {
  std::ostringstream out;
  if (sign < 0) out << "-";
  if (factors.empty()) out << "1";
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) out << " * ";
    out << factors[i].prime.get_str();
    if (factors[i].exponent > 1) out << "^" << factors[i].exponent;
  }
  return out.str();
}

bool is_probable_prime(const BigInt& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

IntegerFactorization factor_integer(const BigInt& n_in, std::uint64_t trial_bound,
                                    std::uint64_t rho_iterations) {
  if (sgn(n_in) == 0) throw DomainError("cannot factor zero");
  IntegerFactorization out;
  out.sign = sgn(n_in) < 0 ? -1 : 1;
  BigInt n = abs(n_in);
  const auto& primes = small_primes(trial_bound);
  for (std::uint32_t p : primes) {
    if (p > trial_bound) break;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      PrimePower pp{BigInt(p), 0, true};
      while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
        mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
        ++pp.exponent;
      }
      out.factors.push_back(pp);
    }
    if (n == 1) break;
    if (BigInt(p) * p > n) {
      // n is prime (or 1)
      break;
    }
  }
  if (n > 1) {
    std::map<BigInt, PrimePower> rest;
    split(n, rho_iterations, rest);
    for (auto& [k, v] : rest) {
      if (!v.proven) out.complete = false;
      out.factors.push_back(v);
    }
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; });
  return out;
}

std::vector<ZPoly> hensel_lift(const ZPoly& f, const std::vector<modp::Poly>& factors,
                               std::uint64_t p, unsigned e) {
  if (f.is_zero() || f.leading() != 1) throw DomainError("hensel_lift needs a monic polynomial");
  const std::size_t r = factors.size();
  modp::Poly fp = to_modp(f, p);
  // Partial-fraction coefficients u_i = (prod_{k != i} g_k)^{-1} mod g_i.
  std::vector<modp::Poly> u(r);
  for (std::size_t i = 0; i < r; ++i) {
    modp::Poly other = modp::divmod(fp, factors[i], p).first;
    auto eg = modp::ext_gcd(modp::rem(other, factors[i], p), factors[i], p);
    if (eg.g.size() != 1) throw DomainError("hensel_lift: factors not coprime mod p");
    u[i] = eg.s;
  }
  std::vector<ZPoly> g;
  for (const auto& fac : factors) g.push_back(from_modp(modp::make_monic(fac, p)));
  BigInt pj = p;
  for (unsigned j = 1; j < e; ++j) {
    BigInt next = pj * p;
    ZPoly prod = ZPoly::constant(BigInt(1));
    for (const auto& gi : g) prod = reduce(prod * gi, next);
    ZPoly diff = reduce(f - prod, next);
    std::vector<BigInt> ev;
    for (const auto& c : diff.coeffs()) ev.push_back(c / pj);
    modp::Poly err = to_modp(ZPoly(std::move(ev)), p);
    for (std::size_t i = 0; i < r; ++i) {
      modp::Poly delta = modp::rem(modp::mul(err, u[i], p), factors[i], p);
      g[i] = reduce(g[i] + pj * from_modp(delta), next);
    }
    pj = next;
  }
  return g;
}

std::vector<PolyFactor> factor_over_q(const QPoly& fq) {
  if (fq.is_zero()) throw DomainError("cannot factor the zero polynomial");
  std::vector<PolyFactor> out;
  if (fq.degree() == 0) return out;
  // Squarefree decomposition (Yun) over Q.
  QPoly f = monic(fq);
  QPoly a = gcd(f, f.derivative());
  QPoly b = divmod(f, a).first;
  unsigned mult = 1;
  while (b.degree() > 0) {
    QPoly c = gcd(a, b);
    QPoly sqf = divmod(b, c).first;
    if (sqf.degree() > 0) {
      ZPoly z = primitive_part(sqf);
      BigInt lc;
      ZPoly F = monicize(z, lc);
      for (const auto& piece : zassenhaus(F)) out.push_back({scale_back(piece, lc), mult});
    }
    b = c;
    a = divmod(a, c).first;
    ++mult;
  }
  std::sort(out.begin(), out.end(), [](const PolyFactor& x, const PolyFactor& y) {
    if (x.factor.degree() != y.factor.degree()) return x.factor.degree() < y.factor.degree();
    return x.multiplicity < y.multiplicity;
  });
  return out;
}

IrreducibilityCertificate irreducibility_certificate(const QPoly& fq) {
  IrreducibilityCertificate cert;
  if (fq.degree() < 1) throw DomainError("irreducibility of a constant");
  const int n = fq.degree();
  if (n == 1) {
    cert.irreducible = true;
    cert.evidence = "linear";
    return cert;
  }
  ZPoly f = primitive_part(fq);
  // Possible degrees of a rational factor: intersection over good primes of
  // subset sums of the modular factor degrees.
  std::vector<bool> possible(n + 1, true);
  std::ostringstream ev;
  int used = 0;
  for (std::uint64_t p = 3; p < 2000 && used < 12; p += 2) {
    if (!modp::is_prime_u64(p)) continue;
    modp::Poly fp = to_modp(f, p);
    if (static_cast<int>(fp.size()) - 1 != n || !modp::is_squarefree(fp, p)) continue;
    ++used;
    auto fac = modp::factor_squarefree(fp, p);
    std::vector<bool> sums(n + 1, false);
    sums[0] = true;
    ev << (used > 1 ? "; " : "") << "mod " << p << ": [";
    for (std::size_t i = 0; i < fac.size(); ++i) {
      int d = static_cast<int>(fac[i].size()) - 1;
      ev << (i ? "," : "") << d;
      for (int s = n; s >= d; --s)
        if (sums[s - d]) sums[s] = true;
    }
    ev << "]";
    for (int d = 0; d <= n; ++d) possible[d] = possible[d] && sums[d];
    bool only_trivial = true;
    for (int d = 1; d < n; ++d)
      if (possible[d]) only_trivial = false;
    if (only_trivial) {
      cert.irreducible = true;
      cert.evidence = ev.str();
      return cert;
    }
  }
  auto facs = factor_over_q(fq);
  cert.irreducible = facs.size() == 1 && facs[0].multiplicity == 1;
  std::ostringstream fe;
  fe << ev.str() << "; Zassenhaus:";
  for (const auto& pf : facs) fe << " (" << poly_to_string(to_qpoly(pf.factor)) << ")^" << pf.multiplicity;
  cert.evidence = fe.str();
  return cert;
}

}  // namespace sklift
