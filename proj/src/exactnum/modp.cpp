#include "sklift/exactnum/modp.hpp"

#include <algorithm>
#include <random>

#include "sklift/errors.hpp"

namespace sklift::modp {

u64 pow(u64 base, u64 exp, u64 p) {
  u64 r = 1 % p;
  base %= p;
  while (exp) {
    if (exp & 1) r = mul(r, base, p);
    base = mul(base, base, p);
    exp >>= 1;
  }
  return r;
}

u64 inv(u64 a, u64 p) {
  __int128 t = 0, nt = 1, r = p, nr = a % p;
  while (nr != 0) {
    __int128 q = r / nr;
    std::swap(t, nt);
    nt -= q * t;
    std::swap(r, nr);
    nr -= q * r;
  }
  if (r != 1) throw DomainError("element is not invertible modulo " + std::to_string(p));
  if (t < 0) t += p;
  return static_cast<u64>(t);
}

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ULL, 325ULL, 9375ULL, 28178ULL, 450775ULL, 9780504ULL, 1795265022ULL}) {
    u64 x = pow(a % n, d, n);
    if (a % n == 0 || x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mul(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly add(const Poly& a, const Poly& b, u64 p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    r[i] = add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0, p);
  }
  trim(r);
  return r;
}

Poly sub(const Poly& a, const Poly& b, u64 p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    r[i] = sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0, p);
  }
  trim(r);
  return r;
}

Poly mul(const Poly& a, const Poly& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = add(r[i + j], mul(a[i], b[j], p), p);
  }
  trim(r);
  return r;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b, u64 p) {
  if (b.empty()) throw DomainError("polynomial division by zero mod p");
  Poly r = a;
  trim(r);
  if (r.size() < b.size()) return {{}, r};
  Poly q(r.size() - b.size() + 1, 0);
  u64 linv = inv(b.back(), p);
  for (std::size_t k = q.size(); k-- > 0;) {
    u64 c = mul(r[k + b.size() - 1], linv, p);
    q[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[k + j] = sub(r[k + j], mul(c, b[j], p), p);
  }
  r.resize(b.size() - 1);
  trim(r);
  trim(q);
  return {q, r};
}

Poly rem(const Poly& a, const Poly& b, u64 p) { return divmod(a, b, p).second; }

Poly make_monic(const Poly& f, u64 p) {
  if (f.empty()) return f;
  u64 li = inv(f.back(), p);
  Poly r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) r[i] = mul(f[i], li, p);
  return r;
}

Poly gcd(Poly a, Poly b, u64 p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a, p);
}

ExtGcd ext_gcd(const Poly& a, const Poly& b, u64 p) {
  Poly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
  trim(r0);
  trim(r1);
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1, p);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly s2 = sub(s0, mul(q, s1, p), p);
    Poly t2 = sub(t0, mul(q, t1, p), p);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.empty()) return {r0, s0, t0};
  u64 li = inv(r0.back(), p);
  Poly scale{li};
  return {mul(r0, scale, p), mul(s0, scale, p), mul(t0, scale, p)};
}

Poly derivative(const Poly& f, u64 p) {
  if (f.size() <= 1) return {};
  Poly d(f.size() - 1);
  for (std::size_t i = 1; i < f.size(); ++i) d[i - 1] = mul(f[i], i % p, p);
  trim(d);
  return d;
}

u64 eval(const Poly& f, u64 x, u64 p) {
  u64 acc = 0;
  for (std::size_t i = f.size(); i-- > 0;) acc = add(mul(acc, x, p), f[i], p);
  return acc;
}

Poly powmod(const Poly& base, u64 e, const Poly& m, u64 p) {
  Poly r{1 % p};
  trim(r);
  Poly b = rem(base, m, p);
  while (e) {
    if (e & 1) r = rem(mul(r, b, p), m, p);
    b = rem(mul(b, b, p), m, p);
    e >>= 1;
  }
  return r;
}

bool is_squarefree(const Poly& f, u64 p) {
  Poly g = gcd(f, derivative(f, p), p);
  return g.size() <= 1;
}

namespace {

// Splits a product of distinct monic irreducibles of common degree d.
void equal_degree_split(const Poly& f, std::size_t d, u64 p, std::mt19937_64& rng,
                        std::vector<Poly>& out) {
  if (f.size() - 1 == d) {
    out.push_back(f);
    return;
  }
  const std::size_t n = f.size() - 1;
  // (p^d - 1)/2 can exceed 64 bits, so raise in stages: a^((p^d-1)/2) =
  // prod_{i<d} (a^{p^i})^{(p-1)/2} * ... computed as a^{(p-1)/2 * (1 + p + ... + p^{d-1})}.
  while (true) {
    Poly a(n);
    for (auto& c : a) c = rng() % p;
    trim(a);
    if (a.size() <= 1) continue;
    Poly acc{1};
    Poly frob = a;
    for (std::size_t i = 0; i < d; ++i) {
      acc = rem(mul(acc, frob, p), f, p);
      frob = powmod(frob, p, f, p);
    }
    Poly h = powmod(acc, (p - 1) / 2, f, p);
    h = sub(h, Poly{1}, p);
    Poly g = gcd(f, h, p);
    if (g.size() > 1 && g.size() < f.size()) {
      equal_degree_split(g, d, p, rng, out);
      equal_degree_split(divmod(f, g, p).first, d, p, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<Poly> factor_squarefree(const Poly& f_in, u64 p) {
  if (p == 2) throw DomainError("factorization mod 2 is not supported");
  Poly f = make_monic(f_in, p);
  std::vector<Poly> out;
  if (f.size() <= 1) return out;
  std::mt19937_64 rng(0x5eed5eedULL ^ p);
  Poly x{0, 1};
  Poly h = x;
  for (std::size_t d = 1; 2 * d <= f.size() - 1; ++d) {
    h = powmod(h, p, f, p);
    Poly g = gcd(f, sub(h, x, p), p);
    if (g.size() > 1) {
      equal_degree_split(g, d, p, rng, out);
      f = divmod(f, g, p).first;
      h = rem(h, f, p);
    }
  }
  if (f.size() > 1) out.push_back(f);
  std::sort(out.begin(), out.end(), [](const Poly& a, const Poly& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

std::vector<u64> roots(const Poly& f_in, u64 p) {
  Poly f = f_in;
  trim(f);
  if (f.empty()) throw DomainError("roots of the zero polynomial");
  std::vector<u64> out;
  if (p < 4096) {
    for (u64 x = 0; x < p; ++x)
      if (eval(f, x, p) == 0) out.push_back(x);
    return out;
  }
  Poly x{0, 1};
  Poly g = gcd(f, sub(powmod(x, p, f, p), x, p), p);
  if (g.size() <= 1) return out;
  std::vector<Poly> lin;
  std::mt19937_64 rng(0xabcdef12ULL ^ p);
  equal_degree_split(g, 1, p, rng, lin);
  for (const auto& l : lin) {
    u64 r = l.empty() ? 0 : mul(l[0], inv(l[1], p), p);
    out.push_back(r == 0 ? 0 : p - r);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace sklift::modp
