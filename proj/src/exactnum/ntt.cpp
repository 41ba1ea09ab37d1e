#include "sklift/exactnum/ntt.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "sklift/errors.hpp"
#include "sklift/exactnum/modp.hpp"

namespace sklift::ntt {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

struct NttPrime {
  u64 p;
  u64 g;
};

// Primes c * 2^24 + 1 just below 2^62 with a primitive root each.
constexpr std::array<NttPrime, 48> kPrimes{{
    {4611686018326724609ULL, 3},  {4611686018309947393ULL, 5},  {4611686018058289153ULL, 5},
    {4611686017974403073ULL, 3},  {4611686017773076481ULL, 3},  {4611686017554972673ULL, 5},
    {4611686016867106817ULL, 3},  {4611686016649003009ULL, 17}, {4611686015709478913ULL, 3},
    {4611686015004835841ULL, 3},  {4611686014887395329ULL, 11}, {4611686014753177601ULL, 3},
    {4611686014283415553ULL, 5},  {4611686014182752257ULL, 10}, {4611686014048534529ULL, 3},
    {4611686013377445889ULL, 7},  {4611686013092233217ULL, 3},  {4611686012840574977ULL, 5},
    {4611686011934605313ULL, 3},  {4611686011263516673ULL, 7},  {4611686010407878657ULL, 5},
    {4611686009971671041ULL, 6},  {4611686009753567233ULL, 5},  {4611686009602572289ULL, 19},
    {4611686008646270977ULL, 5},  {4611686008394612737ULL, 5},  {4611686008059068417ULL, 3},
    {4611686007840964609ULL, 13}, {4611686007555751937ULL, 3},  {4611686007488643073ULL, 5},
    {4611686007455088641ULL, 3},  {4611686007404756993ULL, 3},  {4611686007236984833ULL, 5},
    {4611686007136321537ULL, 10}, {4611686007085989889ULL, 22}, {4611686005878030337ULL, 5},
    {4611686005022392321ULL, 19}, {4611686004066091009ULL, 13}, {4611686003613106177ULL, 5},
    {4611686003260784641ULL, 11}, {4611686003059458049ULL, 7},  {4611686002774245377ULL, 3},
    {4611686002757468161ULL, 19}, {4611686002707136513ULL, 5},  {4611686002002493441ULL, 14},
    {4611686001717280769ULL, 3},  {4611686001264295937ULL, 3},  {4611686001213964289ULL, 3},
}};

// Montgomery arithmetic modulo an odd n < 2^62 with R = 2^64.
class Montgomery {
 public:
  explicit Montgomery(u64 n) : n_(n) {
    u64 inv = n;
    for (int i = 0; i < 6; ++i) inv *= 2 - n * inv;
    ninv_ = inv;  // n * ninv == 1 mod 2^64
    const u64 r1 = (0 - n) % n;  // 2^64 mod n
    r2_ = static_cast<u64>(static_cast<u128>(r1) * r1 % n);
  }
  u64 modulus() const { return n_; }
  u64 reduce(u128 t) const {
    u64 m = static_cast<u64>(t) * -ninv_;
    u64 u = static_cast<u64>((t + static_cast<u128>(m) * n_) >> 64);
    return u >= n_ ? u - n_ : u;
  }
  u64 mul(u64 a, u64 b) const { return reduce(static_cast<u128>(a) * b); }
  u64 to(u64 a) const { return reduce(static_cast<u128>(a % n_) * r2_); }
  u64 from(u64 a) const { return reduce(a); }
  u64 add(u64 a, u64 b) const {
    u64 s = a + b;
    return s >= n_ ? s - n_ : s;
  }
  u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + n_ - b; }

 private:
  u64 n_, ninv_, r2_;
};

void transform(std::vector<u64>& a, const Montgomery& mg, u64 root_mont, bool invert) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  // root_mont is a primitive n-th root of unity (Montgomery form).
  std::vector<u64> roots;
  for (std::size_t len = 2; len <= n; len <<= 1) {
    u64 w = root_mont;
    for (std::size_t k = n; k > len; k >>= 1) w = mg.mul(w, w);
    if (invert) {
      // inverse root: w^(len-1)
      u64 wi = mg.to(1);
      for (std::size_t e = len - 1, b = w; e; e >>= 1) {
        if (e & 1) wi = mg.mul(wi, b);
        b = mg.mul(b, b);
      }
      w = wi;
    }
    const std::size_t half = len / 2;
    roots.assign(half, 0);
    roots[0] = mg.to(1);
    for (std::size_t i = 1; i < half; ++i) roots[i] = mg.mul(roots[i - 1], w);
    for (std::size_t i = 0; i < n; i += len) {
      for (std::size_t j = 0; j < half; ++j) {
        u64 u = a[i + j];
        u64 v = mg.mul(a[i + j + half], roots[j]);
        a[i + j] = mg.add(u, v);
        a[i + j + half] = mg.sub(u, v);
      }
    }
  }
  if (invert) {
    u64 ninv = mg.to(modp::inv(n % mg.modulus(), mg.modulus()));
    for (auto& x : a) x = mg.mul(x, ninv);
  }
}

// Cyclic-free product of a and b (residues mod prime) truncated to len.
std::vector<u64> convolve_prime(const std::vector<u64>& a, const std::vector<u64>& b,
                                const NttPrime& pr, std::size_t len) {
  std::size_t need = std::min(len, a.size() + b.size() - 1);
  std::size_t n = 1;
  while (n < a.size() + b.size() - 1) n <<= 1;
  if (n > kMaxLength) throw PrecisionError("series too long for the NTT prime table");
  Montgomery mg(pr.p);
  u64 root = mg.to(modp::pow(pr.g, (pr.p - 1) / n, pr.p));
  std::vector<u64> fa(n, 0), fb(n, 0);
  for (std::size_t i = 0; i < a.size(); ++i) fa[i] = mg.to(a[i]);
  for (std::size_t i = 0; i < b.size(); ++i) fb[i] = mg.to(b[i]);
  transform(fa, mg, root, false);
  transform(fb, mg, root, false);
  for (std::size_t i = 0; i < n; ++i) fa[i] = mg.mul(fa[i], fb[i]);
  transform(fa, mg, root, true);
  std::vector<u64> out(need);
  for (std::size_t i = 0; i < need; ++i) out[i] = mg.from(fa[i]);
  return out;
}

std::size_t bit_length(const BigInt& z) { return sgn(z) == 0 ? 0 : mpz_sizeinbase(z.get_mpz_t(), 2); }

}  // namespace

std::vector<u64> convolve_mod(const std::vector<u64>& a, const std::vector<u64>& b, u64 p,
                              std::size_t len) {
  if (a.empty() || b.empty() || len == 0) return std::vector<u64>(len, 0);
  std::vector<u64> ta(a.begin(), a.begin() + std::min(a.size(), len));
  std::vector<u64> tb(b.begin(), b.begin() + std::min(b.size(), len));
  const std::size_t terms = std::min(ta.size(), tb.size());
  if (terms < kSchoolbookThreshold) {
    std::vector<u64> out(len, 0);
    for (std::size_t i = 0; i < ta.size(); ++i) {
      if (ta[i] == 0) continue;
      for (std::size_t j = 0; j < tb.size() && i + j < len; ++j)
        out[i + j] = modp::add(out[i + j], modp::mul(ta[i], tb[j], p), p);
    }
    return out;
  }
  // Need prod(primes) > terms * (p-1)^2.
  const long double bound_bits =
      2.0L * std::log2(static_cast<long double>(p)) + std::log2(static_cast<long double>(terms)) + 1;
  std::size_t k = 1;
  while (61.0L * k < bound_bits) ++k;
  if (k > 3) throw DomainError("convolve_mod supports moduli below 2^62");
  std::vector<std::vector<u64>> res;
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<u64> ra(ta), rb(tb);
    for (auto& x : ra) x %= kPrimes[i].p;
    for (auto& x : rb) x %= kPrimes[i].p;
    res.push_back(convolve_prime(ra, rb, kPrimes[i], len));
  }
  std::vector<u64> out(len, 0);
  const std::size_t have = res[0].size();
  if (k == 1) {
    for (std::size_t i = 0; i < have; ++i) out[i] = res[0][i] % p;
    return out;
  }
  // Garner: x = x0 + x1*P0 (+ x2*P0*P1), reduced mod p.
  const u64 p0 = kPrimes[0].p, p1 = kPrimes[1].p;
  const u64 inv01 = modp::inv(p0 % p1, p1);
  const u64 p0_mod_p = p0 % p;
  u64 inv012 = 0, p0p1_mod_p2 = 0, p0p1_mod_p = 0;
  if (k == 3) {
    const u64 p2 = kPrimes[2].p;
    p0p1_mod_p2 = modp::mul(p0 % p2, p1 % p2, p2);
    inv012 = modp::inv(p0p1_mod_p2, p2);
    p0p1_mod_p = modp::mul(p0 % p, p1 % p, p);
  }
  for (std::size_t i = 0; i < have; ++i) {
    u64 x0 = res[0][i];
    u64 x1 = modp::mul(modp::sub(res[1][i], x0 % p1, p1), inv01, p1);
    u64 r = modp::add(x0 % p, modp::mul(x1 % p, p0_mod_p, p), p);
    if (k == 3) {
      const u64 p2 = kPrimes[2].p;
      u64 partial = modp::add(x0 % p2, modp::mul(x1 % p2, p0 % p2, p2), p2);
      u64 x2 = modp::mul(modp::sub(res[2][i], partial, p2), inv012, p2);
      r = modp::add(r, modp::mul(x2 % p, p0p1_mod_p, p), p);
    }
    out[i] = r;
  }
  return out;
}

std::vector<BigInt> multiply_schoolbook(const std::vector<BigInt>& a, const std::vector<BigInt>& b,
                                        std::size_t len) {
  std::vector<BigInt> out(len, 0);
  for (std::size_t i = 0; i < a.size() && i < len; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size() && i + j < len; ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  return out;
}

std::vector<BigInt> multiply(const std::vector<BigInt>& a, const std::vector<BigInt>& b,
                             std::size_t len) {
  const std::size_t na = std::min(a.size(), len), nb = std::min(b.size(), len);
  if (na == 0 || nb == 0) return std::vector<BigInt>(len, 0);
  if (std::min(na, nb) < kSchoolbookThreshold) return multiply_schoolbook(a, b, len);
  std::size_t ba = 0, bb = 0;
  for (std::size_t i = 0; i < na; ++i) ba = std::max(ba, bit_length(a[i]));
  for (std::size_t i = 0; i < nb; ++i) bb = std::max(bb, bit_length(b[i]));
  std::size_t terms_bits = 1;
  while ((std::size_t{1} << terms_bits) < std::min(na, nb)) ++terms_bits;
  // |c_i| < 2^(ba+bb+terms_bits); signed recovery needs one more bit.
  const std::size_t need_bits = ba + bb + terms_bits + 2;
  const std::size_t k = (need_bits + 60) / 61;
  if (k > kPrimes.size()) return multiply_schoolbook(a, b, len);

  std::vector<std::vector<u64>> res(k);
  for (std::size_t t = 0; t < k; ++t) {
    const u64 p = kPrimes[t].p;
    std::vector<u64> ra(na), rb(nb);
    for (std::size_t i = 0; i < na; ++i) ra[i] = mpz_fdiv_ui(a[i].get_mpz_t(), p);
    for (std::size_t i = 0; i < nb; ++i) rb[i] = mpz_fdiv_ui(b[i].get_mpz_t(), p);
    res[t] = convolve_prime(ra, rb, kPrimes[t], len);
  }
  // Garner mixed-radix reconstruction, then shift to the symmetric range.
  std::vector<std::vector<u64>> inv(k, std::vector<u64>(k, 0));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < i; ++j) inv[j][i] = modp::inv(kPrimes[j].p % kPrimes[i].p, kPrimes[i].p);
  BigInt modulus = 1;
  for (std::size_t t = 0; t < k; ++t) modulus *= BigInt(static_cast<unsigned long>(kPrimes[t].p));
  BigInt half = modulus / 2;

  const std::size_t have = res[0].size();
  std::vector<BigInt> out(len, 0);
  std::vector<u64> digits(k);
  for (std::size_t i = 0; i < have; ++i) {
    for (std::size_t t = 0; t < k; ++t) {
      const u64 p = kPrimes[t].p;
      u64 x = res[t][i];
      for (std::size_t j = 0; j < t; ++j) {
        x = modp::mul(modp::sub(x, digits[j] % p, p), inv[j][t], p);
      }
      digits[t] = x;
    }
    BigInt v = static_cast<unsigned long>(digits[k - 1]);
    for (std::size_t t = k - 1; t-- > 0;) {
      v *= static_cast<unsigned long>(kPrimes[t].p);
      v += static_cast<unsigned long>(digits[t]);
    }
    if (v > half) v -= modulus;
    out[i] = std::move(v);
  }
  return out;
}

std::vector<u64> inverse_series_mod(const std::vector<u64>& a, u64 p, std::size_t len) {
  if (a.empty() || a[0] % p == 0) throw DomainError("series inverse needs a unit constant term");
  std::vector<u64> inv{modp::inv(a[0] % p, p)};
  std::size_t have = 1;
  while (have < len) {
    std::size_t next = std::min(2 * have, len);
    std::vector<u64> head(a.begin(), a.begin() + std::min(a.size(), next));
    // inv <- inv * (2 - a*inv)
    std::vector<u64> e = convolve_mod(head, inv, p, next);
    for (auto& x : e) x = x == 0 ? 0 : p - x;
    e[0] = modp::add(e[0], 2 % p, p);
    inv = convolve_mod(inv, e, p, next);
    have = next;
  }
  inv.resize(len);
  return inv;
}

}  // namespace sklift::ntt
