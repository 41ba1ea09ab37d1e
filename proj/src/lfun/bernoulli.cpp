#include "sklift/lfun/bernoulli.hpp"

#include "sklift/errors.hpp"
#include "sklift/exactnum/ntt.hpp"

namespace sklift {

namespace {

void require_odd_prime(std::uint64_t p) {
  if (p < 3 || !modp::is_prime_u64(p)) throw DomainError(std::to_string(p) + " is not an odd prime");
}

}  // namespace

std::vector<std::uint64_t> bernoulli_table_mod_p(std::uint64_t p, std::size_t len) {
  require_odd_prime(p);
  if (len > p - 1) throw DomainError("Bernoulli numbers mod p are only tabulated below index p-1");
  if (len == 0) return {};
  // factorials and inverse factorials up to len
  std::vector<std::uint64_t> fact(len + 1), ifact(len + 1);
  fact[0] = 1;
  for (std::size_t i = 1; i <= len; ++i) fact[i] = modp::mul(fact[i - 1], i % p, p);
  ifact[len] = modp::inv(fact[len], p);
  for (std::size_t i = len; i-- > 0;) ifact[i] = modp::mul(ifact[i + 1], (i + 1) % p, p);
  // (e^t - 1)/t = sum t^k/(k+1)!
  std::vector<std::uint64_t> a(len);
  for (std::size_t k = 0; k < len; ++k) a[k] = ifact[k + 1];
  auto inv = ntt::inverse_series_mod(a, p, len);
  std::vector<std::uint64_t> b(len);
  for (std::size_t n = 0; n < len; ++n) b[n] = modp::mul(inv[n], fact[n], p);
  return b;
}

PrimeFieldElement bernoulli_mod_p(std::uint64_t n, std::uint64_t p) {
  require_odd_prime(p);
  if (n % 2 != 0 || n < 2) throw DomainError("bernoulli_mod_p needs even n >= 2");
  if (n % (p - 1) == 0) throw DomainError("(p-1) | n: B_n has p in its denominator (von Staudt-Clausen)");
  if (n > p - 3) {
    // Kummer: B_n/n = B_m/m mod p for m = n mod (p-1)
    const std::uint64_t m = n % (p - 1);
    auto t = bernoulli_table_mod_p(p, m + 1);
    std::uint64_t bm = modp::mul(t[m], modp::inv(m % p, p), p);
    return PrimeFieldElement(modp::mul(bm, n % p, p), p);
  }
  auto t = bernoulli_table_mod_p(p, n + 1);
  return PrimeFieldElement(t[n], p);
}

std::vector<std::uint64_t> irregular_scan(std::uint64_t p) {
  require_odd_prime(p);
  std::vector<std::uint64_t> out;
  if (p < 5) return out;
  auto t = bernoulli_table_mod_p(p, p - 2);
  for (std::uint64_t n = 2; n <= p - 3; n += 2)
    if (t[n] == 0) out.push_back(n);
  return out;
}

std::vector<std::uint64_t> irregular_scan_naive(std::uint64_t p, bool allow_slow) {
  require_odd_prime(p);
  if (p >= 5000 && !allow_slow) throw DomainError("naive scan is quadratic; pass the slow-path flag");
  std::vector<std::uint64_t> out;
  if (p < 5) return out;
  // sum_{j=0}^{m} C(m+1, j) B_j = 0 over F_p
  std::vector<std::uint64_t> b{1};
  std::vector<std::uint64_t> row{1, 1};  // C(1, .)
  for (std::uint64_t m = 1; m <= p - 3; ++m) {
    std::vector<std::uint64_t> next(row.size() + 1, 1);
    for (std::size_t j = 1; j < row.size(); ++j) next[j] = modp::add(row[j - 1], row[j], p);
    row = std::move(next);  // C(m+1, .)
    std::uint64_t s = 0;
    for (std::uint64_t j = 0; j < m; ++j) s = modp::add(s, modp::mul(row[j], b[j], p), p);
    b.push_back(modp::mul((p - s) % p, modp::inv((m + 1) % p, p), p));
    if (m % 2 == 0 && b[m] == 0) out.push_back(m);
  }
  return out;
}

}  // namespace sklift
