#include "sklift/exactnum/bigint.hpp"

#include "sklift/errors.hpp"
#include "sklift/exactnum/modp.hpp"

namespace sklift {

BigRational make_rational(const BigInt& num, const BigInt& den) {
  if (sgn(den) == 0) throw DomainError("zero denominator");
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const BigInt& z) { return z.get_str(); }

std::string to_string(const BigRational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

BigInt parse_integer(const std::string& text) {
  BigInt z;
  if (text.empty() || z.set_str(text, 10) != 0) {
    throw DomainError("not an integer: '" + text + "'");
  }
  return z;
}

BigRational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return BigRational(parse_integer(text));
  return make_rational(parse_integer(text.substr(0, slash)),
                       parse_integer(text.substr(slash + 1)));
}

BigInt ipow(const BigInt& base, unsigned long exp) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

BigRational qpow(const BigRational& base, long exp) {
  if (exp >= 0) {
    return make_rational(ipow(base.get_num(), exp), ipow(base.get_den(), exp));
  }
  if (sgn(base) == 0) throw DomainError("negative power of zero");
  unsigned long e = static_cast<unsigned long>(-exp);
  return make_rational(ipow(base.get_den(), e), ipow(base.get_num(), e));
}

long valuation(const BigInt& z, const BigInt& p) {
  if (sgn(z) == 0) throw DomainError("valuation of zero");
  BigInt t = z;
  long v = 0;
  while (mpz_divisible_p(t.get_mpz_t(), p.get_mpz_t())) {
    mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), p.get_mpz_t());
    ++v;
  }
  return v;
}

long valuation(const BigRational& q, const BigInt& p) {
  return valuation(q.get_num(), p) - valuation(q.get_den(), p);
}

std::uint64_t reduce_mod(const BigInt& z, std::uint64_t p) {
  return mpz_fdiv_ui(z.get_mpz_t(), p);
}

std::uint64_t reduce_mod(const BigRational& q, std::uint64_t p) {
  std::uint64_t den = reduce_mod(q.get_den(), p);
  if (den == 0) {
    throw DomainError("prime " + std::to_string(p) + " divides a denominator");
  }
  return modp::mul(reduce_mod(q.get_num(), p), modp::inv(den, p), p);
}

}  // namespace sklift
