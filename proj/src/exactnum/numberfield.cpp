#include "sklift/exactnum/numberfield.hpp"

#include <sstream>

#include "sklift/errors.hpp"
#include "sklift/exactnum/factor.hpp"

namespace sklift {

FieldPtr NumberField::create(const QPoly& g, const std::string& var) {
  if (g.degree() < 1) throw DomainError("number field needs a nonconstant polynomial");
  auto cert = irreducibility_certificate(g);
  if (!cert.irreducible)
    throw DomainError("defining polynomial is reducible: " + cert.evidence);
  auto* nf = new NumberField();
  nf->defining_ = g;
  nf->modulus_ = monic(g);
  nf->var_ = var;
  nf->certificate_ = cert.evidence;
  return FieldPtr(nf);
}

NFElement::NFElement(FieldPtr field, std::vector<BigRational> coeffs)
    : field_(std::move(field)), c_(std::move(coeffs)) {
  if (field_ && static_cast<int>(c_.size()) > field_->degree()) {
    c_ = divmod(QPoly(c_), field_->modulus()).second.coeffs();
  }
  trim();
}

NFElement NFElement::generator(const FieldPtr& field) {
  return NFElement(field, {BigRational(0), BigRational(1)});
}

void NFElement::trim() {
  while (!c_.empty() && sklift::is_zero(c_.back())) c_.pop_back();
}

BigRational NFElement::rational_value() const {
  if (!is_rational()) throw DomainError("element is not rational");
  return c_.empty() ? BigRational(0) : c_[0];
}

FieldPtr common_field(const NFElement& a, const NFElement& b) {
  if (a.field() && b.field() && a.field() != b.field())
    throw DomainError("elements of different number fields");
  return a.field() ? a.field() : b.field();
}

NFElement operator+(const NFElement& a, const NFElement& b) {
  std::vector<BigRational> v(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
  return NFElement(common_field(a, b), std::move(v));
}

NFElement operator-(const NFElement& a, const NFElement& b) {
  std::vector<BigRational> v(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) - b.coeff(i);
  return NFElement(common_field(a, b), std::move(v));
}

NFElement operator-(const NFElement& a) {
  std::vector<BigRational> v(a.c_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = -a.c_[i];
  return NFElement(a.field_, std::move(v));
}

NFElement operator*(const NFElement& a, const NFElement& b) {
  FieldPtr f = common_field(a, b);
  if (a.c_.empty() || b.c_.empty()) return NFElement(f, {});
  if (a.c_.size() == 1 || b.c_.size() == 1) {
    const NFElement& s = a.c_.size() == 1 ? a : b;
    const NFElement& o = a.c_.size() == 1 ? b : a;
    std::vector<BigRational> v(o.c_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = s.c_[0] * o.c_[i];
    return NFElement(f, std::move(v));
  }
  QPoly prod = QPoly(a.c_) * QPoly(b.c_);
  return NFElement(f, prod.coeffs());
}

NFElement NFElement::inverse() const {
  if (c_.empty()) throw DomainError("inverse of zero");
  if (c_.size() == 1) return NFElement(field_, {BigRational(1) / c_[0]});
  // Extended Euclid in Q[x]: s*e + t*g = 1.
  QPoly r0 = field_->modulus(), r1(c_);
  QPoly s0, s1 = QPoly::constant(BigRational(1));
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    QPoly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.degree() != 0) throw DomainError("element is not invertible");
  QPoly inv = (BigRational(1) / r0.leading()) * s0;
  return NFElement(field_, inv.coeffs());
}

NFElement operator/(const NFElement& a, const NFElement& b) {
  common_field(a, b);
  NFElement binv = b.inverse();
  return a * binv;
}

bool operator==(const NFElement& a, const NFElement& b) {
  if (a.c_.size() != b.c_.size()) return false;
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    if (a.c_[i] != b.c_[i]) return false;
  if (a.c_.size() > 1 && a.field_ != b.field_) return false;
  return true;
}

NFElement NFElement::pow(unsigned long e) const {
  NFElement r(field_, {BigRational(1)});
  NFElement b = *this;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

QMatrix NFElement::multiplication_matrix(const FieldPtr& field) const {
  if (!field) throw DomainError("multiplication matrix needs a field");
  if (field_ && field_ != field) throw DomainError("element of a different field");
  const int d = field->degree();
  QMatrix m(d, d);
  NFElement col(field, coeffs());
  NFElement gen = NFElement::generator(field);
  for (int j = 0; j < d; ++j) {
    for (int i = 0; i < d; ++i) m(i, j) = col.coeff(i);
    col = col * gen;
  }
  return m;
}

BigRational NFElement::norm(const FieldPtr& field) const {
  return determinant(multiplication_matrix(field));
}

BigRational NFElement::trace(const FieldPtr& field) const {
  QMatrix m = multiplication_matrix(field);
  BigRational t = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

std::string NFElement::to_string() const {
  if (c_.size() <= 1) return sklift::to_string(c_.empty() ? BigRational(0) : c_[0]);
  return poly_to_string(QPoly(c_), field_ ? field_->variable() : "a");
}

PrimeFieldElement nf_reduce_deg1(const NFElement& e, std::uint64_t p, std::uint64_t root) {
  if (e.field()) {
    const QPoly& g = e.field()->modulus();
    std::uint64_t v = 0;
    for (std::size_t i = g.size(); i-- > 0;) v = modp::add(modp::mul(v, root % p, p), reduce_mod(g.coeff(i), p), p);
    if (v != 0) throw DomainError("residue " + std::to_string(root) + " is not a root mod " + std::to_string(p));
  }
  std::uint64_t acc = 0;
  const auto& c = e.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) acc = modp::add(modp::mul(acc, root % p, p), reduce_mod(c[i], p), p);
  return PrimeFieldElement(acc, p);
}

std::vector<std::uint64_t> roots_mod_p(const QPoly& f, std::uint64_t p) {
  if (f.is_zero()) throw DomainError("roots of the zero polynomial");
  if (!modp::is_prime_u64(p)) throw DomainError(std::to_string(p) + " is not prime");
  modp::Poly fp;
  for (const auto& c : f.coeffs()) fp.push_back(reduce_mod(c, p));
  modp::trim(fp);
  if (static_cast<int>(fp.size()) - 1 != f.degree())
    throw DomainError("p divides the leading coefficient");
  return modp::roots(fp, p);
}

namespace {

void require_good_prime(const FieldPtr& field, std::uint64_t p) {
  if (!field) throw DomainError("primes of Q are not modelled as ideals");
  if (!modp::is_prime_u64(p) || p == 2) throw DomainError("need an odd prime");
  for (const auto& c : field->modulus().coeffs())
    if (c.get_den() % p == 0) throw DomainError("p divides a denominator of the defining polynomial");
  BigRational disc = poly_discriminant(field->modulus());
  if (disc.get_num() % p == 0) throw DomainError("p divides the discriminant of the defining polynomial");
}

modp::Poly modulus_mod_p(const FieldPtr& field, std::uint64_t p) {
  modp::Poly gp;
  for (const auto& c : field->modulus().coeffs()) gp.push_back(reduce_mod(c, p));
  modp::trim(gp);
  return gp;
}

}  // namespace

std::vector<PrimeIdeal> primes_above(const FieldPtr& field, std::uint64_t p) {
  require_good_prime(field, p);
  std::vector<PrimeIdeal> out;
  for (auto& h : modp::factor_squarefree(modulus_mod_p(field, p), p)) {
    PrimeIdeal pr;
    pr.p = p;
    pr.residue_degree = static_cast<int>(h.size()) - 1;
    pr.factor = std::move(h);
    out.push_back(std::move(pr));
  }
  return out;
}

long valuation(const NFElement& e, const FieldPtr& field, const PrimeIdeal& prime) {
  if (is_zero(e)) throw DomainError("valuation of zero");
  const std::uint64_t p = prime.p;
  // Clear denominators: e = x / den with x integral.
  BigInt den = 1;
  for (const auto& c : e.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
  long shift = -valuation(den, BigInt(static_cast<unsigned long>(p)));
  std::vector<BigInt> x;
  for (const auto& c : e.coeffs()) {
    BigRational s = c * den;
    x.push_back(s.get_num());
  }
  // Remove the rational content's p-part first; it contributes directly.
  BigInt cont = content(ZPoly(x));
  long vc = valuation(cont, BigInt(static_cast<unsigned long>(p)));
  BigInt pc = ipow(BigInt(static_cast<unsigned long>(p)), vc);
  for (auto& c : x) c /= pc;
  shift += vc;
  // g monic with integral coefficients at p (p-integral): scale to Z mod p^E.
  modp::Poly gp = modulus_mod_p(field, p);
  std::vector<modp::Poly> others;
  {
    modp::Poly rest = modp::divmod(gp, prime.factor, p).first;
    others.push_back(prime.factor);
    if (rest.size() > 1) others.push_back(rest);
  }
  for (unsigned E = 8;; E *= 2) {
    BigInt pe = ipow(BigInt(static_cast<unsigned long>(p)), E);
    // Integral model of the monic modulus mod p^E.
    std::vector<BigInt> gz;
    for (const auto& c : field->modulus().coeffs()) {
      BigInt inv;
      BigInt d = c.get_den();
      if (mpz_invert(inv.get_mpz_t(), d.get_mpz_t(), pe.get_mpz_t()) == 0)
        throw DomainError("denominator not invertible mod p");
      BigInt r = c.get_num() * inv;
      mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), pe.get_mpz_t());
      gz.push_back(r);
    }
    std::vector<ZPoly> lifted = hensel_lift(ZPoly(gz), others, p, E);
    const ZPoly& hh = lifted[0];
    // x mod (hh, p^E): long division by the monic hh.
    std::vector<BigInt> r = x;
    const int dh = hh.degree();
    for (int k = static_cast<int>(r.size()) - 1; k >= dh; --k) {
      BigInt q = r[k];
      if (sgn(q) == 0) continue;
      for (int j = 0; j <= dh; ++j) r[k - dh + j] -= q * hh.coeff(j);
      for (auto& c : r) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), pe.get_mpz_t());
    }
    r.resize(dh);
    long best = -1;
    for (auto& c : r) {
      mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), pe.get_mpz_t());
      if (sgn(c) == 0) continue;
      long v = valuation(c, BigInt(static_cast<unsigned long>(p)));
      if (best < 0 || v < best) best = v;
    }
    if (best >= 0 && best < static_cast<long>(E)) return best + shift;
    if (E > 4096) throw PrecisionError("valuation exceeds working precision");
  }
}

}  // namespace sklift
