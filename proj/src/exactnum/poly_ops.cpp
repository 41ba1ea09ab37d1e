#include <cctype>
#include <sstream>

#include "sklift/exactnum/matrix.hpp"
#include "sklift/exactnum/poly.hpp"

namespace sklift {

QPoly to_qpoly(const ZPoly& z) {
  std::vector<BigRational> v;
  v.reserve(z.size());
  for (const auto& c : z.coeffs()) v.emplace_back(c);
  return QPoly(std::move(v));
}

BigInt content(const ZPoly& z) {
  BigInt g = 0;
  for (const auto& c : z.coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

ZPoly primitive_part(const QPoly& q) {
  if (q.is_zero()) return ZPoly();
  BigInt l = 1;
  for (const auto& c : q.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
  std::vector<BigInt> v;
  for (const auto& c : q.coeffs()) {
    BigRational s = c * l;
    v.push_back(s.get_num());
  }
  ZPoly z(std::move(v));
  BigInt g = content(z);
  if (sgn(z.leading()) < 0) g = -g;
  std::vector<BigInt> w;
  for (const auto& c : z.coeffs()) w.push_back(c / g);
  return ZPoly(std::move(w));
}

ZPoly exact_divide(const ZPoly& a, const ZPoly& b) {
  auto [q, r] = divmod(to_qpoly(a), to_qpoly(b));
  if (!r.is_zero()) throw DomainError("polynomial division is not exact");
  std::vector<BigInt> v;
  for (const auto& c : q.coeffs()) {
    if (c.get_den() != 1) throw DomainError("polynomial quotient is not integral");
    v.push_back(c.get_num());
  }
  return ZPoly(std::move(v));
}

BigInt determinant(ZMatrix m) {
  if (!m.square()) throw DomainError("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(m(k, k)) == 0) {
      std::size_t s = k + 1;
      while (s < n && sgn(m(s, k)) == 0) ++s;
      if (s == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(s, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m(k, k);
  }
  BigInt d = m(n - 1, n - 1);
  return sign > 0 ? d : BigInt(-d);
}

BigRational determinant(const QMatrix& m) {
  if (!m.square()) throw DomainError("determinant of non-square matrix");
  // Scale each row to integers, then divide the scale back out.
  ZMatrix z(m.rows(), m.cols());
  BigRational scale = 1;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    BigInt l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den().get_mpz_t());
    for (std::size_t j = 0; j < m.cols(); ++j) {
      BigRational s = m(i, j) * l;
      z(i, j) = s.get_num();
    }
    scale *= l;
  }
  return BigRational(determinant(z)) / scale;
}

QMatrix to_qmatrix(const ZMatrix& z) {
  QMatrix q(z.rows(), z.cols());
  for (std::size_t i = 0; i < z.rows(); ++i)
    for (std::size_t j = 0; j < z.cols(); ++j) q(i, j) = z(i, j);
  return q;
}

ZMatrix to_zmatrix(const QMatrix& q) {
  ZMatrix z(q.rows(), q.cols());
  for (std::size_t i = 0; i < q.rows(); ++i)
    for (std::size_t j = 0; j < q.cols(); ++j) {
      if (q(i, j).get_den() != 1) throw DomainError("matrix entry is not an integer");
      z(i, j) = q(i, j).get_num();
    }
  return z;
}

BigRational resultant(const QPoly& f, const QPoly& g) {
  if (f.is_zero() || g.is_zero()) return 0;
  const int m = f.degree(), n = g.degree();
  if (m == 0) return qpow(f.leading(), n);
  if (n == 0) return qpow(g.leading(), m);
  QMatrix s(m + n, m + n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) s(i, i + j) = f.coeff(m - j);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) s(n + i, i + j) = g.coeff(n - j);
  return determinant(s);
}

BigRational poly_discriminant(const QPoly& f) {
  if (f.is_zero()) throw DomainError("discriminant of the zero polynomial");
  const int n = f.degree();
  if (n < 1) throw DomainError("discriminant needs degree >= 1");
  if (n == 1) return 1;
  BigRational r = resultant(f, f.derivative()) / f.leading();
  if ((n * (n - 1) / 2) % 2 == 1) r = -r;
  return r;
}

std::string poly_to_string(const QPoly& f, const std::string& var) {
  if (f.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = f.degree(); k >= 0; --k) {
    BigRational c = f.coeff(k);
    if (is_zero(c)) continue;
    const bool neg = sgn(c) < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) out << "-";
    } else {
      out << (neg ? " - " : " + ");
    }
    first = false;
    const bool unit = (c == 1);
    if (k == 0) {
      out << to_string(c);
    } else {
      if (!unit) out << to_string(c) << "*";
      out << var;
      if (k > 1) out << "^" << k;
    }
  }
  return out.str();
}

QPoly parse_poly(const std::string& text, const std::string& var) {
  // Accepts sums of terms "c", "c*x", "x^k", "c*x^k" with optional signs.
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw DomainError("empty polynomial text");
  std::vector<BigRational> coeffs;
  std::size_t i = 0;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    }
    std::size_t j = i;
    while (j < s.size() && s[j] != '+' && s[j] != '-') ++j;
    std::string term = s.substr(i, j - i);
    if (term.empty()) throw DomainError("malformed polynomial: '" + text + "'");
    BigRational c = 1;
    std::size_t deg = 0;
    auto vpos = term.find(var);
    if (vpos == std::string::npos) {
      c = parse_rational(term);
    } else {
      std::string cpart = term.substr(0, vpos);
      if (!cpart.empty()) {
        if (cpart.back() != '*') throw DomainError("malformed term: '" + term + "'");
        cpart.pop_back();
        c = parse_rational(cpart);
      }
      std::string rest = term.substr(vpos + var.size());
      if (rest.empty()) {
        deg = 1;
      } else {
        if (rest[0] != '^') throw DomainError("malformed term: '" + term + "'");
        std::string digits = rest.substr(1);
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
          throw DomainError("malformed exponent in term: '" + term + "'");
        deg = std::stoul(digits);
      }
    }
    if (coeffs.size() <= deg) coeffs.resize(deg + 1, BigRational(0));
    coeffs[deg] += sign * c;
    i = j;
  }
  return QPoly(std::move(coeffs));
}

}  // namespace sklift
