#include "sklift/level1/level1.hpp"

#include <sstream>

#include "sklift/exactnum/factor.hpp"

namespace sklift {

int dim_cusp(int w) {
  if (w < 0 || w % 2 != 0) return 0;
  if (w == 2) return 0;
  int d = w / 12;
  if (w % 12 == 2) --d;
  return d;
}

int dim_modular(int w) {
  if (w < 0 || w % 2 != 0) return 0;
  if (w == 0) return 1;
  if (w == 2) return 0;
  return dim_cusp(w) + 1;
}

QExpansion eisenstein_monomial(int w, std::size_t prec) {
  if (w < 0 || w % 2 != 0 || w == 2) throw DomainError("no E4^a E6^b of weight " + std::to_string(w));
  int b = 0;
  while ((w - 6 * b) % 4 != 0) ++b;
  int a = (w - 6 * b) / 4;
  QExpansion r = power(eisenstein(4, prec), a, prec);
  if (b > 0) r = r * power(eisenstein(6, prec), b, prec);
  return r;
}

std::vector<QExpansion> modular_basis(int w, std::size_t prec) {
  std::vector<QExpansion> out;
  if (w < 0 || w % 2 != 0) return out;
  QExpansion e4 = eisenstein(4, prec), e6 = eisenstein(6, prec);
  for (int b = 0; 6 * b <= w; ++b) {
    int rest = w - 6 * b;
    if (rest % 4 != 0) continue;
    QExpansion r = power(e4, rest / 4, prec);
    if (b > 0) r = r * power(e6, b, prec);
    out.push_back(r);
  }
  return out;
}

MillerBasis miller_basis(int w, std::size_t prec) {
  MillerBasis mb;
  mb.weight = w;
  mb.precision = prec;
  const int d = dim_cusp(w);
  if (d == 0) return mb;
  if (prec <= static_cast<std::size_t>(d))
    throw PrecisionError("Miller basis of weight " + std::to_string(w) + " needs precision > " +
                         std::to_string(d));
  QExpansion dl = delta(prec);
  QExpansion dpow = dl;
  for (int i = 1; i <= d; ++i) {
    mb.rows.push_back(dpow * eisenstein_monomial(w - 12 * i, prec));
    if (i < d) dpow = dpow * dl;
  }
  // Back-substitute to get a(j) = delta_ij for 1 <= j <= d.
  for (int i = d - 1; i >= 0; --i) {
    for (int j = i + 1; j < d; ++j) {
      BigRational c = mb.rows[i].coeffs()[j + 1];
      if (sgn(c) != 0) mb.rows[i] = mb.rows[i] - c * mb.rows[j];
    }
  }
  return mb;
}

QMatrix hecke_matrix(const MillerBasis& basis, unsigned long ell) {
  const std::size_t d = basis.rows.size();
  QMatrix m(d, d);
  if (d == 0) return m;
  if (basis.precision < ell * (d + 1))
    throw PrecisionError("T(" + std::to_string(ell) + ") on weight " + std::to_string(basis.weight) +
                         " needs precision >= " + std::to_string(ell * (d + 1)));
  for (std::size_t i = 0; i < d; ++i) {
    QExpansion t = hecke_t(basis.rows[i], ell);
    for (std::size_t j = 0; j < d; ++j) m(i, j) = t.coeffs()[j + 1];
    // The image must be the stated combination on every known coefficient.
    QExpansion check = t;
    for (std::size_t j = 0; j < d; ++j)
      check = check - m(i, j) * basis.rows[j].truncate(t.precision());
    if (!check.is_zero()) throw std::logic_error("Hecke image is not in the span of the basis");
  }
  return m;
}

QMatrix hecke_matrix(int w, unsigned long ell, std::size_t prec) {
  return hecke_matrix(miller_basis(w, prec), ell);
}

std::size_t default_newform_precision(int w) {
  return std::max<std::size_t>(3 * (dim_cusp(w) + 1), 64);
}

NewformData newform(int w, std::size_t prec) {
  if (prec == 0) prec = default_newform_precision(w);
  const int d = dim_cusp(w);
  if (d == 0) throw DomainError("S_" + std::to_string(w) + " is zero");
  MillerBasis mb = miller_basis(w, prec);
  QMatrix t2 = hecke_matrix(mb, 2);
  NewformData nf;
  nf.weight = w;
  nf.charpoly = charpoly(t2);
  auto facs = factor_over_q(nf.charpoly);
  if (facs.size() != 1 || facs[0].multiplicity != 1) {
    std::ostringstream msg;
    msg << "multiple-class: T(2) charpoly on S_" << w << " factors as";
    for (const auto& f : facs) msg << " (" << poly_to_string(to_qpoly(f.factor)) << ")^" << f.multiplicity;
    throw DomainError(msg.str());
  }
  nf.field = NumberField::create(nf.charpoly);
  NFElement alpha = NFElement::generator(nf.field);
  // Left eigenvector c with c T2 = alpha c.
  Matrix<NFElement> a(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) a(j, i) = NFElement(t2(i, j)) - (i == j ? alpha : NFElement(0));
  auto ker = kernel(a);
  if (ker.size() != 1) throw std::logic_error("eigenspace is not one-dimensional");
  auto c = ker[0];
  if (is_zero(c[0])) throw std::logic_error("eigenvector has vanishing first coordinate");
  NFElement inv = c[0].inverse();
  for (auto& x : c) x = x * inv;
  nf.coordinates = c;
  std::vector<NFElement> coeffs(prec, NFElement(0));
  for (int i = 0; i < d; ++i)
    for (std::size_t n = 0; n < prec; ++n) {
      const BigRational& b = mb.rows[i].coeffs()[n];
      if (sgn(b) != 0) coeffs[n] = coeffs[n] + c[i] * NFElement(b);
    }
  nf.expansion = NFExpansion(w, std::move(coeffs));
  return nf;
}

NFElement hecke_eigenvalue(const NewformData& f, unsigned long ell) {
  const std::size_t d = f.coordinates.size();
  QMatrix t = hecke_matrix(f.weight, ell, ell * (d + 1));
  // (c T)_0 = lambda c_0 with c_0 = 1; check the other coordinates agree.
  NFElement lambda(0);
  std::vector<NFElement> ct(d, NFElement(0));
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t i = 0; i < d; ++i) ct[j] = ct[j] + f.coordinates[i] * NFElement(t(i, j));
  lambda = ct[0];
  for (std::size_t j = 0; j < d; ++j)
    if (ct[j] != lambda * f.coordinates[j])
      throw CheckFailure("newform is not a T(" + std::to_string(ell) + ") eigenvector");
  return lambda;
}

}  // namespace sklift
