#pragma once

#include <cstddef>
#include <vector>

#include "sklift/exactnum/matrix.hpp"
#include "sklift/exactnum/numberfield.hpp"
#include "sklift/qexp/qexp.hpp"

namespace sklift {

// dim S_w(SL2(Z)); 0 for odd or negative w.
int dim_cusp(int w);
// dim M_w(SL2(Z)); 0 for odd or negative w.
int dim_modular(int w);

// E4^a E6^b of weight w (w = 0 gives 1); w even, w != 2.
QExpansion eisenstein_monomial(int w, std::size_t prec);
// Basis E4^a E6^b, 4a + 6b = w, ordered by increasing b.
std::vector<QExpansion> modular_basis(int w, std::size_t prec);

struct MillerBasis {
  int weight = 0;
  std::size_t precision = 0;
  // rows[i] has a(j) = delta_{i+1, j} for 1 <= j <= dim.
  std::vector<QExpansion> rows;
};

MillerBasis miller_basis(int w, std::size_t prec);

// Matrix of T(l) with rows indexed by basis elements: T(b_i) = sum_j M(i,j) b_j.
QMatrix hecke_matrix(const MillerBasis& basis, unsigned long ell);
QMatrix hecke_matrix(int w, unsigned long ell, std::size_t prec);

struct NewformData {
  int weight = 0;
  QPoly charpoly;  // of T(2)
  FieldPtr field;  // Q[x]/(charpoly)
  // Coordinates in the Miller basis, first entry 1.
  std::vector<NFElement> coordinates;
  NFExpansion expansion;
};

// Precision used when none is requested.
std::size_t default_newform_precision(int w);
NewformData newform(int w, std::size_t prec = 0);

// a(l) as the eigenvalue of the T(l) matrix on the newform's coordinate
// vector (not read off the expansion).
NFElement hecke_eigenvalue(const NewformData& f, unsigned long ell);

}  // namespace sklift
