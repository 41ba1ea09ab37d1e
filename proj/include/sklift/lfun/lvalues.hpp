#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sklift/exactnum/numberfield.hpp"
#include "sklift/level1/level1.hpp"
#include "sklift/lfun/dirichlet.hpp"
#include "sklift/lfun/modsym.hpp"

namespace sklift {

inline constexpr const char* kContentOneNormalization = "content-1 on Manin generators";

// phi: the f-isotypic functional on the symbol space, phi T(2) = a_f(2) phi and
// phi * star = sign * phi, scaled so its first nonzero entry is 1.
struct EigenFunctional {
  int sign = 0;
  std::vector<NFElement> phi;
  // phi on every Manin generator X^i Y^{n-i}, 0 <= i <= n.
  std::vector<NFElement> on_generators;
};
EigenFunctional eigen_functional(const SymbolSpace& S, const NewformData& f, int sign);

struct AlgebraicLValue {
  NFElement value;
  int j = 0;
  std::string character;  // DirichletChar::name()
  int sign = 0;           // star eigenspace used
  std::string normalization = kContentOneNormalization;
};

// Winding element: trivial chi gives X^{j-1} Y^{w-1-j}{0, oo}; otherwise
// sum_a chi(a) (N X - a Y)^{j-1} Y^{w-1-j} {a/N, oo}.
std::vector<BigRational> winding_element(const SymbolSpace& S, int j, const DirichletChar& chi);

// Pairs the winding element with the (-1)^j chi(-1) eigenfunctional.
AlgebraicLValue l_alg(const SymbolSpace& S, const NewformData& f, int j, const DirichletChar& chi);
AlgebraicLValue l_alg(const NewformData& f, int j, const DirichletChar& chi);

struct PrimeValuation {
  int residue_degree = 0;
  std::string factor;             // h mod p
  std::optional<long> valuation;  // normalized; empty for a zero value
  long content = 0;               // min over generators
};

struct LValueProduct {
  int weight = 0, j = 0;
  std::string character;
  std::uint64_t p = 0;
  bool zero = false;
  BigRational norm;                // field norm of l_alg as returned (before normalization)
  std::optional<long> valuation;   // sum f_P (v_P(value) - content_P); empty if zero
  std::vector<PrimeValuation> primes;
};

LValueProduct l_alg_products(const SymbolSpace& S, const NewformData& f, int j, const DirichletChar& chi,
                             std::uint64_t p);
LValueProduct l_alg_products(int w, int j, const DirichletChar& chi, std::uint64_t p);

}  // namespace sklift
