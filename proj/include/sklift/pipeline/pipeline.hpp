#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sklift/exactnum/bigint.hpp"
#include "sklift/exactnum/poly.hpp"
#include "sklift/lfun/dirichlet.hpp"

namespace sklift {

struct CheckRecord {
  std::string name, expected, computed;
  bool pass = false;
};

// m: p-valuation of the norm of L_alg(k, f).
// n: p-valuation of the norm of L^Sigma(3-k, chi) L_alg(k-1, f, chi_D)
//    L_alg(1, f, chi) L_alg(2, f, chi); the rational Dirichlet factor counts
//    with multiplicity [K_f : Q].
// Empty optional = infinite (some factor is exactly zero).
struct DivisibilityReport {
  std::uint64_t p = 0;
  int weight = 0;
  std::string character;
  long disc = 0;
  std::optional<long> m, n;
  bool character_required = false;
  bool hypotheses_satisfied = false;
  std::vector<CheckRecord> checks;
  std::vector<std::pair<std::string, std::string>> witnesses;  // ordered
  std::vector<std::string> notes;

  bool all_pass() const;
  const CheckRecord* find(const std::string& name) const;
};

// w = 2k-2, p > w, D fundamental. A trivial chi gives a report marked
// "character required" with n left unset.
DivisibilityReport check_hypotheses(int w, std::uint64_t p, const DirichletChar& chi, long D);

struct TraceCheck {
  bool holds = false;
  std::uint64_t value = 0;  // 2^a + 2^b mod p
};
TraceCheck residual_trace_check(std::uint64_t p, std::uint64_t a, std::uint64_t b, std::uint64_t target);

// A reducible shape omega^a + omega^b with b - a + 1 = index and
// a + b = sum (sum = w-1 or p-1+w-1).
struct ReducibleBranch {
  std::uint64_t index = 0;
  long long sum = 0, a = 0, b = 0;
  bool admissible = false;  // a > 0
  std::uint64_t trace = 0;  // 2^a + 2^b mod p, admissible branches only
  bool matches_root = false;
};
std::vector<ReducibleBranch> reducible_branches(std::uint64_t p, int w, std::uint64_t index);

struct IrreducibilityReport {
  std::uint64_t p = 0;
  int w = 0;
  std::vector<std::uint64_t> indices;  // irregular indices used
  std::vector<std::uint64_t> roots;    // of the T(2) charpoly mod p
  std::vector<ReducibleBranch> branches;
  bool irreducible = false;
  std::string conclusion;
};
// Uses irregular_scan(p) and the weight-w T(2) charpoly.
IrreducibilityReport irreducibility_argument(std::uint64_t p, int w);
// Same argument on explicit inputs.
IrreducibilityReport irreducibility_argument(std::uint64_t p, int w, const std::vector<std::uint64_t>& indices,
                                             const std::vector<std::uint64_t>& roots);

struct CongruenceScan {
  int w = 0;
  std::uint64_t p = 0;
  std::string polynomial;
  BigRational discriminant;
  int conjugates = 0;
  bool p_divides = false;
  bool pass = false;
  std::string conclusion;
};
// p does not divide disc(g) => no two conjugates of a(2) are congruent mod
// any prime above p. g defaults to the T(2) charpoly of weight w.
CongruenceScan congruence_scan(int w, std::uint64_t p, const std::optional<QPoly>& g = std::nullopt);

// Reference example: p = 516223, weight 54, chi = chi_{-3}, D = -3.
inline constexpr std::uint64_t kExampleP = 516223;
inline constexpr int kExampleWeight = 54;
inline constexpr long kExampleDisc = -3;
extern const char* const kExampleCharpoly;       // as stated
extern const char* const kExampleDiscFactors;    // as stated
inline constexpr std::uint64_t kExampleIndex = 451304;
inline constexpr std::uint64_t kExampleA = 32486, kExampleB = 483789, kExampleTrace = 258573;

// The full reproduction: check_hypotheses plus every side check, with the
// stated values as `expected`.
DivisibilityReport verify_paper_example();

}  // namespace sklift
