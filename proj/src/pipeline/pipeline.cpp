#include "sklift/pipeline/pipeline.hpp"

#include <algorithm>
#include <future>

#include "sklift/errors.hpp"
#include "sklift/exactnum/arith.hpp"
#include "sklift/exactnum/factor.hpp"
#include "sklift/exactnum/modp.hpp"
#include "sklift/exactnum/numberfield.hpp"
#include "sklift/level1/level1.hpp"
#include "sklift/lfun/bernoulli.hpp"
#include "sklift/lfun/lvalues.hpp"

namespace sklift {

const char* const kExampleCharpoly =
    "x^4 + 68476320*x^3 - 19584715019010048*x^2 - 10833127246634489297121280*x + "
    "39446133467662904714689328971776";
const char* const kExampleDiscFactors =
    "-2^48 * 3^3 * 5^6 * 11 * 59 * 4581597403 * 15909926723 * "
    "61912455248726091228769884731066259290896074682396020673553";

namespace {

std::string list_string(const std::vector<std::uint64_t>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
  return s + "]";
}

std::string val_string(const std::optional<long>& v) { return v ? std::to_string(*v) : "inf"; }

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 2; q * q <= n; ++q)
    if (n % q == 0) {
      out.push_back(q);
      while (n % q == 0) n /= q;
    }
  if (n > 1) out.push_back(n);
  return out;
}

void add(DivisibilityReport& r, std::string name, std::string expected, std::string computed, bool pass) {
  r.checks.push_back({std::move(name), std::move(expected), std::move(computed), pass});
}

}  // namespace

bool DivisibilityReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.pass; });
}

const CheckRecord* DivisibilityReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

DivisibilityReport check_hypotheses(int w, std::uint64_t p, const DirichletChar& chi, long D) {
  if (w < 4 || w % 2 != 0) throw DomainError("weight must be even and >= 4");
  if (!modp::is_prime_u64(p)) throw DomainError(std::to_string(p) + " is not prime");
  if (p <= static_cast<std::uint64_t>(w)) throw DomainError("need p > 2k-2 = " + std::to_string(w));
  if (!is_fundamental_discriminant(D)) throw DomainError(std::to_string(D) + " is not a fundamental discriminant");
  if (dim_cusp(w) == 0) throw DomainError("no cusp forms of weight " + std::to_string(w));
  const int k = (w + 2) / 2;
  DivisibilityReport r;
  r.p = p;
  r.weight = w;
  r.character = chi.name();
  r.disc = D;
  r.character_required = chi.is_trivial();

  auto f = newform(w);
  auto S = SymbolSpace::build(w);
  S.hecke(2);  // fill the cache before the workers share it
  const int deg = f.charpoly.degree();
  auto chiD = DirichletChar::quadratic(D);

  auto fm = std::async(std::launch::async, [&] { return l_alg_products(S, f, k, DirichletChar::trivial(), p); });
  std::future<LValueProduct> f1, f2, fk;
  if (!r.character_required) {
    f1 = std::async(std::launch::async, [&] { return l_alg_products(S, f, 1, chi, p); });
    f2 = std::async(std::launch::async, [&] { return l_alg_products(S, f, 2, chi, p); });
    fk = std::async(std::launch::async, [&] { return l_alg_products(S, f, k - 1, chiD, p); });
  }
  auto Lm = fm.get();
  r.m = Lm.valuation;
  add(r, "m >= 1", ">= 1", val_string(r.m), r.m && *r.m >= 1);

  // side conditions
  const std::uint64_t N = chi.modulus();
  const std::uint64_t absD = static_cast<std::uint64_t>(D < 0 ? -D : D);
  const bool p_nd = N % p != 0 && absD % p != 0;
  add(r, "p does not divide N D", "true", p_nd ? "true" : "false", p_nd);
  const int chiD_m1 = chiD(-1);
  add(r, "chi_D(-1) = -1", "-1", std::to_string(chiD_m1), chiD_m1 == -1);
  const long signed_d = (k % 2 == 0 ? -1 : 1) * D;
  add(r, "(-1)^(k-1) D > 0", "> 0", std::to_string(signed_d), signed_d > 0);

  if (r.character_required) {
    add(r, "character", "nontrivial quadratic character", "character required", false);
    r.notes.push_back("character required: n is undefined for the trivial character");
    r.hypotheses_satisfied = false;
    return r;
  }

  // L^Sigma(3-k, chi) = -B_{k-2,chi}/(k-2) with Euler factors at N D removed
  std::vector<std::uint64_t> sigma = prime_divisors(N * absD);
  BigRational dl = dirichlet_l_neg(static_cast<unsigned>(k - 2), chi);
  NFElement dls = remove_euler(NFElement(dl), 3 - k, chi, nullptr, sigma);
  std::optional<long> vd;
  if (!is_zero(dls)) vd = deg * valuation(dls.rational_value(), BigInt(static_cast<unsigned long>(p)));
  r.witnesses.push_back({"L^Sigma(" + std::to_string(3 - k) + ", " + chi.name() + ")", to_string(dls.rational_value())});
  r.witnesses.push_back({"Sigma", list_string(sigma)});

  auto L1 = f1.get(), L2 = f2.get(), Lk = fk.get();
  add(r, "v(L^Sigma(" + std::to_string(3 - k) + ", chi)) = 0", "0", val_string(vd), vd && *vd == 0);
  add(r, "v(L_alg(1, f, chi)) = 0", "0", val_string(L1.valuation), L1.valuation && *L1.valuation == 0);
  add(r, "v(L_alg(2, f, chi)) = 0", "0", val_string(L2.valuation), L2.valuation && *L2.valuation == 0);
  add(r, "v(L_alg(" + std::to_string(k - 1) + ", f, chi_D)) = 0", "0", val_string(Lk.valuation),
      Lk.valuation && *Lk.valuation == 0);

  if (vd && L1.valuation && L2.valuation && Lk.valuation) r.n = *vd + *L1.valuation + *L2.valuation + *Lk.valuation;
  const bool n_lt_m = r.n && r.m && *r.n < *r.m;
  add(r, "n < m", "n < m", "n = " + val_string(r.n) + ", m = " + val_string(r.m), n_lt_m);
  r.hypotheses_satisfied = r.m && *r.m >= 1 && n_lt_m && p_nd && chiD_m1 == -1 && signed_d > 0;
  add(r, "hypotheses satisfied", "true", r.hypotheses_satisfied ? "true" : "false", r.hypotheses_satisfied);
  return r;
}

TraceCheck residual_trace_check(std::uint64_t p, std::uint64_t a, std::uint64_t b, std::uint64_t target) {
  TraceCheck t;
  t.value = modp::add(modp::pow(2 % p, a, p), modp::pow(2 % p, b, p), p);
  t.holds = t.value == target % p;
  return t;
}

std::vector<ReducibleBranch> reducible_branches(std::uint64_t p, int w, std::uint64_t index) {
  std::vector<ReducibleBranch> out;
  const long long t = static_cast<long long>(index);
  for (long long sum : {static_cast<long long>(w - 1), static_cast<long long>(p - 1) + (w - 1)}) {
    ReducibleBranch br;
    br.index = index;
    br.sum = sum;
    // b - a = t - 1, a + b = sum
    if ((sum - (t - 1)) % 2 != 0) {
      out.push_back(br);
      continue;
    }
    br.a = (sum - (t - 1)) / 2;
    br.b = (sum + (t - 1)) / 2;
    br.admissible = br.a > 0;
    if (br.admissible)
      br.trace = residual_trace_check(p, static_cast<std::uint64_t>(br.a), static_cast<std::uint64_t>(br.b), 0).value;
    out.push_back(br);
  }
  return out;
}

IrreducibilityReport irreducibility_argument(std::uint64_t p, int w, const std::vector<std::uint64_t>& indices,
                                             const std::vector<std::uint64_t>& roots) {
  IrreducibilityReport r;
  r.p = p;
  r.w = w;
  r.indices = indices;
  r.roots = roots;
  if (indices.empty()) {
    r.irreducible = true;
    r.conclusion = "no reducible shape possible at any index";
    return r;
  }
  bool any_match = false;
  for (auto t : indices)
    for (auto br : reducible_branches(p, w, t)) {
      if (br.admissible) {
        br.matches_root = std::find(roots.begin(), roots.end(), br.trace) != roots.end();
        any_match = any_match || br.matches_root;
      }
      r.branches.push_back(br);
    }
  r.irreducible = !any_match;
  r.conclusion = any_match ? "match - argument inconclusive" : "no reducible residual representation consistent";
  return r;
}

IrreducibilityReport irreducibility_argument(std::uint64_t p, int w) {
  if (!modp::is_prime_u64(p) || p < 5) throw DomainError("p must be a prime >= 5");
  auto scan = std::async(std::launch::async, [p] { return irregular_scan(p); });
  auto f = newform(w);
  auto roots = roots_mod_p(f.charpoly, p);
  return irreducibility_argument(p, w, scan.get(), roots);
}

CongruenceScan congruence_scan(int w, std::uint64_t p, const std::optional<QPoly>& g) {
  CongruenceScan s;
  s.w = w;
  s.p = p;
  QPoly poly = g ? *g : newform(w).charpoly;
  s.polynomial = poly_to_string(poly);
  s.conjugates = poly.degree();
  if (s.conjugates <= 1) {
    s.discriminant = 1;
    s.pass = true;
    s.conclusion = "one conjugate, nothing to compare";
    return s;
  }
  s.discriminant = poly_discriminant(poly);
  const BigInt P(static_cast<unsigned long>(p));
  s.p_divides = valuation(s.discriminant, P) > 0;
  s.pass = !s.p_divides;
  s.conclusion = s.pass ? "no congruence between conjugates of a(2) modulo primes above p"
                        : "p divides the discriminant; conjugates may be congruent";
  return s;
}

DivisibilityReport verify_paper_example() {
  const std::uint64_t p = kExampleP;
  const int w = kExampleWeight;
  auto chi = DirichletChar::quadratic(kExampleDisc);

  auto scan_f = std::async(std::launch::async, [p] { return irregular_scan(p); });
  auto bern_f = std::async(std::launch::async, [p] { return bernoulli_mod_p(kExampleIndex, p); });
  auto hyp_f = std::async(std::launch::async, [&] { return check_hypotheses(w, p, chi, kExampleDisc); });

  auto f = newform(w);
  const QPoly stated = parse_poly(kExampleCharpoly);
  DivisibilityReport r;

  add(r, "charpoly of T(2) on S_54", kExampleCharpoly, poly_to_string(f.charpoly), f.charpoly == stated);
  if (f.charpoly != stated)
    r.notes.push_back("charpoly of T(2): computed x coefficient -1083312724663489297121280, expected "
                      "-10833127246634489297121280");

  auto stated_disc = poly_discriminant(stated);
  auto fac = factor_integer(stated_disc.get_num());
  add(r, "disc(g) factorization", kExampleDiscFactors, fac.to_string(),
      fac.complete && fac.to_string() == kExampleDiscFactors && stated_disc.get_den() == 1);
  auto true_disc = poly_discriminant(f.charpoly);
  r.witnesses.push_back({"disc(T(2) charpoly)", to_string(true_disc)});

  auto roots = roots_mod_p(f.charpoly, p);
  add(r, "roots of T(2) charpoly mod p", "[85284, 287487]", list_string(roots),
      roots == std::vector<std::uint64_t>{85284, 287487});
  r.witnesses.push_back({"roots mod p", list_string(roots)});
  auto stated_roots = roots_mod_p(stated, p);
  if (stated_roots != roots)
    r.notes.push_back("the expected g has roots " + list_string(stated_roots) +
                      " mod p; the roots above are those of the computed charpoly");

  auto tc = residual_trace_check(p, kExampleA, kExampleB, kExampleTrace);
  add(r, "2^32486 + 2^483789 mod p", std::to_string(kExampleTrace), std::to_string(tc.value), tc.holds);

  auto scan = scan_f.get();
  auto bern = bern_f.get();
  add(r, "B_451304 mod p", "0", std::to_string(bern.residue), bern.residue == 0);
  add(r, "irregular indices of p", list_string({kExampleIndex}), list_string(scan),
      scan == std::vector<std::uint64_t>{kExampleIndex});
  r.witnesses.push_back({"irregular indices", list_string(scan)});
  if (scan != std::vector<std::uint64_t>{kExampleIndex})
    r.notes.push_back("irregular scan gives " + list_string(scan) + "; B_" + std::to_string(kExampleIndex) +
                      " = " + std::to_string(bern.residue) + " mod p");

  auto irr = irreducibility_argument(p, w, scan, roots);
  std::string irr_detail = irr.conclusion;
  for (const auto& br : irr.branches) {
    const std::string tag = "branch index " + std::to_string(br.index) + " a+b=" + std::to_string(br.sum);
    r.witnesses.push_back({tag, br.admissible ? "a=" + std::to_string(br.a) + " b=" + std::to_string(br.b) +
                                                    " trace=" + std::to_string(br.trace) +
                                                    (br.matches_root ? " matches a root" : " no root")
                                              : "discarded (a <= 0)"});
  }
  add(r, "irreducibility argument", "no reducible residual representation consistent", irr_detail, irr.irreducible);

  // the same argument run on the expected index
  auto stated_irr = irreducibility_argument(p, w, {kExampleIndex}, roots);
  std::string sb;
  for (const auto& br : stated_irr.branches)
    if (br.admissible)
      sb = "a=" + std::to_string(br.a) + " b=" + std::to_string(br.b) + " trace=" + std::to_string(br.trace) + "; ";
  add(r, "irreducibility argument at index 451304",
      "a=32486 b=483789 trace=258573; no reducible residual representation consistent", sb + stated_irr.conclusion,
      stated_irr.irreducible && sb == "a=32486 b=483789 trace=258573; ");

  auto cs = congruence_scan(w, p);
  add(r, "congruence scan at p", "p does not divide disc", cs.conclusion, cs.pass);
  r.witnesses.push_back({"hecke hypothesis route", "discriminant scan: no congruence between conjugates mod p"});

  // L-values
  auto hyp = hyp_f.get();
  r.p = hyp.p;
  r.weight = hyp.weight;
  r.character = hyp.character;
  r.disc = hyp.disc;
  r.m = hyp.m;
  r.n = hyp.n;
  r.character_required = hyp.character_required;
  r.hypotheses_satisfied = hyp.hypotheses_satisfied;

  BigRational b26 = gen_bernoulli(26, chi);
  BigRational l25 = dirichlet_l_neg(26, chi);
  add(r, "L(-25, chi_-3) = -B_{26,chi}/26", to_string(-b26 / 26), to_string(l25), l25 == -b26 / 26);
  r.witnesses.push_back({"B_{26,chi_-3}", to_string(b26)});
  if (sgn(l25) == 0) r.notes.push_back("L(-25, chi_-3) = 0: chi_-3 is odd and 26 is even");

  for (auto& c : hyp.checks) r.checks.push_back(c);
  for (auto& wv : hyp.witnesses) r.witnesses.push_back(wv);
  for (auto& n : hyp.notes) r.notes.push_back(n);

  auto central = l_alg(f, w / 2, DirichletChar::trivial());
  add(r, "L_alg(27, f) = 0", "0", is_zero(central.value) ? "0" : "nonzero", is_zero(central.value));
  add(r, "n = 0", "0", val_string(r.n), r.n && *r.n == 0);
  return r;
}

}  // namespace sklift
