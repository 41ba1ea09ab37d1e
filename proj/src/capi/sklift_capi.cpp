#include "sklift/sklift.h"

#include <cstring>
#include <mutex>
#include <string>

#include "sklift/errors.hpp"
#include "sklift/exactnum/numberfield.hpp"
#include "sklift/io/cache.hpp"
#include "sklift/io/record.hpp"
#include "sklift/jacobi/jacobi.hpp"
#include "sklift/level1/level1.hpp"
#include "sklift/lfun/bernoulli.hpp"
#include "sklift/lfun/lvalues.hpp"
#include "sklift/lifts/lifts.hpp"
#include "sklift/pipeline/pipeline.hpp"
#include "sklift/siegel/siegel.hpp"

using nlohmann::json;
using namespace sklift;

struct sklift_context {
  DiskCache cache;
  mutable std::mutex mu;
  std::string last_error;
  explicit sklift_context(DiskCache c) : cache(std::move(c)) {}
};

struct sklift_record {
  FormRecord rec;
  std::string text;
  int passed = -1;
};

namespace {

sklift_record* wrap(FormRecord r, int passed = -1) {
  auto* out = new sklift_record;
  out->text = serialize(r);
  out->rec = std::move(r);
  out->passed = passed;
  return out;
}

void set_error(sklift_context* ctx, const std::string& msg) {
  if (!ctx) return;
  std::lock_guard<std::mutex> lock(ctx->mu);
  ctx->last_error = msg;
}

// Runs body, which fills *out; maps exceptions to statuses and error records.
template <class F>
sklift_status guarded(sklift_context* ctx, sklift_record** out, F&& body) {
  if (out) *out = nullptr;
  if (!ctx) return SKLIFT_DOMAIN_ERROR;
  set_error(ctx, "");
  auto fail = [&](sklift_status s, const char* type, const std::string& msg) {
    set_error(ctx, msg);
    if (out) {
      try {
        *out = wrap(error_record(type, msg, static_cast<int>(s)));
      } catch (...) {
        *out = nullptr;
      }
    }
    return s;
  };
  try {
    return body();
  } catch (const CheckFailure& e) {
    return fail(SKLIFT_CHECK_FAILED, "check", e.what());
  } catch (const DomainError& e) {
    return fail(SKLIFT_DOMAIN_ERROR, "domain", e.what());
  } catch (const PrecisionError& e) {
    return fail(SKLIFT_PRECISION_ERROR, "precision", e.what());
  } catch (const std::invalid_argument& e) {
    return fail(SKLIFT_DOMAIN_ERROR, "domain", e.what());
  } catch (const std::out_of_range& e) {
    return fail(SKLIFT_DOMAIN_ERROR, "domain", e.what());
  } catch (const std::exception& e) {
    return fail(SKLIFT_INTERNAL_ERROR, "internal", e.what());
  } catch (...) {
    return fail(SKLIFT_INTERNAL_ERROR, "internal", "unknown exception");
  }
}

void need_out(sklift_record** out) {
  if (!out) throw DomainError("output record pointer is null");
}

std::size_t hecke_prec(int w, unsigned long ell, std::size_t prec) {
  if (prec) return prec;
  return std::max<std::size_t>(ell * (dim_cusp(w) + 1), 2);
}

JacobiForm1 jacobi_element(int k, std::size_t dmax, std::size_t index) {
  auto b = jacobi_cusp_basis(k, dmax);
  if (b.forms.empty()) throw DomainError("no index-1 Jacobi cusp forms of weight " + std::to_string(k));
  if (index >= b.forms.size())
    throw DomainError("basis index " + std::to_string(index) + " out of range (dimension " +
                      std::to_string(b.forms.size()) + ")");
  return b.forms[index];
}

}  // namespace

extern "C" {

const char* sklift_version(void) { return kArtifactVersion; }

sklift_context* sklift_context_new(const char* cache_dir) {
  try {
    return new sklift_context(cache_dir ? DiskCache(cache_dir) : DiskCache::from_env());
  } catch (...) {
    return nullptr;
  }
}

void sklift_context_free(sklift_context* ctx) { delete ctx; }

const char* sklift_context_last_error(const sklift_context* ctx) {
  if (!ctx) return "";
  std::lock_guard<std::mutex> lock(ctx->mu);
  return ctx->last_error.c_str();
}

const char* sklift_record_text(const sklift_record* rec) { return rec ? rec->text.c_str() : ""; }
const char* sklift_record_kind(const sklift_record* rec) { return rec ? rec->rec.kind.c_str() : ""; }
int sklift_record_passed(const sklift_record* rec) { return rec ? rec->passed : -1; }
void sklift_record_free(sklift_record* rec) { delete rec; }

sklift_status sklift_record_parse(sklift_context* ctx, const char* text, sklift_record** out) {
  return guarded(ctx, out, [&] {
    need_out(out);
    if (!text) throw DomainError("record text is null");
    auto r = parse_record(text);
    int passed = -1;
    if (r.kind == "report") passed = r.payload.at("all_pass").get<bool>() ? 1 : 0;
    *out = wrap(std::move(r), passed);
    return SKLIFT_OK;
  });
}

sklift_status sklift_basis(sklift_context* ctx, int weight, size_t prec, sklift_record** out) {
  return guarded(ctx, out, [&] {
    need_out(out);
    if (prec == 0) prec = static_cast<std::size_t>(dim_cusp(weight)) + 2;
    *out = wrap(basis_record(miller_basis(weight, prec)));
    return SKLIFT_OK;
  });
}

sklift_status sklift_hecke(sklift_context* ctx, int weight, unsigned long ell, size_t prec, sklift_record** out) {
  return guarded(ctx, out, [&] {
    need_out(out);
    if (ell < 2) throw DomainError("T(l) needs l >= 2");
    const std::size_t pr = hecke_prec(weight, ell, prec);
    QMatrix M = cached_hecke_matrix(ctx->cache, weight, ell, pr);
    json params = {{"op", "hecke"}, {"weight", std::to_string(weight)}, {"ell", std::to_string(ell)},
                   {"prec", std::to_string(pr)}};
    FormRecord r = matrix_record(M, weight, params);
    r.precision = pr;
    r.payload["charpoly"] = poly_to_string(charpoly(M));
    *out = wrap(std::move(r));
    return SKLIFT_OK;
  });
}

sklift_status sklift_newform(sklift_context* ctx, int weight, sklift_record** out) {
  return guarded(ctx, out, [&] {
    need_out(out);
    *out = wrap(newform_record(newform(weight)));
    return SKLIFT_OK;
  });
}

sklift_status sklift_jacobi(sklift_context* ctx, int k, size_t dmax, sklift_record** out) {
  return guarded(ctx, out, [&] {
    need_out(out);
    if (dmax == 0) dmax = 40;
    auto b = jacobi_cusp_basis(k, dmax);
    FormRecord r;
    r.kind = "basis";
    r.weight = k;
    r.precision = dmax;
    r.params = {{"op", "jacobi"}, {"weight", std::to_string(k)}, {"dmax", std::to_string(dmax)}};
    json forms = json::array();
    for (const auto& phi : b.forms) forms.push_back(jacobi_record(phi).payload);
    r.payload = {{"of", "jacobi"}, {"dimension", std::to_string(b.forms.size())}, {"forms", forms}, {"note", b.note}};
    *out = wrap(std::move(r));
    return SKLIFT_OK;
  });
}

sklift_status sklift_kohnen(sklift_context* ctx, int k, size_t prec, sklift_record** out) {
  return guarded(ctx, out, [&] {
    need_out(out);
    if (prec == 0) prec = 40;
    auto b = jacobi_cusp_basis(k, prec - 1);
    FormRecord r;
    r.kind = "basis";
    r.weight = k;
    r.precision = prec;
    r.params = {{"op", "kohnen"}, {"weight", std::to_string(k)}, {"prec", std::to_string(prec)}};
    json forms = json::array();
    for (const auto& phi : b.forms) {
      auto g = ez_to_kohnen(phi);
      if (!plus_space_check(g).empty()) throw CheckFailure("image is not in the plus space");
      forms.push_back(kohnen_record(g).payload);
    }
    r.payload = {{"of", "kohnen"}, {"dimension", std::to_string(b.forms.size())}, {"forms", forms}};
    *out = wrap(std::move(r));
    return SKLIFT_OK;
  });
}

sklift_status sklift_shimura(sklift_context* ctx, int k, long disc, size_t prec, size_t index, sklift_record** out) {
  return guarded(ctx, out, [&] {
    need_out(out);
    if (prec == 0) prec = 20;
    const std::size_t absd = static_cast<std::size_t>(disc < 0 ? -disc : disc);
    const std::size_t dmax = absd * (prec - 1) * (prec - 1) + 1;
    auto g = ez_to_kohnen(jacobi_element(k, dmax, index));
    auto f = shimura_lift(g, disc, k, prec);
    *out = wrap(qexp_record(f, {{"op", "shimura"},
                                {"weight", std::to_string(k)},
                                {"D", std::to_string(disc)},
                                {"prec", std::to_string(prec)},
                                {"index", std::to_string(index)}}));
    return SKLIFT_OK;
  });
}

sklift_status sklift_sk_lift(sklift_context* ctx, int k, size_t bound, size_t index, sklift_record** out) {
  return guarded(ctx, out, [&] {
    need_out(out);
    if (bound == 0) bound = 6;
    auto g = ez_to_kohnen(jacobi_element(k, 4 * bound * bound + 1, index));
    auto F = maass_lift(g, k, bound);
    auto bad = maass_check(F);
    FormRecord r = siegel_record(F, {{"op", "sk-lift"},
                                     {"weight", std::to_string(k)},
                                     {"bound", std::to_string(bound)},
                                     {"index", std::to_string(index)}});
    json viol = json::array();
    for (const auto& t : bad) viol.push_back(t.to_string());
    r.payload["maass_check"] = {{"classes", std::to_string(F.coeffs().size())},
                                {"violations", viol},
                                {"pass", bad.empty()}};
    *out = wrap(std::move(r), bad.empty() ? 1 : 0);
    return bad.empty() ? SKLIFT_OK : SKLIFT_CHECK_FAILED;
  });
}

sklift_status sklift_siegel_hecke(sklift_context* ctx, int k, unsigned long ell, size_t bound, size_t index,
                                  sklift_record** out) {
  return guarded(ctx, out, [&] {
    need_out(out);
    if (bound == 0) bound = 6;
    auto g = ez_to_kohnen(jacobi_element(k, 4 * bound * bound + 1, index));
    auto F = maass_lift(g, k, bound);
    auto rep = eigenvalue_extract(F, hecke_t2(F, ell));
    FormRecord r;
    r.kind = "value";
    r.weight = k;
    r.precision = bound;
    r.params = {{"op", "siegel-hecke"},
                {"weight", std::to_string(k)},
                {"ell", std::to_string(ell)},
                {"bound", std::to_string(bound)},
                {"index", std::to_string(index)}};
    json checked = json::array();
    for (const auto& c : rep.checked) checked.push_back(c.index.to_string());
    r.payload = {{"lambda", rational_json(rep.lambda)}, {"checked_classes", checked}};
    // compare with a_f(l) + l^{k-1} + l^{k-2} when S_{2k-2} is one-dimensional
    if (dim_cusp(2 * k - 2) == 1) {
      auto a = hecke_eigenvalue(newform(2 * k - 2), ell).rational_value();
      BigRational expected = a + BigRational(ipow(BigInt(ell), k - 1) + ipow(BigInt(ell), k - 2));
      r.payload["expected"] = rational_json(expected);
      r.payload["pass"] = expected == rep.lambda;
      *out = wrap(std::move(r), expected == rep.lambda ? 1 : 0);
      return expected == rep.lambda ? SKLIFT_OK : SKLIFT_CHECK_FAILED;
    }
    *out = wrap(std::move(r));
    return SKLIFT_OK;
  });
}

sklift_status sklift_bernoulli(sklift_context* ctx, uint64_t p, uint64_t n, int scan, sklift_record** out) {
  return guarded(ctx, out, [&] {
    need_out(out);
    if (!modp::is_prime_u64(p) || p < 5) throw DomainError("p must be a prime >= 5");
    FormRecord r;
    r.kind = "value";
    if (scan) {
      json idx = json::array();
      for (auto t : irregular_scan(p)) idx.push_back(std::to_string(t));
      r.params = {{"op", "irregular-scan"}, {"p", std::to_string(p)}};
      r.payload = {{"p", std::to_string(p)}, {"irregular_indices", idx}};
    } else {
      auto b = bernoulli_mod_p(n, p);
      r.params = {{"op", "bernoulli-mod-p"}, {"p", std::to_string(p)}, {"n", std::to_string(n)}};
      r.payload = {{"p", std::to_string(p)}, {"n", std::to_string(n)}, {"residue", std::to_string(b.residue)}};
    }
    *out = wrap(std::move(r));
    return SKLIFT_OK;
  });
}

sklift_status sklift_l_alg(sklift_context* ctx, int weight, int j, long twist, uint64_t p, sklift_record** out) {
  return guarded(ctx, out, [&] {
    need_out(out);
    auto chi = twist == 1 ? DirichletChar::trivial() : DirichletChar::quadratic(twist);
    auto f = newform(weight);
    auto S = SymbolSpace::build(weight);
    auto L = l_alg(S, f, j, chi);
    FormRecord r;
    r.kind = "value";
    r.weight = weight;
    r.params = {{"op", "l-alg"},
                {"weight", std::to_string(weight)},
                {"j", std::to_string(j)},
                {"twist", std::to_string(twist)},
                {"p", std::to_string(p)}};
    r.payload = {{"j", std::to_string(j)},
                 {"character", L.character},
                 {"sign", std::to_string(L.sign)},
                 {"normalization", L.normalization},
                 {"charpoly", poly_to_string(f.charpoly)},
                 {"value", L.value.to_string()},
                 {"zero", is_zero(L.value)}};
    if (p) {
      if (!modp::is_prime_u64(p)) throw DomainError(std::to_string(p) + " is not prime");
      auto v = l_alg_products(S, f, j, chi, p);
      json primes = json::array();
      for (const auto& P : v.primes)
        primes.push_back({{"factor", P.factor},
                          {"residue_degree", std::to_string(P.residue_degree)},
                          {"content", std::to_string(P.content)},
                          {"valuation", P.valuation ? std::to_string(*P.valuation) : "inf"}});
      r.payload["p"] = std::to_string(p);
      r.payload["norm"] = rational_json(v.norm);
      r.payload["valuation"] = v.valuation ? std::to_string(*v.valuation) : "inf";
      r.payload["primes"] = primes;
    }
    *out = wrap(std::move(r));
    return SKLIFT_OK;
  });
}

sklift_status sklift_check_hypotheses(sklift_context* ctx, int weight, uint64_t p, long chi_disc, long disc,
                                      sklift_record** out) {
  return guarded(ctx, out, [&] {
    need_out(out);
    auto chi = chi_disc == 1 ? DirichletChar::trivial() : DirichletChar::quadratic(chi_disc);
    auto rep = check_hypotheses(weight, p, chi, disc);
    const bool ok = rep.all_pass();
    *out = wrap(report_record(rep), ok ? 1 : 0);
    return ok ? SKLIFT_OK : SKLIFT_CHECK_FAILED;
  });
}

sklift_status sklift_verify_paper_example(sklift_context* ctx, sklift_record** out) {
  return guarded(ctx, out, [&] {
    need_out(out);
    auto rep = verify_paper_example();
    const bool ok = rep.all_pass();
    *out = wrap(report_record(rep), ok ? 1 : 0);
    return ok ? SKLIFT_OK : SKLIFT_CHECK_FAILED;
  });
}

}  // extern "C"
