// sklift command-line front end over the C interface.
#include <cstdio>
#include <functional>
#include <string>

#include "CLI11.hpp"
#include "sklift/sklift.h"

namespace {

int emit(sklift_context* ctx, sklift_status s, sklift_record* rec) {
  if (rec) std::fputs(sklift_record_text(rec), stdout);
  if (s != SKLIFT_OK && s != SKLIFT_CHECK_FAILED) std::fprintf(stderr, "sklift: %s\n", sklift_context_last_error(ctx));
  sklift_record_free(rec);
  return static_cast<int>(s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Saito-Kurokawa lifts with exact arithmetic"};
  app.require_subcommand(1);
  std::string cache_dir;
  app.add_option("--cache-dir", cache_dir, "cache directory (default $SKLIFT_CACHE_DIR or ./.sklift-cache)");
  app.set_version_flag("--version", std::string(sklift_version()));

  int weight = 0, point = 0;
  std::size_t prec = 0, bound = 6, index = 0, dmax = 0;
  unsigned long ell = 2;
  long disc = 0, twist = 1, chi_disc = -3;
  std::uint64_t p = 0, n = 0;
  bool scan = false;
  std::function<sklift_status(sklift_context*, sklift_record**)> run;

  auto* basis = app.add_subcommand("basis", "Miller basis of S_W");
  basis->add_option("--weight", weight)->required();
  basis->add_option("--prec", prec, "number of coefficients");
  basis->callback([&] { run = [&](auto* c, auto** r) { return sklift_basis(c, weight, prec, r); }; });

  auto* hecke = app.add_subcommand("hecke", "T(L) on the Miller basis and its charpoly");
  hecke->add_option("--weight", weight)->required();
  hecke->add_option("--ell", ell)->required();
  hecke->add_option("--prec", prec);
  hecke->callback([&] { run = [&](auto* c, auto** r) { return sklift_hecke(c, weight, ell, prec, r); }; });

  auto* nf = app.add_subcommand("newform", "newform of weight W over its Hecke field");
  nf->add_option("--weight", weight)->required();
  nf->callback([&] { run = [&](auto* c, auto** r) { return sklift_newform(c, weight, r); }; });

  auto* jac = app.add_subcommand("jacobi", "index-1 Jacobi cusp forms of weight K");
  jac->add_option("--weight", weight)->required();
  jac->add_option("--dmax", dmax);
  jac->callback([&] { run = [&](auto* c, auto** r) { return sklift_jacobi(c, weight, dmax, r); }; });

  auto* koh = app.add_subcommand("kohnen", "plus-space forms of weight K-1/2");
  koh->add_option("--weight", weight)->required();
  koh->add_option("--prec", prec);
  koh->callback([&] { run = [&](auto* c, auto** r) { return sklift_kohnen(c, weight, prec, r); }; });

  auto* shi = app.add_subcommand("shimura", "D-th Shimura lift of a plus-space form");
  shi->add_option("--weight", weight)->required();
  shi->add_option("--disc", disc)->required();
  shi->add_option("--prec", prec);
  shi->add_option("--index", index, "basis element");
  shi->callback([&] { run = [&](auto* c, auto** r) { return sklift_shimura(c, weight, disc, prec, index, r); }; });

  auto* sk = app.add_subcommand("sk-lift", "Maass lift to genus 2 with the Maass relation check");
  sk->add_option("--weight", weight)->required();
  sk->add_option("--bound", bound);
  sk->add_option("--index", index);
  sk->callback([&] { run = [&](auto* c, auto** r) { return sklift_sk_lift(c, weight, bound, index, r); }; });

  auto* sh = app.add_subcommand("siegel-hecke", "T(L) eigenvalue of the lift");
  weight = 10;
  sh->add_option("--weight", weight, "Siegel weight K (default 10)");
  sh->add_option("--ell", ell)->required();
  sh->add_option("--bound", bound);
  sh->add_option("--index", index);
  sh->callback(
      [&] { run = [&](auto* c, auto** r) { return sklift_siegel_hecke(c, weight, ell, bound, index, r); }; });

  auto* ber = app.add_subcommand("bernoulli", "B_n mod p, or the irregular indices of p");
  ber->add_option("--mod-p", p)->required();
  ber->add_option("--n", n);
  ber->add_flag("--scan", scan);
  ber->callback([&] {
    if (!scan && n == 0) throw CLI::ValidationError("--n", "give --n or --scan");
    run = [&](auto* c, auto** r) { return sklift_bernoulli(c, p, n, scan ? 1 : 0, r); };
  });

  auto* la = app.add_subcommand("l-alg", "algebraic L-value and its p-valuation");
  la->add_option("--weight", weight)->required();
  la->add_option("--point", point)->required();
  la->add_option("--twist", twist, "fundamental discriminant (1 = none)");
  la->add_option("--p", p, "prime for the valuation");
  la->callback([&] { run = [&](auto* c, auto** r) { return sklift_l_alg(c, weight, point, twist, p, r); }; });

  auto* hy = app.add_subcommand("check-hypotheses", "divisibility report for (W, P, chi, D)");
  hy->add_option("--weight", weight)->required();
  hy->add_option("--p", p)->required();
  hy->add_option("--chi", chi_disc, "discriminant of chi (1 = trivial)");
  hy->add_option("--disc", disc)->required();
  hy->callback(
      [&] { run = [&](auto* c, auto** r) { return sklift_check_hypotheses(c, weight, p, chi_disc, disc, r); }; });

  auto* ver = app.add_subcommand("verify-paper-example", "p = 516223, weight 54 reproduction");
  ver->callback([&] { run = [&](auto* c, auto** r) { return sklift_verify_paper_example(c, r); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : static_cast<int>(SKLIFT_DOMAIN_ERROR);
  }

  sklift_context* ctx = sklift_context_new(cache_dir.empty() ? nullptr : cache_dir.c_str());
  if (!ctx) {
    std::fprintf(stderr, "sklift: cannot create context\n");
    return static_cast<int>(SKLIFT_INTERNAL_ERROR);
  }
  sklift_record* rec = nullptr;
  sklift_status s = run(ctx, &rec);
  int code = emit(ctx, s, rec);
  sklift_context_free(ctx);
  return code;
}
