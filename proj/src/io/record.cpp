#include "sklift/io/record.hpp"

#include <cstdio>

#include "sklift/errors.hpp"

namespace sklift {

using nlohmann::json;

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string FormRecord::hash() const { return hex64(fnv1a64(payload.dump())); }

bool operator==(const FormRecord& a, const FormRecord& b) {
  return a.kind == b.kind && a.weight == b.weight && a.precision == b.precision && a.params == b.params &&
         a.payload == b.payload;
}

std::string serialize(const FormRecord& r) {
  json j;
  j["kind"] = r.kind;
  j["weight"] = r.weight;
  j["precision"] = r.precision;
  j["payload"] = r.payload;
  j["meta"] = {{"version", kArtifactVersion}, {"params", r.params}, {"hash", r.hash()}};
  return j.dump(1) + "\n";
}

FormRecord parse_record(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw DomainError(std::string("malformed record: ") + e.what());
  }
  try {
    FormRecord r;
    r.kind = j.at("kind").get<std::string>();
    r.weight = j.at("weight").get<int>();
    r.precision = j.at("precision").get<std::uint64_t>();
    r.payload = j.at("payload");
    const auto& meta = j.at("meta");
    if (meta.at("version").get<std::string>() != kArtifactVersion)
      throw DomainError("record version " + meta.at("version").get<std::string>() + " is not supported");
    r.params = meta.at("params");
    if (meta.at("hash").get<std::string>() != r.hash()) throw DomainError("record hash does not match its payload");
    return r;
  } catch (const json::exception& e) {
    throw DomainError(std::string("malformed record: ") + e.what());
  }
}

json rational_json(const BigRational& q) { return to_string(q); }

BigRational json_rational(const json& j) {
  if (!j.is_string()) throw DomainError("expected a decimal string, got " + j.dump());
  return parse_rational(j.get<std::string>());
}

namespace {

json rational_array(const std::vector<BigRational>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(rational_json(x));
  return a;
}

std::vector<BigRational> array_rationals(const json& a) {
  std::vector<BigRational> v;
  for (const auto& x : a) v.push_back(json_rational(x));
  return v;
}

void expect_kind(const FormRecord& r, const char* kind) {
  if (r.kind != kind) throw DomainError("expected a " + std::string(kind) + " record, got " + r.kind);
}

json opt_json(const std::optional<long>& v) { return v ? std::to_string(*v) : "inf"; }

std::optional<long> json_opt(const json& j) {
  auto s = j.get<std::string>();
  if (s == "inf") return std::nullopt;
  return std::stol(s);
}

}  // namespace

FormRecord qexp_record(const QExpansion& f, const json& params) {
  FormRecord r;
  r.kind = "q-expansion";
  r.weight = f.weight();
  r.precision = f.precision();
  r.params = params;
  r.payload = {{"coefficients", rational_array(f.coeffs())}};
  return r;
}

QExpansion qexp_from_record(const FormRecord& r) {
  expect_kind(r, "q-expansion");
  auto c = array_rationals(r.payload.at("coefficients"));
  if (c.size() != r.precision) throw DomainError("coefficient count does not match precision");
  return QExpansion(r.weight, std::move(c));
}

FormRecord jacobi_record(const JacobiForm1& phi, const json& params) {
  FormRecord r;
  r.kind = "jacobi";
  r.weight = phi.weight;
  r.precision = phi.dmax();
  r.params = params;
  r.payload = {{"index", "1"}, {"c(-N)", rational_array(phi.coeffs)}};
  return r;
}

JacobiForm1 jacobi_from_record(const FormRecord& r) {
  expect_kind(r, "jacobi");
  JacobiForm1 phi;
  phi.weight = r.weight;
  phi.coeffs = array_rationals(r.payload.at("c(-N)"));
  return phi;
}

FormRecord kohnen_record(const KohnenForm& g, const json& params) {
  FormRecord r;
  r.kind = "kohnen";
  r.weight = g.k;
  r.precision = g.precision();
  r.params = params;
  r.payload = {{"weight", std::to_string(g.k) + "-1/2"}, {"coefficients", rational_array(g.a)}};
  return r;
}

KohnenForm kohnen_from_record(const FormRecord& r) {
  expect_kind(r, "kohnen");
  KohnenForm g;
  g.k = r.weight;
  g.a = array_rationals(r.payload.at("coefficients"));
  return g;
}

FormRecord siegel_record(const SiegelExpansion& F, const json& params) {
  FormRecord r;
  r.kind = "siegel";
  r.weight = F.weight();
  r.precision = F.bound();
  r.params = params;
  json c = json::object();
  for (const auto& [t, v] : F.coeffs())
    c[std::to_string(t.n) + "," + std::to_string(t.r) + "," + std::to_string(t.m)] = rational_json(v);
  r.payload = {{"coefficients", c}};
  return r;
}

SiegelExpansion siegel_from_record(const FormRecord& r) {
  expect_kind(r, "siegel");
  SiegelExpansion F(r.weight, r.precision);
  for (const auto& [key, v] : r.payload.at("coefficients").items()) {
    long n = 0, rr = 0, m = 0;
    if (std::sscanf(key.c_str(), "%ld,%ld,%ld", &n, &rr, &m) != 3) throw DomainError("bad siegel key " + key);
    F.set(n, rr, m, json_rational(v));
  }
  return F;
}

FormRecord matrix_record(const QMatrix& M, int weight, const json& params) {
  FormRecord r;
  r.kind = "matrix";
  r.weight = weight;
  r.params = params;
  json rows = json::array();
  for (std::size_t i = 0; i < M.rows(); ++i) rows.push_back(rational_array(M.row(i)));
  r.payload = {{"rows", std::to_string(M.rows())}, {"cols", std::to_string(M.cols())}, {"entries", rows}};
  return r;
}

QMatrix matrix_from_record(const FormRecord& r) {
  expect_kind(r, "matrix");
  const std::size_t rows = std::stoul(r.payload.at("rows").get<std::string>());
  const std::size_t cols = std::stoul(r.payload.at("cols").get<std::string>());
  QMatrix M(rows, cols);
  const auto& e = r.payload.at("entries");
  if (e.size() != rows) throw DomainError("matrix row count mismatch");
  for (std::size_t i = 0; i < rows; ++i) {
    if (e[i].size() != cols) throw DomainError("matrix column count mismatch");
    for (std::size_t j = 0; j < cols; ++j) M(i, j) = json_rational(e[i][j]);
  }
  return M;
}

FormRecord report_record(const DivisibilityReport& rep) {
  FormRecord r;
  r.kind = "report";
  r.weight = rep.weight;
  r.params = {{"p", std::to_string(rep.p)}, {"character", rep.character}, {"D", std::to_string(rep.disc)}};
  json checks = json::array();
  for (const auto& c : rep.checks)
    checks.push_back({{"name", c.name}, {"expected", c.expected}, {"computed", c.computed}, {"pass", c.pass}});
  json wit = json::array();
  for (const auto& [k, v] : rep.witnesses) wit.push_back(json::array({k, v}));
  r.payload = {{"p", std::to_string(rep.p)},
               {"weight", std::to_string(rep.weight)},
               {"character", rep.character},
               {"D", std::to_string(rep.disc)},
               {"m", opt_json(rep.m)},
               {"n", opt_json(rep.n)},
               {"character_required", rep.character_required},
               {"hypotheses_satisfied", rep.hypotheses_satisfied},
               {"all_pass", rep.all_pass()},
               {"checks", checks},
               {"witnesses", wit},
               {"notes", rep.notes}};
  return r;
}

DivisibilityReport report_from_record(const FormRecord& r) {
  expect_kind(r, "report");
  const auto& p = r.payload;
  DivisibilityReport rep;
  rep.p = std::stoull(p.at("p").get<std::string>());
  rep.weight = std::stoi(p.at("weight").get<std::string>());
  rep.character = p.at("character").get<std::string>();
  rep.disc = std::stol(p.at("D").get<std::string>());
  rep.m = json_opt(p.at("m"));
  rep.n = json_opt(p.at("n"));
  rep.character_required = p.at("character_required").get<bool>();
  rep.hypotheses_satisfied = p.at("hypotheses_satisfied").get<bool>();
  for (const auto& c : p.at("checks"))
    rep.checks.push_back({c.at("name").get<std::string>(), c.at("expected").get<std::string>(),
                          c.at("computed").get<std::string>(), c.at("pass").get<bool>()});
  for (const auto& w : p.at("witnesses")) rep.witnesses.push_back({w.at(0).get<std::string>(), w.at(1).get<std::string>()});
  rep.notes = p.at("notes").get<std::vector<std::string>>();
  return rep;
}

FormRecord newform_record(const NewformData& f) {
  FormRecord r;
  r.kind = "newform";
  r.weight = f.weight;
  r.precision = f.expansion.precision();
  r.params = {{"weight", std::to_string(f.weight)}};
  json coeffs = json::array();
  for (const auto& a : f.expansion.coeffs()) {
    std::vector<BigRational> v;
    for (int i = 0; i < f.charpoly.degree(); ++i) v.push_back(a.coeff(i));
    coeffs.push_back(rational_array(v));
  }
  json coords = json::array();
  for (const auto& c : f.coordinates) coords.push_back(c.to_string());
  r.payload = {{"charpoly", poly_to_string(f.charpoly)},
               {"degree", std::to_string(f.charpoly.degree())},
               {"generator", "a, a root of charpoly = a(2)"},
               {"coefficients", coeffs},
               {"miller_coordinates", coords}};
  return r;
}

FormRecord basis_record(const MillerBasis& b) {
  FormRecord r;
  r.kind = "basis";
  r.weight = b.weight;
  r.precision = b.precision;
  r.params = {{"weight", std::to_string(b.weight)}, {"prec", std::to_string(b.precision)}};
  json rows = json::array();
  for (const auto& f : b.rows) rows.push_back(rational_array(f.coeffs()));
  r.payload = {{"dimension", std::to_string(b.rows.size())}, {"rows", rows}};
  return r;
}

FormRecord error_record(const std::string& type, const std::string& message, int exit_code) {
  FormRecord r;
  r.kind = "error";
  r.payload = {{"type", type}, {"message", message}, {"exit_code", std::to_string(exit_code)}};
  return r;
}

}  // namespace sklift
