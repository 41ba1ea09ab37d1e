#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "sklift/exactnum/matrix.hpp"
#include "sklift/jacobi/jacobi.hpp"
#include "sklift/level1/level1.hpp"
#include "sklift/pipeline/pipeline.hpp"
#include "sklift/qexp/qexp.hpp"
#include "sklift/siegel/siegel.hpp"

namespace sklift {

inline constexpr const char* kArtifactVersion = "1.0.0";

// Interchange record. Integers are decimal strings, rationals "num/den";
// no JSON numbers appear in payloads. Serialized with sorted keys:
//   {"kind", "weight", "precision", "payload", "meta": {"version", "params", "hash"}}
// The hash is FNV-1a 64 of the compact payload text.
struct FormRecord {
  std::string kind;  // q-expansion, jacobi, kohnen, siegel, matrix, report, newform, basis, value, error
  int weight = 0;
  std::uint64_t precision = 0;  // precision, dmax or bound
  nlohmann::json params = nlohmann::json::object();
  nlohmann::json payload = nlohmann::json::object();

  std::string hash() const;
  friend bool operator==(const FormRecord& a, const FormRecord& b);
};

std::uint64_t fnv1a64(const std::string& bytes);
std::string hex64(std::uint64_t h);

std::string serialize(const FormRecord& r);
// Throws DomainError on malformed text, an unknown version or a hash
// mismatch.
FormRecord parse_record(const std::string& text);

nlohmann::json rational_json(const BigRational& q);
BigRational json_rational(const nlohmann::json& j);

FormRecord qexp_record(const QExpansion& f, const nlohmann::json& params = nlohmann::json::object());
QExpansion qexp_from_record(const FormRecord& r);

FormRecord jacobi_record(const JacobiForm1& phi, const nlohmann::json& params = nlohmann::json::object());
JacobiForm1 jacobi_from_record(const FormRecord& r);

FormRecord kohnen_record(const KohnenForm& g, const nlohmann::json& params = nlohmann::json::object());
KohnenForm kohnen_from_record(const FormRecord& r);

// Payload keys "n,r,m" of the reduced classes.
FormRecord siegel_record(const SiegelExpansion& F, const nlohmann::json& params = nlohmann::json::object());
SiegelExpansion siegel_from_record(const FormRecord& r);

FormRecord matrix_record(const QMatrix& M, int weight, const nlohmann::json& params = nlohmann::json::object());
QMatrix matrix_from_record(const FormRecord& r);

FormRecord report_record(const DivisibilityReport& rep);
DivisibilityReport report_from_record(const FormRecord& r);

FormRecord newform_record(const NewformData& f);
FormRecord basis_record(const MillerBasis& b);

// kind "error": {"type", "message", "exit_code"}.
FormRecord error_record(const std::string& type, const std::string& message, int exit_code);

}  // namespace sklift
