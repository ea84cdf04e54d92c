#pragma once

// Serialization of fields, parameter sets and reports (JSON canonical, CSV
// projections). Output carries "schema": 1 and no timestamps.

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "apnforge/compatibility.hpp"
#include "apnforge/diffspec.hpp"
#include "apnforge/hexanomial.hpp"

namespace apnforge {

inline constexpr int kSchemaVersion = 1;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

nlohmann::json field_json(const Field& field);
nlohmann::json params_json(const BCParams& p);
/// Inverse of params_json. The modulus recorded in the object selects the field.
BCParams params_from_json(const nlohmann::json& j, unsigned max_degree = kDefaultMaxDegree);

nlohmann::json compat_row_json(const CompatReport& row);
nlohmann::json compat_report_json(const std::vector<CompatReport>& rows, const std::string& command);

/// Columns: m,n,predicate,exists_c,found_c_hex,modulus_hex,search_size
std::string compat_csv(const std::vector<CompatReport>& rows);

struct SpectrumVerdict {
  unsigned k = 0;
  std::uint64_t t = 0;  // 2^k
  bool is_apn = false;
  bool is_2k_to_one = false;
};

nlohmann::json spectrum_report_json(const BCParams& p, const DerivativeSpectrum& spec,
                                    const SpectrumVerdict& verdict, const std::string& c_source);

/// Row-major CSV, header "a,b0,b1,...", rows in canonical order of a.
void write_ddt_csv(std::ostream& out, const Ddt& table);

/// JSON object mapping degree (decimal string) to modulus hex, e.g. {"4": "13"}.
ModulusTable load_modulus_table(const std::string& path);
ModulusTable parse_modulus_table(const nlohmann::json& j);

}  // namespace apnforge
