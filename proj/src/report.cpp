#include "apnforge/report.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

namespace apnforge {

using nlohmann::json;

json field_json(const Field& field) {
  return {{"w", field.degree()},
          {"modulus", to_hex(field.modulus(), field.degree() + 1)},
          {"generator", to_hex(field, field.generator())}};
}

json params_json(const BCParams& p) {
  const Field& f = p.field();
  return {{"m", p.m()},
          {"n", p.n()},
          {"c", to_hex(f, p.c())},
          {"d", to_hex(f, p.d())},
          {"modulus", to_hex(f.modulus(), f.degree() + 1)}};
}

BCParams params_from_json(const json& j, unsigned max_degree) {
  try {
    const auto m = j.at("m").get<unsigned>();
    const auto n = j.at("n").get<unsigned>();
    const auto modulus = parse_hex(j.at("modulus").get<std::string>());
    const Field f = Field::with_modulus(2 * m, static_cast<std::uint32_t>(modulus), max_degree);
    return BCParams(f, m, n, element_from_hex(f, j.at("c").get<std::string>()),
                    element_from_hex(f, j.at("d").get<std::string>()));
  } catch (const json::exception& e) {
    throw ArgumentError(std::string("malformed parameter object: ") + e.what());
  }
}

json compat_row_json(const CompatReport& row) {
  json j = {{"m", row.m},
            {"n", row.n},
            {"predicate", row.predicate},
            {"exists_c", row.exists_c},
            {"found_c", row.found_c ? json(to_hex(row.found_c->bits(), row.w)) : json(nullptr)},
            {"modulus", to_hex(row.modulus, row.w + 1)},
            {"search_size", row.search_size}};
  if (row.compatible_count) j["compatible_count"] = *row.compatible_count;
  return j;
}

json compat_report_json(const std::vector<CompatReport>& rows, const std::string& command) {
  json out = {{"schema", kSchemaVersion}, {"command", command}, {"rows", json::array()}};
  bool agree = true;
  for (const auto& row : rows) {
    out["rows"].push_back(compat_row_json(row));
    agree = agree && row.consistent();
  }
  out["all_rows_agree"] = agree;
  return out;
}

std::string compat_csv(const std::vector<CompatReport>& rows) {
  std::ostringstream out;
  out << "m,n,predicate,exists_c,found_c_hex,modulus_hex,search_size\n";
  for (const auto& row : rows) {
    out << row.m << ',' << row.n << ',' << (row.predicate ? "true" : "false") << ','
        << (row.exists_c ? "true" : "false") << ','
        << (row.found_c ? to_hex(row.found_c->bits(), row.w) : std::string()) << ','
        << to_hex(row.modulus, row.w + 1) << ',' << row.search_size << '\n';
  }
  return out.str();
}

json spectrum_report_json(const BCParams& p, const DerivativeSpectrum& spec,
                          const SpectrumVerdict& verdict, const std::string& c_source) {
  json summary = json::array();
  for (const auto& [sizes, count] : spec.collapsed()) {
    summary.push_back({{"fiber_sizes", sizes}, {"directions", count}});
  }
  return {{"schema", kSchemaVersion},
          {"command", "verify"},
          {"params", params_json(p)},
          {"c_source", c_source},
          {"per_a_histogram_summary", summary},
          {"max_fiber", spec.max_count},
          {"kernel_check", "agree"},
          {"verdicts",
           {{"k", verdict.k},
            {"t", verdict.t},
            {"is_apn", verdict.is_apn},
            {"is_2k_to_one", verdict.is_2k_to_one}}}};
}

void write_ddt_csv(std::ostream& out, const Ddt& table) {
  out << 'a';
  for (std::uint64_t b = 0; b < table.dim(); ++b) out << ",b" << b;
  out << '\n';
  for (std::uint64_t a = 0; a < table.dim(); ++a) {
    out << a;
    for (std::uint64_t b = 0; b < table.dim(); ++b) out << ',' << table.at(a, b);
    out << '\n';
  }
}

ModulusTable parse_modulus_table(const json& j) {
  if (!j.is_object()) throw ArgumentError("modulus table must be a JSON object");
  ModulusTable table;
  for (const auto& [key, value] : j.items()) {
    unsigned w = 0;
    try {
      w = static_cast<unsigned>(std::stoul(key));
    } catch (const std::exception&) {
      throw ArgumentError("modulus table key '" + key + "' is not a degree");
    }
    if (!value.is_string()) throw ArgumentError("modulus for degree " + key + " must be hex");
    const auto modulus = parse_hex(value.get<std::string>());
    if (modulus > 0xffffffffull) throw ArgumentError("modulus for degree " + key + " too wide");
    // Validates irreducibility and degree.
    Field::with_modulus(w, static_cast<std::uint32_t>(modulus), kAbsoluteMaxDegree);
    table[w] = static_cast<std::uint32_t>(modulus);
  }
  return table;
}

ModulusTable load_modulus_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read modulus table " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ArgumentError("modulus table " + path + ": " + e.what());
  }
  return parse_modulus_table(j);
}

}  // namespace apnforge
