#include "apnforge/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>
#include <vector>

#include "apnforge/report.hpp"

namespace apnforge::cli {
namespace {

// Number of random (a, x) pairs for verify's form-agreement spot check.
constexpr int kFormSamples = 256;

struct Options {
  std::string m_range = "1..6";
  std::string n_range = "1..12";
  std::string modulus_table;
  std::string format = "json";
  std::string out;
  unsigned cap_field = kDefaultMaxDegree;
  unsigned cap_spectrum = DiffLimits{}.spectrum_max_degree;
  unsigned cap_ddt = DiffLimits{}.ddt_max_degree;
  std::uint64_t seed = 1;

  unsigned m = 0;
  unsigned n = 0;
  std::string c_hex;
  std::string d_hex;
  std::string y_hex;
  std::string params_path;
  std::string ddt_out;
  unsigned max_2m = kDefaultMaxDegree;
  unsigned min_2m = 6;
};

RunConfig make_config(const Options& o) {
  RunConfig cfg;
  cfg.m_range = parse_range(o.m_range);
  cfg.n_range = parse_range(o.n_range);
  if (!o.modulus_table.empty()) cfg.moduli = load_modulus_table(o.modulus_table);
  cfg.field_cap = std::min(o.cap_field, kAbsoluteMaxDegree);
  cfg.limits.spectrum_max_degree = o.cap_spectrum;
  cfg.limits.ddt_max_degree = o.cap_ddt;
  cfg.format = o.format == "csv" ? Format::kCsv : Format::kJson;
  if (!o.out.empty()) cfg.out_path = o.out;
  cfg.seed = o.seed;
  if (cfg.field_cap < 2) throw ArgumentError("--cap-field must admit GF(4)");
  return cfg;
}

void emit(const RunConfig& cfg, const std::string& body, std::ostream& out) {
  if (!cfg.out_path) {
    out << body;
    return;
  }
  std::ofstream file(*cfg.out_path);
  if (!file) throw IoError("cannot open " + *cfg.out_path + " for writing");
  file << body;
  if (!file) throw IoError("write to " + *cfg.out_path + " failed");
}

std::string render(const RunConfig& cfg, const std::vector<CompatReport>& rows,
                   const std::string& command) {
  if (cfg.format == Format::kCsv) return compat_csv(rows);
  return compat_report_json(rows, command).dump(2) + "\n";
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::vector<CompatReport> rows;
  for (unsigned m = cfg.m_range.lo; m <= cfg.m_range.hi; ++m) {
    const CompatContext ctx(field_for(2 * m, cfg.moduli, cfg.field_cap), m, 1);
    for (unsigned n = cfg.n_range.lo; n <= cfg.n_range.hi; ++n) {
      rows.push_back(compat_report(CompatContext(ctx.field(), m, n), true));
    }
  }
  emit(cfg, render(cfg, rows, "sweep"), out);
  std::size_t bad = 0;
  for (const auto& row : rows) {
    if (!row.consistent()) {
      ++bad;
      err << "MISMATCH m=" << row.m << " n=" << row.n << " predicate=" << row.predicate
          << " exists_c=" << row.exists_c << '\n';
    }
  }
  err << "sweep: " << rows.size() << " rows, " << bad << " disagreements\n";
  return bad == 0 ? kOk : kCheckFailed;
}

int cmd_bc_empirical(const RunConfig& cfg, const Options& o, std::ostream& out,
                     std::ostream& err) {
  if (o.max_2m > cfg.field_cap) {
    throw SizeError("--max-2m " + std::to_string(o.max_2m) + " exceeds field cap " +
                    std::to_string(cfg.field_cap));
  }
  std::vector<CompatReport> rows;
  for (unsigned w = std::max(2u, o.min_2m + (o.min_2m % 2)); w <= o.max_2m; w += 2) {
    const unsigned m = w / 2;
    rows.push_back(compat_report(CompatContext(field_for(w, cfg.moduli, cfg.field_cap), m, 1),
                                 false));
  }
  emit(cfg, render(cfg, rows, "bc-empirical"), out);
  int status = kOk;
  for (const auto& row : rows) {
    const bool expected = row.m > 1;
    if (!row.consistent() || row.exists_c != expected) {
      status = kCheckFailed;
      err << "FAIL m=" << row.m << " n=1 exists_c=" << row.exists_c << '\n';
    }
  }
  err << "bc-empirical: " << rows.size() << " rows (n = 1)\n";
  return status;
}

BCParams verify_params(const RunConfig& cfg, const Options& o, std::string& c_source,
                       bool& excluded) {
  excluded = false;
  if (!o.params_path.empty()) {
    std::ifstream in(o.params_path);
    if (!in) throw IoError("cannot read " + o.params_path);
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw ArgumentError(o.params_path + ": " + e.what());
    }
    c_source = "params-file";
    return params_from_json(j, cfg.field_cap);
  }
  if (o.m == 0 || o.n == 0) throw ArgumentError("verify needs --m and --n (or --params)");
  const Field field = field_for(2 * o.m, cfg.moduli, cfg.field_cap);
  const Element d = o.d_hex.empty() ? default_d(field, o.m) : element_from_hex(field, o.d_hex);

  Element c = field.zero();
  if (!o.c_hex.empty()) {
    c = element_from_hex(field, o.c_hex);
    c_source = "user";
  } else if (predicate_theorem2(o.m, o.n)) {
    const auto found = find_c(CompatContext(field, o.m, o.n));
    if (!found) throw VerificationError("no compatible c although the pair is compatible");
    c = *found;
    c_source = "find_c";
  } else if (o.n % o.m == 0) {
    c_source = "lemma2-least";
  } else {
    excluded = true;
    c_source = "none";
  }
  return BCParams(field, o.m, o.n, c, d);
}

int cmd_verify(const RunConfig& cfg, const Options& o, std::ostream& out, std::ostream& err) {
  std::string c_source;
  bool excluded = false;
  const BCParams p = verify_params(cfg, o, c_source, excluded);
  if (excluded) {
    nlohmann::json j = {{"schema", kSchemaVersion},
                        {"command", "verify"},
                        {"status", "theorem-2-excluded"},
                        {"m", p.m()},
                        {"n", p.n()}};
    emit(cfg, j.dump(2) + "\n", out);
    err << "verify: no admissible c for m=" << p.m() << " n=" << p.n() << '\n';
    return kCheckFailed;
  }

  const Field& f = p.field();
  std::mt19937_64 rng(cfg.seed);
  std::uniform_int_distribution<std::uint64_t> pick(0, f.size() - 1);
  for (int i = 0; i < kFormSamples; ++i) {
    const Element a = f.from_index(1 + pick(rng) % (f.size() - 1));
    const Element x = f.from_index(pick(rng));
    if (eval_Ga(p, a, x) != eval_Ga_linear(p, a, x)) {
      throw VerificationError("defining and linearized forms of G_a disagree");
    }
  }

  const auto spec = spectrum(p, cfg.limits);
  cross_check(spec, kernel_sizes(p));

  SpectrumVerdict verdict;
  verdict.k = p.k();
  verdict.t = p.u();
  verdict.is_2k_to_one = spec.is_t_to_one(verdict.t);
  verdict.is_apn = spec.is_t_to_one(2);

  auto report = spectrum_report_json(p, spec, verdict, c_source);
  report["status"] = verdict.is_2k_to_one ? "ok" : "not-2k-to-one";
  report["c_compatible"] = is_compatible_c(CompatContext(f, p.m(), p.n()), p.c());
  report["form_check_samples"] = kFormSamples;
  report["seed"] = cfg.seed;
  emit(cfg, report.dump(2) + "\n", out);

  if (!o.ddt_out.empty()) {
    const Ddt table = ddt(p, cfg.limits);
    std::ofstream file(o.ddt_out);
    if (!file) throw IoError("cannot open " + o.ddt_out + " for writing");
    write_ddt_csv(file, table);
    if (!file) throw IoError("write to " + o.ddt_out + " failed");
  }

  err << "verify m=" << p.m() << " n=" << p.n() << ": " << verdict.t << "-to-one "
      << (verdict.is_2k_to_one ? "holds" : "FAILS") << " on all " << spec.per_a.size()
      << " derivatives" << (verdict.is_apn ? " (APN)" : "") << '\n';
  return verdict.is_2k_to_one ? kOk : kCheckFailed;
}

int cmd_witness(const RunConfig& cfg, const Options& o, std::ostream& out) {
  if (o.m == 0 || o.n == 0 || o.y_hex.empty()) {
    throw ArgumentError("witness needs --m, --n and --y");
  }
  const CompatContext ctx(field_for(2 * o.m, cfg.moduli, cfg.field_cap), o.m, o.n);
  const Field& f = ctx.field();
  const Element y = element_from_hex(f, o.y_hex);
  const WitnessSet set = witnesses(ctx, y);
  const auto z = Z_set(ctx);

  std::ostringstream text;
  text << "m=" << o.m << " n=" << o.n << " y=" << to_hex(f, y)
       << " primitive=" << (is_primitive_on_circle(ctx, y) ? "yes" : "no") << '\n';
  text << "case: " << to_string(set.which) << '\n';
  text << std::left << std::setw(8) << "witness" << std::setw(10) << "value" << std::setw(10)
       << "G(w,y)=0" << std::setw(8) << "in Z" << "in F_r" << '\n';
  bool ok = true;
  for (const auto& w : set.items) {
    const bool root = eval_Gpoly(ctx, w.value, y).is_zero();
    const bool in_z = std::binary_search(z.begin(), z.end(), w.value);
    const bool in_fr = f.in_subfield(w.value, o.m);
    ok = ok && root && in_z && (w.kind != WitnessKind::kC0 || in_fr);
    text << std::setw(8) << to_string(w.kind) << std::setw(10) << to_hex(f, w.value)
         << std::setw(10) << (root ? "yes" : "no") << std::setw(8) << (in_z ? "yes" : "no")
         << (in_fr ? "yes" : "no") << '\n';
  }
  emit(cfg, text.str(), out);
  return ok ? kOk : kCheckFailed;
}

}  // namespace

Range parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    std::size_t used = 0;
    Range r;
    if (dots == std::string::npos) {
      r.lo = r.hi = static_cast<unsigned>(std::stoul(text, &used));
      if (used != text.size()) throw ArgumentError("");
    } else {
      const std::string lo = text.substr(0, dots);
      const std::string hi = text.substr(dots + 2);
      r.lo = static_cast<unsigned>(std::stoul(lo, &used));
      if (used != lo.size()) throw ArgumentError("");
      r.hi = static_cast<unsigned>(std::stoul(hi, &used));
      if (used != hi.size()) throw ArgumentError("");
    }
    if (r.lo == 0 || r.lo > r.hi) throw ArgumentError("");
    return r;
  } catch (const std::exception&) {
    throw ArgumentError("invalid range '" + text + "' (expected A..B with 1 <= A <= B)");
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Budaghyan-Carlet hexanomial construction and verification"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;

  app.add_option("--modulus-table", o.modulus_table, "JSON map degree -> modulus hex")
      ->envname("APNFORGE_MODULUS_TABLE");
  app.add_option("--format", o.format, "Report format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", o.out, "Write the report here instead of stdout");
  app.add_option("--cap-field", o.cap_field, "Largest field degree 2m");
  app.add_option("--cap-spectrum", o.cap_spectrum, "Largest 2m for the derivative spectrum");
  app.add_option("--cap-ddt", o.cap_ddt, "Largest 2m for a materialized DDT");
  app.add_option("--seed", o.seed, "Seed for randomized spot checks");

  auto* sweep = app.add_subcommand("sweep", "Compare brute-force c existence with the closed form");
  sweep->add_option("--m-range", o.m_range, "m range A..B");
  sweep->add_option("--n-range", o.n_range, "n range A..B");

  auto* verify = app.add_subcommand("verify", "Check that all derivatives are 2^k-to-one");
  verify->add_option("--m", o.m);
  verify->add_option("--n", o.n);
  verify->add_option("--c", o.c_hex, "c as hex (default: first compatible c)");
  verify->add_option("--d", o.d_hex, "d as hex (default: least d outside GF(2^m))");
  verify->add_option("--params", o.params_path, "Parameter JSON {m, n, c, d, modulus}");
  verify->add_option("--ddt-out", o.ddt_out, "Also write the full DDT as CSV");

  auto* witness = app.add_subcommand("witness", "Print the explicit elements of X_y ∩ Z");
  witness->add_option("--m", o.m)->required();
  witness->add_option("--n", o.n)->required();
  witness->add_option("--y", o.y_hex, "y in mu_{r+1} as hex")->required();

  auto* empirical = app.add_subcommand("bc-empirical", "Compatibility of (2^m, 2) for a range of m");
  empirical->add_option("--max-2m", o.max_2m, "Largest field degree 2m");
  empirical->add_option("--min-2m", o.min_2m, "Smallest field degree 2m");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    const RunConfig cfg = make_config(o);
    if (*sweep) return cmd_sweep(cfg, out, err);
    if (*verify) return cmd_verify(cfg, o, out, err);
    if (*witness) return cmd_witness(cfg, o, out);
    return cmd_bc_empirical(cfg, o, out, err);
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIo;
  } catch (const VerificationError& e) {
    err << "verification failed: " << e.what() << '\n';
    return kCheckFailed;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace apnforge::cli
