#pragma once

// Compatibility of a pair (r, s) = (2^m, 2^n): existence of c in GF(r^2) such
// that G(c, y) = y^{s+1} + c y^s + c^r y + 1 has no root y in mu_{r+1}.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "apnforge/field.hpp"

namespace apnforge {

/// The field GF(2^{2m}) together with (m, n) and the subgroup mu_{r+1}.
class CompatContext {
 public:
  CompatContext(Field field, unsigned m, unsigned n);
  CompatContext(unsigned m, unsigned n, unsigned max_degree = kDefaultMaxDegree);

  const Field& field() const { return field_; }
  unsigned m() const { return m_; }
  unsigned n() const { return n_; }
  std::uint64_t r() const { return std::uint64_t{1} << m_; }
  /// mu_{r+1}, sorted.
  const std::vector<Element>& unit_circle() const { return circle_; }
  bool on_unit_circle(Element y) const;

 private:
  Field field_;
  unsigned m_;
  unsigned n_;
  std::vector<Element> circle_;
};

/// G(c, y) = y^{s+1} + c y^s + c^r y + 1.
Element eval_Gpoly(const CompatContext& ctx, Element c, Element y);

/// True iff G(c, .) has no root on mu_{r+1}.
bool is_compatible_c(const CompatContext& ctx, Element c);

/// First compatible c in canonical order. Parallel scan, deterministic result.
std::optional<Element> find_c(const CompatContext& ctx);
/// Serial reference for find_c.
std::optional<Element> find_c_serial(const CompatContext& ctx);
/// Number of compatible c in the whole field.
std::uint64_t count_compatible(const CompatContext& ctx);

/// m > 1 and n/m is not an odd integer.
bool predicate_theorem2(unsigned m, unsigned n);

struct Lemma1Result {
  bool divides;       // (2^m + 1) | (2^n + 1)
  bool odd_multiple;  // m | n and n/m odd
};
/// Exact integer check; m, n <= 126.
Lemma1Result lemma1_check(unsigned m, unsigned n);

/// X_y = {a : G(a, y) = 0}; y must lie on mu_{r+1}.
std::vector<Element> X_y(const CompatContext& ctx, Element y);

/// Z = GF(r) ∪ mu_{r+1}, sorted.
std::vector<Element> Z_set(const CompatContext& ctx);

/// Union of X_y over all y in mu_{r+1}, sorted.
std::vector<Element> X_union(const CompatContext& ctx);

/// True iff y has multiplicative order exactly r + 1.
bool is_primitive_on_circle(const CompatContext& ctx, Element y);

enum class WitnessCase {
  kThree,       // y^{s-1} != 1, y^{s+1} != 1: c0, y, y^{-s}
  kC0AndY,      // y^{s-1} != 1, y^{s+1} == 1: c0, y
  kYAndYNegS,   // y^{s-1} == 1: y, y^{-s}
};

enum class WitnessKind { kC0, kY, kYNegS };

struct Witness {
  WitnessKind kind;
  Element value;
};

struct WitnessSet {
  WitnessCase which;
  std::vector<Witness> items;
};

/// Explicit elements of X_y ∩ Z for y in mu_{r+1} \ {1}.
WitnessSet witnesses(const CompatContext& ctx, Element y);

std::string to_string(WitnessCase c);
std::string to_string(WitnessKind k);

/// Degree -> modulus overrides.
using ModulusTable = std::map<unsigned, std::uint32_t>;

/// make_field(w) unless the table overrides the modulus for degree w.
Field field_for(unsigned w, const ModulusTable& table, unsigned max_degree = kDefaultMaxDegree);

struct CompatReport {
  unsigned m = 0;
  unsigned n = 0;
  bool predicate = false;
  bool exists_c = false;
  std::optional<Element> found_c;
  unsigned w = 0;
  std::uint32_t modulus = 0;
  /// Candidates examined: the whole field when counting, else up to the first hit.
  std::uint64_t search_size = 0;
  /// Present only for counted scans; observational.
  std::optional<std::uint64_t> compatible_count;

  bool consistent() const { return predicate == exists_c && found_c.has_value() == exists_c; }
};

CompatReport compat_report(const CompatContext& ctx, bool count_all);

}  // namespace apnforge
