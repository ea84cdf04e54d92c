#include "apnforge/compatibility.hpp"

#include <algorithm>
#include <atomic>

namespace apnforge {
namespace {

constexpr std::uint64_t kScanBlock = 1024;

bool contains_sorted(const std::vector<Element>& v, Element x) {
  return std::binary_search(v.begin(), v.end(), x);
}

}  // namespace

CompatContext::CompatContext(Field field, unsigned m, unsigned n)
    : field_(std::move(field)), m_(m), n_(n) {
  if (m == 0 || n == 0) throw ArgumentError("m and n must be positive");
  if (field_.degree() != 2 * m) throw ArgumentError("field degree must be 2m");
  circle_ = mu(field_, r() + 1);
}

CompatContext::CompatContext(unsigned m, unsigned n, unsigned max_degree)
    : CompatContext(make_field(2 * m, max_degree), m, n) {}

bool CompatContext::on_unit_circle(Element y) const {
  return field_.contains(y) && contains_sorted(circle_, y);
}

Element eval_Gpoly(const CompatContext& ctx, Element c, Element y) {
  const Field& f = ctx.field();
  const Element ys = f.frobenius(y, ctx.n());
  const Element cr = f.frobenius(c, ctx.m());
  Element v = f.mul(ys, y);
  v = f.add(v, f.mul(c, ys));
  v = f.add(v, f.mul(cr, y));
  return f.add(v, f.one());
}

bool is_compatible_c(const CompatContext& ctx, Element c) {
  return std::none_of(ctx.unit_circle().begin(), ctx.unit_circle().end(),
                      [&](Element y) { return eval_Gpoly(ctx, c, y).is_zero(); });
}

std::optional<Element> find_c_serial(const CompatContext& ctx) {
  const Field& f = ctx.field();
  for (std::uint64_t i = 0; i < f.size(); ++i) {
    if (is_compatible_c(ctx, f.from_index(i))) return f.from_index(i);
  }
  return std::nullopt;
}

std::optional<Element> find_c(const CompatContext& ctx) {
  const Field& f = ctx.field();
  const std::uint64_t size = f.size();
  std::atomic<std::uint64_t> best{size};
  const auto blocks = static_cast<std::int64_t>((size + kScanBlock - 1) / kScanBlock);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t b = 0; b < blocks; ++b) {
    const std::uint64_t start = static_cast<std::uint64_t>(b) * kScanBlock;
    const std::uint64_t end = std::min(size, start + kScanBlock);
    for (std::uint64_t i = start; i < end && i < best.load(std::memory_order_relaxed); ++i) {
      if (!is_compatible_c(ctx, f.from_index(i))) continue;
      std::uint64_t cur = best.load();
      while (i < cur && !best.compare_exchange_weak(cur, i)) {
      }
      break;
    }
  }
  if (best.load() == size) return std::nullopt;
  return f.from_index(best.load());
}

std::uint64_t count_compatible(const CompatContext& ctx) {
  const Field& f = ctx.field();
  const auto size = static_cast<std::int64_t>(f.size());
  std::uint64_t count = 0;
#pragma omp parallel for schedule(dynamic, 256) reduction(+ : count)
  for (std::int64_t i = 0; i < size; ++i) {
    if (is_compatible_c(ctx, f.from_index(static_cast<std::uint64_t>(i)))) ++count;
  }
  return count;
}

bool predicate_theorem2(unsigned m, unsigned n) {
  if (m == 0 || n == 0) throw ArgumentError("m and n must be positive");
  const bool odd_multiple = n % m == 0 && (n / m) % 2 == 1;
  return m > 1 && !odd_multiple;
}

Lemma1Result lemma1_check(unsigned m, unsigned n) {
  if (m == 0 || n == 0 || m > 126 || n > 126) throw ArgumentError("m, n must lie in 1..126");
  __extension__ typedef unsigned __int128 u128;
  const u128 r1 = (u128{1} << m) + 1;
  const u128 s1 = (u128{1} << n) + 1;
  return {s1 % r1 == 0, n % m == 0 && (n / m) % 2 == 1};
}

std::vector<Element> X_y(const CompatContext& ctx, Element y) {
  if (!ctx.on_unit_circle(y)) throw ArgumentError("y is not an (r+1)-th root of unity");
  const Field& f = ctx.field();
  std::vector<Element> out;
  for (std::uint64_t i = 0; i < f.size(); ++i) {
    if (eval_Gpoly(ctx, f.from_index(i), y).is_zero()) out.push_back(f.from_index(i));
  }
  return out;
}

std::vector<Element> Z_set(const CompatContext& ctx) {
  const Field& f = ctx.field();
  std::vector<Element> z = ctx.unit_circle();
  for (std::uint64_t i = 0; i < f.size(); ++i) {
    if (f.in_subfield(f.from_index(i), ctx.m())) z.push_back(f.from_index(i));
  }
  std::sort(z.begin(), z.end());
  z.erase(std::unique(z.begin(), z.end()), z.end());
  return z;
}

std::vector<Element> X_union(const CompatContext& ctx) {
  std::vector<Element> all;
  for (Element y : ctx.unit_circle()) {
    const auto xs = X_y(ctx, y);
    all.insert(all.end(), xs.begin(), xs.end());
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

bool is_primitive_on_circle(const CompatContext& ctx, Element y) {
  if (!ctx.on_unit_circle(y)) return false;
  const Field& f = ctx.field();
  const std::uint64_t order = ctx.r() + 1;
  const auto primes = prime_divisors(order);
  return std::all_of(primes.begin(), primes.end(),
                     [&](std::uint64_t p) { return f.pow(y, order / p) != f.one(); });
}

WitnessSet witnesses(const CompatContext& ctx, Element y) {
  const Field& f = ctx.field();
  if (!ctx.on_unit_circle(y)) throw ArgumentError("y is not an (r+1)-th root of unity");
  if (y == f.one()) throw ArgumentError("y must differ from 1");

  const Element ys = f.frobenius(y, ctx.n());
  const bool s_minus_one = ys == y;                      // y^{s-1} = 1
  const bool s_plus_one = f.mul(ys, y) == f.one();       // y^{s+1} = 1
  const Element y_neg_s = f.inv(ys);

  WitnessSet out{};
  if (s_minus_one) {
    out.which = WitnessCase::kYAndYNegS;
    out.items = {{WitnessKind::kY, y}, {WitnessKind::kYNegS, y_neg_s}};
    return out;
  }
  const Element c0 = f.div(f.add(f.mul(ys, y), f.one()), f.add(ys, y));
  if (s_plus_one) {
    out.which = WitnessCase::kC0AndY;
    out.items = {{WitnessKind::kC0, c0}, {WitnessKind::kY, y}};
  } else {
    out.which = WitnessCase::kThree;
    out.items = {{WitnessKind::kC0, c0}, {WitnessKind::kY, y}, {WitnessKind::kYNegS, y_neg_s}};
  }
  return out;
}

std::string to_string(WitnessCase c) {
  switch (c) {
    case WitnessCase::kThree:
      return "y^(s-1) != 1, y^(s+1) != 1";
    case WitnessCase::kC0AndY:
      return "y^(s-1) != 1, y^(s+1) = 1";
    case WitnessCase::kYAndYNegS:
      return "y^(s-1) = 1";
  }
  return "?";
}

std::string to_string(WitnessKind k) {
  switch (k) {
    case WitnessKind::kC0:
      return "c0";
    case WitnessKind::kY:
      return "y";
    case WitnessKind::kYNegS:
      return "y^-s";
  }
  return "?";
}

Field field_for(unsigned w, const ModulusTable& table, unsigned max_degree) {
  if (const auto it = table.find(w); it != table.end()) {
    return Field::with_modulus(w, it->second, max_degree);
  }
  return make_field(w, max_degree);
}

CompatReport compat_report(const CompatContext& ctx, bool count_all) {
  CompatReport rep;
  rep.m = ctx.m();
  rep.n = ctx.n();
  rep.w = ctx.field().degree();
  rep.modulus = ctx.field().modulus();
  rep.predicate = predicate_theorem2(ctx.m(), ctx.n());
  rep.found_c = find_c(ctx);
  rep.exists_c = rep.found_c.has_value();
  if (count_all) {
    rep.compatible_count = count_compatible(ctx);
    rep.search_size = ctx.field().size();
  } else {
    rep.search_size = rep.found_c ? rep.found_c->bits() + std::uint64_t{1} : ctx.field().size();
  }
  return rep;
}

}  // namespace apnforge
