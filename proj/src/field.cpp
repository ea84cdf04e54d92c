#include "apnforge/field.hpp"

#include <algorithm>
#include <bit>
#include <charconv>

namespace apnforge {
namespace {

// Log/antilog tables are built up to this degree (512 KiB at w = 16).
constexpr unsigned kTableMaxDegree = 16;

unsigned poly_degree(std::uint64_t p) { return 63 - std::countl_zero(p); }

std::uint64_t poly_mod(std::uint64_t a, std::uint64_t b) {
  const unsigned db = poly_degree(b);
  while (a != 0 && poly_degree(a) >= db) a ^= b << (poly_degree(a) - db);
  return a;
}

void check_degree(unsigned w, unsigned max_degree) {
  if (w == 0) throw ArgumentError("field degree must be positive");
  const unsigned cap = std::min(max_degree, kAbsoluteMaxDegree);
  if (w > cap) {
    throw SizeError("field degree " + std::to_string(w) + " exceeds cap " +
                    std::to_string(cap));
  }
}

}  // namespace

bool is_irreducible(std::uint32_t poly) {
  if (poly < 2) return false;
  const unsigned w = poly_degree(poly);
  for (std::uint64_t d = 2; poly_degree(d) <= w / 2; ++d) {
    if (poly_mod(poly, d) == 0) return false;
  }
  return true;
}

std::uint32_t least_irreducible(unsigned w) {
  if (w == 0 || w > kAbsoluteMaxDegree) throw ArgumentError("degree out of range");
  // Odd candidates only: for w = 1 this picks X + 1 over X.
  for (std::uint64_t p = (std::uint64_t{1} << w) | 1; p < (std::uint64_t{2} << w); p += 2) {
    if (is_irreducible(static_cast<std::uint32_t>(p))) return static_cast<std::uint32_t>(p);
  }
  throw std::logic_error("no irreducible polynomial found");
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> primes;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      primes.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) primes.push_back(n);
  return primes;
}

Field::Field(unsigned w, std::uint32_t modulus) : w_(w), modulus_(modulus) {
  const std::uint64_t order = group_order();
  const auto primes = prime_divisors(order);
  std::uint32_t g = 1;
  for (;; ++g) {
    const bool ok = std::all_of(primes.begin(), primes.end(), [&](std::uint64_t p) {
      return pow_bits(g, order / p) != 1;
    });
    if (ok) break;
  }
  generator_ = Element(g, modulus_);

  if (w_ <= kTableMaxDegree) {
    auto t = std::make_shared<Tables>();
    t->exp.resize(2 * order);
    t->log.assign(size(), 0);
    std::uint32_t v = 1;
    for (std::uint64_t i = 0; i < order; ++i) {
      t->exp[i] = t->exp[i + order] = v;
      t->log[v] = static_cast<std::uint32_t>(i);
      v = mul_slow(v, g);
    }
    tables_ = std::move(t);
  }
}

Field Field::with_modulus(unsigned w, std::uint32_t modulus, unsigned max_degree) {
  check_degree(w, max_degree);
  if (poly_degree(modulus) != w || (modulus & 1u) == 0 || !is_irreducible(modulus)) {
    throw ArgumentError("modulus " + to_hex(modulus, w + 1) +
                        " is not an irreducible polynomial of degree " + std::to_string(w));
  }
  return Field(w, modulus);
}

Field make_field(unsigned w, unsigned max_degree) {
  check_degree(w, max_degree);
  return Field::with_modulus(w, least_irreducible(w), max_degree);
}

Element Field::element(std::uint64_t bits) const {
  if (bits >= size()) {
    throw ArgumentError("value " + to_hex(bits, 1) + " does not fit GF(2^" + std::to_string(w_) +
                        ")");
  }
  return from_index(bits);
}

std::uint32_t Field::mul_slow(std::uint32_t x, std::uint32_t y) const {
  std::uint64_t p = 0;
  for (std::uint64_t a = x; y != 0; y >>= 1, a <<= 1) {
    if (y & 1u) p ^= a;
  }
  for (unsigned d = 2 * w_; d-- > w_;) {
    if ((p >> d) & 1u) p ^= std::uint64_t{modulus_} << (d - w_);
  }
  return static_cast<std::uint32_t>(p);
}

std::uint32_t Field::mul_bits(std::uint32_t x, std::uint32_t y) const {
  if (x == 0 || y == 0) return 0;
  if (tables_) return tables_->exp[tables_->log[x] + tables_->log[y]];
  return mul_slow(x, y);
}

std::uint32_t Field::pow_bits(std::uint32_t x, std::uint64_t e) const {
  if (e == 0) return 1;
  if (x == 0) return 0;
  e %= group_order();
  if (tables_) {
    const std::uint64_t l = (tables_->log[x] * e) % group_order();
    return tables_->exp[l];
  }
  std::uint32_t result = 1;
  for (std::uint32_t base = x; e != 0; e >>= 1) {
    if (e & 1u) result = mul_slow(result, base);
    base = mul_slow(base, base);
  }
  return result;
}

Element Field::add(Element x, Element y) const {
  check(x);
  check(y);
  return {x.bits() ^ y.bits(), modulus_};
}

Element Field::mul(Element x, Element y) const {
  check(x);
  check(y);
  return {mul_bits(x.bits(), y.bits()), modulus_};
}

Element Field::inv(Element x) const {
  check(x);
  if (x.is_zero()) throw DivisionByZero("inverse of zero");
  if (tables_) {
    const std::uint32_t l = tables_->log[x.bits()];
    return {tables_->exp[l == 0 ? 0 : group_order() - l], modulus_};
  }
  return {pow_bits(x.bits(), group_order() - 1), modulus_};
}

Element Field::pow(Element x, std::uint64_t e) const {
  check(x);
  return {pow_bits(x.bits(), e), modulus_};
}

Element Field::frobenius(Element x, long long t) const {
  check(x);
  const long long w = w_;
  const unsigned shift = static_cast<unsigned>(((t % w) + w) % w);
  if (shift == 0 || x.bits() <= 1) return x;
  if (tables_) {
    const std::uint64_t l = (std::uint64_t{tables_->log[x.bits()]} << shift) % group_order();
    return {tables_->exp[l], modulus_};
  }
  std::uint32_t v = x.bits();
  for (unsigned i = 0; i < shift; ++i) v = mul_slow(v, v);
  return {v, modulus_};
}

bool Field::in_subfield(Element x, unsigned dsub) const {
  if (dsub == 0 || w_ % dsub != 0) {
    throw ArgumentError("subfield degree " + std::to_string(dsub) + " does not divide " +
                        std::to_string(w_));
  }
  return frobenius(x, dsub) == x;
}

std::uint64_t Field::multiplicative_order(Element x) const {
  check(x);
  if (x.is_zero()) throw ArgumentError("zero has no multiplicative order");
  std::uint64_t order = group_order();
  for (std::uint64_t p : prime_divisors(order)) {
    while (order % p == 0 && pow_bits(x.bits(), order / p) == 1) order /= p;
  }
  return order;
}

std::vector<Element> mu(const Field& field, std::uint64_t n) {
  const std::uint64_t order = field.group_order();
  if (n == 0 || order % n != 0) {
    throw ArgumentError(std::to_string(n) + " does not divide " + std::to_string(order));
  }
  const Element step = field.pow(field.generator(), order / n);
  std::vector<Element> roots;
  roots.reserve(n);
  Element z = field.one();
  for (std::uint64_t i = 0; i < n; ++i) {
    roots.push_back(z);
    z = field.mul(z, step);
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

std::string to_hex(std::uint64_t bits, unsigned width) {
  std::string out;
  do {
    out.insert(out.begin(), "0123456789abcdef"[bits & 0xf]);
    bits >>= 4;
  } while (bits != 0);
  const std::size_t digits = std::max(1u, (width + 3) / 4);
  if (out.size() < digits) out.insert(0, digits - out.size(), '0');
  return out;
}

std::string to_hex(const Field& field, Element x) {
  if (!field.contains(x)) throw FieldMismatch("element belongs to a different field");
  return to_hex(x.bits(), field.degree());
}

std::uint64_t parse_hex(std::string_view text) {
  if (text.starts_with("0x") || text.starts_with("0X")) text.remove_prefix(2);
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value, 16);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ArgumentError("invalid hex value '" + std::string(text) + "'");
  }
  return value;
}

Element element_from_hex(const Field& field, std::string_view text) {
  return field.element(parse_hex(text));
}

}  // namespace apnforge
