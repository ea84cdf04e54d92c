#pragma once

// Arithmetic in GF(2^w) over a polynomial basis.
//
// An Element is a coefficient bit-vector (bit i = coefficient of X^i) tagged
// with the modulus of the field it belongs to, so operands from two different
// realizations are rejected instead of being silently combined. Field is a
// cheap-to-copy immutable handle; lookup tables (w <= 16) are shared.

#include <compare>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace apnforge {

struct SizeError : std::length_error {
  using std::length_error::length_error;
};

struct ArgumentError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct DivisionByZero : std::domain_error {
  using std::domain_error::domain_error;
};

struct FieldMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Default upper bound on the extension degree accepted by make_field.
inline constexpr unsigned kDefaultMaxDegree = 24;
/// Hard representation limit: the modulus must fit in 32 bits.
inline constexpr unsigned kAbsoluteMaxDegree = 31;

class Field;

class Element {
 public:
  constexpr Element() = default;

  constexpr std::uint32_t bits() const { return bits_; }
  /// Modulus of the owning field.
  constexpr std::uint32_t tag() const { return tag_; }
  constexpr bool is_zero() const { return bits_ == 0; }

  // Canonical order: bit-vector read as an integer, ascending.
  friend constexpr bool operator==(Element, Element) = default;
  friend constexpr auto operator<=>(Element, Element) = default;

 private:
  friend class Field;
  constexpr Element(std::uint32_t bits, std::uint32_t tag) : bits_(bits), tag_(tag) {}

  std::uint32_t bits_ = 0;
  std::uint32_t tag_ = 0;
};

class Field {
 public:
  /// Field with an explicit modulus. Throws ArgumentError if the modulus is
  /// not an irreducible polynomial of degree w, SizeError if w exceeds the cap.
  static Field with_modulus(unsigned w, std::uint32_t modulus,
                            unsigned max_degree = kDefaultMaxDegree);

  unsigned degree() const { return w_; }
  std::uint32_t modulus() const { return modulus_; }
  Element generator() const { return generator_; }
  /// Number of elements, 2^w.
  std::uint64_t size() const { return std::uint64_t{1} << w_; }
  /// Order of the multiplicative group, 2^w - 1.
  std::uint64_t group_order() const { return size() - 1; }

  Element zero() const { return {0, modulus_}; }
  Element one() const { return {1, modulus_}; }
  /// Element from its bit-vector; bits >= 2^w is an ArgumentError.
  Element element(std::uint64_t bits) const;
  /// Raw wrap without range checks; for hot loops iterating 0..size()-1.
  Element from_index(std::uint64_t bits) const {
    return {static_cast<std::uint32_t>(bits), modulus_};
  }
  bool contains(Element x) const { return x.tag() == modulus_; }

  Element add(Element x, Element y) const;
  Element mul(Element x, Element y) const;
  Element sqr(Element x) const { return mul(x, x); }
  Element inv(Element x) const;
  Element div(Element x, Element y) const { return mul(x, inv(y)); }
  /// x^e; e is reduced modulo 2^w - 1 for x != 0. 0^0 = 1.
  Element pow(Element x, std::uint64_t e) const;
  /// x^(2^t) with t taken modulo w (negative t gives the inverse automorphism).
  Element frobenius(Element x, long long t) const;
  /// x in GF(2^dsub). dsub must divide w.
  bool in_subfield(Element x, unsigned dsub) const;
  /// Multiplicative order of a nonzero element.
  std::uint64_t multiplicative_order(Element x) const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.w_ == b.w_ && a.modulus_ == b.modulus_ && a.generator_ == b.generator_;
  }

 private:
  struct Tables {
    std::vector<std::uint32_t> exp;  // length 2 * (2^w - 1)
    std::vector<std::uint32_t> log;  // length 2^w, log[0] unused
  };

  Field(unsigned w, std::uint32_t modulus);

  void check(Element x) const {
    if (x.tag() != modulus_) throw FieldMismatch("element belongs to a different field");
  }
  std::uint32_t mul_bits(std::uint32_t x, std::uint32_t y) const;
  std::uint32_t mul_slow(std::uint32_t x, std::uint32_t y) const;
  std::uint32_t pow_bits(std::uint32_t x, std::uint64_t e) const;

  unsigned w_ = 0;
  std::uint32_t modulus_ = 0;
  Element generator_;
  std::shared_ptr<const Tables> tables_;
};

/// Field built on the least irreducible polynomial of degree w (coefficient
/// vectors compared as integers), with the least generator in canonical order.
Field make_field(unsigned w, unsigned max_degree = kDefaultMaxDegree);

/// Least irreducible polynomial of degree w with nonzero constant term.
std::uint32_t least_irreducible(unsigned w);
/// Trial division by every polynomial of degree 1..w/2.
bool is_irreducible(std::uint32_t poly);
/// Distinct prime divisors of n, ascending.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

/// The N-th roots of unity, sorted in canonical order. N must divide 2^w - 1.
std::vector<Element> mu(const Field& field, std::uint64_t n);

/// Lowercase hex, zero-padded to ceil(width/4) digits.
std::string to_hex(std::uint64_t bits, unsigned width);
std::string to_hex(const Field& field, Element x);
std::uint64_t parse_hex(std::string_view text);
Element element_from_hex(const Field& field, std::string_view text);

}  // namespace apnforge
