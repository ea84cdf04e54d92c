#pragma once

// The hexanomial
//
//   F(x) = x (x^s + x^r + c x^{rs}) + x^s (c^r x^r + d x^{rs}) + x^{(s+1) r}
//
// over GF(r^2), r = 2^m, s = 2^n, together with its derivative maps
// G_a(x) = F(ax) + F(ax + a) + F(a). All powers r, s, rs are applied as
// Frobenius iterates.

#include <cstdint>
#include <vector>

#include "apnforge/field.hpp"

namespace apnforge {

/// One hexanomial instance (m, n, c, d) over GF(2^{2m}). Requires d outside GF(2^m).
class BCParams {
 public:
  BCParams(Field field, unsigned m, unsigned n, Element c, Element d);

  const Field& field() const { return field_; }
  unsigned m() const { return m_; }
  unsigned n() const { return n_; }
  Element c() const { return c_; }
  Element d() const { return d_; }
  /// gcd(m, n)
  unsigned k() const { return k_; }
  /// 2^k, the order of the common subfield GF(r) ∩ GF(s).
  std::uint64_t u() const { return std::uint64_t{1} << k_; }
  /// r = 2^m
  std::uint64_t r() const { return std::uint64_t{1} << m_; }

 private:
  Field field_;
  unsigned m_;
  unsigned n_;
  unsigned k_;
  Element c_;
  Element d_;
};

Element eval_F(const BCParams& p, Element x);

/// F(ax) + F(ax + a) + F(a); a must be nonzero.
Element eval_Ga(const BCParams& p, Element a, Element x);

/// The six-term linearized form of G_a with its coefficients computed once:
///   a^{s+1}(x+x^s) + a^{r+1}(x+x^r) + c a^{rs+1}(x+x^{rs})
///   + c^r a^{r+s}(x^r+x^s) + d a^{s+rs}(x^s+x^{rs}) + a^{(s+1)r}(x^{rs}+x^r)
class LinearizedDerivative {
 public:
  LinearizedDerivative(const BCParams& p, Element a);
  Element operator()(Element x) const;

 private:
  Field field_;
  unsigned m_;
  unsigned n_;
  Element coeff_s1_;    // a^{s+1}
  Element coeff_r1_;    // a^{r+1}
  Element coeff_rs1_;   // c a^{rs+1}
  Element coeff_rs_;    // c^r a^{r+s}
  Element coeff_srs_;   // d a^{s+rs}
  Element coeff_s1r_;   // a^{(s+1)r}
};

Element eval_Ga_linear(const BCParams& p, Element a, Element x);

/// {x : G_a(x) = 0} by exhaustive scan, sorted in canonical order.
std::vector<Element> kernel_Ga(const BCParams& p, Element a);

/// |Ker G_a| from the GF(2)-rank of G_a on the polynomial basis.
std::uint64_t kernel_size_Ga(const BCParams& p, Element a);

/// Least element in canonical order that is not in GF(2^m).
Element default_d(const Field& field, unsigned m);

/// F evaluated at every field element, indexed by the element's bits.
std::vector<std::uint32_t> tabulate_F(const BCParams& p);

}  // namespace apnforge
