#include "apnforge/hexanomial.hpp"

#include <array>
#include <numeric>

namespace apnforge {

BCParams::BCParams(Field field, unsigned m, unsigned n, Element c, Element d)
    : field_(std::move(field)), m_(m), n_(n), k_(std::gcd(m, n)), c_(c), d_(d) {
  if (m == 0 || n == 0) throw ArgumentError("m and n must be positive");
  if (field_.degree() != 2 * m) {
    throw ArgumentError("field degree " + std::to_string(field_.degree()) + " is not 2m = " +
                        std::to_string(2 * m));
  }
  if (!field_.contains(c) || !field_.contains(d)) {
    throw FieldMismatch("c and d must belong to the hexanomial's field");
  }
  if (field_.in_subfield(d, m)) throw ArgumentError("d must lie outside GF(2^m)");
}

Element eval_F(const BCParams& p, Element x) {
  const Field& f = p.field();
  const Element xr = f.frobenius(x, p.m());
  const Element xs = f.frobenius(x, p.n());
  const Element xrs = f.frobenius(x, p.m() + p.n());
  const Element cr = f.frobenius(p.c(), p.m());

  const Element first = f.mul(x, f.add(f.add(xs, xr), f.mul(p.c(), xrs)));
  const Element second = f.mul(xs, f.add(f.mul(cr, xr), f.mul(p.d(), xrs)));
  // x^{(s+1)r} = x^{rs} x^r
  const Element third = f.mul(xrs, xr);
  return f.add(f.add(first, second), third);
}

Element eval_Ga(const BCParams& p, Element a, Element x) {
  const Field& f = p.field();
  if (a.is_zero()) throw ArgumentError("derivative direction a must be nonzero");
  const Element ax = f.mul(a, x);
  return f.add(f.add(eval_F(p, ax), eval_F(p, f.add(ax, a))), eval_F(p, a));
}

LinearizedDerivative::LinearizedDerivative(const BCParams& p, Element a)
    : field_(p.field()), m_(p.m()), n_(p.n()) {
  if (a.is_zero()) throw ArgumentError("derivative direction a must be nonzero");
  const Field& f = field_;
  const Element ar = f.frobenius(a, m_);
  const Element as = f.frobenius(a, n_);
  const Element ars = f.frobenius(a, m_ + n_);
  coeff_s1_ = f.mul(as, a);
  coeff_r1_ = f.mul(ar, a);
  coeff_rs1_ = f.mul(p.c(), f.mul(ars, a));
  coeff_rs_ = f.mul(f.frobenius(p.c(), m_), f.mul(ar, as));
  coeff_srs_ = f.mul(p.d(), f.mul(as, ars));
  coeff_s1r_ = f.mul(ars, ar);
}

Element LinearizedDerivative::operator()(Element x) const {
  const Field& f = field_;
  const Element xr = f.frobenius(x, m_);
  const Element xs = f.frobenius(x, n_);
  const Element xrs = f.frobenius(x, m_ + n_);
  Element acc = f.mul(coeff_s1_, f.add(x, xs));
  acc = f.add(acc, f.mul(coeff_r1_, f.add(x, xr)));
  acc = f.add(acc, f.mul(coeff_rs1_, f.add(x, xrs)));
  acc = f.add(acc, f.mul(coeff_rs_, f.add(xr, xs)));
  acc = f.add(acc, f.mul(coeff_srs_, f.add(xs, xrs)));
  acc = f.add(acc, f.mul(coeff_s1r_, f.add(xrs, xr)));
  return acc;
}

Element eval_Ga_linear(const BCParams& p, Element a, Element x) {
  return LinearizedDerivative(p, a)(x);
}

std::vector<Element> kernel_Ga(const BCParams& p, Element a) {
  const LinearizedDerivative g(p, a);
  const Field& f = p.field();
  std::vector<Element> kernel;
  for (std::uint64_t i = 0; i < f.size(); ++i) {
    const Element x = f.from_index(i);
    if (g(x).is_zero()) kernel.push_back(x);
  }
  return kernel;
}

std::uint64_t kernel_size_Ga(const BCParams& p, Element a) {
  const LinearizedDerivative g(p, a);
  const Field& f = p.field();
  // Reduced basis of the image, pivot on the leading bit.
  std::array<std::uint32_t, 32> basis{};
  unsigned rank = 0;
  for (unsigned i = 0; i < f.degree(); ++i) {
    std::uint32_t v = g(f.from_index(std::uint64_t{1} << i)).bits();
    for (unsigned bit = f.degree(); bit-- > 0 && v != 0;) {
      if (((v >> bit) & 1u) == 0) continue;
      if (basis[bit] == 0) {
        basis[bit] = v;
        ++rank;
        v = 0;
      } else {
        v ^= basis[bit];
      }
    }
  }
  return std::uint64_t{1} << (f.degree() - rank);
}

Element default_d(const Field& field, unsigned m) {
  for (std::uint64_t i = 0; i < field.size(); ++i) {
    const Element d = field.from_index(i);
    if (!field.in_subfield(d, m)) return d;
  }
  throw ArgumentError("GF(2^m) is the whole field; no valid d");
}

std::vector<std::uint32_t> tabulate_F(const BCParams& p) {
  const Field& f = p.field();
  const auto size = static_cast<std::int64_t>(f.size());
  std::vector<std::uint32_t> table(f.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < size; ++i) {
    table[i] = eval_F(p, f.from_index(static_cast<std::uint64_t>(i))).bits();
  }
  return table;
}

}  // namespace apnforge
