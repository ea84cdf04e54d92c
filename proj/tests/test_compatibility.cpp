#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "apnforge/compatibility.hpp"
#include "oracle.hpp"

namespace apnforge {
namespace {

// First c whose G(c, .) has no root on the unit circle, using only oracle
// arithmetic: y ranges over {y : y^{r+1} = 1} by exhaustive scan.
std::optional<std::uint64_t> oracle_first_c(unsigned m, unsigned n, std::uint64_t modulus) {
  const std::uint64_t size = std::uint64_t{1} << (2 * m);
  const std::uint64_t r = std::uint64_t{1} << m;
  const std::uint64_t s = std::uint64_t{1} << n;
  std::vector<std::uint64_t> circle;
  for (std::uint64_t y = 1; y < size; ++y) {
    if (oracle::pow(y, r + 1, modulus) == 1) circle.push_back(y);
  }
  for (std::uint64_t c = 0; c < size; ++c) {
    const std::uint64_t cr = oracle::pow(c, r, modulus);
    const bool root = std::any_of(circle.begin(), circle.end(), [&](std::uint64_t y) {
      return (oracle::pow(y, s + 1, modulus) ^ oracle::mul(c, oracle::pow(y, s, modulus), modulus) ^
              oracle::mul(cr, y, modulus) ^ 1) == 0;
    });
    if (!root) return c;
  }
  return std::nullopt;
}

TEST(Gpoly, PaperRoots) {
  for (unsigned m = 1; m <= 5; ++m) {
    for (unsigned n = 1; n <= 7; ++n) {
      const CompatContext ctx(m, n);
      const Field& f = ctx.field();
      EXPECT_TRUE(eval_Gpoly(ctx, f.zero(), f.one()).is_zero());
      for (Element y : ctx.unit_circle()) {
        EXPECT_TRUE(eval_Gpoly(ctx, y, y).is_zero());
        const Element y_neg_s = f.inv(f.frobenius(y, n));
        EXPECT_TRUE(eval_Gpoly(ctx, y_neg_s, y).is_zero());
      }
    }
  }
}

TEST(IsCompatible, ZeroNeverAndRTwoNever) {
  for (unsigned m = 1; m <= 5; ++m) {
    for (unsigned n = 1; n <= 6; ++n) {
      const CompatContext ctx(m, n);
      EXPECT_FALSE(is_compatible_c(ctx, ctx.field().zero()));
    }
  }
  for (unsigned n = 1; n <= 8; ++n) {
    const CompatContext ctx(1, n);
    for (std::uint64_t c = 0; c < 4; ++c) EXPECT_FALSE(is_compatible_c(ctx, ctx.field().element(c)));
  }
}

TEST(FindC, MatchesOracleScan) {
  for (unsigned m = 1; m <= 4; ++m) {
    for (unsigned n = 1; n <= 8; ++n) {
      const CompatContext ctx(m, n);
      const auto expected = oracle_first_c(m, n, ctx.field().modulus());
      const auto got = find_c(ctx);
      ASSERT_EQ(got.has_value(), expected.has_value()) << m << "," << n;
      if (got) EXPECT_EQ(got->bits(), *expected) << m << "," << n;
      EXPECT_EQ(find_c_serial(ctx), got);
    }
  }
}

TEST(FindC, FrozenValues) {
  // Frozen from oracle_first_c over X^4 + X + 1.
  const CompatContext ctx(2, 1);
  ASSERT_EQ(oracle_first_c(2, 1, 0x13), std::optional<std::uint64_t>(0x9));
  EXPECT_EQ(find_c(ctx), ctx.field().element(0x9));
  for (unsigned n = 1; n <= 8; ++n) EXPECT_FALSE(find_c(CompatContext(1, n)));
  for (unsigned m = 1; m <= 5; ++m) EXPECT_FALSE(find_c(CompatContext(m, m)));
}

TEST(FindC, ParallelAgreesWithSerialOnLargerFields) {
  for (auto [m, n] : {std::pair{6u, 1u}, {6u, 5u}, {7u, 2u}, {8u, 3u}}) {
    const CompatContext ctx(m, n);
    EXPECT_EQ(find_c(ctx), find_c_serial(ctx));
  }
}

TEST(Predicate, ClosedForm) {
  for (unsigned n = 1; n <= 20; ++n) EXPECT_FALSE(predicate_theorem2(1, n));
  EXPECT_FALSE(predicate_theorem2(3, 9));
  EXPECT_TRUE(predicate_theorem2(3, 6));
  EXPECT_TRUE(predicate_theorem2(2, 1));
  EXPECT_FALSE(predicate_theorem2(2, 2));
  EXPECT_THROW(predicate_theorem2(0, 1), ArgumentError);
}

TEST(Lemma1, ExamplesAndEquivalence) {
  auto check = [](unsigned m, unsigned n, bool want) {
    const auto r = lemma1_check(m, n);
    EXPECT_EQ(r.divides, want);
    EXPECT_EQ(r.odd_multiple, want);
  };
  check(1, 3, true);
  check(2, 4, false);
  check(2, 6, true);
  for (unsigned m = 1; m <= 64; ++m) {
    for (unsigned n = 1; n <= 64; ++n) {
      const auto r = lemma1_check(m, n);
      ASSERT_EQ(r.divides, r.odd_multiple) << m << "," << n;
    }
  }
  EXPECT_THROW(lemma1_check(0, 3), ArgumentError);
}

TEST(Xy, MembershipAndBounds) {
  for (unsigned m = 1; m <= 4; ++m) {
    for (unsigned n = 1; n <= 6; ++n) {
      const CompatContext ctx(m, n);
      const Field& f = ctx.field();
      for (Element y : ctx.unit_circle()) {
        const auto xs = X_y(ctx, y);
        EXPECT_TRUE(std::binary_search(xs.begin(), xs.end(), y));
        EXPECT_LE(xs.size(), ctx.r());
      }
      std::vector<Element> fr;
      for (std::uint64_t i = 0; i < f.size(); ++i) {
        if (f.in_subfield(f.element(i), m)) fr.push_back(f.element(i));
      }
      EXPECT_EQ(X_y(ctx, f.one()), fr);
    }
  }
  const CompatContext ctx(2, 1);
  EXPECT_THROW(X_y(ctx, ctx.field().zero()), ArgumentError);
  EXPECT_THROW(X_y(ctx, ctx.field().element(0x6)), ArgumentError);  // order 3
}

TEST(Witnesses, PropertiesAcrossCases) {
  std::set<WitnessCase> seen;
  for (unsigned m = 2; m <= 5; ++m) {
    for (unsigned n = 1; n <= 12; ++n) {
      const CompatContext ctx(m, n);
      const Field& f = ctx.field();
      const auto z = Z_set(ctx);
      for (Element y : ctx.unit_circle()) {
        if (y == f.one()) continue;
        const auto set = witnesses(ctx, y);
        seen.insert(set.which);
        std::set<Element> distinct;
        for (const auto& w : set.items) {
          EXPECT_TRUE(eval_Gpoly(ctx, w.value, y).is_zero());
          EXPECT_TRUE(std::binary_search(z.begin(), z.end(), w.value));
          if (w.kind == WitnessKind::kC0) EXPECT_TRUE(f.in_subfield(w.value, m));
          distinct.insert(w.value);
        }
        EXPECT_EQ(distinct.size(), set.items.size());
        const std::uint64_t r = ctx.r();
        const std::uint64_t s_mod = (std::uint64_t{1} << n) % (r + 1);
        const bool generic = (s_mod + 1) % (r + 1) != 0 && (s_mod + r) % (r + 1) != 0;
        if (generic && is_primitive_on_circle(ctx, y)) {
          EXPECT_EQ(set.which, WitnessCase::kThree);
          EXPECT_EQ(set.items.size(), 3u);
        }
      }
    }
  }
  EXPECT_EQ(seen.size(), 3u);
}

TEST(Witnesses, Errors) {
  const CompatContext ctx(3, 1);
  EXPECT_THROW(witnesses(ctx, ctx.field().one()), ArgumentError);
  EXPECT_THROW(witnesses(ctx, ctx.field().element(0x2)), ArgumentError);
}

TEST(ProofCases, DividingCaseRoot) {
  // (r+1) | (s+1): y = c^{(r/2)(r-1)} is a root on the unit circle.
  for (auto [m, n] : {std::pair{1u, 1u}, {1u, 3u}, {2u, 2u}, {2u, 6u}, {3u, 3u}, {3u, 9u}, {4u, 4u}}) {
    ASSERT_TRUE(lemma1_check(m, n).divides);
    const CompatContext ctx(m, n);
    const Field& f = ctx.field();
    const std::uint64_t r = ctx.r();
    for (std::uint64_t i = 1; i < f.size(); ++i) {
      const Element c = f.element(i);
      const Element y = f.pow(c, (r / 2) * (r - 1));
      ASSERT_TRUE(ctx.on_unit_circle(y));
      ASSERT_TRUE(eval_Gpoly(ctx, c, y).is_zero());
    }
  }
}

TEST(ProofCases, MinusOneCaseSymmetry) {
  // (r+1) | (s-1): X_y = X_{1/y} and |X| <= r (1 + r/2).
  for (auto [m, n] : {std::pair{2u, 4u}, {2u, 8u}, {3u, 6u}, {4u, 8u}, {5u, 10u}}) {
    const CompatContext ctx(m, n);
    const Field& f = ctx.field();
    const std::uint64_t r = ctx.r();
    ASSERT_EQ(((std::uint64_t{1} << n) - 1) % (r + 1), 0u);
    for (Element y : ctx.unit_circle()) EXPECT_EQ(X_y(ctx, y), X_y(ctx, f.inv(y)));
    EXPECT_LE(X_union(ctx).size(), r * (1 + r / 2));
  }
}

TEST(ProofCases, CountingBoundAndUnionSize) {
  for (unsigned m = 2; m <= 5; ++m) {
    for (unsigned n = 1; n <= 10; ++n) {
      const CompatContext ctx(m, n);
      const std::uint64_t r = ctx.r();
      const std::uint64_t s = std::uint64_t{1} << n;
      const auto x = X_union(ctx);
      EXPECT_EQ(x.size() + count_compatible(ctx), ctx.field().size());
      if ((s + 1) % (r + 1) != 0 && (s - 1) % (r + 1) != 0) EXPECT_LT(x.size(), r * r);
    }
  }
}

TEST(FieldFor, OverrideTable) {
  const ModulusTable table{{4, 0x19}};
  EXPECT_EQ(field_for(4, table).modulus(), 0x19u);
  EXPECT_EQ(field_for(6, table).modulus(), make_field(6).modulus());
  // Compatibility is representation independent.
  EXPECT_EQ(find_c(CompatContext(field_for(4, table), 2, 1)).has_value(), true);
}

TEST(CompatReport, CountedAndFirstHit) {
  const auto counted = compat_report(CompatContext(2, 1), true);
  EXPECT_TRUE(counted.consistent());
  EXPECT_EQ(counted.search_size, 16u);
  ASSERT_TRUE(counted.compatible_count);
  EXPECT_GT(*counted.compatible_count, 0u);
  const auto first = compat_report(CompatContext(2, 1), false);
  EXPECT_EQ(first.search_size, 0x9u + 1);
  EXPECT_FALSE(first.compatible_count);
  const auto none = compat_report(CompatContext(3, 3), false);
  EXPECT_FALSE(none.exists_c);
  EXPECT_EQ(none.search_size, 64u);
  EXPECT_TRUE(none.consistent());
}

}  // namespace
}  // namespace apnforge
