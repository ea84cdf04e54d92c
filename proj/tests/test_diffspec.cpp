#include <gtest/gtest.h>

#include "apnforge/diffspec.hpp"
#include "support.hpp"

namespace apnforge {
namespace {

using testing::params_for;

void expect_histogram_invariants(const DerivativeSpectrum& spec) {
  const std::uint64_t size = std::uint64_t{1} << spec.w;
  ASSERT_EQ(spec.per_a.size(), size - 1);
  for (const auto& h : spec.per_a) {
    std::uint64_t covered = 0, bs = 0;
    for (const auto& [t, count] : h) {
      EXPECT_EQ(t % 2, 0u);
      covered += t * count;
      bs += count;
    }
    EXPECT_EQ(covered, size);
    EXPECT_EQ(bs, size);
  }
}

TEST(Spectrum, ParallelMatchesSerial) {
  for (auto [m, n, c] : {std::tuple{2u, 1u, -1}, {3u, 2u, -1}, {2u, 2u, 3}, {2u, 1u, 0}, {4u, 3u, 5}}) {
    const BCParams p = c < 0 ? params_for(m, n) : params_for(m, n, c);
    const auto fast = spectrum(p);
    const auto ref = spectrum_serial(p);
    EXPECT_EQ(fast.per_a, ref.per_a);
    EXPECT_EQ(fast.max_count, ref.max_count);
    expect_histogram_invariants(fast);
  }
}

TEST(Spectrum, CompatibleCases) {
  const auto apn = spectrum(params_for(2, 1));
  for (std::uint64_t a = 1; a < 16; ++a) {
    EXPECT_EQ(apn.at(a), (FiberHistogram{{0, 8}, {2, 8}}));
  }
  EXPECT_EQ(apn.max_count, 2u);
  const auto four = spectrum(params_for(4, 2));
  EXPECT_TRUE(four.is_t_to_one(4));
  EXPECT_EQ(four.max_count, 4u);
  EXPECT_EQ((four.collapsed()), (std::map<std::vector<std::uint64_t>, std::uint64_t>{{{0, 4}, 255}}));
}

TEST(Spectrum, EvennessIncludingIncompatibleC) {
  for (unsigned m = 1; m <= 4; ++m) {
    for (unsigned n = 1; n <= 4; ++n) {
      for (std::uint64_t c : {0ull, 1ull, 3ull}) {
        expect_histogram_invariants(spectrum(params_for(m, n, c)));
      }
    }
  }
}

TEST(Spectrum, GaHistogramEqualsDerivativeHistogram) {
  const BCParams p = params_for(3, 1, 6);
  const Field& f = p.field();
  const auto spec = spectrum(p);
  for (std::uint64_t ai = 1; ai < f.size(); ++ai) {
    std::vector<std::uint32_t> counts(f.size());
    for (std::uint64_t xi = 0; xi < f.size(); ++xi) {
      ++counts[eval_Ga(p, f.element(ai), f.element(xi)).bits()];
    }
    FiberHistogram h;
    for (auto v : counts) ++h[v];
    ASSERT_EQ(h, spec.at(ai));
  }
}

TEST(Spectrum, KernelAgreementExhaustive) {
  for (unsigned m = 1; m <= 4; ++m) {
    for (unsigned n = 1; n <= 5; ++n) {
      for (std::uint64_t c : {0ull, 2ull, 3ull}) {
        const BCParams p = params_for(m, n, c);
        const auto spec = spectrum(p);
        const auto kernels = kernel_sizes(p);
        EXPECT_NO_THROW(cross_check(spec, kernels));
        for (std::uint64_t a = 1; a < p.field().size(); a += 5) {
          ASSERT_EQ(kernels[a - 1], kernel_Ga(p, p.field().element(a)).size());
        }
      }
    }
  }
}

TEST(Spectrum, CrossCheckDetectsDisagreement) {
  const BCParams p = params_for(2, 1);
  const auto spec = spectrum(p);
  auto kernels = kernel_sizes(p);
  kernels[4] = 4;
  EXPECT_THROW(cross_check(spec, kernels), VerificationError);
  kernels.pop_back();
  EXPECT_THROW(cross_check(spec, kernels), VerificationError);
}

TEST(Spectrum, CapEnforced) {
  DiffLimits tight;
  tight.spectrum_max_degree = 6;
  EXPECT_THROW(spectrum(params_for(4, 1), tight), SizeError);
  EXPECT_THROW(spectrum_serial(params_for(4, 1), tight), SizeError);
  EXPECT_THROW(is_apn(params_for(4, 1), tight), SizeError);
  EXPECT_NO_THROW(spectrum(params_for(3, 1), tight));
}

TEST(TToOne, TheoremOneAndLemmaTwo) {
  EXPECT_TRUE(is_t_to_one(params_for(2, 1), 2));
  EXPECT_TRUE(is_t_to_one(params_for(4, 2), 4));
  EXPECT_TRUE(is_t_to_one(params_for(3, 2), 2));
  for (std::uint64_t c = 0; c < 16; ++c) EXPECT_TRUE(is_t_to_one(params_for(2, 4, c), 4));
  for (std::uint64_t c = 0; c < 8; ++c) EXPECT_TRUE(is_t_to_one(params_for(3, 3, c), 8));
  EXPECT_FALSE(is_t_to_one(params_for(2, 1), 1));
  EXPECT_FALSE(is_t_to_one(params_for(2, 2, 0), 2));
  EXPECT_THROW(is_t_to_one(params_for(2, 1), 3), ArgumentError);
}

TEST(Apn, SmallCases) {
  EXPECT_TRUE(is_apn(params_for(2, 1)));
  for (std::uint64_t c = 0; c < 4; ++c) {
    EXPECT_TRUE(is_apn(params_for(1, 2, c)));
    EXPECT_TRUE(is_apn(params_for(1, 1, c)));
  }
}

TEST(Apn, IncompatibleCIsObservational) {
  // Theorem 1 is only sufficient; record what incompatible c do without asserting.
  const Field f = make_field(4);
  const CompatContext ctx(f, 2, 1);
  int incompatible = 0, apn = 0;
  for (std::uint64_t c = 0; c < 16; ++c) {
    if (is_compatible_c(ctx, f.element(c))) continue;
    ++incompatible;
    const auto spec = spectrum(params_for(2, 1, c));
    expect_histogram_invariants(spec);
    apn += spec.is_t_to_one(2);
  }
  RecordProperty("incompatible_c", incompatible);
  RecordProperty("incompatible_c_still_apn", apn);
  EXPECT_GT(incompatible, 0);
}

TEST(Ddt, TableProperties) {
  for (auto [m, n, c] : {std::tuple{2u, 1u, -1}, {3u, 2u, -1}, {2u, 2u, 1}, {3u, 1u, 0}}) {
    const BCParams p = c < 0 ? params_for(m, n) : params_for(m, n, c);
    const Field& f = p.field();
    const Ddt table = ddt(p);
    const auto spec = spectrum(p);
    EXPECT_EQ(table.at(0, 0), f.size());
    for (std::uint64_t a = 0; a < f.size(); ++a) {
      std::uint64_t sum = 0;
      for (std::uint64_t b = 0; b < f.size(); ++b) sum += table.at(a, b);
      EXPECT_EQ(sum, f.size());
      if (a == 0) continue;
      std::uint64_t collisions = 0;
      for (std::uint64_t x = 0; x < f.size(); ++x) {
        collisions += eval_F(p, f.element(x)) == eval_F(p, f.add(f.element(x), f.element(a)));
      }
      EXPECT_EQ(table.at(a, 0), collisions);
    }
    EXPECT_EQ(table.max_nonzero_row(), spec.max_count);
    EXPECT_EQ(table.max_nonzero_row() == 2, spec.is_t_to_one(2));
  }
  EXPECT_EQ(ddt(params_for(2, 1)).max_nonzero_row(), 2u);
  EXPECT_EQ(ddt(params_for(4, 2)).max_nonzero_row(), 4u);
  EXPECT_THROW(ddt(params_for(7, 1)), SizeError);
}

}  // namespace
}  // namespace apnforge
