#include "apnforge/diffspec.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace apnforge {
namespace {

void check_cap(unsigned w, unsigned cap, const char* what) {
  if (w > cap) {
    throw SizeError(std::string(what) + ": field degree " + std::to_string(w) + " exceeds cap " +
                    std::to_string(cap));
  }
}

FiberHistogram histogram_of(const std::vector<std::uint32_t>& counts) {
  FiberHistogram h;
  for (std::uint32_t c : counts) ++h[c];
  return h;
}

std::uint64_t max_fiber(const std::vector<FiberHistogram>& per_a) {
  std::uint64_t best = 0;
  for (const auto& h : per_a) best = std::max(best, h.rbegin()->first);
  return best;
}

}  // namespace

std::vector<std::uint64_t> DerivativeSpectrum::nonzero_sizes(std::uint64_t a) const {
  std::vector<std::uint64_t> sizes;
  for (const auto& [t, count] : at(a)) {
    if (t != 0) sizes.push_back(t);
  }
  return sizes;
}

bool DerivativeSpectrum::is_t_to_one(std::uint64_t t) const {
  return std::all_of(per_a.begin(), per_a.end(), [t](const FiberHistogram& h) {
    return std::all_of(h.begin(), h.end(), [t](const auto& kv) {
      return kv.first == 0 || kv.first == t;
    });
  });
}

std::map<std::vector<std::uint64_t>, std::uint64_t> DerivativeSpectrum::collapsed() const {
  std::map<std::vector<std::uint64_t>, std::uint64_t> out;
  for (const auto& h : per_a) {
    std::vector<std::uint64_t> sizes;
    for (const auto& kv : h) sizes.push_back(kv.first);
    ++out[sizes];
  }
  return out;
}

DerivativeSpectrum spectrum(const BCParams& p, const DiffLimits& limits) {
  const unsigned w = p.field().degree();
  check_cap(w, limits.spectrum_max_degree, "spectrum");
  const auto table = tabulate_F(p);
  const std::uint64_t size = p.field().size();

  DerivativeSpectrum out;
  out.w = w;
  out.per_a.resize(size - 1);
#pragma omp parallel
  {
    std::vector<std::uint32_t> counts(size);
#pragma omp for schedule(dynamic, 16)
    for (std::int64_t ai = 1; ai < static_cast<std::int64_t>(size); ++ai) {
      const auto a = static_cast<std::uint32_t>(ai);
      std::fill(counts.begin(), counts.end(), 0);
      for (std::uint32_t x = 0; x < size; ++x) ++counts[table[x] ^ table[x ^ a]];
      out.per_a[a - 1] = histogram_of(counts);
    }
  }
  out.max_count = max_fiber(out.per_a);
  return out;
}

DerivativeSpectrum spectrum_serial(const BCParams& p, const DiffLimits& limits) {
  const Field& f = p.field();
  check_cap(f.degree(), limits.spectrum_max_degree, "spectrum");
  DerivativeSpectrum out;
  out.w = f.degree();
  std::vector<std::uint32_t> counts(f.size());
  for (std::uint64_t ai = 1; ai < f.size(); ++ai) {
    const Element a = f.from_index(ai);
    std::fill(counts.begin(), counts.end(), 0);
    for (std::uint64_t xi = 0; xi < f.size(); ++xi) {
      const Element x = f.from_index(xi);
      ++counts[f.add(eval_F(p, x), eval_F(p, f.add(x, a))).bits()];
    }
    out.per_a.push_back(histogram_of(counts));
  }
  out.max_count = max_fiber(out.per_a);
  return out;
}

std::vector<std::uint64_t> kernel_sizes(const BCParams& p) {
  const Field& f = p.field();
  std::vector<std::uint64_t> sizes(f.size() - 1);
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t ai = 1; ai < static_cast<std::int64_t>(f.size()); ++ai) {
    sizes[ai - 1] = kernel_size_Ga(p, f.from_index(static_cast<std::uint64_t>(ai)));
  }
  return sizes;
}

void cross_check(const DerivativeSpectrum& spec, const std::vector<std::uint64_t>& kernels) {
  if (spec.per_a.size() != kernels.size()) {
    throw VerificationError("spectrum and kernel sweep cover different directions");
  }
  for (std::uint64_t a = 1; a <= kernels.size(); ++a) {
    const auto sizes = spec.nonzero_sizes(a);
    if (sizes.size() != 1 || sizes.front() != kernels[a - 1]) {
      throw VerificationError("direction a = " + to_hex(a, spec.w) +
                              ": fiber sizes disagree with |Ker G_a| = " +
                              std::to_string(kernels[a - 1]));
    }
  }
}

bool is_t_to_one(const BCParams& p, std::uint64_t t, const DiffLimits& limits) {
  if (!std::has_single_bit(t)) throw ArgumentError("t must be a power of two");
  const auto spec = spectrum(p, limits);
  cross_check(spec, kernel_sizes(p));
  return spec.is_t_to_one(t);
}

bool is_apn(const BCParams& p, const DiffLimits& limits) { return is_t_to_one(p, 2, limits); }

std::uint32_t Ddt::max_nonzero_row() const {
  if (dim() < 2) return 0;
  return *std::max_element(cells_.begin() + static_cast<std::ptrdiff_t>(dim()), cells_.end());
}

Ddt ddt(const BCParams& p, const DiffLimits& limits) {
  const unsigned w = p.field().degree();
  check_cap(w, limits.ddt_max_degree, "ddt");
  const auto table = tabulate_F(p);
  const std::uint64_t size = p.field().size();
  std::vector<std::uint32_t> cells(size * size, 0);
  cells[0] = static_cast<std::uint32_t>(size);
#pragma omp parallel for schedule(static)
  for (std::int64_t ai = 1; ai < static_cast<std::int64_t>(size); ++ai) {
    const auto a = static_cast<std::uint32_t>(ai);
    std::uint32_t* row = cells.data() + a * size;
    for (std::uint32_t x = 0; x < size; ++x) ++row[table[x] ^ table[x ^ a]];
  }
  return Ddt(w, std::move(cells));
}

}  // namespace apnforge
