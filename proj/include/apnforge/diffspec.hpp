#pragma once

// Differential behaviour of the hexanomial: for each nonzero a, the fiber
// sizes N(a, b) = #{x : F(x) + F(x + a) = b}.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "apnforge/hexanomial.hpp"

namespace apnforge {

/// Raised when the two independent derivative checks disagree. Always a bug.
struct VerificationError : std::logic_error {
  using std::logic_error::logic_error;
};

struct DiffLimits {
  unsigned spectrum_max_degree = 16;
  unsigned ddt_max_degree = 12;
};

/// fiber size t -> number of b with N(a, b) = t (t = 0 included).
using FiberHistogram = std::map<std::uint64_t, std::uint64_t>;

struct DerivativeSpectrum {
  unsigned w = 0;
  /// per_a[a - 1] for a = 1 .. 2^w - 1 in canonical order.
  std::vector<FiberHistogram> per_a;
  std::uint64_t max_count = 0;

  const FiberHistogram& at(std::uint64_t a) const { return per_a.at(a - 1); }
  /// Distinct nonzero fiber sizes of the derivative in direction a.
  std::vector<std::uint64_t> nonzero_sizes(std::uint64_t a) const;
  /// Every fiber of every nonzero derivative has size 0 or t.
  bool is_t_to_one(std::uint64_t t) const;
  /// Distinct fiber-size sets (0 included) -> number of directions a showing it.
  std::map<std::vector<std::uint64_t>, std::uint64_t> collapsed() const;
};

/// OpenMP kernel over a; F is tabulated once.
DerivativeSpectrum spectrum(const BCParams& p, const DiffLimits& limits = {});
/// Serial reference evaluating F(x) + F(x + a) directly.
DerivativeSpectrum spectrum_serial(const BCParams& p, const DiffLimits& limits = {});

/// |Ker G_a| for a = 1 .. 2^w - 1 (index a - 1), from the linearized form.
std::vector<std::uint64_t> kernel_sizes(const BCParams& p);

/// Throws VerificationError unless, for every a, the attained nonzero fiber
/// sizes are exactly {|Ker G_a|}.
void cross_check(const DerivativeSpectrum& spec, const std::vector<std::uint64_t>& kernels);

/// t must be a power of two. Runs both the spectrum and the kernel path.
bool is_t_to_one(const BCParams& p, std::uint64_t t, const DiffLimits& limits = {});
bool is_apn(const BCParams& p, const DiffLimits& limits = {});

/// Full difference distribution table, row-major. Row 0 holds N(0, 0) = 2^w.
class Ddt {
 public:
  Ddt(unsigned w, std::vector<std::uint32_t> cells) : w_(w), cells_(std::move(cells)) {}

  unsigned degree() const { return w_; }
  std::uint64_t dim() const { return std::uint64_t{1} << w_; }
  std::uint32_t at(std::uint64_t a, std::uint64_t b) const { return cells_[a * dim() + b]; }
  /// Largest entry over rows a != 0.
  std::uint32_t max_nonzero_row() const;

 private:
  unsigned w_;
  std::vector<std::uint32_t> cells_;
};

Ddt ddt(const BCParams& p, const DiffLimits& limits = {});

}  // namespace apnforge
