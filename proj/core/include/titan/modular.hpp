#pragma once

#include <cstdint>
#include <span>

#include "titan/errors.hpp"

namespace titan {

enum class Backend { kExactScaled, kFloating };

/// A value already reduced into [0, modulus).
struct ModValue {
  double value = 0.0;

  friend bool operator==(ModValue a, ModValue b) { return a.value == b.value; }
};

/// Wrap-around arithmetic on the real interval [0, modulus).
///
/// The exact backend keeps every value on the grid of integer multiples of
/// 1/scale. scale must be a power of two so grid points are exact doubles
/// and double<->tick conversion never rounds; sums and differences of
/// reduced values are then computed without any rounding error, which is
/// what makes the network-wide perturbations cancel bit-exactly. The
/// floating backend is plain double arithmetic with an explicit tolerance.
class ModContext {
 public:
  static constexpr std::uint64_t kDefaultScale = std::uint64_t{1} << 32;

  static ModContext exact(double modulus, std::uint64_t scale = kDefaultScale);
  static ModContext floating(double modulus, double tolerance = 1e-9);

  Backend backend() const { return backend_; }
  double modulus() const { return modulus_; }
  std::uint64_t scale() const { return scale_; }
  double tolerance() const { return tolerance_; }
  std::int64_t modulus_ticks() const { return modulus_ticks_; }

  bool exact_backend() const { return backend_ == Backend::kExactScaled; }

  /// Nearest grid point, ties to even. Identity in the floating backend.
  double quantize(double x) const;

  /// True iff x lies exactly on the grid (always true for floating).
  bool representable(double x) const;

  /// Grid position of x. Throws PrecisionError if x is off-grid.
  std::int64_t to_ticks(double x) const;
  double from_ticks(std::int64_t t) const;

 private:
  ModContext() = default;

  Backend backend_ = Backend::kExactScaled;
  double modulus_ = 1.0;
  std::uint64_t scale_ = kDefaultScale;
  double inv_scale_ = 1.0 / static_cast<double>(kDefaultScale);
  double tolerance_ = 0.0;
  std::int64_t modulus_ticks_ = 0;
};

/// x - p*modulus for the unique integer p that lands in [0, modulus).
ModValue mod_reduce(double x, const ModContext& ctx);

/// Reduction of the sum; equal to the iterated pairwise reduction.
ModValue mod_sum(std::span<const double> values, const ModContext& ctx);

/// Reduction of -x; modulus - mod_reduce(x) unless that reduction is zero.
ModValue mod_neg(double x, const ModContext& ctx);

/// Sum / difference of two already-reduced values. Exact on the grid.
ModValue mod_add(ModValue a, ModValue b, const ModContext& ctx);
ModValue mod_sub(ModValue a, ModValue b, const ModContext& ctx);

}  // namespace titan
