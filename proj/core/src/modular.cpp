#include "titan/modular.hpp"

#include <cmath>

namespace titan {
namespace {

// Pairwise sums of two reduced values must stay exact, so the modulus is
// capped at 2^52 ticks (two operands < 2^52 sum below the 2^53 double
// integer limit).
constexpr double kModulusTickLimit = 0x1.0p52;
constexpr double kTickLimit = 0x1.0p53;

bool is_power_of_two(std::uint64_t v) { return v != 0 && (v & (v - 1)) == 0; }

}  // namespace

ModContext ModContext::exact(double modulus, std::uint64_t scale) {
  if (!std::isfinite(modulus) || modulus <= 0.0)
    throw DomainError("modulus must be positive and finite");
  if (!is_power_of_two(scale))
    throw DomainError("exact backend scale must be a power of two");
  const double ticks = modulus * static_cast<double>(scale);
  if (!(ticks < kModulusTickLimit))
    throw PrecisionError("modulus * scale exceeds the exact grid range");
  if (std::nearbyint(ticks) != ticks)
    throw PrecisionError("modulus is not representable at this scale");
  ModContext ctx;
  ctx.backend_ = Backend::kExactScaled;
  ctx.modulus_ = modulus;
  ctx.scale_ = scale;
  ctx.inv_scale_ = 1.0 / static_cast<double>(scale);
  ctx.modulus_ticks_ = static_cast<std::int64_t>(ticks);
  if (ctx.modulus_ticks_ == 0) throw PrecisionError("modulus underflows the grid");
  return ctx;
}

ModContext ModContext::floating(double modulus, double tolerance) {
  if (!std::isfinite(modulus) || modulus <= 0.0)
    throw DomainError("modulus must be positive and finite");
  if (!(tolerance >= 0.0)) throw DomainError("tolerance must be non-negative");
  ModContext ctx;
  ctx.backend_ = Backend::kFloating;
  ctx.modulus_ = modulus;
  ctx.tolerance_ = tolerance;
  return ctx;
}

double ModContext::quantize(double x) const {
  if (!std::isfinite(x)) throw DomainError("cannot quantize a non-finite value");
  if (backend_ == Backend::kFloating) return x;
  // Multiplication by a power of two is exact, so nearbyint sees the true
  // grid position and resolves ties to even.
  const double t = std::nearbyint(x * static_cast<double>(scale_));
  if (!(std::fabs(t) < kTickLimit))
    throw PrecisionError("value exceeds the exact grid range");
  return t * inv_scale_;
}

bool ModContext::representable(double x) const {
  if (!std::isfinite(x)) return false;
  if (backend_ == Backend::kFloating) return true;
  const double t = x * static_cast<double>(scale_);
  return std::fabs(t) < kTickLimit && std::nearbyint(t) == t;
}

std::int64_t ModContext::to_ticks(double x) const {
  if (!std::isfinite(x)) throw DomainError("non-finite value");
  const double t = x * static_cast<double>(scale_);
  if (!(std::fabs(t) < kTickLimit) || std::nearbyint(t) != t)
    throw PrecisionError("value is not representable on the exact grid");
  return static_cast<std::int64_t>(t);
}

double ModContext::from_ticks(std::int64_t t) const {
  return static_cast<double>(t) * inv_scale_;
}

ModValue mod_reduce(double x, const ModContext& ctx) {
  if (!std::isfinite(x)) throw DomainError("cannot reduce a non-finite value");
  if (ctx.exact_backend()) {
    const std::int64_t m = ctx.modulus_ticks();
    std::int64_t r = ctx.to_ticks(x) % m;
    if (r < 0) r += m;
    return {ctx.from_ticks(r)};
  }
  const double m = ctx.modulus();
  double r = std::fmod(x, m);
  if (r < 0.0) r += m;
  if (r >= m) r = 0.0;
  return {r};
}

ModValue mod_sum(std::span<const double> values, const ModContext& ctx) {
  if (ctx.exact_backend()) {
    const std::int64_t m = ctx.modulus_ticks();
    std::int64_t acc = 0;
    for (double v : values) {
      std::int64_t r = ctx.to_ticks(v) % m;
      if (r < 0) r += m;
      acc += r;
      if (acc >= m) acc -= m;
    }
    return {ctx.from_ticks(acc)};
  }
  double s = 0.0;
  for (double v : values) {
    if (!std::isfinite(v)) throw DomainError("cannot sum a non-finite value");
    s += v;
  }
  return mod_reduce(s, ctx);
}

ModValue mod_neg(double x, const ModContext& ctx) {
  const ModValue r = mod_reduce(x, ctx);
  if (r.value == 0.0) return r;
  return {ctx.modulus() - r.value};
}

ModValue mod_add(ModValue a, ModValue b, const ModContext& ctx) {
  double s = a.value + b.value;
  if (s >= ctx.modulus()) s -= ctx.modulus();
  return {s};
}

ModValue mod_sub(ModValue a, ModValue b, const ModContext& ctx) {
  double s = a.value - b.value;
  if (s < 0.0) s += ctx.modulus();
  return {s};
}

}  // namespace titan
