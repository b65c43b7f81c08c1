#pragma once

// Real quadratic dynamics x -> x^2 + c: fixed points, the three-way shape of
// the real filled Julia set, and a sound finite-depth escape test.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>

namespace hyperdyn {

template <typename Scalar>
inline constexpr Scalar kParameterUpper = Scalar(0.25);
template <typename Scalar>
inline constexpr Scalar kParameterLower = Scalar(-2);

/// Result of a finite-depth orbit test. EscapedAt proves the orbit is
/// unbounded; BoundedThroughDepth only says no escape was seen.
struct OrbitOutcome {
  enum class Kind { EscapedAt, BoundedThroughDepth };

  Kind kind = Kind::BoundedThroughDepth;
  std::uint32_t n = 0;  // escape step, or depth used

  static constexpr OrbitOutcome escaped_at(std::uint32_t step) { return {Kind::EscapedAt, step}; }
  static constexpr OrbitOutcome bounded_through(std::uint32_t depth) {
    return {Kind::BoundedThroughDepth, depth};
  }

  constexpr bool escaped() const { return kind == Kind::EscapedAt; }

  friend constexpr bool operator==(const OrbitOutcome&, const OrbitOutcome&) = default;
};

template <typename Scalar>
struct StepResult {
  Scalar value;
  bool saturated;
};

/// x^2 + c. On overflow the value saturates to +-max and the flag is set.
template <typename Scalar>
StepResult<Scalar> step(Scalar x, Scalar c) {
  const Scalar v = x * x + c;
  if (std::isfinite(v)) return {v, false};
  constexpr Scalar big = std::numeric_limits<Scalar>::max();
  return {std::signbit(v) ? -big : big, true};
}

template <typename Scalar>
struct FixedPoints {
  Scalar p_minus;
  Scalar p_plus;
};

/// Real fixed points (1 -+ sqrt(1 - 4c)) / 2; absent when c > 1/4.
template <typename Scalar>
std::optional<FixedPoints<Scalar>> fixed_points(Scalar c) {
  if (!(c <= kParameterUpper<Scalar>)) return std::nullopt;
  using std::sqrt;
  const Scalar root = sqrt(Scalar(1) - Scalar(4) * c);
  return FixedPoints<Scalar>{(Scalar(1) - root) / Scalar(2), (Scalar(1) + root) / Scalar(2)};
}

template <typename Scalar>
struct RealJuliaClass {
  enum class Kind { CantorSubset, FullInterval, EmptySet };

  Kind kind;
  Scalar half_width;  // p+, the interval is [-p+, p+]; 0 for EmptySet

  bool has_interval() const { return kind != Kind::EmptySet; }
};

template <typename Scalar>
RealJuliaClass<Scalar> classify_real_julia(Scalar c) {
  using K = typename RealJuliaClass<Scalar>::Kind;
  if (c > kParameterUpper<Scalar>) return {K::EmptySet, Scalar(0)};
  const Scalar p_plus = fixed_points(c)->p_plus;
  if (c < kParameterLower<Scalar>) return {K::CantorSubset, p_plus};
  return {K::FullInterval, p_plus};
}

/// Closed-form membership in K_R(f_c); absent in the Cantor case.
template <typename Scalar>
std::optional<bool> membership_analytic(Scalar x, Scalar c) {
  const auto cls = classify_real_julia(c);
  using K = typename RealJuliaClass<Scalar>::Kind;
  switch (cls.kind) {
    case K::EmptySet:
      return false;
    case K::FullInterval: {
      using std::abs;
      return abs(x) <= cls.half_width;
    }
    case K::CantorSubset:
      break;
  }
  return std::nullopt;
}

/// Escape radius R: |x_n| > R certifies divergence. p+ when c <= 1/4,
/// max(2, |c|) otherwise.
template <typename Scalar>
Scalar escape_radius(Scalar c) {
  if (auto fp = fixed_points(c)) return fp->p_plus;
  using std::abs;
  return std::max(Scalar(2), abs(c));
}

/// Precomputed iteration state for a single real parameter. The advance
/// rule keeps rounding from manufacturing escapes:
///  - |x| == p+ maps to p+ (the stored fixed point is treated as fixed);
///  - for c in [-2, 1/4], [-p+, p+] is forward invariant, so an in-range
///    iterate is clamped to at most p+.
template <typename Scalar>
class RealOrbitStepper {
 public:
  explicit RealOrbitStepper(Scalar c)
      : c_(c),
        radius_(escape_radius(c)),
        has_fixed_point_(c <= kParameterUpper<Scalar>),
        invariant_interval_(c >= kParameterLower<Scalar> && c <= kParameterUpper<Scalar>) {}

  Scalar parameter() const { return c_; }
  Scalar radius() const { return radius_; }

  bool escaped(Scalar x) const { return std::abs(x) > radius_; }

  Scalar advance(Scalar x) const {
    const Scalar ax = std::abs(x);
    if (has_fixed_point_ && ax == radius_) return radius_;
    Scalar v = step(x, c_).value;
    if (invariant_interval_ && ax <= radius_ && v > radius_) v = radius_;
    return v;
  }

 private:
  Scalar c_;
  Scalar radius_;
  bool has_fixed_point_;
  bool invariant_interval_;
};

namespace detail {

inline void require_depth(std::uint32_t depth) {
  if (depth < 1) throw std::invalid_argument("depth must be at least 1");
}

template <typename Scalar>
void require_finite(Scalar v, const char* what) {
  if (!std::isfinite(v)) throw std::invalid_argument(std::string(what) + " must be finite");
}

}  // namespace detail

/// Escape test at steps 0..depth of the orbit of x.
template <typename Scalar>
OrbitOutcome membership_iterative(Scalar x, const RealOrbitStepper<Scalar>& stepper,
                                  std::uint32_t depth) {
  for (std::uint32_t n = 0;; ++n) {
    if (stepper.escaped(x)) return OrbitOutcome::escaped_at(n);
    if (n == depth) break;
    x = stepper.advance(x);
  }
  return OrbitOutcome::bounded_through(depth);
}

template <typename Scalar>
OrbitOutcome membership_iterative(Scalar x, Scalar c, std::uint32_t depth) {
  detail::require_depth(depth);
  detail::require_finite(x, "x");
  detail::require_finite(c, "c");
  return membership_iterative(x, RealOrbitStepper<Scalar>(c), depth);
}

}  // namespace hyperdyn
