#pragma once

// Quadratic dynamics z -> z^2 + c over the hyperbolic numbers. In
// characteristic coordinates the map splits into two independent real maps
// X -> X^2 + c1 and Y -> Y^2 + c2, which is what every predicate here uses.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "hyperdyn/core.hpp"
#include "hyperdyn/real_dynamics.hpp"

namespace hyperdyn {

/// Parameter c = a + j*b with cached characteristic coordinates.
template <typename Scalar>
class HyperParameter {
 public:
  HyperParameter(Scalar a, Scalar b) : value_(a, b), c1_(a - b), c2_(a + b) {}
  explicit HyperParameter(const Hyperbolic<Scalar>& c) : HyperParameter(c.x(), c.y()) {}

  static HyperParameter from_characteristic(Scalar c1, Scalar c2) {
    const auto c = hyperdyn::from_characteristic(CharCoords<Scalar>{c1, c2});
    return HyperParameter(c);
  }

  Scalar a() const { return value_.x(); }
  Scalar b() const { return value_.y(); }
  Scalar c1() const { return c1_; }
  Scalar c2() const { return c2_; }
  const Hyperbolic<Scalar>& value() const { return value_; }

 private:
  Hyperbolic<Scalar> value_;
  Scalar c1_;
  Scalar c2_;
};

using HyperParam = HyperParameter<double>;

enum class BoundednessVariant {
  ComponentBounded,  // both component sequences bounded
  ModulusBounded,    // |z_n z_n*| bounded
};

constexpr std::string_view to_string(BoundednessVariant v) {
  return v == BoundednessVariant::ComponentBounded ? "component" : "modulus";
}

/// The closed square S = {-2 <= a - b <= 1/4, -2 <= a + b <= 1/4}, i.e. the
/// product [-2, 1/4]^2 in characteristic coordinates.
struct MandelbrotSquare {
  static constexpr double lower = -2.0;
  static constexpr double upper = 0.25;
  static constexpr double diagonal_length = upper - lower;  // along the a-axis
  static constexpr double b_intercept = 0.25;
  static double side_length() { return 9.0 / 8.0 * std::sqrt(2.0); }
  static constexpr double area = 81.0 / 32.0;

  template <typename Scalar>
  static bool contains_char(Scalar c1, Scalar c2) {
    return c1 >= Scalar(lower) && c1 <= Scalar(upper) && c2 >= Scalar(lower) && c2 <= Scalar(upper);
  }

  template <typename Scalar>
  static bool contains(const HyperParameter<Scalar>& c) {
    return contains_char(c.c1(), c.c2());
  }

  /// D: the two diagonals b = a and b = -a, i.e. c1 = 0 or c2 = 0.
  template <typename Scalar>
  static bool on_diagonals(const HyperParameter<Scalar>& c) {
    return c.c1() == Scalar(0) || c.c2() == Scalar(0);
  }
};

/// z^2 + c, or nullopt if a component overflows.
template <typename Scalar>
std::optional<Hyperbolic<Scalar>> try_step(const Hyperbolic<Scalar>& z, const HyperParameter<Scalar>& c) {
  const Scalar x = z.x() * z.x() + z.y() * z.y() + c.a();
  const Scalar y = Scalar(2) * z.x() * z.y() + c.b();
  if (!std::isfinite(x) || !std::isfinite(y)) return std::nullopt;
  return Hyperbolic<Scalar>(x, y);
}

/// z^2 + c. Throws std::overflow_error if a component overflows.
template <typename Scalar>
Hyperbolic<Scalar> step(const Hyperbolic<Scalar>& z, const HyperParameter<Scalar>& c) {
  if (auto next = try_step(z, c)) return *next;
  throw std::overflow_error("hyperbolic step overflowed");
}

/// [z, f(z), ..., f^n(z)], cut short at the first overflowing iterate.
template <typename Scalar>
std::vector<Hyperbolic<Scalar>> orbit(const Hyperbolic<Scalar>& z, const HyperParameter<Scalar>& c,
                                      std::size_t n) {
  std::vector<Hyperbolic<Scalar>> out;
  out.reserve(n + 1);
  out.push_back(z);
  for (std::size_t k = 0; k < n; ++k) {
    auto next = try_step(out.back(), c);
    if (!next) break;
    out.push_back(*next);
  }
  return out;
}

template <typename Scalar>
bool mandelbrot_analytic(const HyperParameter<Scalar>& c, BoundednessVariant variant) {
  if (MandelbrotSquare::contains(c)) return true;
  return variant == BoundednessVariant::ModulusBounded && MandelbrotSquare::on_diagonals(c);
}

/// Threshold on |X_n Y_n| for the modulus variant: max(4, R1 * R2).
template <typename Scalar>
Scalar modulus_escape_threshold(const HyperParameter<Scalar>& c) {
  return std::max(Scalar(4), escape_radius(c.c1()) * escape_radius(c.c2()));
}

namespace detail {

inline OrbitOutcome earliest(const OrbitOutcome& u, const OrbitOutcome& v) {
  if (u.escaped() && v.escaped()) return u.n <= v.n ? u : v;
  if (u.escaped()) return u;
  return v;
}

template <typename Scalar>
OrbitOutcome characteristic_escape(Scalar X, Scalar Y, const RealOrbitStepper<Scalar>& s1,
                                   const RealOrbitStepper<Scalar>& s2, std::uint32_t depth) {
  const OrbitOutcome first = membership_iterative(X, s1, depth);
  // Only an earlier (or equal) escape of Y can change the answer.
  const std::uint32_t horizon = first.escaped() ? first.n : depth;
  const OrbitOutcome second = membership_iterative(Y, s2, horizon);
  return second.escaped() ? earliest(first, second) : first;
}

template <typename Scalar>
OrbitOutcome modulus_escape(Scalar X, Scalar Y, const RealOrbitStepper<Scalar>& s1,
                            const RealOrbitStepper<Scalar>& s2, Scalar threshold, std::uint32_t depth) {
  for (std::uint32_t n = 0;; ++n) {
    // A zero factor keeps the product exactly zero even when the other saturates.
    const Scalar product = (X == Scalar(0) || Y == Scalar(0)) ? Scalar(0) : std::abs(X * Y);
    if (product > threshold) return OrbitOutcome::escaped_at(n);
    if (n == depth) break;
    X = s1.advance(X);
    Y = s2.advance(Y);
  }
  return OrbitOutcome::bounded_through(depth);
}

}  // namespace detail

/// Finite-depth test of the orbit of 0 in the iteration-friendly form used by
/// the renderer: steppers are built once per parameter.
template <typename Scalar>
class MandelbrotProbe {
 public:
  MandelbrotProbe(const HyperParameter<Scalar>& c, BoundednessVariant variant)
      : s1_(c.c1()), s2_(c.c2()), variant_(variant), threshold_(modulus_escape_threshold(c)) {}

  OrbitOutcome run(std::uint32_t depth) const {
    if (variant_ == BoundednessVariant::ComponentBounded) {
      return detail::characteristic_escape(Scalar(0), Scalar(0), s1_, s2_, depth);
    }
    return detail::modulus_escape(Scalar(0), Scalar(0), s1_, s2_, threshold_, depth);
  }

 private:
  RealOrbitStepper<Scalar> s1_;
  RealOrbitStepper<Scalar> s2_;
  BoundednessVariant variant_;
  Scalar threshold_;
};

template <typename Scalar>
OrbitOutcome mandelbrot_iterative(const HyperParameter<Scalar>& c, std::uint32_t depth,
                                  BoundednessVariant variant) {
  detail::require_depth(depth);
  return MandelbrotProbe<Scalar>(c, variant).run(depth);
}

/// The four shapes of the filled Julia set K_H(f_c).
enum class JuliaKind { ConnectedRectangle, CantorDust, DisconnectedMixed, Empty };
enum class CharAxis { X, Y };

template <typename Scalar>
struct JuliaClass {
  JuliaKind kind;
  Scalar half_width_x = 0;  // p+ for c1, ConnectedRectangle only
  Scalar half_width_y = 0;  // p+ for c2, ConnectedRectangle only
  CharAxis connected_axis = CharAxis::X;  // DisconnectedMixed only
};

constexpr std::string_view to_string(JuliaKind k) {
  using K = JuliaKind;
  switch (k) {
    case K::ConnectedRectangle: return "connected-rectangle";
    case K::CantorDust: return "cantor-dust";
    case K::DisconnectedMixed: return "disconnected-mixed";
    case K::Empty: return "empty";
  }
  return "";
}

template <typename Scalar>
JuliaClass<Scalar> julia_classify(const HyperParameter<Scalar>& c) {
  using K = JuliaKind;
  using RK = typename RealJuliaClass<Scalar>::Kind;
  const auto k1 = classify_real_julia(c.c1());
  const auto k2 = classify_real_julia(c.c2());

  if (k1.kind == RK::EmptySet || k2.kind == RK::EmptySet) return {K::Empty};
  if (k1.kind == RK::FullInterval && k2.kind == RK::FullInterval) {
    return {K::ConnectedRectangle, k1.half_width, k2.half_width};
  }
  if (k1.kind == RK::CantorSubset && k2.kind == RK::CantorSubset) return {K::CantorDust};

  JuliaClass<Scalar> mixed{K::DisconnectedMixed};
  mixed.connected_axis = k1.kind == RK::FullInterval ? CharAxis::X : CharAxis::Y;
  return mixed;
}

/// Axis-aligned rectangle [-hx, hx] x [-hy, hy] in characteristic coordinates.
template <typename Scalar>
struct CharRectangle {
  Scalar half_width_x;
  Scalar half_width_y;

  bool contains(const CharCoords<Scalar>& p) const {
    return std::abs(p.X) <= half_width_x && std::abs(p.Y) <= half_width_y;
  }
  /// Area of the preimage in the (x, y) plane; the transform has determinant 2.
  Scalar xy_area() const { return Scalar(4) * half_width_x * half_width_y / Scalar(2); }
};

template <typename Scalar>
std::optional<CharRectangle<Scalar>> julia_bounding_rectangle(const HyperParameter<Scalar>& c) {
  const auto k1 = classify_real_julia(c.c1());
  const auto k2 = classify_real_julia(c.c2());
  if (!k1.has_interval() || !k2.has_interval()) return std::nullopt;
  return CharRectangle<Scalar>{k1.half_width, k2.half_width};
}

enum class JuliaVerdict { In, Out, BoundedThroughDepth };

constexpr std::string_view to_string(JuliaVerdict v) {
  switch (v) {
    case JuliaVerdict::In: return "in";
    case JuliaVerdict::Out: return "out";
    case JuliaVerdict::BoundedThroughDepth: return "bounded-through-depth";
  }
  return "";
}

/// Membership through the product structure: X against K_R(f_c1), Y against
/// K_R(f_c2). Interval factors are decided exactly; Cantor factors fall back
/// to the escape test and can only yield Out or BoundedThroughDepth.
template <typename Scalar>
class JuliaProbe {
 public:
  explicit JuliaProbe(const HyperParameter<Scalar>& c)
      : k1_(classify_real_julia(c.c1())), k2_(classify_real_julia(c.c2())), s1_(c.c1()), s2_(c.c2()) {}

  JuliaVerdict analytic(const CharCoords<Scalar>& p, std::uint32_t depth) const {
    const auto v1 = factor(p.X, k1_, s1_, depth);
    const auto v2 = factor(p.Y, k2_, s2_, depth);
    if (v1 == JuliaVerdict::Out || v2 == JuliaVerdict::Out) return JuliaVerdict::Out;
    if (v1 == JuliaVerdict::In && v2 == JuliaVerdict::In) return JuliaVerdict::In;
    return JuliaVerdict::BoundedThroughDepth;
  }

  OrbitOutcome iterative(const CharCoords<Scalar>& p, std::uint32_t depth) const {
    return detail::characteristic_escape(p.X, p.Y, s1_, s2_, depth);
  }

 private:
  static JuliaVerdict factor(Scalar v, const RealJuliaClass<Scalar>& cls, const RealOrbitStepper<Scalar>& s,
                             std::uint32_t depth) {
    using RK = typename RealJuliaClass<Scalar>::Kind;
    switch (cls.kind) {
      case RK::EmptySet:
        return JuliaVerdict::Out;
      case RK::FullInterval:
        return std::abs(v) <= cls.half_width ? JuliaVerdict::In : JuliaVerdict::Out;
      case RK::CantorSubset:
        break;
    }
    return membership_iterative(v, s, depth).escaped() ? JuliaVerdict::Out
                                                       : JuliaVerdict::BoundedThroughDepth;
  }

  RealJuliaClass<Scalar> k1_;
  RealJuliaClass<Scalar> k2_;
  RealOrbitStepper<Scalar> s1_;
  RealOrbitStepper<Scalar> s2_;
};

template <typename Scalar>
JuliaVerdict julia_membership_analytic(const Hyperbolic<Scalar>& z, const HyperParameter<Scalar>& c,
                                       std::uint32_t depth) {
  detail::require_depth(depth);
  return JuliaProbe<Scalar>(c).analytic(to_characteristic(z), depth);
}

/// Escape test of the orbit of z, run on the decoupled characteristic
/// coordinates; escape at the first step where either factor escapes.
template <typename Scalar>
OrbitOutcome julia_membership_iterative(const Hyperbolic<Scalar>& z, const HyperParameter<Scalar>& c,
                                        std::uint32_t depth) {
  detail::require_depth(depth);
  return JuliaProbe<Scalar>(c).iterative(to_characteristic(z), depth);
}

}  // namespace hyperdyn
