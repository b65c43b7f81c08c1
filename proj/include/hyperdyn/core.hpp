#pragma once

// Hyperbolic (split-complex) numbers x + j*y with j^2 = 1, and the
// characteristic-coordinate transform that diagonalizes their product.

#include <cmath>
#include <stdexcept>
#include <string>

#include <Eigen/Core>

namespace hyperdyn {

template <typename Scalar>
class Hyperbolic {
 public:
  using scalar_type = Scalar;

  constexpr Hyperbolic() = default;

  /// Throws std::invalid_argument unless both components are finite.
  Hyperbolic(Scalar x, Scalar y) : x_(x), y_(y) {
    if (!std::isfinite(x) || !std::isfinite(y)) {
      throw std::invalid_argument("hyperbolic number components must be finite");
    }
  }

  explicit Hyperbolic(const Eigen::Matrix<Scalar, 2, 1>& v) : Hyperbolic(v(0), v(1)) {}

  constexpr Scalar x() const { return x_; }
  constexpr Scalar y() const { return y_; }

  Eigen::Matrix<Scalar, 2, 1> vector() const { return {x_, y_}; }

  friend constexpr bool operator==(const Hyperbolic&, const Hyperbolic&) = default;

 private:
  Scalar x_{0};
  Scalar y_{0};
};

using HyperbolicNumber = Hyperbolic<double>;

/// Coordinates (X, Y) = (x - y, x + y) in the idempotent basis {alpha, alpha*}.
template <typename Scalar>
struct CharCoords {
  Scalar X{0};
  Scalar Y{0};

  friend constexpr bool operator==(const CharCoords&, const CharCoords&) = default;
};

template <typename Scalar>
Hyperbolic<Scalar> operator+(const Hyperbolic<Scalar>& z, const Hyperbolic<Scalar>& w) {
  return {z.x() + w.x(), z.y() + w.y()};
}

template <typename Scalar>
Hyperbolic<Scalar> operator-(const Hyperbolic<Scalar>& z, const Hyperbolic<Scalar>& w) {
  return {z.x() - w.x(), z.y() - w.y()};
}

template <typename Scalar>
Hyperbolic<Scalar> operator-(const Hyperbolic<Scalar>& z) {
  return {-z.x(), -z.y()};
}

template <typename Scalar>
Hyperbolic<Scalar> mul(const Hyperbolic<Scalar>& z, const Hyperbolic<Scalar>& w) {
  return {z.x() * w.x() + z.y() * w.y(), z.x() * w.y() + w.x() * z.y()};
}

template <typename Scalar>
Hyperbolic<Scalar> operator*(const Hyperbolic<Scalar>& z, const Hyperbolic<Scalar>& w) {
  return mul(z, w);
}

template <typename Scalar>
Hyperbolic<Scalar> operator*(Scalar s, const Hyperbolic<Scalar>& z) {
  return {s * z.x(), s * z.y()};
}

template <typename Scalar>
Hyperbolic<Scalar> conjugate(const Hyperbolic<Scalar>& z) {
  return {z.x(), -z.y()};
}

/// z z* = x^2 - y^2, evaluated as (x - y)(x + y) so that it stays accurate
/// near the light cone.
template <typename Scalar>
Scalar quadratic_form(const Hyperbolic<Scalar>& z) {
  return (z.x() - z.y()) * (z.x() + z.y());
}

template <typename Scalar>
Scalar modulus(const Hyperbolic<Scalar>& z) {
  using std::abs;
  using std::sqrt;
  return sqrt(abs(quadratic_form(z)));
}

/// Non-zero and on one of the diagonals x = y, x = -y. Exact comparison.
template <typename Scalar>
bool is_zero_divisor(const Hyperbolic<Scalar>& z) {
  const bool nonzero = z.x() != Scalar(0) || z.y() != Scalar(0);
  return nonzero && (z.x() == z.y() || z.x() == -z.y());
}

template <typename Scalar>
CharCoords<Scalar> to_characteristic(const Hyperbolic<Scalar>& z) {
  return {z.x() - z.y(), z.x() + z.y()};
}

template <typename Scalar>
Hyperbolic<Scalar> from_characteristic(const CharCoords<Scalar>& c) {
  return {(c.X + c.Y) / Scalar(2), (c.Y - c.X) / Scalar(2)};
}

/// Matrix of the characteristic transform acting on (x, y) column vectors.
template <typename Scalar>
Eigen::Matrix<Scalar, 2, 2> characteristic_matrix() {
  Eigen::Matrix<Scalar, 2, 2> t;
  t << Scalar(1), Scalar(-1), Scalar(1), Scalar(1);
  return t;
}

template <typename Scalar>
Eigen::Matrix<Scalar, 2, 2> inverse_characteristic_matrix() {
  Eigen::Matrix<Scalar, 2, 2> t;
  t << Scalar(0.5), Scalar(0.5), Scalar(-0.5), Scalar(0.5);
  return t;
}

// Idempotent basis: alpha^2 = alpha, (alpha*)^2 = alpha*, alpha * alpha* = 0.
template <typename Scalar>
Hyperbolic<Scalar> alpha() {
  return {Scalar(0.5), Scalar(-0.5)};
}

template <typename Scalar>
Hyperbolic<Scalar> alpha_star() {
  return {Scalar(0.5), Scalar(0.5)};
}

template <typename Scalar>
std::string to_string(const Hyperbolic<Scalar>& z) {
  return std::to_string(z.x()) + (z.y() < 0 ? " - j*" : " + j*") + std::to_string(std::abs(z.y()));
}

}  // namespace hyperdyn
