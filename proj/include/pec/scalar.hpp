#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <variant>

#include "pec/errors.hpp"

namespace pec {

/// Default tolerance for sign tests on float values.
inline constexpr double kDefaultEpsilon = 1e-9;

/// A number that is either an exact rational or a binary double.
///
/// Arithmetic between two exact values stays exact; as soon as a float
/// value enters an expression the result is float. Operations that leave
/// the rationals (square roots of non-squares, logarithms) degrade a value
/// to float instead of failing, so a computation started in exact mode
/// keeps exactness precisely as far as the mathematics allows.
class Scalar {
 public:
  Scalar() : v_(mpq_class(0)) {}
  Scalar(int n) : v_(mpq_class(n)) {}
  Scalar(long n) : v_(mpq_class(static_cast<signed long>(n))) {}
  explicit Scalar(double d) : v_(d) {}
  explicit Scalar(mpq_class q) : v_(std::move(q)) { canonicalize(); }

  /// Exact num/den pair; den must be nonzero.
  static Scalar ratio(long num, long den);

  bool is_exact() const { return v_.index() == 0; }

  /// Double view, always available (exact values are rounded).
  double value() const;

  /// The exact rational payload; only valid when is_exact().
  const mpq_class& rat() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);  // throws DomainError on zero divisor

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  /// Raw sign without any tolerance (float values: sign of the double).
  int sign() const;

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
  friend bool operator<(const Scalar& a, const Scalar& b);
  friend bool operator>(const Scalar& a, const Scalar& b) { return b < a; }
  friend bool operator<=(const Scalar& a, const Scalar& b) { return !(b < a); }
  friend bool operator>=(const Scalar& a, const Scalar& b) { return !(a < b); }

  /// "5/4", "-3" for exact values; shortest float form otherwise.
  std::string str() const;

 private:
  void canonicalize();
  std::variant<mpq_class, double> v_;
};

Scalar abs(const Scalar& x);

/// Square root. Exact when the argument is an exact perfect square of a
/// rational; float otherwise. Throws DomainError for negative arguments.
Scalar sqrt(const Scalar& x);

/// Sign with the float tolerance policy: a float value x counts as zero when
/// |x| <= eps * max(1, |scale|), where scale is the magnitude of the largest
/// term that entered x. Exact values use the exact sign and ignore eps.
int sign_eps(const Scalar& x, double eps, double scale);

/// Parse "3", "-5/4", "0.25", "2.5e-3" into an exact rational.
Scalar parse_exact(std::string_view text);

/// Parse a decimal/float literal into a float Scalar.
Scalar parse_float(std::string_view text);

}  // namespace pec
