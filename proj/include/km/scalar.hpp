#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "km/polynomial.hpp"

namespace km {

using Rational = mpq_class;

/// Element of Q(t0, t1, ...) held as a canonical fraction of integer
/// polynomials: gcd(num, den) = 1 in Z[T] and the denominator's leading
/// coefficient is positive. Two Scalars are equal iff their fields match.
class Scalar {
 public:
  Scalar() : den_(1) {}
  Scalar(long value) : num_(value), den_(1) {}  // NOLINT(google-explicit-constructor)
  Scalar(int value) : Scalar(static_cast<long>(value)) {}  // NOLINT
  explicit Scalar(const Integer& value) : num_(value), den_(1) {}
  explicit Scalar(const Rational& value);

  /// Canonical representative of num/den. Throws ZeroDenominator.
  static Scalar fraction(const Polynomial& num, const Polynomial& den);
  static Scalar rational(const Integer& num, const Integer& den);
  static Scalar variable(std::size_t id);
  /// Parses the scalar literal grammar (see README); throws ParseError.
  static Scalar parse(std::string_view text);

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  std::optional<Integer> as_integer() const;
  std::optional<Rational> as_rational() const;
  /// Id k when the scalar is exactly the transcendental t_k.
  std::optional<std::size_t> as_variable() const;
  std::vector<std::size_t> variables() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  /// Throws DivisionByZero.
  Scalar& operator/=(const Scalar& other);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// Serialized canonical form: expanded numerator '/' denominator.
  std::string to_string() const;

 private:
  Scalar(Polynomial num, Polynomial den, bool /*already canonical*/)
      : num_(std::move(num)), den_(std::move(den)) {}
  void canonicalize();

  Polynomial num_;
  Polynomial den_;
};

Scalar canonicalize(const Polynomial& raw_num, const Polynomial& raw_den);

Scalar pow(const Scalar& base, unsigned exponent);

/// n when a − b is the integer n.
std::optional<Integer> integer_difference(const Scalar& a, const Scalar& b);

/// a^p − a. Throws NotPrime.
Scalar frobenius_shift(const Scalar& a, unsigned long p);

bool is_prime(unsigned long n);

/// Total order: constants first, ordered by value; non-constants after,
/// ordered structurally by (denominator, numerator).
int compare(const Scalar& a, const Scalar& b);

struct ScalarLess {
  bool operator()(const Scalar& a, const Scalar& b) const { return compare(a, b) < 0; }
};

/// Representative of a + Z: when the denominator is an integer D the
/// numerator's constant term is reduced into [0, D). Rational functions
/// with a non-constant denominator are returned unchanged.
Scalar reduce_mod_integers(const Scalar& a);

/// A string that is equal for a and a + n for every integer n.
std::string integer_shift_key(const Scalar& a);

/// Ordered set of transcendental names (t0, t1, ...) in use.
class TranscendentalRegistry {
 public:
  void add(const Scalar& s);
  bool contains(std::size_t id) const;
  std::vector<std::string> names() const;
  const std::vector<std::size_t>& ids() const { return ids_; }

 private:
  std::vector<std::size_t> ids_;
};

}  // namespace km
