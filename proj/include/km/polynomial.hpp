#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace km {

using Integer = mpz_class;

/// A power product t_0^{e_0} t_1^{e_1} ... of the formal transcendentals.
/// The exponent vector is indexed by variable id and kept without trailing
/// zeros, so equal monomials have identical storage.
class Monomial {
 public:
  Monomial() = default;

  static Monomial variable(std::size_t id, std::uint32_t power = 1);

  std::uint32_t degree() const { return degree_; }
  std::uint32_t exponent(std::size_t id) const {
    return id < exps_.size() ? exps_[id] : 0;
  }
  /// Number of exponent slots; zero for the unit monomial.
  std::size_t width() const { return exps_.size(); }
  bool is_one() const { return exps_.empty(); }

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// Requires divides(other) from the divisor's side.
  Monomial operator/(const Monomial& divisor) const;
  /// Copy with the exponent of `id` set to zero.
  Monomial without(std::size_t id) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

  std::string to_string() const;

 private:
  void trim();

  std::vector<std::uint32_t> exps_;
  std::uint32_t degree_ = 0;
};

/// Graded lexicographic comparison with t0 < t1 < t2 < ...
/// Returns -1, 0 or 1.
int compare_grlex(const Monomial& a, const Monomial& b);

struct Term {
  Monomial monomial;
  Integer coeff;
};

/// Multivariate polynomial over the integers. Terms are stored in strictly
/// decreasing grlex order and carry nonzero coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(long value);  // NOLINT(google-explicit-constructor)
  explicit Polynomial(const Integer& value);

  static Polynomial variable(std::size_t id);
  static Polynomial monomial(const Monomial& m, const Integer& coeff);
  /// Combines like terms and sorts; zero coefficients are dropped.
  static Polynomial from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.front().monomial.is_one());
  }
  /// Coefficient of the unit monomial.
  Integer constant_coefficient() const;
  const Term& leading_term() const { return terms_.front(); }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  /// Largest variable id that occurs, or -1 for constants.
  long max_variable() const;
  std::vector<std::size_t> variables() const;
  std::uint32_t total_degree() const;
  std::uint32_t degree_in(std::size_t var) const;
  /// View as a polynomial in `var`: entry k is the coefficient of var^k.
  std::vector<Polynomial> coefficients_in(std::size_t var) const;
  Polynomial leading_coefficient_in(std::size_t var) const;

  /// gcd of the integer coefficients, always nonnegative.
  Integer content() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Integer& factor);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Integer& k) { return a *= k; }

  friend bool operator==(const Polynomial& a, const Polynomial& b);

  /// Expanded form in the scalar literal grammar (powers as repeated
  /// products, e.g. "2*t1*t1-t2+3").
  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

Polynomial pow(const Polynomial& base, unsigned exponent);

/// Exact quotient; throws Error(NotDivisible) when b does not divide a and
/// Error(DivisionByZero) when b is zero.
Polynomial divide_exact(const Polynomial& a, const Polynomial& b);

/// Exact division of every coefficient by an integer.
Polynomial divide_exact(const Polynomial& a, const Integer& k);

/// Greatest common divisor in Z[t0, t1, ...], normalized to a positive
/// leading coefficient. gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Pseudo-remainder of a by b with respect to `var`.
Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b, std::size_t var);

/// Structural total order: term lists compared from the leading term down.
int compare(const Polynomial& a, const Polynomial& b);

}  // namespace km
