#pragma once

#include <optional>
#include <string>

#include "km/error.hpp"
#include "km/scalar.hpp"

namespace km {

/// Residue mod `modulus`. Modulus 0 marks a plain integer that adopts the
/// modulus of whatever it is combined with.
struct ModInt {
  Integer value;
  Integer modulus;

  ModInt() = default;
  ModInt(Integer v, Integer m) : value(std::move(v)), modulus(std::move(m)) { reduce(); }

  void reduce() {
    if (modulus > 0) mpz_fdiv_r(value.get_mpz_t(), value.get_mpz_t(), modulus.get_mpz_t());
  }
  static Integer join(const Integer& a, const Integer& b) {
    if (a == 0) return b;
    if (b == 0 || a == b) return a;
    throw Error(ErrorCode::MixedContexts, "residues with different moduli");
  }
  friend ModInt operator+(const ModInt& a, const ModInt& b) {
    return {a.value + b.value, join(a.modulus, b.modulus)};
  }
  friend ModInt operator-(const ModInt& a, const ModInt& b) {
    return {a.value - b.value, join(a.modulus, b.modulus)};
  }
  friend ModInt operator*(const ModInt& a, const ModInt& b) {
    return {a.value * b.value, join(a.modulus, b.modulus)};
  }
  ModInt operator-() const { return {-value, modulus}; }
  ModInt& operator+=(const ModInt& o) { return *this = *this + o; }
  ModInt& operator-=(const ModInt& o) { return *this = *this - o; }
  ModInt& operator*=(const ModInt& o) { return *this = *this * o; }
  friend bool operator==(const ModInt& a, const ModInt& b) {
    const Integer m = join(a.modulus, b.modulus);
    if (m == 0) return a.value == b.value;
    Integer d = a.value - b.value;
    mpz_fdiv_r(d.get_mpz_t(), d.get_mpz_t(), m.get_mpz_t());
    return d == 0;
  }
};

inline bool is_zero(const Scalar& s) { return s.is_zero(); }
inline bool is_zero(const Integer& s) { return s == 0; }
inline bool is_zero(const ModInt& s) { return s == ModInt(0, s.modulus); }

/// ℚ(T).
struct ScalarRing {
  using value_type = Scalar;
  std::string name() const { return "Q(T)"; }
  Scalar from_integer(const Integer& k) const { return Scalar(k); }
  Scalar from_scalar(const Scalar& s) const { return s; }
  std::optional<Scalar> divide(const Scalar& a, const Integer& k) const {
    if (k == 0) return std::nullopt;
    return a / Scalar(k);
  }
  std::optional<Scalar> inverse(const Scalar& a) const {
    if (a.is_zero()) return std::nullopt;
    return Scalar(1) / a;
  }
  std::string to_string(const Scalar& a) const { return a.to_string(); }
  friend bool operator==(const ScalarRing&, const ScalarRing&) { return true; }
};

/// ℤ.
struct IntegerRing {
  using value_type = Integer;
  std::string name() const { return "Z"; }
  Integer from_integer(const Integer& k) const { return k; }
  Integer from_scalar(const Scalar& s) const {
    if (auto k = s.as_integer()) return *k;
    throw Error(ErrorCode::RingCannotEvaluateRoots, "root " + s.to_string() + " is not an integer");
  }
  std::optional<Integer> divide(const Integer& a, const Integer& k) const {
    if (k == 0 || !mpz_divisible_p(a.get_mpz_t(), k.get_mpz_t())) return std::nullopt;
    return Integer(a / k);
  }
  std::optional<Integer> inverse(const Integer& a) const {
    if (a == 1 || a == -1) return a;
    return std::nullopt;
  }
  std::string to_string(const Integer& a) const { return a.get_str(); }
  friend bool operator==(const IntegerRing&, const IntegerRing&) { return true; }
};

/// ℤ/m, used with m = p and m = p².
struct ModRing {
  using value_type = ModInt;
  Integer modulus;

  explicit ModRing(Integer m) : modulus(std::move(m)) {}
  std::string name() const { return "Z/" + modulus.get_str(); }
  ModInt from_integer(const Integer& k) const { return {k, modulus}; }
  ModInt from_scalar(const Scalar& s) const {
    if (auto k = s.as_integer()) return from_integer(*k);
    throw Error(ErrorCode::RingCannotEvaluateRoots, "root " + s.to_string() + " is not an integer");
  }
  std::optional<ModInt> inverse(const ModInt& a) const {
    Integer inv;
    if (mpz_invert(inv.get_mpz_t(), a.value.get_mpz_t(), modulus.get_mpz_t()) == 0) return std::nullopt;
    return ModInt(inv, modulus);
  }
  std::optional<ModInt> divide(const ModInt& a, const Integer& k) const {
    auto inv = inverse(from_integer(k));
    if (!inv) return std::nullopt;
    return a * *inv;
  }
  std::string to_string(const ModInt& a) const { return a.value.get_str(); }
  friend bool operator==(const ModRing& a, const ModRing& b) { return a.modulus == b.modulus; }
};

}  // namespace km
