#include "km/scalar.hpp"

#include <algorithm>
#include <cctype>

#include "km/error.hpp"

namespace km {

Scalar::Scalar(const Rational& value)
    : num_(value.get_num()), den_(value.get_den()) {}

void Scalar::canonicalize() {
  if (den_.is_zero()) throw Error(ErrorCode::ZeroDenominator, "zero denominator");
  if (num_.is_zero()) {
    den_ = Polynomial(1);
    return;
  }
  if (!(den_.is_constant() && den_.constant_coefficient() == 1)) {
    const Polynomial g = gcd(num_, den_);
    if (!(g.is_constant() && g.constant_coefficient() == 1)) {
      num_ = divide_exact(num_, g);
      den_ = divide_exact(den_, g);
    }
  }
  if (den_.leading_term().coeff < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

Scalar Scalar::fraction(const Polynomial& num, const Polynomial& den) {
  Scalar s(num, den, true);
  s.canonicalize();
  return s;
}

Scalar canonicalize(const Polynomial& raw_num, const Polynomial& raw_den) {
  return Scalar::fraction(raw_num, raw_den);
}

Scalar Scalar::rational(const Integer& num, const Integer& den) {
  return fraction(Polynomial(num), Polynomial(den));
}

Scalar Scalar::variable(std::size_t id) {
  return Scalar(Polynomial::variable(id), Polynomial(1), true);
}

std::optional<Integer> Scalar::as_integer() const {
  if (!num_.is_constant() || !(den_.is_constant() && den_.constant_coefficient() == 1)) {
    return std::nullopt;
  }
  return num_.constant_coefficient();
}

std::optional<Rational> Scalar::as_rational() const {
  if (!is_constant()) return std::nullopt;
  Rational q(num_.constant_coefficient(), den_.constant_coefficient());
  q.canonicalize();
  return q;
}

std::optional<std::size_t> Scalar::as_variable() const {
  if (!(den_.is_constant() && den_.constant_coefficient() == 1)) return std::nullopt;
  if (num_.size() != 1) return std::nullopt;
  const Term& t = num_.leading_term();
  if (t.coeff != 1 || t.monomial.degree() != 1) return std::nullopt;
  return t.monomial.width() - 1;
}

std::vector<std::size_t> Scalar::variables() const {
  auto a = num_.variables();
  const auto b = den_.variables();
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

Scalar Scalar::operator-() const { return Scalar(-num_, den_, true); }

Scalar& Scalar::operator+=(const Scalar& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = other;
  if (den_ == other.den_) {
    num_ += other.num_;
  } else {
    num_ = num_ * other.den_ + other.num_ * den_;
    den_ *= other.den_;
  }
  canonicalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) { return *this += -other; }

Scalar& Scalar::operator*=(const Scalar& other) {
  if (is_zero()) return *this;
  if (other.is_zero()) return *this = Scalar();
  // Cross-cancel so the product is already reduced.
  const Polynomial g1 = gcd(num_, other.den_);
  const Polynomial g2 = gcd(other.num_, den_);
  Polynomial n = divide_exact(num_, g1) * divide_exact(other.num_, g2);
  Polynomial d = divide_exact(den_, g2) * divide_exact(other.den_, g1);
  num_ = std::move(n);
  den_ = std::move(d);
  if (den_.leading_term().coeff < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& other) {
  if (other.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero scalar");
  return *this *= Scalar(other.den_, other.num_, true);
}

std::string Scalar::to_string() const {
  if (den_.is_constant() && den_.constant_coefficient() == 1) return num_.to_string();
  std::string n = num_.to_string();
  if (num_.size() > 1) n = "(" + n + ")";
  std::string d = den_.to_string();
  if (!den_.is_constant()) d = "(" + d + ")";
  return n + "/" + d;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  Scalar run() {
    Scalar v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::ParseError,
                what + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  std::string digits() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  Scalar expr() {
    Scalar v = term();
    for (;;) {
      if (eat('+')) v += term();
      else if (eat('-')) v -= term();
      else return v;
    }
  }
  Scalar term() {
    Scalar v = power();
    for (;;) {
      if (eat('*')) v *= power();
      else if (eat('/')) {
        Scalar d = power();
        if (d.is_zero()) fail("division by zero");
        v /= d;
      } else return v;
    }
  }
  Scalar power() {
    Scalar v = factor();
    if (eat('^')) {
      skip();
      const std::string e = digits();
      if (e.empty() || e.size() > 6) fail("bad exponent");
      v = pow(v, static_cast<unsigned>(std::stoul(e)));
    }
    return v;
  }
  Scalar factor() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '-') {
      ++pos_;
      return -power();
    }
    if (c == '(') {
      ++pos_;
      Scalar v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (c == 't') {
      ++pos_;
      const std::string id = digits();
      if (id.empty() || id.size() > 6) fail("bad transcendental name");
      return Scalar::variable(std::stoul(id));
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Scalar(Integer(digits()));
    fail("unexpected character");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar Scalar::parse(std::string_view text) { return Parser(text).run(); }

Scalar pow(const Scalar& base, unsigned exponent) {
  Scalar result(1);
  Scalar b = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent > 0) b *= b;
  }
  return result;
}

std::optional<Integer> integer_difference(const Scalar& a, const Scalar& b) {
  return (a - b).as_integer();
}

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Scalar frobenius_shift(const Scalar& a, unsigned long p) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  return pow(a, static_cast<unsigned>(p)) - a;
}

int compare(const Scalar& a, const Scalar& b) {
  const bool ca = a.is_constant();
  const bool cb = b.is_constant();
  if (ca && cb) {
    const int c = cmp(*a.as_rational(), *b.as_rational());
    return (c > 0) - (c < 0);
  }
  if (ca != cb) return ca ? -1 : 1;
  if (const int c = compare(a.denominator(), b.denominator()); c != 0) return c;
  return compare(a.numerator(), b.numerator());
}

Scalar reduce_mod_integers(const Scalar& a) {
  if (!a.denominator().is_constant()) return a;
  const Integer d = a.denominator().constant_coefficient();
  const Integer c = a.numerator().constant_coefficient();
  Integer k;
  mpz_fdiv_q(k.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
  if (k == 0) return a;
  return a - Scalar(k);
}

std::string integer_shift_key(const Scalar& a) {
  if (a.denominator().is_constant()) return reduce_mod_integers(a).to_string();
  return "~" + a.denominator().to_string();
}

void TranscendentalRegistry::add(const Scalar& s) {
  for (std::size_t id : s.variables()) {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
    if (it == ids_.end() || *it != id) ids_.insert(it, id);
  }
}

bool TranscendentalRegistry::contains(std::size_t id) const {
  return std::binary_search(ids_.begin(), ids_.end(), id);
}

std::vector<std::string> TranscendentalRegistry::names() const {
  std::vector<std::string> out;
  out.reserve(ids_.size());
  for (std::size_t id : ids_) out.push_back("t" + std::to_string(id));
  return out;
}

}  // namespace km
