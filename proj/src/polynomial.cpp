#include "km/polynomial.hpp"

#include <algorithm>
#include <utility>

#include "km/error.hpp"

namespace km {

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::variable(std::size_t id, std::uint32_t power) {
  Monomial m;
  if (power == 0) return m;
  m.exps_.assign(id + 1, 0);
  m.exps_[id] = power;
  m.degree_ = power;
  return m;
}

void Monomial::trim() {
  while (!exps_.empty() && exps_.back() == 0) exps_.pop_back();
}

bool Monomial::divides(const Monomial& other) const {
  if (exps_.size() > other.exps_.size()) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  out.exps_.resize(std::max(exps_.size(), other.exps_.size()), 0);
  for (std::size_t i = 0; i < out.exps_.size(); ++i) {
    out.exps_[i] = exponent(i) + other.exponent(i);
  }
  out.degree_ = degree_ + other.degree_;
  return out;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  Monomial out;
  out.exps_ = exps_;
  for (std::size_t i = 0; i < divisor.exps_.size(); ++i) out.exps_[i] -= divisor.exps_[i];
  out.degree_ = degree_ - divisor.degree_;
  out.trim();
  return out;
}

Monomial Monomial::without(std::size_t id) const {
  if (id >= exps_.size() || exps_[id] == 0) return *this;
  Monomial out = *this;
  out.degree_ -= out.exps_[id];
  out.exps_[id] = 0;
  out.trim();
  return out;
}

std::string Monomial::to_string() const {
  std::string out;
  for (std::size_t id = exps_.size(); id-- > 0;) {
    for (std::uint32_t k = 0; k < exps_[id]; ++k) {
      if (!out.empty()) out += '*';
      out += 't';
      out += std::to_string(id);
    }
  }
  return out.empty() ? "1" : out;
}

int compare_grlex(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  for (std::size_t id = std::max(a.width(), b.width()); id-- > 0;) {
    const auto ea = a.exponent(id);
    const auto eb = b.exponent(id);
    if (ea != eb) return ea < eb ? -1 : 1;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// Polynomial

namespace {

bool term_before(const Term& a, const Term& b) {
  return compare_grlex(a.monomial, b.monomial) > 0;
}

}  // namespace

Polynomial::Polynomial(long value) {
  if (value != 0) terms_.push_back({Monomial{}, Integer(value)});
}

Polynomial::Polynomial(const Integer& value) {
  if (value != 0) terms_.push_back({Monomial{}, value});
}

Polynomial Polynomial::variable(std::size_t id) {
  return monomial(Monomial::variable(id), Integer(1));
}

Polynomial Polynomial::monomial(const Monomial& m, const Integer& coeff) {
  Polynomial p;
  if (coeff != 0) p.terms_.push_back({m, coeff});
  return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_before);
  Polynomial p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff == 0) p.terms_.pop_back();
    } else if (t.coeff != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

Integer Polynomial::constant_coefficient() const {
  if (!terms_.empty() && terms_.back().monomial.is_one()) return terms_.back().coeff;
  return 0;
}

long Polynomial::max_variable() const {
  long best = -1;
  for (const auto& t : terms_) best = std::max(best, static_cast<long>(t.monomial.width()) - 1);
  return best;
}

std::vector<std::size_t> Polynomial::variables() const {
  std::vector<std::size_t> vars;
  for (const auto& t : terms_) {
    for (std::size_t id = 0; id < t.monomial.width(); ++id) {
      if (t.monomial.exponent(id) > 0) vars.push_back(id);
    }
  }
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

std::uint32_t Polynomial::total_degree() const {
  return terms_.empty() ? 0 : terms_.front().monomial.degree();
}

std::uint32_t Polynomial::degree_in(std::size_t var) const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.exponent(var));
  return d;
}

std::vector<Polynomial> Polynomial::coefficients_in(std::size_t var) const {
  std::vector<std::vector<Term>> buckets(degree_in(var) + 1);
  for (const auto& t : terms_) {
    buckets[t.monomial.exponent(var)].push_back({t.monomial.without(var), t.coeff});
  }
  std::vector<Polynomial> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(from_terms(std::move(b)));
  return out;
}

Polynomial Polynomial::leading_coefficient_in(std::size_t var) const {
  const auto d = degree_in(var);
  std::vector<Term> lc;
  for (const auto& t : terms_) {
    if (t.monomial.exponent(var) == d) lc.push_back({t.monomial.without(var), t.coeff});
  }
  return from_terms(std::move(lc));
}

Integer Polynomial::content() const {
  Integer g = 0;
  for (const auto& t : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.is_zero()) return *this;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < other.terms_.size()) {
    if (j == other.terms_.size()) {
      merged.push_back(std::move(terms_[i++]));
      continue;
    }
    if (i == terms_.size()) {
      merged.push_back(other.terms_[j++]);
      continue;
    }
    const int c = compare_grlex(terms_[i].monomial, other.terms_[j].monomial);
    if (c > 0) {
      merged.push_back(std::move(terms_[i++]));
    } else if (c < 0) {
      merged.push_back(other.terms_[j++]);
    } else {
      Integer sum = terms_[i].coeff + other.terms_[j].coeff;
      if (sum != 0) merged.push_back({std::move(terms_[i].monomial), std::move(sum)});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) { return *this += -other; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (b.is_constant()) return a * b.terms_.front().coeff;
  if (a.is_constant()) return b * a.terms_.front().coeff;
  std::vector<Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) {
      prod.push_back({s.monomial * t.monomial, s.coeff * t.coeff});
    }
  }
  return Polynomial::from_terms(std::move(prod));
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

Polynomial& Polynomial::operator*=(const Integer& factor) {
  if (factor == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= factor;
  return *this;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].coeff != b.terms_[i].coeff) return false;
    if (!(a.terms_[i].monomial == b.terms_[i].monomial)) return false;
  }
  return true;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    Integer mag = abs(t.coeff);
    const bool negative = t.coeff < 0;
    if (negative) {
      out += '-';
    } else if (!first) {
      out += '+';
    }
    if (t.monomial.is_one()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += t.monomial.to_string();
    } else {
      out += mag.get_str();
      out += '*';
      out += t.monomial.to_string();
    }
    first = false;
  }
  return out;
}

Polynomial pow(const Polynomial& base, unsigned exponent) {
  Polynomial result(1);
  Polynomial b = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent > 0) b *= b;
  }
  return result;
}

Polynomial divide_exact(const Polynomial& a, const Integer& k) {
  if (k == 0) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  std::vector<Term> out;
  out.reserve(a.size());
  for (const auto& t : a.terms()) {
    if (!mpz_divisible_p(t.coeff.get_mpz_t(), k.get_mpz_t())) {
      throw Error(ErrorCode::NotDivisible, "coefficient not divisible");
    }
    Integer q;
    mpz_divexact(q.get_mpz_t(), t.coeff.get_mpz_t(), k.get_mpz_t());
    out.push_back({t.monomial, std::move(q)});
  }
  return Polynomial::from_terms(std::move(out));
}

Polynomial divide_exact(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  if (b.is_constant()) return divide_exact(a, b.leading_term().coeff);
  const Term& lead = b.leading_term();
  std::vector<Term> quotient;
  Polynomial rem = a;
  while (!rem.is_zero()) {
    const Term& rt = rem.leading_term();
    if (!lead.monomial.divides(rt.monomial) ||
        !mpz_divisible_p(rt.coeff.get_mpz_t(), lead.coeff.get_mpz_t())) {
      throw Error(ErrorCode::NotDivisible, "polynomial not divisible");
    }
    Integer q;
    mpz_divexact(q.get_mpz_t(), rt.coeff.get_mpz_t(), lead.coeff.get_mpz_t());
    Polynomial step = Polynomial::monomial(rt.monomial / lead.monomial, q);
    quotient.push_back(step.leading_term());
    rem -= step * b;
  }
  return Polynomial::from_terms(std::move(quotient));
}

Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b, std::size_t var) {
  const auto n = b.degree_in(var);
  const Polynomial lc = b.leading_coefficient_in(var);
  Polynomial r = a;
  while (!r.is_zero() && r.degree_in(var) >= n) {
    const auto shift = r.degree_in(var) - n;
    Polynomial lr = r.leading_coefficient_in(var);
    r = lc * r - lr * Polynomial::monomial(Monomial::variable(var, shift), Integer(1)) * b;
  }
  return r;
}

namespace {

Polynomial with_positive_lead(Polynomial p) {
  if (!p.is_zero() && p.leading_term().coeff < 0) return -p;
  return p;
}

Polynomial content_in(const Polynomial& p, std::size_t var) {
  Polynomial g;
  for (const auto& c : p.coefficients_in(var)) {
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_constant() && g.constant_coefficient() == 1) break;
  }
  return g;
}

Polynomial primitive_part_in(const Polynomial& p, std::size_t var) {
  if (p.is_zero()) return p;
  return divide_exact(p, content_in(p, var));
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return with_positive_lead(b);
  if (b.is_zero()) return with_positive_lead(a);
  if (a.is_constant() || b.is_constant()) {
    Integer g;
    const Integer ca = a.content();
    const Integer cb = b.content();
    mpz_gcd(g.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    return Polynomial(g);
  }
  const auto var = static_cast<std::size_t>(std::max(a.max_variable(), b.max_variable()));
  if (a.degree_in(var) == 0) return gcd(a, content_in(b, var));
  if (b.degree_in(var) == 0) return gcd(content_in(a, var), b);

  const Polynomial ca = content_in(a, var);
  const Polynomial cb = content_in(b, var);
  Polynomial pa = divide_exact(a, ca);
  Polynomial pb = divide_exact(b, cb);
  const Polynomial c = gcd(ca, cb);

  if (pa.degree_in(var) < pb.degree_in(var)) std::swap(pa, pb);
  while (true) {
    Polynomial r = pseudo_remainder(pa, pb, var);
    if (r.is_zero()) break;
    if (r.degree_in(var) == 0) {
      pb = Polynomial(1);
      break;
    }
    pa = std::move(pb);
    pb = primitive_part_in(r, var);
  }
  return with_positive_lead(c * primitive_part_in(pb, var));
}

int compare(const Polynomial& a, const Polynomial& b) {
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  for (std::size_t i = 0; i < std::min(ta.size(), tb.size()); ++i) {
    const int m = compare_grlex(ta[i].monomial, tb[i].monomial);
    if (m != 0) return m;
    const int c = cmp(ta[i].coeff, tb[i].coeff);
    if (c != 0) return c < 0 ? -1 : 1;
  }
  if (ta.size() == tb.size()) return 0;
  return ta.size() < tb.size() ? -1 : 1;
}

}  // namespace km
