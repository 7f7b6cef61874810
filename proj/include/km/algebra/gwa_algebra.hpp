#pragma once

#include <cstdlib>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "km/algebra/upoly.hpp"
#include "km/gwa_classify.hpp"

namespace km {

inline long default_degree_cap() {
  if (const char* env = std::getenv("KM_MAX_DEGREE")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 64;
}

/// Shared data of A(v) and B(v) over a coefficient ring: the ring, the
/// roots of v and v itself as a polynomial in h.
///
/// Multiplication in A(v) follows hx = x(h − 1), hy = y(h + 1), xy = v(h),
/// yx = v(h − 1); the Poisson bracket of B(v) is {h, x} = −x, {h, y} = y,
/// {x, y} = v'(h).
template <typename R>
class GwaContext {
 public:
  using V = typename R::value_type;
  using P = UPoly<V>;

  GwaContext(R ring, RootMultiset roots, long cap = default_degree_cap())
      : ring_(std::move(ring)), roots_(std::move(roots)), v_(from_roots(ring_, roots_.roots())), cap_(cap) {}

  const R& ring() const { return ring_; }
  const RootMultiset& roots() const { return roots_; }
  const P& v() const { return v_; }
  long cap() const { return cap_; }

  V one() const { return ring_.from_integer(1); }
  V from_integer(long k) const { return ring_.from_integer(Integer(k)); }

  /// v(h + s).
  const P& v_shift(long s) const {
    auto it = shifted_.find(s);
    if (it == shifted_.end()) it = shifted_.emplace(s, shift_poly(ring_, v_, s)).first;
    return it->second;
  }
  const P& v_prime() const {
    if (!vprime_) vprime_ = std::make_unique<P>(derivative(ring_, v_));
    return *vprime_;
  }

  /// e^a e^b = e^{a+b} P(h) in A(v), with e^i = x^i, e^{−j} = y^j.
  std::pair<long, P> monomial_product(long a, long b) const {
    P prod = constant_poly(ring_, one());
    if (a > 0 && b < 0) {
      const long i = a, j = -b;
      if (i >= j) {
        for (long k = 0; k < j; ++k) prod = prod * v_shift(k);
      } else {
        for (long k = 0; k < i; ++k) prod = prod * v_shift(k + j - i);
      }
    } else if (a < 0 && b > 0) {
      const long j = -a, i = b;
      if (i >= j) {
        for (long k = 1; k <= j; ++k) prod = prod * v_shift(-k - i + j);
      } else {
        for (long k = 1; k <= i; ++k) prod = prod * v_shift(-k);
      }
    }
    return {a + b, prod};
  }

  /// e^a e^b in the commutative B(v), where xy = v(h).
  std::pair<long, P> commutative_product(long a, long b) const {
    P prod = constant_poly(ring_, one());
    if ((a > 0 && b < 0) || (a < 0 && b > 0)) {
      const long m = std::min(std::labs(a), std::labs(b));
      for (long k = 0; k < m; ++k) prod = prod * v_;
    }
    return {a + b, prod};
  }

  void check_cap(long a, const P& f) const {
    if (std::labs(a) + std::max(0L, f.degree()) > cap_) {
      throw Error(ErrorCode::DegreeCapExceeded,
                  "total degree exceeds cap " + std::to_string(cap_) + " (set KM_MAX_DEGREE to raise it)");
    }
  }

  friend bool operator==(const GwaContext& a, const GwaContext& b) {
    return &a == &b || (a.ring_ == b.ring_ && a.roots_ == b.roots_);
  }

 private:
  R ring_;
  RootMultiset roots_;
  P v_;
  long cap_;
  mutable std::map<long, P> shifted_;
  mutable std::unique_ptr<P> vprime_;
};

template <typename R>
using ContextPtr = std::shared_ptr<const GwaContext<R>>;

template <typename R>
ContextPtr<R> make_context(R ring, const RootMultiset& roots, long cap = default_degree_cap()) {
  return std::make_shared<const GwaContext<R>>(std::move(ring), roots, cap);
}

/// Finite sum Σ e^a f_a(h) over the basis {x^i h^k, y^j h^k, h^k}.
/// `Commutative` selects B(v) instead of A(v).
template <typename R, bool Commutative>
class BasisElement {
 public:
  using V = typename R::value_type;
  using P = UPoly<V>;
  using Terms = std::map<long, P>;

  BasisElement() = default;
  explicit BasisElement(ContextPtr<R> ctx) : ctx_(std::move(ctx)) {}
  BasisElement(ContextPtr<R> ctx, Terms terms) : ctx_(std::move(ctx)), terms_(std::move(terms)) { prune(); }

  static BasisElement constant(ContextPtr<R> ctx, const V& c) {
    BasisElement e(ctx);
    e.terms_[0] = constant_poly(ctx->ring(), c);
    e.prune();
    return e;
  }
  static BasisElement x(ContextPtr<R> ctx) { return monomial(ctx, 1, 0); }
  static BasisElement y(ContextPtr<R> ctx) { return monomial(ctx, -1, 0); }
  static BasisElement h(ContextPtr<R> ctx) { return monomial(ctx, 0, 1); }
  /// e^a h^k.
  static BasisElement monomial(ContextPtr<R> ctx, long a, long k, std::optional<V> coeff = std::nullopt) {
    P p;
    p.c.assign(k + 1, V());
    p.c[k] = coeff ? *coeff : ctx->one();
    p.trim();
    BasisElement e(ctx);
    e.terms_[a] = p;
    e.prune();
    return e;
  }
  /// f(h) as an element.
  static BasisElement from_poly(ContextPtr<R> ctx, const P& f) {
    BasisElement e(ctx);
    e.terms_[0] = f;
    e.prune();
    return e;
  }

  const ContextPtr<R>& context() const { return ctx_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  V coefficient(long a, long k) const {
    auto it = terms_.find(a);
    if (it == terms_.end() || k > it->second.degree()) return V();
    return it->second.c[k];
  }

  BasisElement& operator+=(const BasisElement& o) {
    adopt(o);
    for (const auto& [a, f] : o.terms_) terms_[a] += f;
    prune();
    return *this;
  }
  BasisElement operator-() const {
    BasisElement r = *this;
    for (auto& [a, f] : r.terms_) f = -f;
    return r;
  }
  BasisElement& operator-=(const BasisElement& o) { return *this += -o; }
  friend BasisElement operator+(BasisElement a, const BasisElement& b) { return a += b; }
  friend BasisElement operator-(BasisElement a, const BasisElement& b) { return a -= b; }

  BasisElement scaled(const V& s) const {
    BasisElement r = *this;
    for (auto& [a, f] : r.terms_) f = f.scaled(s);
    r.prune();
    return r;
  }

  friend BasisElement operator*(const BasisElement& l, const BasisElement& r) {
    BasisElement out = l;
    out.adopt(r);
    out.terms_.clear();
    const auto& ctx = *out.ctx_;
    for (const auto& [a, f] : l.terms_) {
      for (const auto& [b, g] : r.terms_) {
        auto [deg, prod] = Commutative ? ctx.commutative_product(a, b) : ctx.monomial_product(a, b);
        // f(h) e^b = e^b f(h − b) in A(v).
        P term = Commutative ? prod * f * g : prod * shift_poly(ctx.ring(), f, -b) * g;
        ctx.check_cap(deg, term);
        out.terms_[deg] += term;
      }
    }
    out.prune();
    return out;
  }

  friend bool operator==(const BasisElement& a, const BasisElement& b) { return a.terms_ == b.terms_; }

  /// "x^2*h^1" style keys with ring-formatted coefficients, basis order.
  std::vector<std::pair<std::string, std::string>> listing() const {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& [a, f] : terms_) {
      for (long k = 0; k <= f.degree(); ++k) {
        if (km::is_zero(f.c[k])) continue;
        std::string mono;
        if (a > 0) mono = "x^" + std::to_string(a);
        if (a < 0) mono = "y^" + std::to_string(-a);
        if (k > 0) mono += (mono.empty() ? "" : "*") + std::string("h^") + std::to_string(k);
        if (mono.empty()) mono = "1";
        out.emplace_back(mono, ctx_->ring().to_string(f.c[k]));
      }
    }
    return out;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [mono, coeff] : listing()) {
      if (!s.empty()) s += " + ";
      s += "(" + coeff + ")*" + mono;
    }
    return s;
  }

 private:
  void prune() {
    for (auto it = terms_.begin(); it != terms_.end();) {
      it->second.trim();
      it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
    }
  }
  void adopt(const BasisElement& o) {
    if (!ctx_) {
      ctx_ = o.ctx_;
    } else if (o.ctx_ && !(*ctx_ == *o.ctx_)) {
      throw Error(ErrorCode::MixedContexts, "elements live in different algebras");
    }
  }

  ContextPtr<R> ctx_;
  Terms terms_;
};

template <typename R>
using GwaElement = BasisElement<R, false>;
template <typename R>
using PoissonElement = BasisElement<R, true>;

template <typename R, bool C>
BasisElement<R, C> pow(const BasisElement<R, C>& a, unsigned e) {
  BasisElement<R, C> r = BasisElement<R, C>::constant(a.context(), a.context()->one());
  for (unsigned k = 0; k < e; ++k) r = r * a;
  return r;
}

template <typename R>
GwaElement<R> commutator(const GwaElement<R>& a, const GwaElement<R>& b) {
  return a * b - b * a;
}

template <typename R>
bool is_central(const GwaElement<R>& z) {
  const auto& ctx = z.context();
  for (const auto& g : {GwaElement<R>::x(ctx), GwaElement<R>::y(ctx), GwaElement<R>::h(ctx)}) {
    if (!commutator(z, g).is_zero()) return false;
  }
  return true;
}

/// f(z) for a polynomial f in h and an element z.
template <typename R, bool C>
BasisElement<R, C> evaluate(const UPoly<typename R::value_type>& f, const BasisElement<R, C>& z) {
  BasisElement<R, C> r(z.context());
  for (long k = f.degree(); k >= 0; --k) {
    r = r * z + BasisElement<R, C>::constant(z.context(), f.c[k]);
  }
  return r;
}

/// Converts coefficients into another context (e.g. Z to Z/p).
template <typename R2, typename R1, bool C, typename F>
BasisElement<R2, C> map_coefficients(const BasisElement<R1, C>& a, ContextPtr<R2> ctx, F&& fn) {
  typename BasisElement<R2, C>::Terms terms;
  for (const auto& [deg, f] : a.terms()) {
    UPoly<typename R2::value_type> g;
    for (const auto& x : f.c) g.c.push_back(fn(x));
    g.trim();
    terms[deg] = g;
  }
  return BasisElement<R2, C>(ctx, terms);
}

/// Poisson bracket of B(v): {e^a f, e^b g} = (a f g' − b f' g) e^a e^b + f g {e^a, e^b},
/// {x^i, y^j} = i j x^{i−1} y^{j−1} v'(h), {h, e^a} = −a e^a.
template <typename R>
PoissonElement<R> poisson_bracket(const PoissonElement<R>& l, const PoissonElement<R>& r) {
  using E = PoissonElement<R>;
  if (l.context() && r.context() && !(*l.context() == *r.context())) {
    throw Error(ErrorCode::MixedContexts, "elements live in different algebras");
  }
  const auto ctx = l.context() ? l.context() : r.context();
  const auto& ring = ctx->ring();
  E out(ctx);
  auto e = [&](long a) { return E::monomial(ctx, a, 0); };
  for (const auto& [a, f] : l.terms()) {
    for (const auto& [b, g] : r.terms()) {
      const auto left = f * derivative(ring, g);
      const auto right = derivative(ring, f) * g;
      const auto coeff = left.scaled(ctx->from_integer(a)) - right.scaled(ctx->from_integer(b));
      out += E::from_poly(ctx, coeff) * e(a) * e(b);
      long i = 0, j = 0, sign = 1;
      if (a > 0 && b < 0) {
        i = a;
        j = -b;
      } else if (a < 0 && b > 0) {
        i = b;
        j = -a;
        sign = -1;
      }
      if (i > 0) {
        const auto base = e(i - 1) * e(-(j - 1)) * E::from_poly(ctx, ctx->v_prime());
        out += (E::from_poly(ctx, f * g) * base).scaled(ctx->from_integer(sign * i * j));
      }
    }
  }
  return out;
}

}  // namespace km
