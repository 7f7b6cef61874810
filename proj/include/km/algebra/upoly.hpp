#pragma once

#include <string>
#include <vector>

#include "km/algebra/ring.hpp"

namespace km {

/// Dense polynomial in h; c[k] is the coefficient of h^k. No trailing zeros.
template <typename V>
struct UPoly {
  std::vector<V> c;

  bool is_zero() const { return c.empty(); }
  long degree() const { return static_cast<long>(c.size()) - 1; }
  void trim() {
    while (!c.empty() && km::is_zero(c.back())) c.pop_back();
  }

  UPoly& operator+=(const UPoly& o) {
    if (o.c.size() > c.size()) c.resize(o.c.size(), V());
    for (std::size_t k = 0; k < o.c.size(); ++k) c[k] = c[k] + o.c[k];
    trim();
    return *this;
  }
  UPoly operator-() const {
    UPoly r = *this;
    for (V& x : r.c) x = -x;
    return r;
  }
  UPoly& operator-=(const UPoly& o) { return *this += -o; }
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    UPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    r.c.assign(a.c.size() + b.c.size() - 1, V());
    for (std::size_t i = 0; i < a.c.size(); ++i) {
      if (km::is_zero(a.c[i])) continue;
      for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
    }
    r.trim();
    return r;
  }
  UPoly scaled(const V& s) const {
    UPoly r = *this;
    for (V& x : r.c) x = x * s;
    r.trim();
    return r;
  }
  friend bool operator==(const UPoly& a, const UPoly& b) {
    if (a.c.size() != b.c.size()) return false;
    for (std::size_t k = 0; k < a.c.size(); ++k) {
      if (!(a.c[k] == b.c[k])) return false;
    }
    return true;
  }
};

template <typename R>
UPoly<typename R::value_type> constant_poly(const R& /*ring*/, const typename R::value_type& a) {
  UPoly<typename R::value_type> p{{a}};
  p.trim();
  return p;
}

/// h + s.
template <typename R>
UPoly<typename R::value_type> linear_poly(const R& ring, const typename R::value_type& s) {
  UPoly<typename R::value_type> p{{s, ring.from_integer(1)}};
  p.trim();
  return p;
}

/// f(a·h + s), by Horner's rule.
template <typename R>
UPoly<typename R::value_type> compose_affine(const R& ring, const UPoly<typename R::value_type>& f,
                                             const typename R::value_type& a, const typename R::value_type& s) {
  using P = UPoly<typename R::value_type>;
  P inner{{s, a}};
  inner.trim();
  P r;
  for (long k = f.degree(); k >= 0; --k) r = r * inner + constant_poly(ring, f.c[k]);
  return r;
}

template <typename R>
UPoly<typename R::value_type> shift_poly(const R& ring, const UPoly<typename R::value_type>& f, long s) {
  if (s == 0) return f;
  return compose_affine(ring, f, ring.from_integer(1), ring.from_integer(s));
}

template <typename R>
UPoly<typename R::value_type> derivative(const R& ring, const UPoly<typename R::value_type>& f) {
  UPoly<typename R::value_type> r;
  for (long k = 1; k <= f.degree(); ++k) r.c.push_back(f.c[k] * ring.from_integer(k));
  r.trim();
  return r;
}

template <typename R>
UPoly<typename R::value_type> pow(const R& ring, const UPoly<typename R::value_type>& f, unsigned e) {
  UPoly<typename R::value_type> r = constant_poly(ring, ring.from_integer(1));
  for (unsigned k = 0; k < e; ++k) r = r * f;
  return r;
}

/// ∏ (h − t_i).
template <typename R>
UPoly<typename R::value_type> from_roots(const R& ring, const std::vector<Scalar>& roots) {
  UPoly<typename R::value_type> r = constant_poly(ring, ring.from_integer(1));
  for (const Scalar& t : roots) r = r * linear_poly(ring, -ring.from_scalar(t));
  return r;
}

}  // namespace km
