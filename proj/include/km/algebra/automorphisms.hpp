#pragma once

#include <string>

#include "km/algebra/gwa_algebra.hpp"

namespace km {

struct AutomorphismGen {
  enum Kind { PhiT, Omega, ExpAdX, ExpAdY } kind = PhiT;
  Scalar param;   // t for PhiT, c for the exponentials
  unsigned n = 1; // exponent in exp(c ad x^n)
};

std::string automorphism_name(const AutomorphismGen& g);

namespace detail {

template <typename R>
GwaElement<R> exp_ad(const GwaElement<R>& u, const typename R::value_type& c, const GwaElement<R>& z) {
  const auto& ctx = z.context();
  const auto& ring = ctx->ring();
  GwaElement<R> sum = z;
  GwaElement<R> term = z;
  auto cpow = ctx->one();
  Integer fact = 1;
  for (long k = 1;; ++k) {
    term = commutator(u, term);
    if (term.is_zero()) return sum;
    if (k > 4 * ctx->cap()) throw Error(ErrorCode::DegreeCapExceeded, "ad is not nilpotent within the cap");
    cpow = cpow * c;
    fact *= k;
    const auto coeff = ring.divide(cpow, fact);
    if (!coeff) {
      throw Error(ErrorCode::CharacteristicTooSmall,
                  "k! is not invertible for k = " + std::to_string(k) + " in " + ring.name());
    }
    sum += term.scaled(*coeff);
  }
}

}  // namespace detail

/// Image of `a` under the automorphism. Throws NotReflexive for Omega on a
/// non-reflexive v and CharacteristicTooSmall when the exponential series
/// needs an inverse factorial the ring lacks.
template <typename R>
GwaElement<R> apply_automorphism(const AutomorphismGen& g, const GwaElement<R>& a) {
  using E = GwaElement<R>;
  const auto& ctx = a.context();
  const auto& ring = ctx->ring();
  switch (g.kind) {
    case AutomorphismGen::PhiT: {
      const auto t = ring.from_scalar(g.param);
      const auto tinv = ring.inverse(t);
      if (!tinv) throw Error(ErrorCode::DivisionByZero, "φ_t needs an invertible t");
      typename E::Terms terms;
      for (const auto& [deg, f] : a.terms()) {
        auto s = ctx->one();
        for (long k = 0; k < std::labs(deg); ++k) s = s * (deg > 0 ? t : *tinv);
        terms[deg] = f.scaled(s);
      }
      return E(ctx, terms);
    }
    case AutomorphismGen::Omega: {
      const auto refl = is_reflexive(ctx->roots());
      if (!refl) throw Error(ErrorCode::NotReflexive, "Ω needs a reflexive v");
      const auto shift = ring.from_scalar(Scalar(1) + *refl);
      const long d = static_cast<long>(ctx->roots().degree());
      E out(ctx);
      for (const auto& [deg, f] : a.terms()) {
        auto image = E::monomial(ctx, -deg, 0);
        if (deg < 0 && (d * -deg) % 2 != 0) image = -image;
        out += image * E::from_poly(ctx, compose_affine(ring, f, -ctx->one(), shift));
      }
      return out;
    }
    case AutomorphismGen::ExpAdX:
    case AutomorphismGen::ExpAdY: {
      const long e = static_cast<long>(g.n);
      const E u = E::monomial(ctx, g.kind == AutomorphismGen::ExpAdX ? e : -e, 0);
      return detail::exp_ad(u, ring.from_scalar(g.param), a);
    }
  }
  return a;
}

/// The defining relations hold for images X, Y, H of x, y, h:
/// [H, X] = −X, [H, Y] = Y, XY = v(H), YX = v(H − 1).
template <typename R>
bool relations_hold(const GwaElement<R>& X, const GwaElement<R>& Y, const GwaElement<R>& H) {
  using E = GwaElement<R>;
  const auto& ctx = H.context();
  const E one = E::constant(ctx, ctx->one());
  return (commutator(H, X) + X).is_zero() && (commutator(H, Y) - Y).is_zero() &&
         (X * Y - evaluate(ctx->v(), H)).is_zero() && (Y * X - evaluate(ctx->v(), H - one)).is_zero();
}

template <typename R>
bool automorphism_respects_relations(const AutomorphismGen& g, const ContextPtr<R>& ctx) {
  using E = GwaElement<R>;
  return relations_hold(apply_automorphism(g, E::x(ctx)), apply_automorphism(g, E::y(ctx)),
                        apply_automorphism(g, E::h(ctx)));
}

}  // namespace km
