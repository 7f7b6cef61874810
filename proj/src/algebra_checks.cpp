#include "km/algebra/checks.hpp"

#include <cctype>

namespace km {

std::string automorphism_name(const AutomorphismGen& g) {
  switch (g.kind) {
    case AutomorphismGen::PhiT: return "phi_t(" + g.param.to_string() + ")";
    case AutomorphismGen::Omega: return "Omega";
    case AutomorphismGen::ExpAdX: return "exp_ad_x(" + g.param.to_string() + "," + std::to_string(g.n) + ")";
    case AutomorphismGen::ExpAdY: return "exp_ad_y(" + g.param.to_string() + "," + std::to_string(g.n) + ")";
  }
  return "?";
}

WordSum<Scalar> parse_word_sum(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  }
  if (s.empty()) throw Error(ErrorCode::ParseError, "empty element literal");
  WordSum<Scalar> out;
  auto add_term = [&](const std::string& term, bool negative) {
    if (term.empty()) throw Error(ErrorCode::ParseError, "empty term in '" + s + "'");
    Scalar coeff(negative ? -1 : 1);
    std::string word;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= term.size(); ++i) {
      if (i < term.size() && term[i] == '(') ++depth;
      if (i < term.size() && term[i] == ')') --depth;
      if (i < term.size() && !(term[i] == '*' && depth == 0)) continue;
      const std::string f = term.substr(start, i - start);
      start = i + 1;
      if (f.empty()) throw Error(ErrorCode::ParseError, "empty factor in '" + term + "'");
      if (f[0] == 'x' || f[0] == 'y' || f[0] == 'h') {
        long e = 1;
        if (f.size() > 1) {
          if (f[1] != '^' || f.size() < 3 || f.find_first_not_of("0123456789", 2) != std::string::npos) {
            throw Error(ErrorCode::ParseError, "bad generator power '" + f + "'");
          }
          e = std::stol(f.substr(2));
        }
        word += std::string(e, f[0]);
      } else {
        coeff *= Scalar::parse(f);
      }
    }
    auto [it, fresh] = out.emplace(word, coeff);
    if (!fresh) it->second += coeff;
    if (it->second.is_zero()) out.erase(it);
  };
  int depth = 0;
  std::size_t start = 0;
  bool negative = false;
  if (s[0] == '+' || s[0] == '-') {
    negative = s[0] == '-';
    start = 1;
  }
  for (std::size_t i = start; i <= s.size(); ++i) {
    if (i < s.size()) {
      if (s[i] == '(') ++depth;
      if (s[i] == ')') --depth;
      const bool sep = depth == 0 && (s[i] == '+' || s[i] == '-') && i > start &&
                       s[i - 1] != '*' && s[i - 1] != '/' && s[i - 1] != '^';
      if (!sep) continue;
    }
    add_term(s.substr(start, i - start), negative);
    if (i < s.size()) negative = s[i] == '-';
    start = i + 1;
  }
  return out;
}

namespace {

void require_integral(const RootMultiset& v) {
  for (const Scalar& t : v.roots()) {
    if (!t.as_integer()) throw Error(ErrorCode::NonIntegralRoots, "root " + t.to_string() + " is not an integer");
  }
}

void require_prime(unsigned long p) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
}

template <typename R>
GwaElement<R> h_frobenius(const ContextPtr<R>& ctx, unsigned long p) {
  using E = GwaElement<R>;
  return E::monomial(ctx, 0, static_cast<long>(p)) - E::h(ctx);
}

ModElement reduce_mod(const ZElement& z, const ContextPtr<ModRing>& target) {
  const Integer m = target->ring().modulus;
  return map_coefficients(z, target, [&](const Integer& c) { return ModInt(c, m); });
}

}  // namespace

CenterCheck center_relation_check(const RootMultiset& v, unsigned long p) {
  require_prime(p);
  require_integral(v);
  const auto ctx = make_context(ModRing(Integer(p)), v);
  using E = ModElement;
  const E X = pow(E::x(ctx), p);
  const E Y = pow(E::y(ctx), p);
  const E H = h_frobenius(ctx, p);
  CenterCheck out;
  out.x_central = is_central(X);
  out.y_central = is_central(Y);
  out.h_central = is_central(H);
  E rhs = E::constant(ctx, ctx->one());
  for (const Scalar& c : v.roots()) {
    const Scalar shift = frobenius_shift(c, p);
    rhs = rhs * (H - E::constant(ctx, ctx->ring().from_scalar(shift)));
  }
  out.product_matches = X * Y == rhs;
  return out;
}

ModElement reduction_bracket(const ZElement& z, const ZElement& w, unsigned long p, const ContextPtr<ModRing>& target) {
  require_prime(p);
  if (!is_central(reduce_mod(z, target)) || !is_central(reduce_mod(w, target))) {
    throw Error(ErrorCode::NotCentralModP, "lifts must reduce to central elements mod p");
  }
  const ZElement comm = commutator(z, w);
  const Integer P(p);
  return map_coefficients(comm, target, [&](const Integer& c) {
    if (!mpz_divisible_p(c.get_mpz_t(), P.get_mpz_t())) {
      throw Error(ErrorCode::NonDivisibleCoefficient, "commutator coefficient " + c.get_str() + " not divisible by p");
    }
    return ModInt(c / P, P);
  });
}

ModElement reduction_bracket_p2(const ZElement& z, const ZElement& w, unsigned long p,
                                const ContextPtr<ModRing>& target) {
  require_prime(p);
  const Integer P(p);
  const auto ctx2 = make_context(ModRing(P * P), z.context()->roots());
  const ModElement comm = commutator(reduce_mod(z, ctx2), reduce_mod(w, ctx2));
  return map_coefficients(comm, target, [&](const ModInt& c) {
    if (!mpz_divisible_p(c.value.get_mpz_t(), P.get_mpz_t())) {
      throw Error(ErrorCode::NonDivisibleCoefficient, "commutator coefficient not divisible by p");
    }
    return ModInt(c.value / P, P);
  });
}

ModElement frobenius_image(const ModPoisson& b, const ContextPtr<ModRing>& target) {
  using E = ModElement;
  const unsigned long p = b.context()->ring().modulus.get_ui();
  const E X = pow(E::x(target), p);
  const E Y = pow(E::y(target), p);
  const E H = h_frobenius(target, p);
  E out(target);
  for (const auto& [deg, f] : b.terms()) {
    const E e = deg >= 0 ? pow(X, deg) : pow(Y, -deg);
    out += e * evaluate(f, H);
  }
  return out;
}

bool BracketCheck::consistent() const {
  if (sign == 0) return false;
  for (const auto& pr : pairs) {
    if (!pr.matches || !pr.routes_agree || (pr.sign != 0 && pr.sign != sign)) return false;
  }
  return true;
}

BracketCheck bracket_check(const RootMultiset& v, unsigned long p) {
  require_prime(p);
  require_integral(v);
  const auto zctx = make_context(IntegerRing{}, v);
  const auto pctx = make_context(ModRing(Integer(p)), v);
  const auto bctx = make_context(ModRing(Integer(p)), vp_reduction(v, p));
  const std::vector<std::string> names{"x^p", "y^p", "h^p-h"};
  const std::vector<ZElement> lifts{pow(ZElement::x(zctx), p), pow(ZElement::y(zctx), p), h_frobenius(zctx, p)};
  const std::vector<ModPoisson> gens{ModPoisson::x(bctx), ModPoisson::y(bctx), ModPoisson::h(bctx)};
  BracketCheck out;
  bool mixed = false;
  for (std::size_t i = 0; i < lifts.size(); ++i) {
    for (std::size_t j = 0; j < lifts.size(); ++j) {
      BracketPair pr{names[i], names[j]};
      const ModElement red = reduction_bracket(lifts[i], lifts[j], p, pctx);
      const ModElement image = frobenius_image(poisson_bracket(gens[i], gens[j]), pctx);
      pr.routes_agree = reduction_bracket_p2(lifts[i], lifts[j], p, pctx) == red;
      if (red.is_zero() && image.is_zero()) {
        pr.matches = true;
      } else if (red == image) {
        pr.matches = true;
        pr.sign = 1;
      } else if (red == -image) {
        pr.matches = true;
        pr.sign = -1;
      }
      if (pr.sign != 0) {
        if (out.sign == 0) out.sign = pr.sign;
        if (pr.sign != out.sign) mixed = true;
      }
      out.pairs.push_back(pr);
    }
  }
  if (mixed) out.sign = 0;
  return out;
}

}  // namespace km
