#pragma once

#include <string>
#include <vector>

#include "km/algebra/automorphisms.hpp"
#include "km/algebra/rewriting.hpp"

namespace km {

using ZElement = GwaElement<IntegerRing>;
using ModElement = GwaElement<ModRing>;
using ModPoisson = PoissonElement<ModRing>;

struct CenterCheck {
  bool x_central = false;
  bool y_central = false;
  bool h_central = false;  // h^p − h
  bool product_matches = false;  // x^p y^p = ∏(h^p − h − (c_i^p − c_i))
  bool ok() const { return x_central && y_central && h_central && product_matches; }
};

/// Over Z/p. Throws NonIntegralRoots, NotPrime.
CenterCheck center_relation_check(const RootMultiset& v, unsigned long p);

/// (1/p)[z, w] mod p computed over Z. Throws NotCentralModP,
/// NonDivisibleCoefficient.
ModElement reduction_bracket(const ZElement& z, const ZElement& w, unsigned long p, const ContextPtr<ModRing>& target);

/// Same bracket computed over Z/p² and divided by p.
ModElement reduction_bracket_p2(const ZElement& z, const ZElement& w, unsigned long p,
                                const ContextPtr<ModRing>& target);

/// Image of an element of B(v^[p]) under x ↦ x^p, y ↦ y^p, h ↦ h^p − h.
ModElement frobenius_image(const ModPoisson& b, const ContextPtr<ModRing>& target);

struct BracketPair {
  std::string left, right;
  int sign = 0;  // s with reduction = s·image; 0 when both sides vanish
  bool matches = false;
  bool routes_agree = false;  // Z and Z/p² computations coincide
};

struct BracketCheck {
  std::vector<BracketPair> pairs;
  int sign = 0;  // common sign, 0 if inconsistent or undetermined
  bool consistent() const;
};

BracketCheck bracket_check(const RootMultiset& v, unsigned long p);

/// Sign fixed for the correspondence between the reduction bracket and the
/// Poisson bracket of B(v^[p]).
inline constexpr int kFrozenBracketSign = -1;

}  // namespace km
