#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "km/weyl_orbits.hpp"

namespace km {

/// Roots t_i of a monic v = ∏(h − t_i), sorted by ScalarLess.
class RootMultiset {
 public:
  RootMultiset() = default;
  explicit RootMultiset(std::vector<Scalar> roots);

  const std::vector<Scalar>& roots() const { return roots_; }
  std::size_t degree() const { return roots_.size(); }
  const Scalar& operator[](std::size_t i) const { return roots_[i]; }

  friend bool operator==(const RootMultiset& a, const RootMultiset& b);
  std::string to_string() const;

 private:
  std::vector<Scalar> roots_;
};

/// "[s1, s2, ...]" in input order; "[]" gives an empty list. Throws ParseError.
std::vector<Scalar> parse_scalar_list(std::string_view text);

/// "[s1, s2, ...]". Throws ParseError, DegreeZero.
RootMultiset parse_v(std::string_view text);

struct GenericVResult {
  bool generic = true;
  std::optional<std::pair<Scalar, Scalar>> pair;
};

GenericVResult is_generic_v(const RootMultiset& r);

/// a with {a − t_i} = {t_i}.
std::optional<Scalar> is_reflexive(const RootMultiset& r);

/// t'_{matching[i]} = b·t_i + c. Outside strict mode b = ±1.
struct IsoWitness {
  Scalar b;
  Scalar c;
  std::vector<int> matching;
};

/// t'_{matching[i]} = ε·t_i + c + d_i.
struct MoritaWitness {
  int eps = 1;
  Scalar c;
  std::vector<long> d;
  std::vector<int> matching;
};

std::optional<IsoWitness> iso_test(const RootMultiset& r, const RootMultiset& r2, bool strict_b = false);

/// Throws NotGeneric when r is not generic, DegreeMismatch when degrees differ.
std::optional<MoritaWitness> morita_test(const RootMultiset& r, const RootMultiset& r2);

bool verify_iso(const RootMultiset& r, const RootMultiset& r2, const IsoWitness& w);
bool verify_morita(const RootMultiset& r, const RootMultiset& r2, const MoritaWitness& w);

/// Lexicographically least perfect matching of the bipartite graph, if any.
std::optional<std::vector<int>> least_perfect_matching(const std::vector<std::vector<bool>>& adj);

struct LambdaForm {
  Weight lambda;  // n − 1 entries, a_i = (n − i + λ_i)/n
  Weight weight;  // n entries at level 1 on the cyclic quiver
  Scalar shift;   // r − shift has a_n = 0
};

/// Throws NonNormalizable (defensive).
LambdaForm v_to_lambda(const RootMultiset& r);
RootMultiset lambda_to_v(const Weight& lambda);
/// Throws DegenerateLevel if μ·δ = 0.
RootMultiset weight_to_v(const Weight& mu);
Weight lambda_to_weight(const Weight& lambda);

/// Throws NotPrime.
RootMultiset vp_reduction(const RootMultiset& r, unsigned long p);

struct KleinianResult {
  MembershipResult membership;
  std::vector<std::string> hypothesis_flags;
};

KleinianResult kleinian_morita_test(const AffineDiagram& q, const Weight& lambda, const Weight& lambda2, int depth);

}  // namespace km
