#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "km/affine_diagram.hpp"

namespace km {

struct Reflection {
  int vertex;
};
struct Rotation {
  int steps;  // (ρλ)_j = λ_{j+steps}
};
struct Flip {};  // (φλ)_j = λ_{−j}
struct Permutation {
  std::vector<int> src;  // (σλ)_j = λ_{src[j]}
};
struct Translation {
  DimVector d;  // λ ↦ λ + (λ·δ) d, requires d·δ = 0
};

using Letter = std::variant<Reflection, Rotation, Flip, Permutation, Translation>;
using GroupWord = std::vector<Letter>;

enum class Side { Weight, DimVector };
enum class Dedup { Exact, ModTranslations };

std::string letter_to_string(const Letter& l);

/// Throws IllegalLetter if the letter does not make sense on `d`.
void validate_letter(const AffineDiagram& d, const Letter& l);

Weight apply_letter(const AffineDiagram& d, const Letter& l, const Weight& x);
/// Throws IllegalLetterForSide on translations.
DimVector apply_letter(const AffineDiagram& d, const Letter& l, const DimVector& x);

/// Letters act left to right: the first letter is applied first.
Weight apply_word(const AffineDiagram& d, const GroupWord& w, const Weight& x);
DimVector apply_word(const AffineDiagram& d, const GroupWord& w, const DimVector& x);

GroupWord inverse_word(const GroupWord& w);

/// Reflections s_0..s_{n−1} followed by the diagram automorphism generators.
GroupWord wext_generators(const AffineDiagram& d);
GroupWord reflection_generators(const AffineDiagram& d);

/// d ∈ Λ with λ' = λ + d, if any.
std::optional<DimVector> lambda_equiv_mod_translations(const AffineDiagram& d, const Weight& lambda,
                                                       const Weight& lambda2);

template <typename V>
struct OrbitEntry {
  V value;
  GroupWord word;
};

template <typename V>
struct OrbitResult {
  std::vector<OrbitEntry<V>> entries;  // discovery order
  bool saturated = false;              // closure reached before the depth ran out
};

OrbitResult<Weight> orbit_bfs(const AffineDiagram& d, const Weight& start, const GroupWord& generators,
                              int depth, Dedup dedup);
/// `max_height` > 0 discards vectors that are not nonnegative or whose
/// coordinate sum exceeds it.
OrbitResult<DimVector> orbit_bfs(const Quiver& q, const DimVector& start, const std::vector<int>& reflections,
                                 int depth, long max_height = 0);

struct OrbitCertificate {
  GroupWord word;
  Scalar scale;
  Weight start;
  Weight end;
};

struct MembershipResult {
  std::optional<OrbitCertificate> certificate;
  std::size_t searched = 0;  // orbit points visited mod Λ
  bool exhausted = false;    // orbit mod Λ fully enumerated
};

/// Throws DegenerateLevel when λ·δ = 0 or λ'·δ = 0.
MembershipResult wext_membership(const AffineDiagram& d, const Weight& lambda, const Weight& lambda2, int depth);

bool verify_certificate(const AffineDiagram& d, const OrbitCertificate& c);

}  // namespace km
