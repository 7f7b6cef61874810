#pragma once

#include <optional>
#include <string>
#include <vector>

#include "km/quiver.hpp"

namespace km {

enum class DiagramKind { A, D, E };

/// Affine ADE diagram. For kind A, `size` is the number of vertices m
/// (so the diagram is A~(m−1)); for D and E it is the rank subscript.
/// Vertex 0 is the extending vertex.
class AffineDiagram : public Quiver {
 public:
  AffineDiagram(DiagramKind kind, int size, std::vector<std::pair<int, int>> arrows);

  DiagramKind kind() const { return kind_; }
  int diagram_size() const { return size_; }
  const DimVector& delta() const { return delta_; }
  std::string name() const;

  /// Graph automorphisms used as generators, as source maps src with
  /// (σλ)_j = λ_{src[j]}. Type A uses rotation/flip letters instead.
  const std::vector<std::vector<int>>& automorphisms() const { return autos_; }

  /// Cartan invariance of a permutation.
  bool is_automorphism(const std::vector<int>& src) const;

 private:
  DiagramKind kind_;
  int size_;
  DimVector delta_;
  std::vector<std::vector<int>> autos_;
};

DiagramKind parse_kind(const std::string& s);
char kind_letter(DiagramKind k);

/// Throws UnsupportedKind for illegal sizes.
AffineDiagram build_diagram(DiagramKind kind, int size);

/// Positive roots of the finite subsystem (vertex 0 deleted), embedded with
/// coordinate 0 at vertex 0.
std::vector<DimVector> finite_positive_roots(const AffineDiagram& d);

struct GenericLambdaResult {
  bool generic = true;
  std::optional<DimVector> witness;  // root α with λ·α = 0
};

GenericLambdaResult is_generic_lambda(const AffineDiagram& d, const Weight& lambda);

bool is_very_generic(const Weight& lambda);

/// (−δ_i f_i)_{i>0} with f_i = λ_i/δ_i. Throws NotNormalized unless λ·δ = 1.
Weight k0_trace_vector(const AffineDiagram& d, const Weight& lambda);

}  // namespace km
