#pragma once

#include <utility>
#include <vector>

#include "km/weyl_orbits.hpp"

namespace km {

/// Base diagram with one extra vertex ∞ and a single arrow ∞ → attach.
/// Storage: ∞ is index 0, base vertex j is index j + 1, so a framed
/// dimension vector (1, η) is stored literally.
class FramedQuiver {
 public:
  FramedQuiver(AffineDiagram base, int attach);

  const AffineDiagram& base() const { return base_; }
  int attach() const { return attach_; }
  const Quiver& quiver() const { return quiver_; }
  int size() const { return quiver_.size(); }

  /// Framed indices of the base reflections, s_1..s_m.
  std::vector<int> base_reflections() const;
  /// (1, 0, ..., 0).
  DimVector theta() const;

 private:
  AffineDiagram base_;
  int attach_;
  Quiver quiver_;
};

/// Throws BadVertex.
FramedQuiver extend_quiver_infty(const AffineDiagram& q, int attach);

/// (−λ·η, λ).
Weight lambda_alpha(const Weight& lambda, const DimVector& eta);

/// 2η_attach − Σ_{i∈Z/m} (η_i − η_{i+1})² for a type A base. In strict mode
/// throws NotARoot unless α = (1, η) is a positive root.
long variety_dimension(const FramedQuiver& qi, const DimVector& alpha, bool strict = true);

bool is_nonempty(const FramedQuiver& qi, const DimVector& alpha);

/// Positive roots (1, η) with coordinate sum ≤ bound and dimension 0.
std::vector<DimVector> enumerate_zero_dim(const FramedQuiver& qi, long height_bound);

/// Positive roots (1, η) with coordinate sum ≤ bound.
std::vector<DimVector> enumerate_framed_roots(const FramedQuiver& qi, long height_bound);

/// W_∞-orbit of θ among nonnegative vectors of height ≤ bound.
OrbitResult<DimVector> theta_orbit(const FramedQuiver& qi, long height_bound);

/// Carries α down by height-lowering base reflections until none applies.
/// Returns the end point and the word w with w(end) = α read left to right.
std::pair<DimVector, GroupWord> antidominant_form(const FramedQuiver& qi, const DimVector& alpha);

/// (w(λ), w(α)); translations are rejected with IllegalLetter.
std::pair<Weight, DimVector> rw_on_points(const AffineDiagram& q, const GroupWord& w, const Weight& lambda,
                                          const DimVector& alpha);

}  // namespace km
