#include "km/quiver_varieties.hpp"

#include <algorithm>

namespace km {

namespace {

Quiver framed(const AffineDiagram& base, int attach) {
  std::vector<std::pair<int, int>> arrows;
  for (const auto& [t, h] : base.arrows()) arrows.emplace_back(t + 1, h + 1);
  arrows.emplace_back(0, attach + 1);
  return Quiver(base.size() + 1, arrows);
}

}  // namespace

FramedQuiver::FramedQuiver(AffineDiagram base, int attach)
    : base_(std::move(base)), attach_(attach), quiver_(framed(base_, attach)) {}

std::vector<int> FramedQuiver::base_reflections() const {
  std::vector<int> r;
  for (int j = 1; j < size(); ++j) r.push_back(j);
  return r;
}

DimVector FramedQuiver::theta() const { return unit_vector(size(), 0); }

FramedQuiver extend_quiver_infty(const AffineDiagram& q, int attach) {
  q.check_vertex(attach);
  return FramedQuiver(q, attach);
}

Weight lambda_alpha(const Weight& lambda, const DimVector& eta) {
  if (lambda.size() != eta.size()) throw Error(ErrorCode::DimensionMismatch, "λ and η differ in length");
  Weight out(lambda.size() + 1);
  out(0) = -pairing(lambda, eta);
  out.tail(lambda.size()) = lambda;
  return out;
}

bool is_nonempty(const FramedQuiver& qi, const DimVector& alpha) {
  qi.quiver().check_dim(alpha.size());
  if (alpha(0) != 1) return false;
  const RootClass c = classify_vector(qi.quiver(), alpha);
  return c.kind != RootKind::NotRoot && c.sign > 0;
}

long variety_dimension(const FramedQuiver& qi, const DimVector& alpha, bool strict) {
  if (qi.base().kind() != DiagramKind::A) {
    throw Error(ErrorCode::UnsupportedKind, "dimension formula needs a type A base");
  }
  qi.quiver().check_dim(alpha.size());
  if (strict && !is_nonempty(qi, alpha)) throw Error(ErrorCode::NotARoot, "(1, η) is not a positive root");
  const long m = qi.base().size();
  long sum = 0;
  for (long i = 0; i < m; ++i) {
    const long diff = alpha(1 + i) - alpha(1 + (i + 1) % m);
    sum += diff * diff;
  }
  return 2 * alpha(1 + qi.attach()) - sum;
}

std::vector<DimVector> enumerate_framed_roots(const FramedQuiver& qi, long height_bound) {
  std::vector<DimVector> out;
  for (const DimVector& r : enumerate_roots(qi.quiver(), height_bound)) {
    if (r(0) == 1) out.push_back(r);
  }
  return out;
}

std::vector<DimVector> enumerate_zero_dim(const FramedQuiver& qi, long height_bound) {
  std::vector<DimVector> out;
  for (const DimVector& r : enumerate_framed_roots(qi, height_bound)) {
    if (variety_dimension(qi, r, false) == 0) out.push_back(r);
  }
  return out;
}

OrbitResult<DimVector> theta_orbit(const FramedQuiver& qi, long height_bound) {
  // Every orbit point within the bound is reached through points within
  // the bound, so a depth of (bound · size) always saturates.
  const int depth = static_cast<int>(height_bound * qi.size() + 1);
  return orbit_bfs(qi.quiver(), qi.theta(), qi.base_reflections(), depth, height_bound);
}

std::pair<DimVector, GroupWord> antidominant_form(const FramedQuiver& qi, const DimVector& alpha) {
  qi.quiver().check_dim(alpha.size());
  DimVector v = alpha;
  GroupWord down;
  for (;;) {
    const DimVector pair = qi.quiver().cartan() * v;
    int pick = -1;
    for (int j : qi.base_reflections()) {
      if (pair(j) > 0) {
        pick = j;
        break;
      }
    }
    if (pick < 0) break;
    v(pick) -= pair(pick);
    down.push_back(Reflection{pick});
    if (v(pick) < 0) break;
  }
  std::reverse(down.begin(), down.end());
  return {v, down};
}

std::pair<Weight, DimVector> rw_on_points(const AffineDiagram& q, const GroupWord& w, const Weight& lambda,
                                          const DimVector& alpha) {
  for (const Letter& l : w) {
    if (std::holds_alternative<Translation>(l)) {
      throw Error(ErrorCode::IllegalLetter, "reflection functors carry no translation letters");
    }
  }
  return {apply_word(q, w, lambda), apply_word(q, w, alpha)};
}

}  // namespace km
