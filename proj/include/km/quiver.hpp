#pragma once

#include <utility>
#include <vector>

#include "km/eigen_scalar.hpp"
#include "km/error.hpp"

namespace km {

enum class RootKind { Real, Imaginary, NotRoot };

struct RootClass {
  RootKind kind = RootKind::NotRoot;
  int sign = 0;  // +1 positive, -1 negative, 0 for NotRoot
};

const char* root_kind_name(RootKind k);

/// Loop-free quiver on vertices 0..n-1.
class Quiver {
 public:
  Quiver() = default;
  Quiver(int n, std::vector<std::pair<int, int>> arrows);

  int size() const { return n_; }
  const std::vector<std::pair<int, int>>& arrows() const { return arrows_; }
  /// euler()(i, j) = <ε_i, ε_j>.
  const IntMatrix& euler() const { return euler_; }
  /// cartan()(i, j) = (ε_i, ε_j).
  const IntMatrix& cartan() const { return cartan_; }

  void check_dim(Eigen::Index len) const {
    if (len != n_) throw Error(ErrorCode::DimensionMismatch, "vector length does not match quiver");
  }
  void check_vertex(long i) const {
    if (i < 0 || i >= n_) throw Error(ErrorCode::BadVertex, "vertex out of range");
  }

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> arrows_;
  IntMatrix euler_;
  IntMatrix cartan_;
};

long ringel_form(const Quiver& q, const DimVector& a, const DimVector& b, bool symmetrized);

DimVector simple_reflection(const Quiver& q, int i, const DimVector& a);

/// r_i(λ)_j = λ_j − (ε_i, ε_j) λ_i.
template <typename Derived>
auto dual_reflection(const Quiver& q, int i, const Eigen::MatrixBase<Derived>& lambda) {
  q.check_vertex(i);
  q.check_dim(lambda.size());
  using S = typename Derived::Scalar;
  Eigen::Matrix<S, Eigen::Dynamic, 1> out = lambda;
  const S li = lambda(i);
  for (int j = 0; j < q.size(); ++j) {
    const long c = q.cartan()(i, j);
    if (c != 0) out(j) = out(j) - S(c) * li;
  }
  return out;
}

RootClass classify_vector(const Quiver& q, const DimVector& a);

/// Positive roots with coordinate sum ≤ height_bound, lexicographically sorted.
std::vector<DimVector> enumerate_roots(const Quiver& q, long height_bound);

/// Undirected connectivity of the support of `a`.
bool support_connected(const Quiver& q, const DimVector& a);

}  // namespace km
