#include "km/affine_diagram.hpp"

#include <deque>
#include <set>

namespace km {

namespace {

using Edges = std::vector<std::pair<int, int>>;

std::vector<std::pair<int, int>> orient_from(int n, const Edges& edges, int root) {
  std::vector<std::vector<int>> adj(n);
  for (const auto& [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<int> seen(n, 0);
  std::deque<int> queue{root};
  seen[root] = 1;
  std::vector<std::pair<int, int>> arrows;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int w : adj[u]) {
      if (seen[w]) continue;
      seen[w] = 1;
      arrows.emplace_back(u, w);
      queue.push_back(w);
    }
  }
  return arrows;
}

// Null vector with δ_0 = 1: solve the finite Cartan system over Q.
DimVector null_vector(const IntMatrix& c) {
  const int n = static_cast<int>(c.rows());
  const int k = n - 1;
  std::vector<std::vector<Rational>> m(k, std::vector<Rational>(k + 1));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) m[i][j] = c(i + 1, j + 1);
    m[i][k] = -c(i + 1, 0);
  }
  for (int col = 0; col < k; ++col) {
    int piv = col;
    while (m[piv][col] == 0) ++piv;
    std::swap(m[piv], m[col]);
    for (int r = 0; r < k; ++r) {
      if (r == col || m[r][col] == 0) continue;
      const Rational f = m[r][col] / m[col][col];
      for (int j = col; j <= k; ++j) m[r][j] -= f * m[col][j];
    }
  }
  DimVector delta(n);
  delta(0) = 1;
  for (int i = 0; i < k; ++i) {
    Rational x = m[i][k] / m[i][i];
    x.canonicalize();
    if (x.get_den() != 1) throw Error(ErrorCode::UnsupportedKind, "non-integral marks");
    delta(i + 1) = x.get_num().get_si();
  }
  if (!(c * delta).isZero()) throw Error(ErrorCode::UnsupportedKind, "marks are not null");
  return delta;
}

std::vector<int> from_map(int n, const std::vector<std::pair<int, int>>& swaps) {
  std::vector<int> src(n);
  for (int i = 0; i < n; ++i) src[i] = i;
  for (const auto& [a, b] : swaps) src[a] = b;
  return src;
}

}  // namespace

DiagramKind parse_kind(const std::string& s) {
  if (s == "A" || s == "a") return DiagramKind::A;
  if (s == "D" || s == "d") return DiagramKind::D;
  if (s == "E" || s == "e") return DiagramKind::E;
  throw Error(ErrorCode::UnsupportedKind, "unknown diagram type '" + s + "'");
}

char kind_letter(DiagramKind k) {
  switch (k) {
    case DiagramKind::A: return 'A';
    case DiagramKind::D: return 'D';
    case DiagramKind::E: return 'E';
  }
  return '?';
}

AffineDiagram::AffineDiagram(DiagramKind kind, int size, std::vector<std::pair<int, int>> arrows)
    : Quiver(kind == DiagramKind::A ? size : size + 1, std::move(arrows)), kind_(kind), size_(size) {
  delta_ = null_vector(cartan());
  const int n = this->size();
  if (kind == DiagramKind::D) {
    if (size == 4) {
      autos_.push_back(from_map(n, {{0, 1}, {1, 0}}));
      autos_.push_back(from_map(n, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}));
    } else {
      autos_.push_back(from_map(n, {{0, 1}, {1, 0}}));
      autos_.push_back(from_map(n, {{2, 3}, {3, 2}}));
      std::vector<std::pair<int, int>> rev{{0, 2}, {1, 3}, {2, 0}, {3, 1}};
      for (int k = 4; k <= size; ++k) rev.emplace_back(k, size + 4 - k);
      autos_.push_back(from_map(n, rev));
    }
  } else if (kind == DiagramKind::E && size == 6) {
    autos_.push_back(from_map(n, {{3, 5}, {1, 6}, {5, 2}, {6, 0}, {2, 3}, {0, 1}}));
    autos_.push_back(from_map(n, {{3, 5}, {5, 3}, {1, 6}, {6, 1}}));
  } else if (kind == DiagramKind::E && size == 7) {
    autos_.push_back(from_map(n, {{0, 7}, {7, 0}, {1, 6}, {6, 1}, {3, 5}, {5, 3}}));
  }
  for (const auto& a : autos_) {
    if (!is_automorphism(a)) throw Error(ErrorCode::IllegalLetter, "bad built-in automorphism");
  }
}

bool AffineDiagram::is_automorphism(const std::vector<int>& src) const {
  const int n = size();
  if (static_cast<int>(src.size()) != n) return false;
  std::vector<int> seen(n, 0);
  for (int s : src) {
    if (s < 0 || s >= n || seen[s]++) return false;
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (cartan()(src[i], src[j]) != cartan()(i, j)) return false;
    }
  }
  return true;
}

std::string AffineDiagram::name() const {
  const int rank = kind_ == DiagramKind::A ? size_ - 1 : size_;
  return std::string(1, kind_letter(kind_)) + "~" + std::to_string(rank);
}

AffineDiagram build_diagram(DiagramKind kind, int size) {
  switch (kind) {
    case DiagramKind::A: {
      if (size < 2) throw Error(ErrorCode::UnsupportedKind, "type A needs m >= 2");
      std::vector<std::pair<int, int>> arrows;
      for (int i = 0; i < size; ++i) arrows.emplace_back(i, (i + 1) % size);
      return AffineDiagram(kind, size, arrows);
    }
    case DiagramKind::D: {
      if (size < 4) throw Error(ErrorCode::UnsupportedKind, "type D needs n >= 4");
      Edges e{{0, 4}, {1, 4}, {2, size}, {3, size}};
      for (int k = 4; k < size; ++k) e.emplace_back(k, k + 1);
      return AffineDiagram(kind, size, orient_from(size + 1, e, 4));
    }
    case DiagramKind::E: {
      Edges e;
      if (size == 6) {
        e = {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {2, 4}, {0, 2}};
      } else if (size == 7) {
        e = {{0, 1}, {1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {2, 4}};
      } else if (size == 8) {
        e = {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {2, 4}, {0, 8}};
      } else {
        throw Error(ErrorCode::UnsupportedKind, "type E needs n in {6,7,8}");
      }
      return AffineDiagram(kind, size, orient_from(size + 1, e, 4));
    }
  }
  throw Error(ErrorCode::UnsupportedKind, "unknown kind");
}

std::vector<DimVector> finite_positive_roots(const AffineDiagram& d) {
  const int n = d.size();
  std::vector<std::pair<int, int>> arrows;
  for (const auto& [t, h] : d.arrows()) {
    if (t != 0 && h != 0) arrows.emplace_back(t - 1, h - 1);
  }
  const Quiver finite(n - 1, arrows);
  std::vector<DimVector> out;
  for (const DimVector& r : enumerate_roots(finite, d.delta().sum())) {
    DimVector e = DimVector::Zero(n);
    e.tail(n - 1) = r;
    out.push_back(e);
  }
  return out;
}

GenericLambdaResult is_generic_lambda(const AffineDiagram& d, const Weight& lambda) {
  d.check_dim(lambda.size());
  const Scalar level = pairing(lambda, d.delta());
  if (level.is_zero()) return {false, d.delta()};
  for (const DimVector& beta : finite_positive_roots(d)) {
    const Scalar q = pairing(lambda, beta) / level;
    if (auto k = q.as_integer()) {
      return {false, DimVector(beta - k->get_si() * d.delta())};
    }
  }
  return {true, std::nullopt};
}

bool is_very_generic(const Weight& lambda) {
  std::set<std::size_t> seen;
  for (Eigen::Index i = 0; i < lambda.size(); ++i) {
    const auto v = lambda(i).as_variable();
    if (!v || !seen.insert(*v).second) return false;
  }
  return true;
}

Weight k0_trace_vector(const AffineDiagram& d, const Weight& lambda) {
  d.check_dim(lambda.size());
  if (!(pairing(lambda, d.delta()) == Scalar(1))) {
    throw Error(ErrorCode::NotNormalized, "trace bookkeeping needs λ·δ = 1");
  }
  const int n = d.size();
  Weight out(n - 1);
  for (int i = 1; i < n; ++i) {
    const Scalar f = lambda(i) / Scalar(d.delta()(i));
    out(i - 1) = -(Scalar(d.delta()(i)) * f);
  }
  return out;
}

}  // namespace km
