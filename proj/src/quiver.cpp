#include "km/quiver.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace km {

std::string to_string(const Weight& w) {
  std::string s = "[";
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    if (i) s += ", ";
    s += w(i).to_string();
  }
  return s + "]";
}

std::string to_string(const DimVector& v) {
  std::string s = "[";
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(v(i));
  }
  return s + "]";
}

bool lex_less(const DimVector& a, const DimVector& b) {
  return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(), b.data() + b.size());
}

const char* root_kind_name(RootKind k) {
  switch (k) {
    case RootKind::Real: return "real";
    case RootKind::Imaginary: return "imaginary";
    case RootKind::NotRoot: return "not_root";
  }
  return "?";
}

Quiver::Quiver(int n, std::vector<std::pair<int, int>> arrows)
    : n_(n), arrows_(std::move(arrows)), euler_(IntMatrix::Identity(n, n)) {
  for (const auto& [t, h] : arrows_) {
    if (t == h) throw Error(ErrorCode::UnsupportedKind, "loops are not supported");
    check_vertex(t);
    check_vertex(h);
    euler_(t, h) -= 1;
  }
  cartan_ = euler_ + euler_.transpose();
}

long ringel_form(const Quiver& q, const DimVector& a, const DimVector& b, bool symmetrized) {
  q.check_dim(a.size());
  q.check_dim(b.size());
  const IntMatrix& m = symmetrized ? q.cartan() : q.euler();
  return a.dot(m * b);
}

DimVector simple_reflection(const Quiver& q, int i, const DimVector& a) {
  q.check_vertex(i);
  q.check_dim(a.size());
  DimVector out = a;
  out(i) -= q.cartan().row(i).dot(a);
  return out;
}

bool support_connected(const Quiver& q, const DimVector& a) {
  std::vector<int> support;
  for (int i = 0; i < q.size(); ++i) {
    if (a(i) != 0) support.push_back(i);
  }
  if (support.empty()) return false;
  std::vector<bool> seen(q.size(), false);
  std::deque<int> queue{support.front()};
  seen[support.front()] = true;
  std::size_t count = 0;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    ++count;
    for (int w = 0; w < q.size(); ++w) {
      if (!seen[w] && a(w) != 0 && q.cartan()(u, w) < 0) {
        seen[w] = true;
        queue.push_back(w);
      }
    }
  }
  return count == support.size();
}

RootClass classify_vector(const Quiver& q, const DimVector& a) {
  q.check_dim(a.size());
  if (a.isZero()) throw Error(ErrorCode::ZeroVector, "zero vector is never a root");
  int sign = 1;
  DimVector v = a;
  if ((v.array() <= 0).all()) {
    v = -v;
    sign = -1;
  } else if (!(v.array() >= 0).all()) {
    return {};
  }
  for (;;) {
    if (v.sum() == 1) return {RootKind::Real, sign};
    const DimVector pair = q.cartan() * v;
    int i = -1;
    for (int k = 0; k < q.size(); ++k) {
      if (pair(k) > 0) {
        i = k;
        break;
      }
    }
    if (i < 0) {
      if (support_connected(q, v)) return {RootKind::Imaginary, sign};
      return {};
    }
    v(i) -= pair(i);
    if (v(i) < 0) return {};
  }
}

std::vector<DimVector> enumerate_roots(const Quiver& q, long height_bound) {
  auto less = [](const DimVector& x, const DimVector& y) { return lex_less(x, y); };
  std::set<DimVector, decltype(less)> found(less);
  std::deque<DimVector> frontier;
  if (height_bound >= 1) {
    for (int i = 0; i < q.size(); ++i) {
      DimVector e = unit_vector(q.size(), i);
      found.insert(e);
      frontier.push_back(e);
    }
  }
  while (!frontier.empty()) {
    const DimVector r = frontier.front();
    frontier.pop_front();
    if (r.sum() >= height_bound) continue;
    for (int i = 0; i < q.size(); ++i) {
      DimVector next = r;
      next(i) += 1;
      if (found.count(next)) continue;
      if (classify_vector(q, next).kind == RootKind::NotRoot) continue;
      found.insert(next);
      frontier.push_back(next);
    }
  }
  return {found.begin(), found.end()};
}

}  // namespace km
