#include "km/gwa_classify.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

namespace km {

RootMultiset::RootMultiset(std::vector<Scalar> roots) : roots_(std::move(roots)) {
  std::sort(roots_.begin(), roots_.end(), ScalarLess{});
}

bool operator==(const RootMultiset& a, const RootMultiset& b) { return a.roots_ == b.roots_; }

std::string RootMultiset::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < roots_.size(); ++i) {
    if (i) s += ", ";
    s += roots_[i].to_string();
  }
  return s + "]";
}

std::vector<Scalar> parse_scalar_list(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
    throw Error(ErrorCode::ParseError, "list must look like [s1, s2, ...]");
  }
  const std::string_view body = trim(text.substr(1, text.size() - 2));
  std::vector<Scalar> out;
  if (body.empty()) return out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= body.size(); ++i) {
    if (i == body.size() || (body[i] == ',' && depth == 0)) {
      out.push_back(Scalar::parse(body.substr(start, i - start)));
      start = i + 1;
    } else if (body[i] == '(') {
      ++depth;
    } else if (body[i] == ')') {
      --depth;
    }
  }
  return out;
}

RootMultiset parse_v(std::string_view text) {
  auto roots = parse_scalar_list(text);
  if (roots.empty()) throw Error(ErrorCode::DegreeZero, "v must have at least one root");
  return RootMultiset(std::move(roots));
}

GenericVResult is_generic_v(const RootMultiset& r) {
  for (std::size_t i = 0; i < r.degree(); ++i) {
    for (std::size_t j = i + 1; j < r.degree(); ++j) {
      if (integer_difference(r[i], r[j])) return {false, std::make_pair(r[i], r[j])};
    }
  }
  return {};
}

std::optional<Scalar> is_reflexive(const RootMultiset& r) {
  if (r.degree() == 0) return std::nullopt;
  Scalar sum;
  for (const Scalar& t : r.roots()) sum += t;
  const Scalar a = Scalar(2) * sum / Scalar(static_cast<long>(r.degree()));
  std::vector<Scalar> mirrored;
  for (const Scalar& t : r.roots()) mirrored.push_back(a - t);
  if (RootMultiset(mirrored) == r) return a;
  return std::nullopt;
}

std::optional<std::vector<int>> least_perfect_matching(const std::vector<std::vector<bool>>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> fixed(n, -1);
  // Perfect matching of rows >= from, avoiding columns already used.
  auto completable = [&](int from) {
    std::vector<int> owner(n, -1);
    std::vector<bool> used(n, false);
    for (int i = 0; i < from; ++i) used[fixed[i]] = true;
    std::function<bool(int, std::vector<bool>&)> augment = [&](int row, std::vector<bool>& seen) {
      for (int col = 0; col < n; ++col) {
        if (!adj[row][col] || used[col] || seen[col]) continue;
        seen[col] = true;
        if (owner[col] < 0 || augment(owner[col], seen)) {
          owner[col] = row;
          return true;
        }
      }
      return false;
    };
    for (int row = from; row < n; ++row) {
      std::vector<bool> seen(n, false);
      if (!augment(row, seen)) return false;
    }
    return true;
  };
  if (!completable(0)) return std::nullopt;
  std::vector<bool> taken(n, false);
  for (int i = 0; i < n; ++i) {
    bool placed = false;
    for (int col = 0; col < n && !placed; ++col) {
      if (!adj[i][col] || taken[col]) continue;
      fixed[i] = col;
      if (completable(i + 1)) {
        taken[col] = true;
        placed = true;
      }
    }
    if (!placed) return std::nullopt;
  }
  return fixed;
}

namespace {

std::optional<std::vector<int>> affine_match(const RootMultiset& r, const RootMultiset& r2, const Scalar& b,
                                             const Scalar& c) {
  const std::size_t n = r.degree();
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i) {
    const Scalar image = b * r[i] + c;
    for (std::size_t k = 0; k < n; ++k) adj[i][k] = r2[k] == image;
  }
  return least_perfect_matching(adj);
}

bool is_permutation(const std::vector<int>& m, std::size_t n) {
  if (m.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (int k : m) {
    if (k < 0 || static_cast<std::size_t>(k) >= n || seen[k]) return false;
    seen[k] = true;
  }
  return true;
}

}  // namespace

std::optional<IsoWitness> iso_test(const RootMultiset& r, const RootMultiset& r2, bool strict_b) {
  if (r.degree() != r2.degree() || r.degree() == 0) return std::nullopt;
  for (int eps : {1, -1}) {
    for (std::size_t j = 0; j < r2.degree(); ++j) {
      const Scalar c = r2[j] - Scalar(eps) * r[0];
      if (auto m = affine_match(r, r2, Scalar(eps), c)) return IsoWitness{Scalar(eps), c, *m};
    }
  }
  if (!strict_b) return std::nullopt;
  std::size_t other = 0;
  while (other < r.degree() && r[other] == r[0]) ++other;
  if (other == r.degree()) return std::nullopt;  // b = ±1 already covers constant multisets
  for (std::size_t j = 0; j < r2.degree(); ++j) {
    for (std::size_t k = 0; k < r2.degree(); ++k) {
      const Scalar b = (r2[k] - r2[j]) / (r[other] - r[0]);
      if (b.is_zero()) continue;
      const Scalar c = r2[j] - b * r[0];
      if (auto m = affine_match(r, r2, b, c)) return IsoWitness{b, c, *m};
    }
  }
  return std::nullopt;
}

std::optional<MoritaWitness> morita_test(const RootMultiset& r, const RootMultiset& r2) {
  if (r.degree() != r2.degree()) throw Error(ErrorCode::DegreeMismatch, "degrees differ");
  if (!is_generic_v(r).generic) throw Error(ErrorCode::NotGeneric, "v is not generic");
  const std::size_t n = r.degree();
  for (int eps : {1, -1}) {
    for (std::size_t j = 0; j < n; ++j) {
      const Scalar c = reduce_mod_integers(r2[j] - Scalar(eps) * r[0]);
      std::vector<std::vector<bool>> adj(n, std::vector<bool>(n));
      for (std::size_t i = 0; i < n; ++i) {
        const Scalar image = Scalar(eps) * r[i] + c;
        for (std::size_t k = 0; k < n; ++k) adj[i][k] = integer_difference(r2[k], image).has_value();
      }
      const auto m = least_perfect_matching(adj);
      if (!m) continue;
      MoritaWitness w{eps, c, {}, *m};
      for (std::size_t i = 0; i < n; ++i) {
        w.d.push_back(integer_difference(r2[(*m)[i]], Scalar(eps) * r[i] + c)->get_si());
      }
      return w;
    }
  }
  return std::nullopt;
}

bool verify_iso(const RootMultiset& r, const RootMultiset& r2, const IsoWitness& w) {
  if (r.degree() != r2.degree() || w.b.is_zero() || !is_permutation(w.matching, r.degree())) return false;
  for (std::size_t i = 0; i < r.degree(); ++i) {
    if (!(r2[w.matching[i]] == w.b * r[i] + w.c)) return false;
  }
  return true;
}

bool verify_morita(const RootMultiset& r, const RootMultiset& r2, const MoritaWitness& w) {
  if (r.degree() != r2.degree() || (w.eps != 1 && w.eps != -1) || w.d.size() != r.degree() ||
      !is_permutation(w.matching, r.degree())) {
    return false;
  }
  for (std::size_t i = 0; i < r.degree(); ++i) {
    if (!(r2[w.matching[i]] == Scalar(w.eps) * r[i] + w.c + Scalar(w.d[i]))) return false;
  }
  return true;
}

namespace {

// Roots a_1..a_{n−1} (a_n = 0) from level-1 weight μ on the n-cycle.
std::vector<Scalar> roots_from_weight(const Weight& mu) {
  const long n = mu.size();
  std::vector<Scalar> a(n);
  Scalar acc;
  for (long i = n - 1; i >= 1; --i) {
    acc += mu(i);
    a[i - 1] = acc;
  }
  a[n - 1] = Scalar();
  return a;
}

Weight weight_from_roots(const std::vector<Scalar>& a) {
  const long n = static_cast<long>(a.size());
  Weight mu(n);
  mu(0) = n > 1 ? Scalar(1) - a[0] : Scalar(1);
  for (long i = 1; i < n; ++i) mu(i) = a[i - 1] - (i + 1 < n ? a[i] : Scalar());
  return mu;
}

}  // namespace

LambdaForm v_to_lambda(const RootMultiset& r) {
  const long n = static_cast<long>(r.degree());
  if (n == 0) throw Error(ErrorCode::NonNormalizable, "empty root multiset");
  const Scalar shift = r[0];
  std::vector<Scalar> a;
  for (long i = 1; i < n; ++i) a.push_back(r[i] - shift);
  a.push_back(Scalar());
  if (!a.back().is_zero()) throw Error(ErrorCode::NonNormalizable, "normalization failed");
  LambdaForm out;
  out.shift = shift;
  out.lambda.resize(n - 1);
  for (long i = 1; i < n; ++i) out.lambda(i - 1) = Scalar(n) * a[i - 1] - Scalar(n - i);
  out.weight = weight_from_roots(a);
  return out;
}

RootMultiset lambda_to_v(const Weight& lambda) {
  const long n = lambda.size() + 1;
  std::vector<Scalar> a;
  for (long i = 1; i < n; ++i) a.push_back((Scalar(n - i) + lambda(i - 1)) / Scalar(n));
  a.push_back(Scalar());
  return RootMultiset(a);
}

Weight lambda_to_weight(const Weight& lambda) {
  const long n = lambda.size() + 1;
  std::vector<Scalar> a;
  for (long i = 1; i < n; ++i) a.push_back((Scalar(n - i) + lambda(i - 1)) / Scalar(n));
  a.push_back(Scalar());
  return weight_from_roots(a);
}

RootMultiset weight_to_v(const Weight& mu) {
  if (mu.size() == 0) throw Error(ErrorCode::DimensionMismatch, "empty weight");
  const Scalar level = mu.sum();
  if (level.is_zero()) throw Error(ErrorCode::DegenerateLevel, "weight has level 0");
  return RootMultiset(roots_from_weight(mu / level));
}

RootMultiset vp_reduction(const RootMultiset& r, unsigned long p) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  std::vector<Scalar> out;
  for (const Scalar& t : r.roots()) out.push_back(frobenius_shift(t, p));
  return RootMultiset(out);
}

KleinianResult kleinian_morita_test(const AffineDiagram& q, const Weight& lambda, const Weight& lambda2,
                                    int depth) {
  KleinianResult out;
  out.membership = wext_membership(q, lambda, lambda2, depth);
  if (!is_very_generic(lambda)) out.hypothesis_flags.push_back("lambda_not_very_generic");
  if (!is_generic_lambda(q, lambda).generic) out.hypothesis_flags.push_back("lambda_not_generic");
  return out;
}

}  // namespace km
