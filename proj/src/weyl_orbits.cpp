#include "km/weyl_orbits.hpp"

#include <functional>
#include <map>
#include <set>

namespace km {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

long mod(long a, long m) { return ((a % m) + m) % m; }

template <typename V>
V permute(const V& x, const std::function<long(long)>& src) {
  V out(x.size());
  for (Eigen::Index j = 0; j < x.size(); ++j) out(j) = x(src(j));
  return out;
}

template <typename V>
V apply_symmetry(const AffineDiagram& d, const Letter& l, const V& x) {
  const long n = d.size();
  return std::visit(
      overloaded{
          [&](const Reflection&) -> V { return x; },
          [&](const Rotation& r) { return permute(x, [&](long j) { return mod(j + r.steps, n); }); },
          [&](const Flip&) { return permute(x, [&](long j) { return mod(-j, n); }); },
          [&](const Permutation& p) { return permute(x, [&](long j) { return static_cast<long>(p.src[j]); }); },
          [&](const Translation&) -> V { return x; },
      },
      l);
}

std::string weight_key(const Weight& w) { return to_string(w); }

std::string shift_key(const Weight& w) {
  std::string s;
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    s += integer_shift_key(w(i));
    s += '|';
  }
  return s;
}

}  // namespace

std::string letter_to_string(const Letter& l) {
  return std::visit(overloaded{
                        [](const Reflection& r) { return "s" + std::to_string(r.vertex); },
                        [](const Rotation& r) { return "rot" + std::to_string(r.steps); },
                        [](const Flip&) { return std::string("flip"); },
                        [](const Permutation& p) {
                          std::string s = "perm(";
                          for (std::size_t i = 0; i < p.src.size(); ++i) s += (i ? "," : "") + std::to_string(p.src[i]);
                          return s + ")";
                        },
                        [](const Translation& t) { return "tr" + to_string(t.d); },
                    },
                    l);
}

void validate_letter(const AffineDiagram& d, const Letter& l) {
  std::visit(overloaded{
                 [&](const Reflection& r) {
                   if (r.vertex < 0 || r.vertex >= d.size()) throw Error(ErrorCode::IllegalLetter, "reflection vertex out of range");
                 },
                 [&](const Rotation&) {
                   if (d.kind() != DiagramKind::A) throw Error(ErrorCode::IllegalLetter, "rotation needs a type A diagram");
                 },
                 [&](const Flip&) {
                   if (d.kind() != DiagramKind::A) throw Error(ErrorCode::IllegalLetter, "flip needs a type A diagram");
                 },
                 [&](const Permutation& p) {
                   if (!d.is_automorphism(p.src)) throw Error(ErrorCode::IllegalLetter, "permutation is not a diagram automorphism");
                 },
                 [&](const Translation& t) {
                   if (t.d.size() != d.size()) throw Error(ErrorCode::DimensionMismatch, "translation length");
                   if (t.d.dot(d.delta()) != 0) throw Error(ErrorCode::NotInLattice, "translation must satisfy d·δ = 0");
                 },
             },
             l);
}

Weight apply_letter(const AffineDiagram& d, const Letter& l, const Weight& x) {
  d.check_dim(x.size());
  validate_letter(d, l);
  if (const auto* r = std::get_if<Reflection>(&l)) return dual_reflection(d, r->vertex, x);
  if (const auto* t = std::get_if<Translation>(&l)) {
    const Scalar level = pairing(x, d.delta());
    Weight out = x;
    for (Eigen::Index i = 0; i < x.size(); ++i) {
      if (t->d(i) != 0) out(i) += level * Scalar(t->d(i));
    }
    return out;
  }
  return apply_symmetry(d, l, x);
}

DimVector apply_letter(const AffineDiagram& d, const Letter& l, const DimVector& x) {
  d.check_dim(x.size());
  validate_letter(d, l);
  if (const auto* r = std::get_if<Reflection>(&l)) return simple_reflection(d, r->vertex, x);
  if (std::holds_alternative<Translation>(l)) {
    throw Error(ErrorCode::IllegalLetterForSide, "translations act on weights only");
  }
  return apply_symmetry(d, l, x);
}

Weight apply_word(const AffineDiagram& d, const GroupWord& w, const Weight& x) {
  Weight y = x;
  for (const Letter& l : w) y = apply_letter(d, l, y);
  return y;
}

DimVector apply_word(const AffineDiagram& d, const GroupWord& w, const DimVector& x) {
  DimVector y = x;
  for (const Letter& l : w) y = apply_letter(d, l, y);
  return y;
}

GroupWord inverse_word(const GroupWord& w) {
  GroupWord out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    out.push_back(std::visit(overloaded{
                                 [](const Reflection& r) -> Letter { return r; },
                                 [](const Rotation& r) -> Letter { return Rotation{-r.steps}; },
                                 [](const Flip& f) -> Letter { return f; },
                                 [](const Permutation& p) -> Letter {
                                   std::vector<int> inv(p.src.size());
                                   for (std::size_t j = 0; j < p.src.size(); ++j) inv[p.src[j]] = static_cast<int>(j);
                                   return Permutation{inv};
                                 },
                                 [](const Translation& t) -> Letter { return Translation{-t.d}; },
                             },
                             *it));
  }
  return out;
}

GroupWord reflection_generators(const AffineDiagram& d) {
  GroupWord g;
  for (int i = 0; i < d.size(); ++i) g.push_back(Reflection{i});
  return g;
}

GroupWord wext_generators(const AffineDiagram& d) {
  GroupWord g = reflection_generators(d);
  if (d.kind() == DiagramKind::A) {
    g.push_back(Rotation{1});
    g.push_back(Flip{});
  } else {
    for (const auto& src : d.automorphisms()) g.push_back(Permutation{src});
  }
  return g;
}

std::optional<DimVector> lambda_equiv_mod_translations(const AffineDiagram& d, const Weight& lambda,
                                                       const Weight& lambda2) {
  d.check_dim(lambda.size());
  d.check_dim(lambda2.size());
  DimVector shift(d.size());
  for (int i = 0; i < d.size(); ++i) {
    const auto k = integer_difference(lambda2(i), lambda(i));
    if (!k || !k->fits_slong_p()) return std::nullopt;
    shift(i) = k->get_si();
  }
  if (shift.dot(d.delta()) != 0) return std::nullopt;
  return shift;
}

namespace {

// Breadth-first search on weights; `visit` returns true to stop early.
OrbitResult<Weight> weight_bfs(const AffineDiagram& d, const Weight& start, const GroupWord& generators, int depth,
                               Dedup dedup, const std::function<bool(const OrbitEntry<Weight>&)>& visit) {
  OrbitResult<Weight> res;
  std::map<std::string, std::vector<std::size_t>> buckets;
  auto known = [&](const Weight& w) {
    const std::string key = dedup == Dedup::Exact ? weight_key(w) : shift_key(w);
    auto& bucket = buckets[key];
    for (std::size_t idx : bucket) {
      if (dedup == Dedup::Exact || lambda_equiv_mod_translations(d, res.entries[idx].value, w)) return true;
    }
    bucket.push_back(res.entries.size());
    return false;
  };
  known(start);
  res.entries.push_back({start, {}});
  if (visit(res.entries.back())) return res;
  std::size_t layer_begin = 0;
  for (int level = 0; level < depth; ++level) {
    const std::size_t layer_end = res.entries.size();
    if (layer_begin == layer_end) break;
    for (std::size_t idx = layer_begin; idx < layer_end; ++idx) {
      for (const Letter& g : generators) {
        Weight next = apply_letter(d, g, res.entries[idx].value);
        if (known(next)) continue;
        GroupWord word = res.entries[idx].word;
        word.push_back(g);
        res.entries.push_back({std::move(next), std::move(word)});
        if (visit(res.entries.back())) return res;
      }
    }
    layer_begin = layer_end;
  }
  res.saturated = layer_begin == res.entries.size();
  return res;
}

}  // namespace

OrbitResult<Weight> orbit_bfs(const AffineDiagram& d, const Weight& start, const GroupWord& generators, int depth,
                              Dedup dedup) {
  if (depth < 0) throw Error(ErrorCode::Usage, "depth must be nonnegative");
  return weight_bfs(d, start, generators, depth, dedup, [](const OrbitEntry<Weight>&) { return false; });
}

OrbitResult<DimVector> orbit_bfs(const Quiver& q, const DimVector& start, const std::vector<int>& reflections,
                                 int depth, long max_height) {
  if (depth < 0) throw Error(ErrorCode::Usage, "depth must be nonnegative");
  auto less = [](const DimVector& a, const DimVector& b) { return lex_less(a, b); };
  std::set<DimVector, decltype(less)> seen(less);
  OrbitResult<DimVector> res;
  seen.insert(start);
  res.entries.push_back({start, {}});
  std::size_t layer_begin = 0;
  for (int level = 0; level < depth; ++level) {
    const std::size_t layer_end = res.entries.size();
    if (layer_begin == layer_end) break;
    for (std::size_t idx = layer_begin; idx < layer_end; ++idx) {
      for (int i : reflections) {
        DimVector next = simple_reflection(q, i, res.entries[idx].value);
        if (max_height > 0 && ((next.array() < 0).any() || next.sum() > max_height)) continue;
        if (!seen.insert(next).second) continue;
        GroupWord word = res.entries[idx].word;
        word.push_back(Reflection{i});
        res.entries.push_back({std::move(next), std::move(word)});
      }
    }
    layer_begin = layer_end;
  }
  res.saturated = layer_begin == res.entries.size();
  return res;
}

MembershipResult wext_membership(const AffineDiagram& d, const Weight& lambda, const Weight& lambda2, int depth) {
  d.check_dim(lambda.size());
  d.check_dim(lambda2.size());
  const Scalar l1 = pairing(lambda, d.delta());
  const Scalar l2 = pairing(lambda2, d.delta());
  if (l1.is_zero() || l2.is_zero()) throw Error(ErrorCode::DegenerateLevel, "weight has λ·δ = 0");
  const Weight from = lambda / l1;
  const Weight to = lambda2 / l2;
  MembershipResult out;
  const auto res = weight_bfs(d, from, wext_generators(d), depth, Dedup::ModTranslations,
                              [&](const OrbitEntry<Weight>& e) {
                                const auto shift = lambda_equiv_mod_translations(d, e.value, to);
                                if (!shift) return false;
                                GroupWord word = e.word;
                                if (!shift->isZero()) word.push_back(Translation{*shift});
                                out.certificate = OrbitCertificate{word, l2 / l1, lambda, lambda2};
                                return true;
                              });
  out.searched = res.entries.size();
  out.exhausted = !out.certificate && res.saturated;
  return out;
}

bool verify_certificate(const AffineDiagram& d, const OrbitCertificate& c) {
  if (c.scale.is_zero()) return false;
  try {
    const Weight image = apply_word(d, c.word, c.start) * c.scale;
    return same(image, c.end);
  } catch (const Error&) {
    return false;
  }
}

}  // namespace km
