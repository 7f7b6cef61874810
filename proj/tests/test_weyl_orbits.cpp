#include <random>

#include "doctest.h"
#include "km/weyl_orbits.hpp"

using namespace km;

namespace {

DimVector dv(std::initializer_list<long> xs) {
  DimVector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (long x : xs) v(i++) = x;
  return v;
}

Weight wt(std::initializer_list<const char*> xs) {
  Weight w(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (const char* x : xs) w(i++) = Scalar::parse(x);
  return w;
}

Weight random_weight(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
  Weight w(n);
  for (int i = 0; i < n; ++i) w(i) = Scalar::rational(num(rng), den(rng));
  return w;
}

GroupWord random_word(std::mt19937& rng, const AffineDiagram& d, int len) {
  const GroupWord gens = wext_generators(d);
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  GroupWord w;
  for (int k = 0; k < len; ++k) w.push_back(gens[pick(rng)]);
  return w;
}

}  // namespace

TEST_CASE("dual reflection formula") {
  const auto a1 = build_diagram(DiagramKind::A, 2);
  CHECK(same(apply_letter(a1, Reflection{0}, wt({"1", "0"})), wt({"-1", "2"})));
  CHECK(same(apply_letter(a1, Reflection{1}, wt({"1/3", "2/3"})), wt({"5/3", "-2/3"})));
  const auto a2 = build_diagram(DiagramKind::A, 3);
  CHECK(same(apply_letter(a2, Rotation{1}, wt({"1", "2", "3"})), wt({"2", "3", "1"})));
  CHECK(same(apply_letter(a2, Flip{}, wt({"1", "2", "3"})), wt({"1", "3", "2"})));
  CHECK(same(apply_letter(a2, Translation{dv({1, -1, 0})}, wt({"1/2", "1/4", "1/4"})), wt({"3/2", "-3/4", "1/4"})));
}

TEST_CASE("letter validation") {
  const auto a2 = build_diagram(DiagramKind::A, 3);
  CHECK_THROWS_AS(validate_letter(a2, Reflection{3}), Error);
  CHECK_THROWS_AS(validate_letter(a2, Translation{dv({1, 0, 0})}), Error);
  CHECK_THROWS_AS(validate_letter(build_diagram(DiagramKind::A, 4), Permutation{{1, 0, 2, 3}}), Error);
  CHECK_THROWS_AS(apply_letter(a2, Translation{dv({1, -1, 0})}, dv({1, 0, 0})), Error);
  CHECK(letter_to_string(Reflection{2}) == "s2");
}

TEST_CASE("dimension vector orbits") {
  const auto a1 = build_diagram(DiagramKind::A, 2);
  const auto res = orbit_bfs(a1, a1.delta(), {0, 1}, 5);
  CHECK(res.entries.size() == 1);
  CHECK(res.saturated);
  const auto e0 = orbit_bfs(a1, dv({1, 0}), {0, 1}, 2);
  std::vector<DimVector> vals;
  for (const auto& e : e0.entries) vals.push_back(e.value);
  CHECK(vals == std::vector<DimVector>{dv({1, 0}), dv({-1, 0}), dv({1, 2}), dv({-1, -2}), dv({3, 2})});
  CHECK(orbit_bfs(a1, dv({2, 3}), {0, 1}, 0).entries.size() == 1);
}

TEST_CASE("weight orbits dedup modulo translations") {
  const auto a2 = build_diagram(DiagramKind::A, 3);
  const Weight lam = wt({"1/5", "1/7", "23/35"});
  const auto res = orbit_bfs(a2, lam, wext_generators(a2), 4, Dedup::ModTranslations);
  for (std::size_t i = 0; i < res.entries.size(); ++i) {
    CHECK(same(apply_word(a2, res.entries[i].word, lam), res.entries[i].value));
    for (std::size_t j = i + 1; j < res.entries.size(); ++j) {
      CHECK(!lambda_equiv_mod_translations(a2, res.entries[i].value, res.entries[j].value));
    }
  }
  CHECK(res.saturated);
}

TEST_CASE("membership examples") {
  const auto a2 = build_diagram(DiagramKind::A, 3);
  const Weight lam = wt({"t1", "t2", "1-t1-t2"});
  const auto r1 = wext_membership(a2, lam, apply_letter(a2, Reflection{1}, lam), 3);
  REQUIRE(r1.certificate);
  CHECK(r1.certificate->scale == Scalar(1));
  CHECK(verify_certificate(a2, *r1.certificate));
  const auto r2 = wext_membership(a2, lam, lam * Scalar(2), 3);
  REQUIRE(r2.certificate);
  CHECK(r2.certificate->word.empty());
  CHECK(r2.certificate->scale == Scalar(2));
  const auto r3 = wext_membership(a2, lam, lam + to_weight(dv({2, -1, -1})), 3);
  REQUIRE(r3.certificate);
  CHECK(verify_certificate(a2, *r3.certificate));
  CHECK_THROWS_AS(wext_membership(a2, wt({"1", "-1", "0"}), lam, 2), Error);
}

TEST_CASE("membership can fail within depth") {
  const auto a1 = build_diagram(DiagramKind::A, 2);
  const auto r = wext_membership(a1, wt({"1/3", "2/3"}), wt({"1/5", "4/5"}), 6);
  CHECK(!r.certificate);
  CHECK(r.exhausted);
}

TEST_CASE("property: duality r_i(λ)·α = λ·s_i(α)") {
  std::mt19937 rng(31);
  for (auto [k, n] : {std::pair{DiagramKind::A, 2}, {DiagramKind::A, 5}, {DiagramKind::D, 4}, {DiagramKind::E, 6}}) {
    const auto d = build_diagram(k, n);
    for (int t = 0; t < 20; ++t) {
      const Weight lam = random_weight(rng, d.size());
      for (int i = 0; i < d.size(); ++i) {
        for (int j = 0; j < d.size(); ++j) {
          const DimVector a = unit_vector(d.size(), j);
          CHECK(pairing(dual_reflection(d, i, lam), a) == pairing(lam, simple_reflection(d, i, a)));
        }
      }
    }
  }
}

TEST_CASE("property: generators preserve the level and inverse words undo words") {
  std::mt19937 rng(32);
  for (auto [k, n] : {std::pair{DiagramKind::A, 4}, {DiagramKind::D, 5}, {DiagramKind::E, 7}}) {
    const auto d = build_diagram(k, n);
    for (int t = 0; t < 25; ++t) {
      const Weight lam = random_weight(rng, d.size());
      const GroupWord w = random_word(rng, d, 5);
      const Weight img = apply_word(d, w, lam);
      CHECK(pairing(img, d.delta()) == pairing(lam, d.delta()));
      CHECK(same(apply_word(d, inverse_word(w), img), lam));
    }
  }
}

TEST_CASE("property: membership is symmetric with inverse certificates") {
  std::mt19937 rng(33);
  const auto a3 = build_diagram(DiagramKind::A, 4);
  for (int t = 0; t < 10; ++t) {
    Weight lam = random_weight(rng, 4);
    if (pairing(lam, a3.delta()).is_zero()) continue;
    const Weight lam2 = apply_word(a3, random_word(rng, a3, 3), lam) * Scalar(3);
    const auto fwd = wext_membership(a3, lam, lam2, 4);
    const auto bwd = wext_membership(a3, lam2, lam, 4);
    REQUIRE(fwd.certificate);
    REQUIRE(bwd.certificate);
    CHECK(verify_certificate(a3, *fwd.certificate));
    CHECK(verify_certificate(a3, *bwd.certificate));
    CHECK(fwd.certificate->scale * bwd.certificate->scale == Scalar(1));
  }
}
