#include <algorithm>

#include "doctest.h"
#include "km/quiver_varieties.hpp"

using namespace km;

namespace {

DimVector dv(std::initializer_list<long> xs) {
  DimVector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (long x : xs) v(i++) = x;
  return v;
}

std::vector<DimVector> sorted(std::vector<DimVector> v) {
  std::sort(v.begin(), v.end(), lex_less);
  return v;
}

}  // namespace

TEST_CASE("framed quiver layout") {
  const auto q = extend_quiver_infty(build_diagram(DiagramKind::A, 3), 0);
  CHECK(q.size() == 4);
  CHECK(q.theta() == dv({1, 0, 0, 0}));
  CHECK(q.base_reflections() == std::vector<int>{1, 2, 3});
  CHECK(q.quiver().cartan()(0, 1) == -1);
  CHECK(q.quiver().cartan()(0, 2) == 0);
  CHECK_THROWS_AS(extend_quiver_infty(build_diagram(DiagramKind::A, 3), 3), Error);
}

TEST_CASE("lambda_alpha") {
  Weight lam(2);
  lam << Scalar::parse("1/3"), Scalar::parse("t1");
  const Weight la = lambda_alpha(lam, dv({2, 1}));
  CHECK(la.size() == 3);
  CHECK(la(0) == Scalar::parse("-2/3-t1"));
  CHECK(la(2) == Scalar::parse("t1"));
}

TEST_CASE("variety dimensions") {
  const auto q = extend_quiver_infty(build_diagram(DiagramKind::A, 2), 0);
  CHECK(variety_dimension(q, dv({1, 0, 0})) == 0);
  CHECK(variety_dimension(q, dv({1, 1, 0})) == 0);
  CHECK(variety_dimension(q, dv({1, 1, 1})) == 2);
  CHECK(variety_dimension(q, dv({1, 2, 2})) == 4);
  CHECK_THROWS_AS(variety_dimension(q, dv({1, 0, 2})), Error);
  CHECK(variety_dimension(q, dv({1, 0, 2}), false) == -8);
  CHECK(is_nonempty(q, dv({1, 1, 1})));
  CHECK(!is_nonempty(q, dv({1, 0, 2})));
  const auto d4 = extend_quiver_infty(build_diagram(DiagramKind::D, 4), 0);
  CHECK_THROWS_AS(variety_dimension(d4, dv({1, 0, 0, 0, 0, 0})), Error);
}

TEST_CASE("zero-dimensional locus on A~1 up to height 3") {
  const auto q = extend_quiver_infty(build_diagram(DiagramKind::A, 2), 0);
  CHECK(enumerate_zero_dim(q, 3) == std::vector<DimVector>{dv({1, 0, 0}), dv({1, 1, 0})});
}

TEST_CASE("theta orbit and antidominant forms") {
  const auto q = extend_quiver_infty(build_diagram(DiagramKind::A, 3), 0);
  const auto orbit = theta_orbit(q, 6);
  std::vector<DimVector> pts;
  for (const auto& e : orbit.entries) pts.push_back(e.value);
  CHECK(sorted(pts) == enumerate_zero_dim(q, 6));
  const auto [end, word] = antidominant_form(q, dv({1, 2, 1, 1}));
  CHECK(end == dv({1, 1, 1, 1}));
  DimVector up = end;
  for (const Letter& l : word) up = simple_reflection(q.quiver(), std::get<Reflection>(l).vertex, up);
  CHECK(up == dv({1, 2, 1, 1}));
}

TEST_CASE("rw_on_points preserves the pairing") {
  const auto a2 = build_diagram(DiagramKind::A, 3);
  Weight lam(3);
  lam << Scalar::parse("t1"), Scalar::parse("1/2"), Scalar::parse("1/3");
  const GroupWord w{Reflection{1}, Rotation{1}, Reflection{0}};
  const auto [lam2, a2v] = rw_on_points(a2, w, lam, dv({1, 2, 0}));
  CHECK(pairing(lam2, a2v) == pairing(lam, dv({1, 2, 0})));
  CHECK_THROWS_AS(rw_on_points(a2, {Translation{dv({1, -1, 0})}}, lam, dv({1, 0, 0})), Error);
}

TEST_CASE("property: dimension is invariant under base reflections") {
  for (int m : {2, 3, 4}) {
    const auto q = extend_quiver_infty(build_diagram(DiagramKind::A, m), 0);
    for (const auto& a : enumerate_framed_roots(q, 7)) {
      const long d = variety_dimension(q, a);
      CHECK(d >= 0);
      CHECK(d % 2 == 0);
      for (int i : q.base_reflections()) {
        const DimVector s = simple_reflection(q.quiver(), i, a);
        if ((s.array() >= 0).all()) CHECK(variety_dimension(q, s) == d);
      }
    }
  }
}
