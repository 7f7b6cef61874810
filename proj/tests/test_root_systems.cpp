#include <random>

#include "doctest.h"
#include "km/affine_diagram.hpp"

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

}  // namespace

TEST_CASE("diagram shapes and null vectors") {
  CHECK(build_diagram(DiagramKind::A, 2).delta() == dv({1, 1}));
  CHECK(build_diagram(DiagramKind::A, 5).delta() == dv({1, 1, 1, 1, 1}));
  CHECK(build_diagram(DiagramKind::D, 4).delta().maxCoeff() == 2);
  CHECK(build_diagram(DiagramKind::D, 4).delta().sum() == 6);
  CHECK(build_diagram(DiagramKind::D, 6).delta().sum() == 10);
  CHECK(build_diagram(DiagramKind::E, 6).delta().sum() == 12);
  CHECK(build_diagram(DiagramKind::E, 7).delta().sum() == 18);
  CHECK(build_diagram(DiagramKind::E, 8).delta().sum() == 30);
  CHECK(build_diagram(DiagramKind::A, 3).name() == "A~2");
  CHECK_THROWS_AS(build_diagram(DiagramKind::A, 1), Error);
  CHECK_THROWS_AS(build_diagram(DiagramKind::D, 3), Error);
  CHECK_THROWS_AS(build_diagram(DiagramKind::E, 9), Error);
}

TEST_CASE("delta spans the radical") {
  for (auto [k, n] : {std::pair{DiagramKind::A, 2}, {DiagramKind::A, 6}, {DiagramKind::D, 5}, {DiagramKind::D, 7},
                      {DiagramKind::E, 6}, {DiagramKind::E, 7}, {DiagramKind::E, 8}}) {
    const auto d = build_diagram(k, n);
    CHECK((d.cartan() * d.delta()).isZero());
    CHECK(d.delta()(0) == 1);
  }
}

TEST_CASE("finite root counts") {
  CHECK(finite_positive_roots(build_diagram(DiagramKind::A, 5)).size() == 10);
  CHECK(finite_positive_roots(build_diagram(DiagramKind::D, 4)).size() == 12);
  CHECK(finite_positive_roots(build_diagram(DiagramKind::D, 6)).size() == 30);
  CHECK(finite_positive_roots(build_diagram(DiagramKind::E, 6)).size() == 36);
  CHECK(finite_positive_roots(build_diagram(DiagramKind::E, 7)).size() == 63);
  CHECK(finite_positive_roots(build_diagram(DiagramKind::E, 8)).size() == 120);
}

TEST_CASE("ringel form and reflections") {
  const Quiver q(2, {{0, 1}});
  CHECK(ringel_form(q, dv({1, 0}), dv({0, 1}), false) == -1);
  CHECK(ringel_form(q, dv({0, 1}), dv({1, 0}), false) == 0);
  CHECK(ringel_form(q, dv({1, 1}), dv({1, 1}), true) == 2);
  CHECK(simple_reflection(q, 0, dv({1, 0})) == dv({-1, 0}));
  CHECK(simple_reflection(q, 0, dv({0, 1})) == dv({1, 1}));
  const auto a1 = build_diagram(DiagramKind::A, 2);
  CHECK(simple_reflection(a1, 1, dv({1, 0})) == dv({1, 2}));
  CHECK_THROWS_AS(simple_reflection(q, 2, dv({1, 0})), Error);
  CHECK_THROWS_AS(simple_reflection(q, 0, dv({1, 0, 0})), Error);
}

TEST_CASE("root classification") {
  const auto a1 = build_diagram(DiagramKind::A, 2);
  CHECK(classify_vector(a1, dv({1, 0})).kind == RootKind::Real);
  CHECK(classify_vector(a1, dv({1, 1})).kind == RootKind::Imaginary);
  CHECK(classify_vector(a1, dv({2, 1})).kind == RootKind::Real);
  CHECK(classify_vector(a1, dv({2, 0})).kind == RootKind::NotRoot);
  CHECK(classify_vector(a1, dv({-1, -2})).sign == -1);
  CHECK(classify_vector(a1, dv({1, -1})).kind == RootKind::NotRoot);
  CHECK_THROWS_AS(classify_vector(a1, dv({0, 0})), Error);
  const auto d4 = build_diagram(DiagramKind::D, 4);
  CHECK(classify_vector(d4, d4.delta()).kind == RootKind::Imaginary);
  CHECK(classify_vector(d4, Eigen::Index(2) * d4.delta()).kind == RootKind::Imaginary);
  CHECK(classify_vector(d4, dv({1, 1, 1, 1, 0})).kind == RootKind::NotRoot);
  const auto e6 = build_diagram(DiagramKind::E, 6);
  for (const auto& r : finite_positive_roots(e6)) CHECK(classify_vector(e6, r).kind == RootKind::Real);
}

TEST_CASE("roots up to height 3 on A~1") {
  const auto roots = enumerate_roots(build_diagram(DiagramKind::A, 2), 3);
  const std::vector<DimVector> expected{dv({0, 1}), dv({1, 0}), dv({1, 1}), dv({1, 2}), dv({2, 1})};
  CHECK(roots == expected);
}

TEST_CASE("support connectivity") {
  const auto a3 = build_diagram(DiagramKind::A, 4);
  CHECK(support_connected(a3, dv({1, 1, 0, 0})));
  CHECK(!support_connected(a3, dv({1, 0, 1, 0})));
}

TEST_CASE("generic weights") {
  const auto a1 = build_diagram(DiagramKind::A, 2);
  CHECK(!is_generic_lambda(a1, wt({"1", "0"})).generic);
  CHECK(is_generic_lambda(a1, wt({"1/3", "2/3"})).generic);
  const auto res = is_generic_lambda(a1, wt({"1/3", "-1/3"}));
  CHECK(!res.generic);
  REQUIRE(res.witness);
  CHECK(pairing(wt({"1/3", "-1/3"}), *res.witness).is_zero());
  CHECK(is_generic_lambda(a1, wt({"t1", "1-t1"})).generic);
  CHECK(is_very_generic(wt({"t1", "t2"})));
  CHECK(!is_very_generic(wt({"1/3", "2/3"})));
}

TEST_CASE("k0 trace vector needs level one") {
  const auto d4 = build_diagram(DiagramKind::D, 4);
  const Weight lam = wt({"1/6", "1/6", "1/6", "1/6", "1/6"});
  const Weight tr = k0_trace_vector(d4, lam);
  CHECK(tr.size() == 4);
  CHECK(tr(1) == Scalar::rational(-1, 6));
  CHECK_THROWS_AS(k0_trace_vector(d4, wt({"1", "0", "0", "0", "0"}) * Scalar(2)), Error);
}

TEST_CASE("property: reflections are involutions preserving the form") {
  std::mt19937 rng(21);
  std::uniform_int_distribution<long> coord(-3, 5);
  for (auto [k, n] : {std::pair{DiagramKind::A, 4}, {DiagramKind::D, 5}, {DiagramKind::E, 6}}) {
    const auto d = build_diagram(k, n);
    for (int t = 0; t < 40; ++t) {
      DimVector a(d.size()), b(d.size());
      for (int j = 0; j < d.size(); ++j) a(j) = coord(rng), b(j) = coord(rng);
      for (int i = 0; i < d.size(); ++i) {
        const DimVector sa = simple_reflection(d, i, a);
        CHECK(simple_reflection(d, i, sa) == a);
        CHECK(ringel_form(d, sa, simple_reflection(d, i, b), true) == ringel_form(d, a, b, true));
      }
    }
  }
}

TEST_CASE("property: real roots have q = 1 and imaginary roots q = 0 on affine diagrams") {
  for (auto [k, n] : {std::pair{DiagramKind::A, 3}, {DiagramKind::D, 4}, {DiagramKind::E, 6}}) {
    const auto d = build_diagram(k, n);
    for (const auto& r : enumerate_roots(d, 8)) {
      const long q = ringel_form(d, r, r, false);
      const auto c = classify_vector(d, r);
      CHECK(c.sign == 1);
      CHECK(q == (c.kind == RootKind::Real ? 1 : 0));
    }
  }
}

TEST_CASE("property: automorphisms preserve the cartan matrix and delta") {
  for (auto [k, n] : {std::pair{DiagramKind::D, 4}, {DiagramKind::D, 6}, {DiagramKind::E, 6}, {DiagramKind::E, 7}}) {
    const auto d = build_diagram(k, n);
    CHECK(!d.automorphisms().empty());
    for (const auto& src : d.automorphisms()) {
      CHECK(d.is_automorphism(src));
      for (int j = 0; j < d.size(); ++j) CHECK(d.delta()(j) == d.delta()(src[j]));
    }
  }
}
