#include <random>

#include "doctest.h"
#include "km/gwa_classify.hpp"

using namespace km;

namespace {

RootMultiset R(const char* s) { return parse_v(s); }

RootMultiset random_generic(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> num(-20, 20), den(2, 9), kind(0, 2), var(1, 3);
  for (;;) {
    std::vector<Scalar> roots;
    for (int i = 0; i < n; ++i) {
      Scalar s = Scalar::rational(num(rng), den(rng));
      if (kind(rng) == 0) s += Scalar::variable(var(rng)) * Scalar(1 + i);
      roots.push_back(s);
    }
    RootMultiset r(roots);
    if (is_generic_v(r).generic) return r;
  }
}

RootMultiset shifted(const RootMultiset& r, const std::vector<long>& d, int eps = 1, const Scalar& c = Scalar()) {
  std::vector<Scalar> out;
  for (std::size_t i = 0; i < r.degree(); ++i) out.push_back(Scalar(eps) * r[i] + c + Scalar(d[i]));
  return RootMultiset(out);
}

}  // namespace

TEST_CASE("parsing root lists") {
  CHECK(R("[t1, 1/2, 0]").to_string() == "[0, 1/2, t1]");
  CHECK(parse_scalar_list("[]").empty());
  CHECK(parse_scalar_list("[(t1+1)/(t2-1), 3]").size() == 2);
  CHECK_THROWS_AS(R("[]"), Error);
  CHECK_THROWS_AS(R("1, 2"), Error);
}

TEST_CASE("genericity and reflexivity") {
  CHECK(is_generic_v(R("[0, 1/2]")).generic);
  CHECK(!is_generic_v(R("[0, 1]")).generic);
  CHECK(!is_generic_v(R("[t1, t1+3]")).generic);
  CHECK(!is_generic_v(R("[1/3, 1/3]")).generic);
  CHECK(is_generic_v(R("[t1, t2]")).generic);
  CHECK(is_reflexive(R("[0, 1]")) == Scalar(1));
  CHECK(is_reflexive(R("[t1, -t1]")) == Scalar(0));
  CHECK(!is_reflexive(R("[0, 1, 3]")));
}

TEST_CASE("isomorphism examples") {
  const auto w = iso_test(R("[0, 1/3]"), R("[1/3, 2/3]"));
  REQUIRE(w);
  CHECK(verify_iso(R("[0, 1/3]"), R("[1/3, 2/3]"), *w));
  CHECK(w->b == Scalar(1));
  CHECK(w->c == Scalar::rational(1, 3));
  CHECK(!iso_test(R("[0, 1/3]"), R("[0, 1/2]")));
  CHECK(!iso_test(R("[0, 1/3]"), R("[0, 1/3, 2/3]")));
  const auto strict = iso_test(R("[0, 1]"), R("[0, 2]"), true);
  REQUIRE(strict);
  CHECK(strict->b == Scalar(2));
  CHECK(!iso_test(R("[0, 1]"), R("[0, 2]"), false));
}

TEST_CASE("iso tie-break prefers eps = +1") {
  const RootMultiset r = R("[0, 1/3]"), r2 = R("[-1/3, 0]");
  const auto w = iso_test(r, r2);
  REQUIRE(w);
  CHECK(w->b == Scalar(1));
  CHECK(w->c == Scalar::rational(-1, 3));
  // The ε = −1 witness (c = 0) is also valid.
  CHECK(verify_iso(r, r2, IsoWitness{Scalar(-1), Scalar(0), {1, 0}}));
}

TEST_CASE("morita examples") {
  const auto w = morita_test(R("[0, 1/2]"), R("[3, 5/2]"));
  REQUIRE(w);
  CHECK(w->eps == 1);
  CHECK(verify_morita(R("[0, 1/2]"), R("[3, 5/2]"), *w));
  CHECK(!morita_test(R("[0, t1]"), R("[0, t1+1/2]")));
  CHECK_THROWS_AS(morita_test(R("[0, 1]"), R("[0, 2]")), Error);
  CHECK_THROWS_AS(morita_test(R("[0]"), R("[0, 1/2]")), Error);
  try {
    morita_test(R("[0]"), R("[0, 1/2]"));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegreeMismatch);
  }
}

TEST_CASE("least perfect matching") {
  const std::vector<std::vector<bool>> adj{{true, true}, {true, false}};
  CHECK(least_perfect_matching(adj) == std::vector<int>{1, 0});
  const std::vector<std::vector<bool>> none{{true, false}, {true, false}};
  CHECK(!least_perfect_matching(none));
  const std::vector<std::vector<bool>> full(3, std::vector<bool>(3, true));
  CHECK(least_perfect_matching(full) == std::vector<int>{0, 1, 2});
}

TEST_CASE("lambda dictionary") {
  const auto f = v_to_lambda(R("[0, 1/3, 2/3]"));
  CHECK(f.lambda.size() == 2);
  CHECK(f.lambda(0) == Scalar(-1));
  CHECK(f.lambda(1) == Scalar(1));
  CHECK(f.weight.sum() == Scalar(1));
  Weight l1(1);
  l1 << Scalar::parse("t1");
  CHECK(lambda_to_v(l1) == R("[0, (t1+1)/2]"));
  Weight l2(2);
  l2 << Scalar(0), Scalar(0);
  CHECK(lambda_to_v(l2) == R("[0, 1/3, 2/3]"));
  Weight deg(2);
  deg << Scalar(1), Scalar(-1);
  CHECK_THROWS_AS(weight_to_v(deg), Error);
}

TEST_CASE("p-reduction") {
  CHECK(vp_reduction(R("[0, 1]"), 3) == R("[0, 0]"));
  CHECK(vp_reduction(R("[t1]"), 3) == R("[t1^3-t1]"));
  CHECK(vp_reduction(R("[2]"), 5) == R("[30]"));
  CHECK_THROWS_AS(vp_reduction(R("[2]"), 6), Error);
}

TEST_CASE("property: integer-shift closure and witness replay") {
  std::mt19937 rng(41);
  std::uniform_int_distribution<long> shift(-10, 10);
  std::uniform_int_distribution<int> deg(1, 4);
  for (int t = 0; t < 40; ++t) {
    const auto r = random_generic(rng, deg(rng));
    std::vector<long> d;
    for (std::size_t i = 0; i < r.degree(); ++i) d.push_back(shift(rng));
    const auto r2 = shifted(r, d);
    const auto w = morita_test(r, r2);
    REQUIRE(w);
    CHECK(verify_morita(r, r2, *w));
    CHECK(is_generic_v(r2).generic);
  }
}

TEST_CASE("property: reflexive, symmetric and transitive") {
  std::mt19937 rng(42);
  std::uniform_int_distribution<long> shift(-5, 5);
  std::uniform_int_distribution<int> deg(1, 3), sign(0, 1);
  for (int t = 0; t < 30; ++t) {
    const auto r = random_generic(rng, deg(rng));
    std::vector<long> d1, d2;
    for (std::size_t i = 0; i < r.degree(); ++i) d1.push_back(shift(rng)), d2.push_back(shift(rng));
    const auto r2 = shifted(r, d1, sign(rng) ? 1 : -1, Scalar::rational(1, 7));
    const auto r3 = shifted(r2, d2, sign(rng) ? 1 : -1, Scalar::parse("t3"));
    const auto self = morita_test(r, r);
    REQUIRE(self);
    CHECK(verify_morita(r, r, *self));
    const auto ab = morita_test(r, r2), ba = morita_test(r2, r), bc = morita_test(r2, r3);
    REQUIRE(ab);
    REQUIRE(ba);
    REQUIRE(bc);
    // Compose a→b and b→c into a→c and replay.
    MoritaWitness ac{ab->eps * bc->eps, Scalar(bc->eps) * ab->c + bc->c, {}, {}};
    for (std::size_t i = 0; i < r.degree(); ++i) {
      const int j = ab->matching[i];
      ac.matching.push_back(bc->matching[j]);
      ac.d.push_back(bc->eps * ab->d[i] + bc->d[j]);
    }
    CHECK(verify_morita(r, r3, ac));
    const auto iso = iso_test(r, r2);
    if (iso) CHECK(morita_test(r, r2));
  }
}

TEST_CASE("property: reflexivity moves with translation") {
  std::mt19937 rng(43);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  for (int t = 0; t < 30; ++t) {
    const Scalar a = Scalar::rational(num(rng), den(rng));
    const Scalar u = Scalar::rational(num(rng), den(rng));
    const RootMultiset r({u, a - u, Scalar::variable(1), a - Scalar::variable(1)});
    REQUIRE(is_reflexive(r));
    CHECK(*is_reflexive(r) == a);
    const Scalar c = Scalar::rational(num(rng), den(rng));
    std::vector<Scalar> moved;
    for (const Scalar& s : r.roots()) moved.push_back(s + c);
    CHECK(*is_reflexive(RootMultiset(moved)) == a + Scalar(2) * c);
  }
}

TEST_CASE("property: lambda dictionary round trips") {
  std::mt19937 rng(44);
  for (int t = 0; t < 40; ++t) {
    const auto r = random_generic(rng, 1 + t % 4);
    const auto f = v_to_lambda(r);
    const RootMultiset base = lambda_to_v(f.lambda), base2 = weight_to_v(f.weight);
    std::vector<Scalar> back;
    for (const Scalar& s : base.roots()) back.push_back(s + f.shift);
    CHECK(RootMultiset(back) == r);
    CHECK(same(lambda_to_weight(f.lambda), f.weight));
    std::vector<Scalar> back2;
    for (const Scalar& s : base2.roots()) back2.push_back(s + f.shift);
    CHECK(RootMultiset(back2) == r);
  }
}
