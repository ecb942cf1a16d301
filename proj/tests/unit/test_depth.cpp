#include <doctest.h>

#include "phantom/depth/depth.hpp"
#include "phantom/ring/errors.hpp"
#include "phantom/ring/parser.hpp"
#include "phantom/ring/syzygy.hpp"

using namespace phantom;

namespace {

Polynomial P(const RingPtr& r, const std::string& s) { return parse_polynomial(s, r); }

std::vector<Polynomial> Ps(const RingPtr& r, std::vector<const char*> ss) {
  std::vector<Polynomial> out;
  for (auto s : ss) out.push_back(P(r, s));
  return out;
}

TestElementSpec spec_of(const QRingPtr& R, const char* c, std::uint64_t q0 = 1) {
  return TestElementSpec{P(R->ambient(), c), q0, true, "test"};
}

struct Node {
  RingPtr s = make_ring(2, {"x", "y"});
  QRingPtr r = make_quotient(s, Ps(s, {"x*y"}));
  PresentedModule m = PresentedModule::free(r, 1);
  TestElementSpec spec = spec_of(r, "x+y");
};

struct Plane {
  RingPtr s = make_ring(2, {"x", "y"});
  QRingPtr r = make_quotient(s, std::vector<Polynomial>{}, true);
  PresentedModule m = PresentedModule::free(r, 1);
  TestElementSpec spec = spec_of(r, "1");
};

struct Fermat {
  RingPtr s = make_ring(2, {"x", "y", "z"});
  QRingPtr r = make_quotient(s, Ps(s, {"x^3+y^3+z^3"}));
  PresentedModule m = PresentedModule::free(r, 1);
  TestElementSpec spec = spec_of(r, "x^2");
  PrimeList primes{Ps(s, {"x^3+y^3+z^3"})};
};

}  // namespace

TEST_CASE("ghost regular elements") {
  Plane pl;
  auto v = ghost_regular_element(P(pl.s, "x"), pl.m, pl.spec, 2);
  CHECK(v.verdict.status == Status::kWitnessedUpTo);
  CHECK(v.certified_clean);
  CHECK(v.verdict.reading == Reading::kRegular);

  Node nd;
  auto w = ghost_regular_element(P(nd.s, "x"), nd.m, nd.spec, 2);
  REQUIRE(w.verdict.certified_non_member());
  CHECK(w.verdict.certificate->element == "(y)");
  CHECK(w.verdict.certificate->level == 0u);
  CHECK(w.verdict.certificate->reduction == "(y^2)");
  CHECK(w.verdict.conditional_on == "declared test element");

  // Over R/(x) the kernel of x is everything.
  PresentedModule rx(pl.r, 1, Matrix::from_rows(pl.s, 1, {{P(pl.s, "x")}}));
  auto k = ghost_regular_element(P(pl.s, "x"), rx, pl.spec, 2);
  REQUIRE(k.verdict.certified_non_member());
  CHECK(k.verdict.certificate->element == "(1)");

  // Units and the zero module are rejected.
  CHECK_THROWS_AS(ghost_regular_element(P(pl.s, "x+1"), pl.m, pl.spec, 1), InputError);
  CHECK_THROWS_AS(ghost_regular_element(P(pl.s, "x"), PresentedModule::free(pl.r, 0), pl.spec, 1), InputError);
}

TEST_CASE("xM = M is reported distinctly") {
  // On R/(x - 1) multiplication by x is the identity.
  Plane pl;
  PresentedModule w(pl.r, 1, Matrix::from_rows(pl.s, 1, {{P(pl.s, "x-1")}}));
  auto t = ghost_regular_sequence(Ps(pl.s, {"x"}), w, pl.spec, 1);
  CHECK(!t.proper);
  REQUIRE(t.certified_no());
  CHECK(t.aggregate.certificate->element == "xM = M");
  CHECK(ghost_regular_element(P(pl.s, "x"), w, pl.spec, 1).verdict.certificate->element == "xM = M");
  CHECK(ghost_regular_sequence(Ps(pl.s, {"y", "x"}), w, pl.spec, 1).proper == false);
}

TEST_CASE("ghost regular sequences") {
  Plane pl;
  auto s = ghost_regular_sequence(Ps(pl.s, {"x", "y"}), pl.m, pl.spec, 2);
  CHECK(s.aggregate.status == Status::kWitnessedUpTo);
  CHECK(s.certified_clean());
  CHECK(s.steps.size() == 2);

  Node nd;
  auto t = ghost_regular_sequence(Ps(nd.s, {"x"}), nd.m, nd.spec, 2);
  CHECK(t.certified_no());
  CHECK(t.failing_step == 0u);

  auto empty = ghost_regular_sequence({}, pl.m, pl.spec, 2);
  CHECK(empty.aggregate.certified_member());
  CHECK(empty.certified_clean());

  // x, y in the plane: the second step is tested on R/(x).
  auto back = ghost_regular_sequence(Ps(pl.s, {"y", "x"}), pl.m, pl.spec, 2);
  CHECK(back.certified_clean());
  // x, x fails on R/(x).
  auto twice = ghost_regular_sequence(Ps(pl.s, {"x", "x"}), pl.m, pl.spec, 2);
  CHECK(twice.certified_no());
  CHECK(twice.failing_step == 1u);
}

TEST_CASE("phantom regular sequences include the ghost exponents") {
  Plane pl;
  auto s = phantom_regular_sequence(Ps(pl.s, {"x", "y"}), pl.m, pl.spec, 1, 3);
  CHECK(s.aggregate.status == Status::kWitnessedUpTo);
  CHECK(s.certified_clean());
  CHECK(s.t_max == 3);

  Node nd;
  auto ph = phantom_regular_sequence(Ps(nd.s, {"x"}), nd.m, nd.spec, 2);
  auto gh = ghost_regular_sequence(Ps(nd.s, {"x"}), nd.m, nd.spec, 2);
  CHECK(ph.t_max == 4);
  REQUIRE(ph.certified_no());
  REQUIRE(gh.certified_no());
  // t = 1 = q at level 0: the certificates coincide.
  CHECK(ph.steps[0].t == 1u);
  CHECK(ph.aggregate.certificate->element == gh.aggregate.certificate->element);
  CHECK(ph.aggregate.certificate->level == gh.aggregate.certificate->level);

  Fermat fe;
  auto fg = ghost_regular_sequence(Ps(fe.s, {"x", "y"}), fe.m, fe.spec, 1);
  auto fp = phantom_regular_sequence(Ps(fe.s, {"x", "y"}), fe.m, fe.spec, 1);
  CHECK(fg.aggregate.status == fp.aggregate.status);
  CHECK(fg.aggregate.status == Status::kWitnessedUpTo);
}

TEST_CASE("ghost failures propagate to phantom scans") {
  // Sequence x, x^2 on the plane: the second element is a zerodivisor on R/(x)
  // and the prefix u-tuples must not hide it.
  Plane pl;
  auto gh = ghost_regular_sequence(Ps(pl.s, {"x", "x^2"}), pl.m, pl.spec, 1);
  auto ph = phantom_regular_sequence(Ps(pl.s, {"x", "x^2"}), pl.m, pl.spec, 1);
  CHECK(gh.certified_no());
  CHECK(ph.certified_no());
  CHECK(ph.failing_step == 1u);
  CHECK(ph.steps[1].u == std::vector<std::uint64_t>{1});
  CHECK(ph.steps[1].t == 1u);
}

TEST_CASE("phantom depth") {
  Plane pl;
  auto a = phantom_depth(Ps(pl.s, {"x", "y"}), pl.m, pl.spec, 2);
  CHECK(a.depth == 2);
  CHECK(a.qualifier == DepthQualifier::kCertified);

  Node nd;
  auto b = phantom_depth(Ps(nd.s, {"x"}), nd.m, nd.spec, 2);
  CHECK(b.depth == 0);
  CHECK(b.qualifier == DepthQualifier::kCertified);

  Fermat fe;
  auto c = phantom_depth(Ps(fe.s, {"x", "y"}), fe.m, fe.spec, 1);
  CHECK(c.depth == 2);
  CHECK(c.qualifier == DepthQualifier::kCertified);
  // x, y is an honest regular sequence: (x) : y = (x) in R.
  // Syzygies of (y, x) over R, with J as relations: the y-coefficient lies in (x).
  auto colon = module_kernel(fe.s, 1, {Vector::from_coordinates(fe.s, {P(fe.s, "y")}),
                                       Vector::from_coordinates(fe.s, {P(fe.s, "x")})},
                             {Vector::from_coordinates(fe.s, {P(fe.s, "x^3+y^3+z^3")})});
  Submodule xr(fe.m, {Vector::from_coordinates(fe.s, {P(fe.s, "x")})});
  CHECK(!colon.empty());
  for (const auto& v : colon) CHECK(xr.contains(Vector::from_coordinates(fe.s, {v.coordinates()[0]})));

  // Bisection agrees with the full scan.
  for (bool trust : {false, true}) {
    CHECK(phantom_depth(Ps(pl.s, {"x", "y"}), pl.m, pl.spec, 1, trust).depth == 2);
    CHECK(phantom_depth(Ps(nd.s, {"x", "y"}), nd.m, nd.spec, 1, trust).depth ==
          phantom_depth(Ps(nd.s, {"x", "y"}), nd.m, nd.spec, 1, !trust).depth);
  }
  CHECK_THROWS_AS(phantom_depth(Ps(pl.s, {"x"}), PresentedModule(pl.r, 1, Matrix::from_rows(pl.s, 1, {{P(pl.s, "x-1")}})),
                                pl.spec, 1),
                  InputError);
}

TEST_CASE("minheight and height") {
  Node nd;
  PrimeList primes{Ps(nd.s, {"x"}), Ps(nd.s, {"y"})};
  CHECK(minheight(Ps(nd.s, {"x"}), nd.m, primes) == 0);
  CHECK(minheight(Ps(nd.s, {"y"}), nd.m, primes) == 0);
  CHECK(height(Ps(nd.s, {"x"}), nd.m, primes) == 1);
  // Monomial-derived primes agree with the declared ones.
  CHECK(minheight(Ps(nd.s, {"x"}), nd.m, std::nullopt) == 0);
  CHECK(height(Ps(nd.s, {"x"}), nd.m, std::nullopt) == 1);
  auto derived = module_minimal_primes(nd.m);
  CHECK(derived.size() == 2);

  Plane pl;
  CHECK(minheight(Ps(pl.s, {"x", "y"}), pl.m, std::nullopt) == 2);
  CHECK(height(Ps(pl.s, {"x", "y"}), pl.m, std::nullopt) == 2);
  // M = R/(x): support V(x), so ht (y) on it is 1.
  PresentedModule rx(pl.r, 1, Matrix::from_rows(pl.s, 1, {{P(pl.s, "x")}}));
  CHECK(module_minimal_primes(rx).size() == 1);
  CHECK(minheight(Ps(pl.s, {"y"}), rx, std::nullopt) == 1);
  CHECK(minheight(Ps(pl.s, {"x"}), rx, std::nullopt) == 0);

  Fermat fe;
  CHECK_THROWS_AS(module_minimal_primes(fe.m), UnsupportedInput);
  CHECK(minheight(Ps(fe.s, {"x", "y"}), fe.m, fe.primes) == 2);
}

TEST_CASE("depth chain worked examples") {
  Plane pl;
  auto a = depth_chain_report(Ps(pl.s, {"x", "y"}), pl.m, pl.spec, 2);
  CHECK(a.depth == 2);
  CHECK(a.phantom.depth == 2);
  CHECK(a.minheight == 2);
  CHECK(a.height == 2);
  CHECK(a.all_certified);
  CHECK(!a.chain_violation);

  Node nd;
  auto b = depth_chain_report(Ps(nd.s, {"x"}), nd.m, nd.spec, 2);
  CHECK(b.depth == 0);
  CHECK(b.phantom.depth == 0);
  CHECK(b.minheight == 0);
  CHECK(b.height == 1);
  CHECK(b.all_certified);
  CHECK(!b.chain_violation);

  Fermat fe;
  auto c = depth_chain_report(Ps(fe.s, {"x", "y"}), fe.m, fe.spec, 1, fe.primes);
  CHECK(c.depth == 2);
  CHECK(c.phantom.depth == 2);
  CHECK(c.minheight == 2);
  CHECK(c.height == 2);
  CHECK(c.all_certified);
  CHECK(!c.chain_violation);
}

TEST_CASE("permutability") {
  Plane pl;
  auto a = permutability_check(P(pl.s, "x"), P(pl.s, "y"), pl.m, pl.spec, 2);
  CHECK(!a.flag);
  CHECK(a.forward.certified_clean());
  CHECK(a.backward.certified_clean());

  Node nd;
  auto b = permutability_check(P(nd.s, "x"), P(nd.s, "y"), nd.m, nd.spec, 2);
  CHECK(!b.flag);
  CHECK(b.forward.certified_no());
  CHECK(b.backward.certified_no());

  Fermat fe;
  for (auto [u, v] : {std::pair{"x", "y"}, std::pair{"y", "z"}, std::pair{"x", "z"}}) {
    auto c = permutability_check(P(fe.s, u), P(fe.s, v), fe.m, fe.spec, 1);
    CHECK(!c.flag);
    CHECK(c.forward.aggregate.status == c.backward.aggregate.status);
  }
}

TEST_CASE("maximal sequence scans") {
  Plane pl;
  auto a = maximal_sequence_scan(Ps(pl.s, {"x", "y"}), pl.m, pl.spec, 1);
  CHECK(a.lengths() == std::vector<std::size_t>{2, 2});
  CHECK(!a.flag);
  for (const auto& r : a.runs) CHECK(r.certified_maximal);

  Node nd;
  auto b = maximal_sequence_scan(Ps(nd.s, {"x"}), nd.m, nd.spec, 1);
  CHECK(b.lengths() == std::vector<std::size_t>{0});
  CHECK(b.runs[0].certified_maximal);

  Fermat fe;
  auto c = maximal_sequence_scan(Ps(fe.s, {"x", "y", "z"}), fe.m, fe.spec, 2);
  CHECK(c.runs.size() == 6);
  for (auto len : c.lengths()) CHECK(len == 2);
  std::size_t certified = 0;
  for (const auto& r : c.runs) certified += r.certified_maximal;
  CHECK(certified == 6);
  CHECK(!c.flag);
}

TEST_CASE("G^e regularity of certified clean elements") {
  Plane pl;
  auto a = ge_regularity_check(P(pl.s, "x"), pl.m, pl.spec, 1);
  CHECK(a.ghost.certified_clean);
  CHECK(!a.flag);
  Fermat fe;
  auto b = ge_regularity_check(P(fe.s, "x"), fe.m, fe.spec, 1);
  CHECK(!b.flag);
}
