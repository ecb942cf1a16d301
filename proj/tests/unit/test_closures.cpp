#include <doctest.h>

#include <random>

#include "phantom/closures/nakayama.hpp"
#include "phantom/ring/errors.hpp"
#include "phantom/ring/parser.hpp"
#include "random_objects.hpp"

using namespace phantom;

namespace {

Polynomial P(const RingPtr& r, const char* s) { return parse_polynomial(s, r); }

TestElementSpec spec_of(const QRingPtr& R, const char* c, std::uint64_t q0) {
  return TestElementSpec{P(R->ambient(), c), q0, true, "test"};
}

Submodule ideal(const PresentedModule& r, std::vector<std::string> gens) {
  std::vector<Vector> vs;
  for (const auto& g : gens) vs.push_back(r.vector({g}));
  return Submodule(r, vs);
}

// Monomial z lies in a monomial ideal iff some generator divides it.
bool monomial_ideal_contains(const std::vector<Monomial>& gens, const Monomial& z) {
  for (const auto& g : gens) {
    if (g.divides(z)) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("c_n multipliers") {
  auto s = make_ring(2, {"x"});
  auto R = make_quotient(s);
  auto spec = spec_of(R, "x", 2);
  CHECK(cn_multiplier(spec, -1, *R) == P(s, "1"));
  CHECK(cn_multiplier(spec, 0, *R) == P(s, "x"));
  CHECK(cn_multiplier(spec, 2, *R) == P(s, "x^7"));
  auto s3 = make_ring(3, {"x", "y"});
  auto R3 = make_quotient(s3);
  auto spec1 = spec_of(R3, "x+y", 1);
  CHECK(cn_multiplier(spec1, 3, *R3) == P(s3, "(x+y)^4"));
  auto spec3 = spec_of(R3, "x", 3);
  // (q0^(n+1) - 1) / (q0 - 1) with q0 = 3, n = 1.
  CHECK(cn_multiplier(spec3, 1, *R3) == P(s3, "x^4"));
  CHECK_THROWS_AS(cn_multiplier(spec, -2, *R), InputError);
}

TEST_CASE("test element validation") {
  auto s = make_ring(2, {"x", "y"});
  auto node = make_quotient(s, {P(s, "x*y")});
  CHECK_THROWS_AS(spec_of(node, "x*y", 1).validate(*node), InputError);
  CHECK_THROWS_AS(spec_of(node, "x+y", 3).validate(*node), InputError);
  CHECK_NOTHROW(spec_of(node, "x+y", 4).validate(*node));
  CHECK(spec_of(node, "x+y", 4).e0(*node) == 2);
}

TEST_CASE("Frobenius closure membership") {
  auto s = make_ring(2, {"x", "y", "z"});
  auto fermat = make_quotient(s, {P(s, "x^3+y^3+z^3")});
  auto r = PresentedModule::free(fermat, 1);
  auto n = ideal(r, {"x", "y"});
  auto v = frobenius_closure_member(r.vector({"z^2"}), n, 3);
  REQUIRE(v.certified_member());
  CHECK(v.certificate->kind == Certificate::Kind::kFrobenius);
  CHECK(v.certificate->q == 2);
  CHECK(replay_certificate(v, r.vector({"z^2"}), n, nullptr));

  auto t = frobenius_closure_member(r.vector({"x*z"}), n, 3);
  REQUIRE(t.certified_member());
  CHECK(t.certificate->kind == Certificate::Kind::kTrivial);

  // Not regular: no certified failure is possible.
  CHECK(frobenius_closure_member(r.vector({"z"}), n, 2).status == Status::kNoWitnessUpTo);

  auto s2 = make_ring(2, {"x", "y"});
  auto reg = make_quotient(s2, std::vector<Polynomial>{}, true);
  auto r2 = PresentedModule::free(reg, 1);
  auto n2 = ideal(r2, {"x^2", "y^2"});
  auto w = frobenius_closure_member(r2.vector({"x*y"}), n2, 3);
  CHECK(w.certified_non_member());
  CHECK(w.conditional_on == "declared regular ring");
  CHECK(w.status_name() == "CertifiedNonMember");
  CHECK(replay_certificate(w, r2.vector({"x*y"}), n2, nullptr));
}

TEST_CASE("tight closure membership") {
  auto s = make_ring(2, {"x", "y"});
  auto R = make_quotient(s);
  auto r = PresentedModule::free(R, 1);
  auto spec = spec_of(R, "1", 1);
  auto n = ideal(r, {"x"});
  auto v = tight_closure_member(r.vector({"y"}), n, spec, 2);
  REQUIRE(v.certified_non_member());
  CHECK(v.certificate->kind == Certificate::Kind::kTestElement);
  // The scan starts at q0, so the first failing q' is 1.
  CHECK(v.certificate->q == 1);
  CHECK(v.conditional_on == "declared test element");
  CHECK(replay_certificate(v, r.vector({"y"}), n, &spec));
  // q' = 2 fails as well.
  CHECK(!bracket_power(n, 1).contains(element_power(r.vector({"y"}), 2, 1)));

  CHECK(tight_closure_member(r.vector({"x*y"}), n, spec, 2).certified_member());

  auto s3 = make_ring(2, {"x", "y", "z"});
  auto fermat = make_quotient(s3, {P(s3, "x^3+y^3+z^3")});
  auto rf = PresentedModule::free(fermat, 1);
  auto fspec = spec_of(fermat, "x^2", 1);
  auto fv = tight_closure_member(rf.vector({"z^2"}), ideal(rf, {"x", "y"}), fspec, 3);
  REQUIRE(fv.certified_member());
  CHECK(fv.certificate->q == 2);
}

TEST_CASE("zero-star members") {
  auto s = make_ring(2, {"x", "y"});
  auto node = make_quotient(s, {P(s, "x*y")});
  auto r = PresentedModule::free(node, 1);
  auto spec = spec_of(node, "x+y", 1);
  auto vs = zero_star_members({r.vector({"y"}), r.zero_vector()}, r, spec, 2);
  REQUIRE(vs[0].certified_non_member());
  CHECK(replay_certificate(vs[0], r.vector({"y"}), Submodule::zero(r), &spec));
  // (x+y) y^2 = y^3 is nonzero too.
  CHECK(!r.is_zero(r.vector({"(x+y)*y^2"})));
  CHECK(vs[1].certified_member());

  auto s1 = make_ring(2, {"x"});
  auto dual = make_quotient(s1, {P(s1, "x^2")});
  auto r1 = PresentedModule::free(dual, 1);
  auto v = zero_star_members({r1.vector({"x"})}, r1, spec_of(dual, "1", 2), 2)[0];
  REQUIRE(v.certified_member());
  CHECK(v.certificate->q == 2);
}

TEST_CASE("reduced Frobenius powers") {
  auto s1 = make_ring(2, {"x"});
  auto dual = make_quotient(s1, {P(s1, "x^2")});
  auto r1 = PresentedModule::free(dual, 1);
  auto g = reduced_frobenius(r1, 0, spec_of(dual, "1", 2), 2);
  CHECK(g.certified());
  CHECK(g.module.is_zero(g.module.vector({"x"})));
  CHECK(!g.module.is_zero(g.module.vector({"1"})));

  auto s = make_ring(2, {"x", "y"});
  auto reg = make_quotient(s);
  auto r = PresentedModule::free(reg, 1);
  for (unsigned e : {0u, 1u}) {
    auto gr = reduced_frobenius(r, e, spec_of(reg, "1", 1), 2);
    for (const auto& cv : gr.candidates) CHECK(cv.verdict.certified_non_member());
    CHECK(gr.module.relations().cols() == 0);
  }

  PresentedModule zero(reg, 1, Matrix::identity(s, 1));
  CHECK(reduced_frobenius(zero, 1, spec_of(reg, "1", 1), 2).module.is_zero_module());
}

TEST_CASE("regular rings are tightly closed (monomial oracle)") {
  std::mt19937 rng(41);
  for (std::uint32_t p : {2u, 3u}) {
    auto s = make_ring(p, {"x", "y", "z"});
    auto R = make_quotient(s, std::vector<Polynomial>{}, true);
    auto r = PresentedModule::free(R, 1);
    auto spec = spec_of(R, "1", 1);
    std::uniform_int_distribution<int> ex(0, 3);
    auto random_monomial = [&] {
      Monomial m;
      for (std::size_t i = 0; i < 3; ++i) m = mul(m, pow(variable(i), ex(rng)));
      return m;
    };
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<Monomial> gens{random_monomial(), random_monomial()};
      std::vector<Vector> vs;
      for (const auto& m : gens) vs.push_back(Vector::unit(s, 1, 0).times_term(1, m));
      Submodule n(r, vs);
      Monomial z = random_monomial();
      Vector zv = Vector::unit(s, 1, 0).times_term(1, z);
      bool expected = monomial_ideal_contains(gens, z);
      const unsigned e_max = p == 2 ? 2 : 1;
      auto t = tight_closure_member(zv, n, spec, e_max);
      auto f = frobenius_closure_member(zv, n, e_max);
      CHECK(t.certified_member() == expected);
      CHECK(t.certified_non_member() == !expected);
      CHECK(f.certified_member() == expected);
      CHECK(replay_certificate(t, zv, n, &spec));
      CHECK(replay_certificate(f, zv, n, nullptr));
    }
  }
}

TEST_CASE("verdicts are monotone in N and certificates replay") {
  std::mt19937 rng(5);
  auto s = make_ring(2, {"x", "y"});
  auto node = make_quotient(s, {P(s, "x*y")});
  auto r = PresentedModule::free(node, 1);
  auto spec = spec_of(node, "x+y", 1);
  for (int trial = 0; trial < 30; ++trial) {
    Vector z = testing::random_vector(rng, s, 1, 2, 2);
    Vector g1 = testing::random_vector(rng, s, 1, 2, 2);
    Vector g2 = testing::random_vector(rng, s, 1, 2, 2);
    Submodule small(r, {g1});
    Submodule big(r, {g1, g2});
    auto a = tight_closure_member(z, small, spec, 2);
    auto b = tight_closure_member(z, big, spec, 2);
    if (a.certified_member()) CHECK(b.certified_member());
    if (b.certified_non_member()) CHECK(a.certified_non_member());
    if (a.certificate) CHECK(replay_certificate(a, z, small, &spec));
    if (b.certificate) CHECK(replay_certificate(b, z, big, &spec));
  }
}

TEST_CASE("verdict joins") {
  Verdict m;
  m.status = Status::kCertifiedMember;
  Verdict w;
  w.status = Status::kWitnessedUpTo;
  Verdict n1;
  n1.status = Status::kCertifiedNonMember;
  n1.certificate = Certificate{Certificate::Kind::kTestElement, 4, "y", 1u, 0u, ""};
  Verdict n2 = n1;
  n2.certificate->level = 0u;
  n2.certificate->q = 2;
  CHECK(join_all({m, w}, 2, 1, Reading::kHolds).status == Status::kWitnessedUpTo);
  CHECK(join_all({}, 2, 1, Reading::kHolds).status_name() == "CertifiedHolds");
  auto j = join_all({m, n1, w, n2}, 2, 1, Reading::kHolds);
  CHECK(j.status_name() == "CertifiedFails");
  CHECK(j.certificate->q == 2);
  CHECK(join_all({n2, n1}, 2, 1, Reading::kHolds).certificate->q == join_all({n1, n2}, 2, 1, Reading::kHolds).certificate->q);
}

TEST_CASE("Nakayama, generic form") {
  auto s = make_ring(2, {"x", "y"});
  auto node = make_quotient(s, {P(s, "x*y")});
  auto r = PresentedModule::free(node, 1);
  auto spec = spec_of(node, "x+y", 1);
  auto l = ideal(r, {"x"});
  auto same = nakayama_generic_check(NakayamaInstance(l, l), spec, 2);
  CHECK(same.hypothesis_all.certified_member());
  CHECK(same.conclusion_all.certified_member());
  auto empty = nakayama_generic_check(NakayamaInstance(Submodule::zero(r), Submodule::zero(r)), spec, 2);
  CHECK(empty.conclusion_all.certified_member());
  CHECK_THROWS_AS(NakayamaInstance(ideal(r, {"x"}), ideal(r, {"y"})), InputError);
  // x+1 is a unit only after localizing; such instances are refused.
  CHECK_THROWS_AS(NakayamaInstance(ideal(r, {"x+1"}), ideal(r, {"x+1", "x^2"})), UnsupportedInput);

  std::mt19937 rng(77);
  for (int trial = 0; trial < 15; ++trial) {
    Vector a = Vector::from_coordinates(s, {testing::random_homogeneous(rng, s, 1 + trial % 2, 2)});
    Vector b = Vector::from_coordinates(s, {testing::random_homogeneous(rng, s, 1 + trial % 3, 2)});
    Submodule lsub(r, {a});
    Submodule nsub(r, {a, b});
    auto rep = nakayama_generic_check(NakayamaInstance(lsub, nsub), spec, 2);
    CHECK(!rep.potential_counterexample());
  }
}

TEST_CASE("Nakayama, family form") {
  auto s = make_ring(2, {"x", "y"});
  auto R = make_quotient(s, std::vector<Polynomial>{}, true);
  auto r = PresentedModule::free(R, 1);
  auto spec = spec_of(R, "1", 1);
  auto l = ideal(r, {"x^2"});
  auto trivial = nakayama_family_check(l, bracket_family(l, 2), spec, 2);
  CHECK(trivial.hypothesis_met);
  for (const auto& v : trivial.conclusion) CHECK(v.certified_member());

  auto rep = nakayama_family_check(l, bracket_family(ideal(r, {"x"}), 2), spec, 2);
  CHECK(!rep.hypothesis_met);
  REQUIRE(!rep.pairs.empty());
  CHECK(rep.pairs[0].e == 0);
  CHECK(rep.pairs[0].e_prime == 0);
  CHECK(!rep.pairs[0].holds);
  CHECK(!rep.potential_counterexample);
  CHECK(rep.conclusion[0].certified_non_member());

  CHECK_THROWS_AS(nakayama_family_check(l, {}, spec, 2), InputError);
  CHECK_THROWS_AS(nakayama_family_check(ideal(r, {"x"}), bracket_family(l, 1), spec, 2), InputError);
}
