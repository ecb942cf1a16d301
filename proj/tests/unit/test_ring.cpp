#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "phantom/ring/dimension.hpp"
#include "phantom/ring/errors.hpp"
#include "phantom/ring/gb_cache.hpp"
#include "phantom/ring/parser.hpp"
#include "phantom/ring/quotient_ring.hpp"
#include "phantom/ring/syzygy.hpp"
#include "random_objects.hpp"

using namespace phantom;

namespace {

Polynomial P(const RingPtr& r, const char* s) { return parse_polynomial(s, r); }

std::vector<std::string> strings(const std::vector<Polynomial>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

// S-vectors of every same-position pair reduce to zero.
bool satisfies_buchberger_criterion(const GroebnerBasis& gb) {
  const auto& g = gb.elements();
  const auto& field = gb.ring()->field();
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      if (g[i].lead().pos != g[j].lead().pos) continue;
      Monomial l = lcm(g[i].lead().mono, g[j].lead().mono);
      Vector s = g[i].times_term(1, div(l, g[i].lead().mono))
                     .add_multiple(g[j], field.neg(1), div(l, g[j].lead().mono));
      if (!reduce_by(s, g).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("prime field arithmetic") {
  PrimeField f(7);
  CHECK(f.mul(3, 5) == 1);
  CHECK(f.inv(3) == 5);
  CHECK(f.from_signed(-1) == 6);
  CHECK_THROWS_AS(PrimeField(9), InputError);
}

TEST_CASE("parser accepts the documented grammar") {
  auto r = make_ring(3, {"x", "y", "z"});
  CHECK(P(r, "x^2 + y").to_string() == "x^2+y");
  CHECK(P(r, "2xy - 4") == P(r, "2*x*y+2"));
  CHECK(P(r, " x y^2 ") == P(r, "x*y^2"));
  CHECK(P(r, "(x+y)^3") == P(r, "x^3+y^3"));
  CHECK(P(r, "-x").to_string() == "2*x");
  CHECK(P(r, "0").is_zero());
}

TEST_CASE("parser errors carry line and column") {
  auto r = make_ring(2, {"x", "y"});
  try {
    P(r, "x + w");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 5);
  }
  try {
    P(r, "x +\n  y ^");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(P(r, "x + "), ParseError);
  CHECK_THROWS_AS(P(r, ""), ParseError);
}

TEST_CASE("monomial orders") {
  auto grevlex = make_ring(2, {"x", "y", "z"});
  auto lex = make_ring(2, {"x", "y", "z"}, MonomialOrder::kLex);
  CHECK(P(grevlex, "x*z^2 + y^2*z + x^2").lead().mono == P(grevlex, "y^2*z").lead().mono);
  CHECK(P(lex, "x*z^2 + y^2*z + x^2").lead().mono == P(lex, "x^2").lead().mono);
}

TEST_CASE("reduced Groebner bases of the documented examples") {
  auto r = make_ring(5, {"x", "y"});
  CHECK(strings(buchberger({P(r, "x^2+y"), P(r, "y")})) == std::vector<std::string>{"y", "x^2"});

  auto r3 = make_ring(2, {"x", "y", "z"});
  CHECK(strings(buchberger({P(r3, "x^2"), P(r3, "y^2"), P(r3, "x^3+y^3+z^3")})) ==
        std::vector<std::string>{"y^2", "x^2", "z^3"});
}

TEST_CASE("normal form is zero exactly on ideal members") {
  auto r = make_ring(3, {"x", "y"});
  auto gb = buchberger({P(r, "x^2-y"), P(r, "x*y-1")});
  CHECK(normal_form(P(r, "x^3-1"), gb).is_zero());
  CHECK(!normal_form(P(r, "x+1"), gb).is_zero());
}

TEST_CASE("Groebner bases: criterion, generator order and reducedness") {
  std::mt19937 rng(11);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    auto r = make_ring(p, {"x", "y", "z"});
    for (int trial = 0; trial < 15; ++trial) {
      std::vector<Polynomial> gens;
      for (int k = 0; k < 3; ++k) gens.push_back(testing::random_polynomial(rng, r, 3, 3, false));
      auto gb = groebner(r, 1, to_vectors(gens));
      CHECK(satisfies_buchberger_criterion(*gb));
      for (const auto& f : gens) CHECK(gb->contains(Vector::from_coordinates(r, {f})));
      std::vector<Polynomial> shuffled(gens.rbegin(), gens.rend());
      shuffled.push_back(gens[0] * gens[1]);
      auto gb2 = compute_groebner(r, 1, to_vectors(shuffled));
      CHECK(gb2.elements() == gb->elements());
      for (std::size_t i = 0; i < gb->size(); ++i) {
        std::vector<Vector> others;
        for (std::size_t j = 0; j < gb->size(); ++j) {
          if (j != i) others.push_back(gb->elements()[j]);
        }
        CHECK(reduce_by(gb->elements()[i], others) == gb->elements()[i]);
      }
    }
  }
}

TEST_CASE("module Groebner bases satisfy the criterion") {
  std::mt19937 rng(5);
  auto r = make_ring(2, {"x", "y"});
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Vector> gens;
    for (int k = 0; k < 3; ++k) gens.push_back(testing::random_vector(rng, r, 2, 2, 2));
    auto gb = compute_groebner(r, 2, gens);
    CHECK(satisfies_buchberger_criterion(gb));
    for (const auto& g : gens) CHECK(gb.contains(g));
  }
}

TEST_CASE("Frobenius power agrees with repeated multiplication") {
  std::mt19937 rng(3);
  for (std::uint32_t p : {2u, 3u}) {
    auto r = make_ring(p, {"x", "y", "z"});
    for (int trial = 0; trial < 20; ++trial) {
      auto f = testing::random_polynomial(rng, r, 3, 4);
      CHECK(f.frobenius(p) == f.pow(p));
      CHECK(f.frobenius(p * p) == f.pow(p * p));
    }
  }
}

TEST_CASE("module kernel examples") {
  auto r = make_ring(2, {"x", "y"});
  auto cols = std::vector<Vector>{Vector::from_coordinates(r, {P(r, "x")}), Vector::from_coordinates(r, {P(r, "y")})};
  auto ker = module_kernel(r, 1, cols, {});
  REQUIRE(ker.size() == 1);
  CHECK(ker[0] == Vector::from_coordinates(r, {P(r, "y"), P(r, "x")}));

  auto node = make_quotient(r, {P(r, "x*y")});
  auto k2 = module_kernel(r, 1, {Vector::from_coordinates(r, {P(r, "x")})}, node->ideal_columns(1));
  REQUIRE(k2.size() == 1);
  CHECK(k2[0].coordinate(0) == P(r, "y"));
}

TEST_CASE("kernel generators are syzygies and lifts reproduce the element") {
  std::mt19937 rng(17);
  auto r = make_ring(3, {"x", "y", "z"});
  for (int trial = 0; trial < 15; ++trial) {
    std::vector<Vector> cols;
    for (int k = 0; k < 3; ++k) cols.push_back(testing::random_vector(rng, r, 2, 2, 2));
    std::vector<Vector> rels{testing::random_vector(rng, r, 2, 2, 2)};
    auto relgb = compute_groebner(r, 2, rels);
    for (const auto& a : module_kernel(r, 2, cols, rels)) {
      Vector image(r, 2);
      auto coords = a.coordinates();
      for (std::size_t j = 0; j < cols.size(); ++j) image = image + cols[j] * coords[j];
      CHECK(relgb.contains(image));
    }
    auto coef = testing::random_polynomial(rng, r, 2, 2);
    Vector z = cols[0] * coef + cols[2] + rels[0] * coef;
    auto a = lift(z, cols, rels);
    REQUIRE(a.has_value());
    Vector back(r, 2);
    for (std::size_t j = 0; j < cols.size(); ++j) back = back + cols[j] * (*a)[j];
    CHECK(relgb.contains(z - back));
  }
}

TEST_CASE("krull dimension and monomial minimal primes") {
  auto r = make_ring(2, {"x", "y", "z"});
  auto r2 = make_ring(2, {"x", "y"});
  CHECK(krull_dimension(*make_quotient(r2, {P(r2, "x*y")})) == 1);
  CHECK(krull_dimension(r, {P(r, "x^3+y^3+z^3")}) == 2);
  CHECK(krull_dimension(r, {P(r, "x"), P(r, "y"), P(r, "z")}) == 0);
  CHECK(krull_dimension(r, {P(r, "x+1"), P(r, "x")}) == -1);
  auto primes = monomial_minimal_primes(r, {P(r, "x*y"), P(r, "x*z")});
  CHECK(primes == std::vector<VariableSet>{{0}, {1, 2}});
  CHECK_THROWS_AS(monomial_minimal_primes(r, {P(r, "x+y")}), UnsupportedInput);
}

TEST_CASE("degree budget aborts instead of guessing") {
  auto r = make_ring(2, {"x", "y"}, MonomialOrder::kGrevlex, Limits{8, 20000});
  CHECK_THROWS_AS(P(r, "x+y").frobenius(16), ResourceError);
  CHECK_THROWS_AS(compute_groebner(r, 1, to_vectors({P(r, "x^9+y")})), ResourceError);
  auto small = make_ring(2, {"x", "y", "z"}, MonomialOrder::kGrevlex, Limits{64, 2});
  CHECK_THROWS_AS(compute_groebner(small, 1, to_vectors({P(small, "x"), P(small, "y"), P(small, "z")})),
                  ResourceError);
}

TEST_CASE("quotient ring validates the graded-local convention") {
  auto r = make_ring(2, {"x", "y"});
  CHECK_THROWS_AS(make_quotient(r, {P(r, "x+1")}), InputError);
  auto q = make_quotient(r, {P(r, "x*y")});
  CHECK(q->is_zero(P(r, "x^2*y")));
  CHECK(q->in_maximal_ideal(P(r, "x+y")));
  CHECK(!q->in_maximal_ideal(P(r, "x+1")));
}

TEST_CASE("persistent Groebner cache survives corruption") {
  namespace fs = std::filesystem;
  auto dir = fs::temp_directory_path() / "phantom_gb_cache_test";
  fs::remove_all(dir);
  auto& cache = GroebnerCache::global();
  cache.clear();
  cache.set_directory(dir);
  auto r = make_ring(2, {"x", "y", "z"});
  auto gens = to_vectors({P(r, "x^2"), P(r, "y^2"), P(r, "x^3+y^3+z^3")});
  auto first = cache.get(r, 1, gens)->elements();
  CHECK(cache.stats().disk_writes == 1);

  cache.clear();
  CHECK(cache.get(r, 1, gens)->elements() == first);
  CHECK(cache.stats().disk_hits == 1);

  for (const auto& entry : fs::directory_iterator(dir)) {
    std::ofstream(entry.path()) << "{\"key\": \"garbage\"";
  }
  cache.clear();
  CHECK(cache.get(r, 1, gens)->elements() == first);
  CHECK(cache.stats().corrupt == 1);

  cache.set_directory(std::nullopt);
  cache.clear();
  fs::remove_all(dir);
}
