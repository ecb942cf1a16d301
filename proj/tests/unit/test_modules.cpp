#include <doctest.h>

#include <random>

#include "phantom/modules/frobenius.hpp"
#include "phantom/ring/errors.hpp"
#include "phantom/ring/parser.hpp"
#include "random_objects.hpp"

using namespace phantom;

namespace {

Polynomial P(const RingPtr& r, const char* s) { return parse_polynomial(s, r); }

Matrix M(const RingPtr& r, std::size_t cols, std::vector<std::vector<const char*>> rows) {
  std::vector<std::vector<Polynomial>> polys;
  for (const auto& row : rows) {
    std::vector<Polynomial> pr;
    for (const char* s : row) pr.push_back(P(r, s));
    polys.push_back(pr);
  }
  return Matrix::from_rows(r, cols, polys);
}

}  // namespace

TEST_CASE("frobenius_matrix follows the entrywise rule") {
  auto r = make_ring(2, {"x", "y"});
  Matrix a = M(r, 2, {{"x", "y"}, {"0", "x+y"}});
  CHECK(frobenius_matrix(a, 2, 1) == M(r, 2, {{"x^2", "y^2"}, {"0", "x^2+y^2"}}));
  CHECK(frobenius_matrix(a, 2, 0) == a);
  CHECK(frobenius_matrix(frobenius_matrix(a, 2, 1), 2, 1) == frobenius_matrix(a, 2, 2));
}

TEST_CASE("Frobenius of modules") {
  auto s = make_ring(2, {"x"});
  auto R = make_quotient(s);
  PresentedModule m(R, 1, M(s, 1, {{"x"}}));
  CHECK(frobenius_module(m, 1).relations() == M(s, 1, {{"x^2"}}));
  auto free = PresentedModule::free(R, 3);
  CHECK(frobenius_module(free, 2).relations().cols() == 0);

  // J-columns stay unraised.
  auto s2 = make_ring(2, {"x", "y"});
  auto node = make_quotient(s2, {P(s2, "x*y")});
  auto fm = frobenius_module(PresentedModule::free(node, 1), 2);
  CHECK(fm.is_zero(Vector::from_coordinates(s2, {P(s2, "x*y")})));
}

TEST_CASE("element_power does not depend on the representative") {
  auto s = make_ring(2, {"x", "y"});
  auto R = make_quotient(s);
  PresentedModule m(R, 1, M(s, 1, {{"x"}}));
  auto a = element_power(m.vector({"y"}), 2, 1);
  auto b = element_power(m.vector({"y+x"}), 2, 1);
  CHECK(frobenius_module(m, 1).equal(a, b));

  std::mt19937 rng(23);
  for (std::uint32_t p : {2u, 3u}) {
    auto sp = make_ring(p, {"x", "y"});
    auto Rp = make_quotient(sp, {P(sp, "x^2*y")});
    for (int trial = 0; trial < 25; ++trial) {
      std::vector<Vector> rels{testing::random_vector(rng, sp, 2, 2, 2)};
      PresentedModule mod(Rp, 2, Matrix::from_columns(sp, 2, rels));
      Vector z = testing::random_vector(rng, sp, 2, 2, 2);
      Vector z2 = z + rels[0] * testing::random_polynomial(rng, sp, 1, 2) + Vector::unit(sp, 2, 1) * P(sp, "x^2*y");
      for (unsigned e = 1; e <= 2; ++e) {
        CHECK(frobenius_module(mod, e).equal(element_power(z, p, e), element_power(z2, p, e)));
      }
    }
  }
}

TEST_CASE("bracket powers") {
  auto s = make_ring(2, {"x", "y"});
  auto R = make_quotient(s);
  auto free = PresentedModule::free(R, 1);
  Submodule n(free, {free.vector({"x"}), free.vector({"y"})});
  auto b = bracket_power(n, 2);
  Submodule expected(free, {free.vector({"x^4"}), free.vector({"y^4"})});
  CHECK(b.equals(expected));
  CHECK(bracket_power(Submodule::zero(free), 3).generators().empty());

  ModuleMap beta(PresentedModule::free(R, 2), free, M(s, 2, {{"x", "y"}}));
  CHECK(frobenius_map(beta, 1).image().equals(bracket_power(beta.image(), 1)));
}

TEST_CASE("tensor products") {
  auto s = make_ring(2, {"x", "y"});
  auto R = make_quotient(s);
  PresentedModule a(R, 1, M(s, 1, {{"x"}}));
  PresentedModule b(R, 1, M(s, 1, {{"y"}}));
  auto t = tensor(a, b);
  CHECK(t.rank() == 1);
  CHECK(t.relations() == M(s, 2, {{"x", "y"}}));
  auto r = PresentedModule::free(R, 1);
  auto ar = tensor(a, r);
  // Mutual surjections by the identity matrix.
  ModuleMap f(a, ar, Matrix::identity(s, 1));
  ModuleMap g(ar, a, Matrix::identity(s, 1));
  CHECK(f.is_surjective());
  CHECK(g.is_surjective());
}

TEST_CASE("quotient by a sequence") {
  auto s = make_ring(2, {"x", "y"});
  auto node = make_quotient(s, {P(s, "x*y")});
  auto q = quotient_by_sequence(PresentedModule::free(node, 1), {P(s, "x")});
  CHECK(!q.module.is_zero_module());
  CHECK(q.module.is_zero(q.module.vector({"x"})));
  CHECK(q.projection.is_surjective());
  auto same = quotient_by_sequence(PresentedModule::free(node, 1), {});
  CHECK(same.module.relations().cols() == 0);
  CHECK_THROWS_AS(quotient_by_sequence(PresentedModule::free(node, 1), {P(s, "x+1")}), InputError);
}

TEST_CASE("ill-defined maps are rejected") {
  auto s = make_ring(2, {"x", "y"});
  auto R = make_quotient(s);
  PresentedModule a(R, 1, M(s, 1, {{"x"}}));
  PresentedModule b(R, 1, M(s, 1, {{"y"}}));
  CHECK_THROWS_AS(ModuleMap(a, b, Matrix::identity(s, 1)), InputError);
  CHECK_NOTHROW(ModuleMap(a, b, M(s, 1, {{"y"}})));
}

TEST_CASE("kernels and images of maps") {
  auto s = make_ring(2, {"x", "y"});
  auto node = make_quotient(s, {P(s, "x*y")});
  auto r = PresentedModule::free(node, 1);
  ModuleMap mult_x(r, r, M(s, 1, {{"x"}}));
  auto k = mult_x.kernel();
  REQUIRE(k.generators().size() == 1);
  CHECK(k.generators()[0] == r.vector({"y"}));
  CHECK(!mult_x.is_injective());
  CHECK(!mult_x.is_surjective());
}
