#include "phantom/modules/frobenius.hpp"

#include "phantom/ring/errors.hpp"

namespace phantom {

std::uint64_t frobenius_q(const QuotientRing& ring, unsigned e) { return frobenius_power(ring.characteristic(), e); }

Matrix frobenius_matrix(const Matrix& a, std::uint32_t p, unsigned e) {
  if (e == 0) return a;
  return a.frobenius(frobenius_power(p, e));
}

PresentedModule frobenius_module(const PresentedModule& m, unsigned e) {
  if (e == 0) return m;
  return PresentedModule(m.ring(), m.rank(), frobenius_matrix(m.relations(), m.ring()->characteristic(), e));
}

ModuleMap frobenius_map(const ModuleMap& f, unsigned e) {
  if (e == 0) return f;
  return ModuleMap::unchecked(frobenius_module(f.source(), e), frobenius_module(f.target(), e),
                              frobenius_matrix(f.matrix(), f.source().ring()->characteristic(), e));
}

Vector element_power(const Vector& z, std::uint32_t p, unsigned e) {
  if (e == 0) return z;
  return z.frobenius(frobenius_power(p, e));
}

Submodule bracket_power(const Submodule& n, unsigned e) {
  if (e == 0) return n;
  const std::uint32_t p = n.ambient().ring()->characteristic();
  std::vector<Vector> gens;
  gens.reserve(n.generators().size());
  for (const auto& g : n.generators()) gens.push_back(element_power(g, p, e));
  return Submodule(frobenius_module(n.ambient(), e), std::move(gens));
}

PresentedModule tensor(const PresentedModule& m, const PresentedModule& n) {
  if (m.ring()->signature() != n.ring()->signature()) throw RingMismatch("tensor of modules over different rings");
  const RingPtr& s = m.ambient();
  Matrix left = m.relations().kronecker(Matrix::identity(s, n.rank()));
  Matrix right = Matrix::identity(s, m.rank()).kronecker(n.relations());
  return PresentedModule(m.ring(), m.rank() * n.rank(), left.hconcat(right));
}

ModuleMap tensor_map(const ModuleMap& f, const PresentedModule& n) {
  return ModuleMap::unchecked(tensor(f.source(), n), tensor(f.target(), n),
                              f.matrix().kronecker(Matrix::identity(n.ambient(), n.rank())));
}

PresentedModule direct_power(const PresentedModule& m, std::size_t copies) {
  Matrix rel = Matrix::identity(m.ambient(), copies).kronecker(m.relations());
  return PresentedModule(m.ring(), m.rank() * copies, std::move(rel));
}

SequenceQuotient quotient_by_sequence(const PresentedModule& m, const std::vector<Polynomial>& xs) {
  std::vector<Vector> extra;
  for (const auto& x : xs) {
    if (!m.ring()->in_maximal_ideal(x)) {
      throw InputError("sequence element " + x.to_string() + " is not in the maximal ideal");
    }
    for (std::size_t i = 0; i < m.rank(); ++i) extra.push_back(m.unit(i) * x);
  }
  Matrix rel = m.relations().hconcat(Matrix::from_columns(m.ambient(), m.rank(), extra));
  PresentedModule q(m.ring(), m.rank(), std::move(rel));
  ModuleMap proj = ModuleMap::unchecked(m, q, Matrix::identity(m.ambient(), m.rank()));
  return {std::move(q), std::move(proj)};
}

}  // namespace phantom
