#include "phantom/ring/syzygy.hpp"

#include "phantom/ring/errors.hpp"

namespace phantom {

namespace {

BasisPtr augmented_basis(const RingPtr& ring, std::size_t m, const std::vector<Vector>& columns,
                         const std::vector<Vector>& relations) {
  const std::size_t n = columns.size();
  std::vector<Vector> rows;
  rows.reserve(n + relations.size());
  for (std::size_t j = 0; j < n; ++j) {
    if (columns[j].rank() != m) throw InputError("column rank mismatch");
    rows.push_back(columns[j].embed(m + n, 0) + Vector::unit(ring, m + n, m + j));
  }
  for (const auto& r : relations) {
    if (r.rank() != m) throw InputError("relation rank mismatch");
    if (!r.is_zero()) rows.push_back(r.embed(m + n, 0));
  }
  return groebner(ring, m + n, rows);
}

}  // namespace

std::vector<Vector> module_kernel(const RingPtr& ring, std::size_t target_rank, const std::vector<Vector>& columns,
                                  const std::vector<Vector>& relations) {
  const std::size_t m = target_rank;
  const std::size_t n = columns.size();
  if (n == 0) return {};
  auto basis = augmented_basis(ring, m, columns, relations);
  std::vector<Vector> kernel;
  for (const auto& g : basis->elements()) {
    if (g.lead().pos >= m) kernel.push_back(g.slice(m, m + n));
  }
  return kernel;
}

std::optional<std::vector<Polynomial>> lift(const Vector& z, const std::vector<Vector>& columns,
                                            const std::vector<Vector>& relations) {
  const RingPtr& ring = z.ring();
  const std::size_t m = z.rank();
  const std::size_t n = columns.size();
  auto basis = augmented_basis(ring, m, columns, relations);
  Vector r = basis->reduce(z.embed(m + n, 0));
  if (!r.is_zero() && r.lead().pos < m) return std::nullopt;
  auto coords = (-r).slice(m, m + n).coordinates();
  return coords;
}

}  // namespace phantom
