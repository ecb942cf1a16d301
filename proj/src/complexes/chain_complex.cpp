#include "phantom/complexes/chain_complex.hpp"

#include <algorithm>
#include <bit>

#include "phantom/ring/errors.hpp"

namespace phantom {

ChainComplex::ChainComplex(QRingPtr ring, int lo, std::vector<PresentedModule> modules,
                           std::vector<Matrix> differentials)
    : ring_(std::move(ring)), lo_(lo), modules_(std::move(modules)) {
  if (modules_.empty()) throw InputError("a complex needs at least one module");
  if (differentials.size() + 1 != modules_.size()) {
    throw InputError("a complex with " + std::to_string(modules_.size()) + " modules needs " +
                     std::to_string(modules_.size() - 1) + " differentials");
  }
  for (std::size_t k = 0; k < differentials.size(); ++k) {
    const auto& a = differentials[k];
    if (a.rows() != modules_[k].rank() || a.cols() != modules_[k + 1].rank()) {
      throw InputError("differential d_" + std::to_string(lo_ + static_cast<int>(k) + 1) + " has the wrong shape");
    }
    maps_.emplace_back(modules_[k + 1], modules_[k], a);
  }
  for (std::size_t k = 1; k < maps_.size(); ++k) {
    for (const auto& g : maps_[k].source().generators()) {
      if (!maps_[k - 1].target().is_zero(maps_[k - 1].apply(maps_[k].apply(g)))) {
        throw InputError("d_" + std::to_string(lo_ + static_cast<int>(k)) + " d_" +
                         std::to_string(lo_ + static_cast<int>(k) + 1) + " is not zero");
      }
    }
  }
}

ChainComplex::ChainComplex(Trusted, QRingPtr ring, int lo, std::vector<PresentedModule> modules,
                           std::vector<ModuleMap> maps)
    : ring_(std::move(ring)), lo_(lo), modules_(std::move(modules)), maps_(std::move(maps)) {}

PresentedModule ChainComplex::module(int i) const {
  if (i < lo_ || i > hi()) return PresentedModule::free(ring_, 0);
  return modules_[static_cast<std::size_t>(i - lo_)];
}

ModuleMap ChainComplex::differential(int i) const {
  if (i <= lo_ || i > hi()) return ModuleMap::zero(module(i), module(i - 1));
  return maps_[static_cast<std::size_t>(i - lo_ - 1)];
}

ChainComplex ChainComplex::frobenius(unsigned e) const {
  if (e == 0) return *this;
  std::vector<PresentedModule> mods;
  std::vector<ModuleMap> maps;
  for (const auto& m : modules_) mods.push_back(frobenius_module(m, e));
  for (const auto& f : maps_) maps.push_back(frobenius_map(f, e));
  return ChainComplex(Trusted{}, ring_, lo_, std::move(mods), std::move(maps));
}

namespace {

// k-subsets of {0..n-1} in colex order, as bitmasks.
std::vector<unsigned> colex_subsets(std::size_t n, int k) {
  std::vector<unsigned> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) == k) out.push_back(mask);
  }
  // Colex: compare largest differing element; as integers this is numeric order.
  return out;
}

}  // namespace

Matrix koszul_matrix(const RingPtr& ring, const std::vector<Polynomial>& xs, int k) {
  const std::size_t n = xs.size();
  auto src = colex_subsets(n, k);
  auto dst = colex_subsets(n, k - 1);
  Matrix a(ring, dst.size(), src.size());
  if (k < 1 || k > static_cast<int>(n)) return a;
  for (std::size_t col = 0; col < src.size(); ++col) {
    int s = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (!(src[col] >> j & 1u)) continue;
      ++s;
      unsigned target = src[col] & ~(1u << j);
      std::size_t row = std::lower_bound(dst.begin(), dst.end(), target) - dst.begin();
      a.set(row, col, s % 2 == 1 ? xs[j] : -xs[j]);
    }
  }
  return a;
}

ChainComplex koszul(const std::vector<Polynomial>& xs, const PresentedModule& m) {
  const RingPtr& s = m.ambient();
  for (const auto& x : xs) require_same_ring(s, x.ring(), "Koszul sequence");
  const int n = static_cast<int>(xs.size());
  std::vector<PresentedModule> mods;
  std::vector<Matrix> diffs;
  for (int k = 0; k <= n; ++k) {
    mods.push_back(direct_power(m, colex_subsets(xs.size(), k).size()));
    if (k > 0) diffs.push_back(koszul_matrix(s, xs, k).kronecker(Matrix::identity(s, m.rank())));
  }
  return ChainComplex(m.ring(), 0, std::move(mods), std::move(diffs));
}

Submodule canonical_generators(const Submodule& n) {
  std::vector<Vector> gens = n.generators();
  const PolyRing& ring = *n.ambient().ambient();
  std::stable_sort(gens.begin(), gens.end(), [&](const Vector& a, const Vector& b) {
    if (a.is_zero() || b.is_zero()) return !a.is_zero() && b.is_zero();
    return compare_terms(ring, a.lead(), b.lead()) > 0;
  });
  return Submodule(n.ambient(), std::move(gens));
}

HomologyData homology_data(const ChainComplex& c, int i, unsigned e) {
  PresentedModule ci = frobenius_module(c.module(i), e);
  HomologyData out{e, i, Submodule::zero(ci), Submodule::zero(ci)};
  if (i < c.lo() || i > c.hi()) return out;
  out.cycles = i == c.lo() ? Submodule::whole(ci) : canonical_generators(frobenius_map(c.differential(i), e).kernel());
  if (i < c.hi()) out.boundaries = frobenius_map(c.differential(i + 1), e).image();
  return out;
}

bool is_cycle(const ChainComplex& c, int i, unsigned e, const Vector& z) {
  if (i <= c.lo() || i > c.hi()) return true;
  auto d = frobenius_map(c.differential(i), e);
  return d.target().is_zero(d.apply(z));
}

bool exact_at(const ChainComplex& c, int i, unsigned e) {
  auto h = homology_data(c, i, e);
  return h.boundaries.contains(h.cycles);
}

}  // namespace phantom
