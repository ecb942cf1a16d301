#include "phantom/modules/presented_module.hpp"

#include "phantom/ring/errors.hpp"
#include "phantom/ring/parser.hpp"
#include "phantom/ring/syzygy.hpp"

namespace phantom {

PresentedModule::PresentedModule(QRingPtr ring, std::size_t rank, Matrix relations)
    : ring_(std::move(ring)), rank_(rank), relations_(std::move(relations)) {
  if (!relations_.ring()) relations_ = Matrix(ring_->ambient(), rank_, 0);
  if (relations_.rows() != rank_) throw InputError("relation matrix must have one row per generator");
  require_same_ring(ring_->ambient(), relations_.ring(), "presented module");
}

PresentedModule PresentedModule::free(QRingPtr ring, std::size_t rank) {
  Matrix empty(ring->ambient(), rank, 0);
  return PresentedModule(std::move(ring), rank, std::move(empty));
}

std::vector<Vector> PresentedModule::relation_vectors() const {
  std::vector<Vector> rels = relations_.columns();
  auto j = ring_->ideal_columns(rank_);
  rels.insert(rels.end(), j.begin(), j.end());
  return rels;
}

BasisPtr PresentedModule::relation_basis() const { return groebner(ambient(), rank_, relation_vectors()); }

Vector PresentedModule::reduce(const Vector& v) const {
  if (v.rank() != rank_) throw InputError("element has the wrong number of coordinates");
  return relation_basis()->reduce(v);
}

bool PresentedModule::is_zero(const Vector& v) const { return reduce(v).is_zero(); }

bool PresentedModule::is_zero_module() const { return relation_basis()->is_everything(); }

Vector PresentedModule::vector(const std::vector<std::string>& coords) const {
  if (coords.size() != rank_) throw InputError("element has the wrong number of coordinates");
  std::vector<Polynomial> polys;
  for (const auto& c : coords) polys.push_back(parse_polynomial(c, ambient()));
  return Vector::from_coordinates(ambient(), polys);
}

std::vector<Vector> PresentedModule::generators() const {
  std::vector<Vector> gens;
  for (std::size_t i = 0; i < rank_; ++i) {
    if (!is_zero(unit(i))) gens.push_back(unit(i));
  }
  return gens;
}

// ----------------------------------------------------------------- Submodule

Submodule::Submodule(PresentedModule ambient, std::vector<Vector> generators)
    : ambient_(std::move(ambient)), generators_(std::move(generators)) {
  for (const auto& g : generators_) {
    if (g.rank() != ambient_.rank()) throw InputError("submodule generator has the wrong rank");
  }
}

Submodule Submodule::whole(PresentedModule ambient) {
  std::vector<Vector> gens;
  for (std::size_t i = 0; i < ambient.rank(); ++i) gens.push_back(ambient.unit(i));
  return Submodule(std::move(ambient), std::move(gens));
}

BasisPtr Submodule::basis() const {
  std::vector<Vector> all = generators_;
  auto rels = ambient_.relation_vectors();
  all.insert(all.end(), rels.begin(), rels.end());
  return groebner(ambient_.ambient(), ambient_.rank(), all);
}

Vector Submodule::reduce(const Vector& v) const {
  if (v.rank() != ambient_.rank()) throw InputError("element has the wrong number of coordinates");
  return basis()->reduce(v);
}

bool Submodule::contains(const Vector& v) const { return reduce(v).is_zero(); }

bool Submodule::contains(const Submodule& other) const {
  auto b = basis();
  for (const auto& g : other.generators()) {
    if (!b->contains(g)) return false;
  }
  return true;
}

PresentedModule Submodule::quotient() const {
  Matrix extra = Matrix::from_columns(ambient_.ambient(), ambient_.rank(), generators_);
  return PresentedModule(ambient_.ring(), ambient_.rank(), ambient_.relations().hconcat(extra));
}

// ----------------------------------------------------------------- ModuleMap

ModuleMap::ModuleMap(PresentedModule source, PresentedModule target, Matrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  if (matrix_.rows() != target_.rank() || matrix_.cols() != source_.rank()) {
    throw InputError("map matrix must be target rank x source rank");
  }
  if (source_.ring()->signature() != target_.ring()->signature()) throw RingMismatch("map between different rings");
  auto target_basis = target_.relation_basis();
  for (const auto& r : source_.relations().columns()) {
    if (!target_basis->contains(matrix_.apply(r))) {
      throw InputError("map is not well defined: a relation of the source maps outside the target relations");
    }
  }
}

ModuleMap ModuleMap::unchecked(PresentedModule source, PresentedModule target, Matrix matrix) {
  ModuleMap f;
  f.source_ = std::move(source);
  f.target_ = std::move(target);
  f.matrix_ = std::move(matrix);
  return f;
}

ModuleMap ModuleMap::identity(const PresentedModule& m) {
  return unchecked(m, m, Matrix::identity(m.ambient(), m.rank()));
}

ModuleMap ModuleMap::zero(PresentedModule source, PresentedModule target) {
  Matrix z(source.ambient(), target.rank(), source.rank());
  return unchecked(std::move(source), std::move(target), std::move(z));
}

Submodule ModuleMap::kernel() const {
  auto raw = module_kernel(source_.ambient(), target_.rank(), matrix_.columns(), target_.relation_vectors());
  std::vector<Vector> gens;
  auto source_basis = source_.relation_basis();
  for (auto& k : raw) {
    Vector r = source_basis->reduce(k);
    if (!r.is_zero()) gens.push_back(std::move(r));
  }
  return Submodule(source_, std::move(gens));
}

Submodule ModuleMap::image() const { return Submodule(target_, matrix_.columns()); }

Submodule ModuleMap::preimage(const Submodule& n) const {
  std::vector<Vector> rels = n.generators();
  auto trels = target_.relation_vectors();
  rels.insert(rels.end(), trels.begin(), trels.end());
  auto raw = module_kernel(source_.ambient(), target_.rank(), matrix_.columns(), rels);
  std::vector<Vector> gens;
  auto source_basis = source_.relation_basis();
  for (auto& k : raw) {
    Vector r = source_basis->reduce(k);
    if (!r.is_zero()) gens.push_back(std::move(r));
  }
  return Submodule(source_, std::move(gens));
}

bool ModuleMap::is_surjective() const { return image().contains(Submodule::whole(target_)); }

bool ModuleMap::is_injective() const { return kernel().generators().empty(); }

bool ModuleMap::equals(const ModuleMap& o) const {
  if (matrix_.rows() != o.matrix_.rows() || matrix_.cols() != o.matrix_.cols()) return false;
  for (std::size_t j = 0; j < source_.rank(); ++j) {
    if (!target_.is_zero(matrix_.column(j) - o.matrix_.column(j))) return false;
  }
  return true;
}

ModuleMap ModuleMap::then(const ModuleMap& after) const {
  if (after.source_.rank() != target_.rank()) throw InputError("maps do not compose");
  return unchecked(source_, after.target_, after.matrix_ * matrix_);
}

}  // namespace phantom
