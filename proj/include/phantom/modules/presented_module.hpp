#pragma once

#include <string>
#include <vector>

#include "phantom/modules/matrix.hpp"
#include "phantom/ring/quotient_ring.hpp"

namespace phantom {

// M = coker(A) over R = S/J, with A a rank x k matrix over S. Elements are
// vectors of S^rank; the J-columns are appended only when a basis is needed.
class PresentedModule {
 public:
  PresentedModule() = default;
  PresentedModule(QRingPtr ring, std::size_t rank, Matrix relations);

  static PresentedModule free(QRingPtr ring, std::size_t rank);

  const QRingPtr& ring() const { return ring_; }
  const RingPtr& ambient() const { return ring_->ambient(); }
  std::size_t rank() const { return rank_; }
  const Matrix& relations() const { return relations_; }

  // Columns of A followed by the J-columns.
  std::vector<Vector> relation_vectors() const;
  BasisPtr relation_basis() const;
  Vector reduce(const Vector& v) const;
  bool is_zero(const Vector& v) const;
  bool equal(const Vector& a, const Vector& b) const { return is_zero(a - b); }
  bool is_zero_module() const;

  Vector unit(std::size_t i) const { return Vector::unit(ambient(), rank_, i); }
  Vector zero_vector() const { return Vector(ambient(), rank_); }
  Vector vector(const std::vector<std::string>& coords) const;
  // Nonzero unit vectors: generators of M.
  std::vector<Vector> generators() const;

 private:
  QRingPtr ring_;
  std::size_t rank_ = 0;
  Matrix relations_;
};

// N inside M, given by lifts of generators to S^rank.
class Submodule {
 public:
  Submodule() = default;
  Submodule(PresentedModule ambient, std::vector<Vector> generators);

  static Submodule zero(PresentedModule ambient) { return Submodule(std::move(ambient), {}); }
  static Submodule whole(PresentedModule ambient);

  const PresentedModule& ambient() const { return ambient_; }
  const std::vector<Vector>& generators() const { return generators_; }

  BasisPtr basis() const;
  Vector reduce(const Vector& v) const;
  bool contains(const Vector& v) const;
  bool contains(const Submodule& other) const;
  bool equals(const Submodule& other) const { return contains(other) && other.contains(*this); }
  // ambient / N
  PresentedModule quotient() const;

 private:
  PresentedModule ambient_;
  std::vector<Vector> generators_;
};

// phi: M -> N given by a target.rank x source.rank matrix. The constructor
// checks that relations of M map into relations of N.
class ModuleMap {
 public:
  ModuleMap() = default;
  ModuleMap(PresentedModule source, PresentedModule target, Matrix matrix);

  static ModuleMap unchecked(PresentedModule source, PresentedModule target, Matrix matrix);
  static ModuleMap identity(const PresentedModule& m);
  static ModuleMap zero(PresentedModule source, PresentedModule target);

  const PresentedModule& source() const { return source_; }
  const PresentedModule& target() const { return target_; }
  const Matrix& matrix() const { return matrix_; }

  Vector apply(const Vector& v) const { return matrix_.apply(v); }
  // Kernel generators, dropping those that vanish in the source.
  Submodule kernel() const;
  Submodule image() const;
  Submodule preimage(const Submodule& n) const;
  bool is_surjective() const;
  bool is_injective() const;
  // Equality of maps: agree on every generator of the source.
  bool equals(const ModuleMap& o) const;
  // after o this
  ModuleMap then(const ModuleMap& after) const;

 private:
  PresentedModule source_;
  PresentedModule target_;
  Matrix matrix_;
};

}  // namespace phantom
