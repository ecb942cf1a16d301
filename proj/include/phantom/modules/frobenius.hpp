#pragma once

#include <vector>

#include "phantom/modules/presented_module.hpp"

namespace phantom {

std::uint64_t frobenius_q(const QuotientRing& ring, unsigned e);

// Entrywise q-th powers, q = p^e. The J-columns are never raised.
Matrix frobenius_matrix(const Matrix& a, std::uint32_t p, unsigned e);
PresentedModule frobenius_module(const PresentedModule& m, unsigned e);
ModuleMap frobenius_map(const ModuleMap& f, unsigned e);

// z^q in F^e(M).
Vector element_power(const Vector& z, std::uint32_t p, unsigned e);
// N^[q] inside F^e(M), generated by the q-th powers of the generators of N.
Submodule bracket_power(const Submodule& n, unsigned e);

// M (x) N presented by the blocks A (x) id and id (x) B; index (i, k) -> i*rank(N) + k.
PresentedModule tensor(const PresentedModule& m, const PresentedModule& n);
// f (x) id_N.
ModuleMap tensor_map(const ModuleMap& f, const PresentedModule& n);
PresentedModule direct_power(const PresentedModule& m, std::size_t copies);

struct SequenceQuotient {
  PresentedModule module;
  ModuleMap projection;
};

// M / (x_1, ..., x_n) M; every x_i must lie in the maximal ideal.
SequenceQuotient quotient_by_sequence(const PresentedModule& m, const std::vector<Polynomial>& xs);

}  // namespace phantom
