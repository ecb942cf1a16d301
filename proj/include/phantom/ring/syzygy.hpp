#pragma once

#include <optional>
#include <vector>

#include "phantom/ring/groebner.hpp"

namespace phantom {

// Both routines work with one Groebner basis of the rows (c_j, e_j) and
// (r_k, 0) in S^(m+n), position-over-term with the target block on top.

// Generators of { a in S^n : sum a_j c_j lies in span(relations) } for
// columns c_j in S^m.
std::vector<Vector> module_kernel(const RingPtr& ring, std::size_t target_rank, const std::vector<Vector>& columns,
                                  const std::vector<Vector>& relations);

// Coefficients a with z - sum a_j c_j in span(relations), or nullopt.
std::optional<std::vector<Polynomial>> lift(const Vector& z, const std::vector<Vector>& columns,
                                            const std::vector<Vector>& relations);

}  // namespace phantom
