#pragma once

#include <vector>

#include "phantom/ring/quotient_ring.hpp"

namespace phantom {

// Krull dimension of S/I as the largest set of variables independent modulo
// the initial ideal; -1 for the unit ideal.
int krull_dimension(const RingPtr& ring, const std::vector<Polynomial>& ideal);
// dim R/I for R = S/J.
int krull_dimension(const QuotientRing& ring, const std::vector<Polynomial>& ideal = {});

using VariableSet = std::vector<std::size_t>;

// Minimal primes of a monomial ideal, each generated by the variables of a
// minimal vertex cover of the generator supports. Throws UnsupportedInput if
// the reduced Groebner basis is not monomial.
std::vector<VariableSet> monomial_minimal_primes(const RingPtr& ring, const std::vector<Polynomial>& ideal);

std::vector<Polynomial> prime_generators(const RingPtr& ring, const VariableSet& vars);

}  // namespace phantom
