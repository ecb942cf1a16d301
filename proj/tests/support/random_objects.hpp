#pragma once

#include <random>
#include <vector>

#include "phantom/ring/polynomial.hpp"

namespace phantom::testing {

// Random polynomial with at most `terms` terms of total degree <= max_degree.
inline Polynomial random_polynomial(std::mt19937& rng, const RingPtr& ring, int max_degree, int terms,
                                    bool allow_constant = true) {
  std::uniform_int_distribution<Coeff> coef(1, ring->characteristic() - 1);
  std::uniform_int_distribution<int> deg(allow_constant ? 0 : 1, max_degree);
  std::vector<Term> out;
  for (int t = 0; t < terms; ++t) {
    int d = deg(rng);
    Monomial m;
    for (int k = 0; k < d; ++k) {
      std::size_t v = std::uniform_int_distribution<std::size_t>(0, ring->nvars() - 1)(rng);
      m.exp[v]++;
    }
    m.degree = static_cast<std::uint32_t>(d);
    out.push_back({coef(rng), m});
  }
  return Polynomial::from_terms(ring, out);
}

// Random homogeneous polynomial of the given degree.
inline Polynomial random_homogeneous(std::mt19937& rng, const RingPtr& ring, int degree, int terms) {
  std::uniform_int_distribution<Coeff> coef(1, ring->characteristic() - 1);
  std::vector<Term> out;
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    for (int k = 0; k < degree; ++k) {
      std::size_t v = std::uniform_int_distribution<std::size_t>(0, ring->nvars() - 1)(rng);
      m.exp[v]++;
    }
    m.degree = static_cast<std::uint32_t>(degree);
    out.push_back({coef(rng), m});
  }
  return Polynomial::from_terms(ring, out);
}

inline Vector random_vector(std::mt19937& rng, const RingPtr& ring, std::size_t rank, int max_degree, int terms) {
  std::vector<Polynomial> coords;
  for (std::size_t i = 0; i < rank; ++i) coords.push_back(random_polynomial(rng, ring, max_degree, terms));
  return Vector::from_coordinates(ring, coords);
}

}  // namespace phantom::testing
