#pragma once

#include <algorithm>
#include <vector>

#include "phantom/ring/prime_field.hpp"

namespace phantom::detail {

// Sorts descending, combines equal monomials and drops zeros.
template <class T, class Cmp>
void normalize(std::vector<T>& terms, const PrimeField& field, Cmp cmp) {
  std::sort(terms.begin(), terms.end(), [&](const T& a, const T& b) { return cmp(a, b) > 0; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    T acc = terms[i];
    std::size_t j = i + 1;
    while (j < terms.size() && cmp(terms[j], acc) == 0) {
      acc.coef = field.add(acc.coef, terms[j].coef);
      ++j;
    }
    if (acc.coef != 0) terms[out++] = acc;
    i = j;
  }
  terms.resize(out);
}

// a + s*b for sorted term lists where b is already multiplied out.
template <class T, class Cmp>
std::vector<T> merge(const std::vector<T>& a, const std::vector<T>& b, Coeff s,
                     const PrimeField& field, Cmp cmp) {
  std::vector<T> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int c = i == a.size() ? -1 : (j == b.size() ? 1 : cmp(a[i], b[j]));
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      T t = b[j++];
      t.coef = field.mul(t.coef, s);
      if (t.coef != 0) out.push_back(t);
    } else {
      T t = a[i++];
      t.coef = field.add(t.coef, field.mul(b[j++].coef, s));
      if (t.coef != 0) out.push_back(t);
    }
  }
  return out;
}

}  // namespace phantom::detail
