#pragma once

// Ideal membership for homogeneous ideals of F_p[x_1..x_n] by linear algebra
// in one degree: z of degree d lies in (g_1..g_k) iff it is in the span of
// m * g_i over monomials m of degree d - deg g_i. Own representation and own
// elimination; nothing here touches the Groebner code.

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace phantom::testing {

using Exps = std::vector<int>;

struct DensePoly {
  std::uint32_t p = 2;
  std::size_t n = 0;
  std::map<Exps, std::uint32_t> terms;  // nonzero coefficients only

  int degree() const {
    int d = -1;
    for (const auto& [e, c] : terms) {
      int s = 0;
      for (int k : e) s += k;
      d = std::max(d, s);
    }
    return d;
  }

  void add(const Exps& e, std::uint64_t c) {
    std::uint32_t v = static_cast<std::uint32_t>((terms.count(e) ? terms[e] : 0) + c % p) % p;
    if (v) {
      terms[e] = v;
    } else {
      terms.erase(e);
    }
  }

  DensePoly times_monomial(const Exps& m, std::uint32_t c) const {
    DensePoly out{p, n, {}};
    for (const auto& [e, a] : terms) {
      Exps s(n);
      for (std::size_t k = 0; k < n; ++k) s[k] = e[k] + m[k];
      out.add(s, std::uint64_t{a} * c);
    }
    return out;
  }

  DensePoly operator+(const DensePoly& o) const {
    DensePoly out = *this;
    for (const auto& [e, c] : o.terms) out.add(e, c);
    return out;
  }

  std::string str(const std::vector<std::string>& vars) const {
    if (terms.empty()) return "0";
    std::string s;
    for (const auto& [e, c] : terms) {
      if (!s.empty()) s += " + ";
      s += std::to_string(c);
      for (std::size_t k = 0; k < n; ++k) {
        if (e[k]) s += "*" + vars[k] + "^" + std::to_string(e[k]);
      }
    }
    return s;
  }
};

inline std::vector<Exps> monomials_of_degree(std::size_t n, int d) {
  std::vector<Exps> out;
  if (d < 0) return out;
  Exps e(n, 0);
  auto rec = [&](auto&& self, std::size_t k, int left) -> void {
    if (k + 1 == n) {
      e[k] = left;
      out.push_back(e);
      return;
    }
    for (int a = left; a >= 0; --a) {
      e[k] = a;
      self(self, k + 1, left - a);
    }
  };
  if (n == 0) return d == 0 ? std::vector<Exps>{Exps{}} : out;
  rec(rec, 0, d);
  return out;
}

inline DensePoly random_homogeneous_dense(std::mt19937& rng, std::uint32_t p, std::size_t n, int d, int terms) {
  DensePoly f{p, n, {}};
  auto mons = monomials_of_degree(n, d);
  std::uniform_int_distribution<std::size_t> pick(0, mons.size() - 1);
  std::uniform_int_distribution<std::uint32_t> coef(1, p - 1);
  for (int t = 0; t < terms; ++t) f.add(mons[pick(rng)], coef(rng));
  return f;
}

inline std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  std::uint64_t r = 1, b = a, e = p - 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

// z and every generator must be homogeneous.
inline bool dense_member(const DensePoly& z, const std::vector<DensePoly>& gens) {
  if (z.terms.empty()) return true;
  const std::uint32_t p = z.p;
  const int d = z.degree();
  auto cols = monomials_of_degree(z.n, d);
  std::map<Exps, std::size_t> index;
  for (std::size_t k = 0; k < cols.size(); ++k) index[cols[k]] = k;
  auto dense = [&](const DensePoly& f) {
    std::vector<std::uint32_t> row(cols.size(), 0);
    for (const auto& [e, c] : f.terms) row[index.at(e)] = c;
    return row;
  };

  // Row-reduce the spanning set, then reduce z against it.
  std::vector<std::vector<std::uint32_t>> basis;  // pivot rows
  std::vector<std::size_t> pivots;
  auto reduce = [&](std::vector<std::uint32_t> row) {
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const std::uint32_t c = row[pivots[b]];
      if (!c) continue;
      for (std::size_t k = 0; k < row.size(); ++k) {
        row[k] = static_cast<std::uint32_t>((row[k] + std::uint64_t{p - c} * basis[b][k]) % p);
      }
    }
    return row;
  };
  for (const auto& g : gens) {
    const int dg = g.degree();
    if (dg < 0 || dg > d) continue;
    for (const auto& m : monomials_of_degree(z.n, d - dg)) {
      auto row = reduce(dense(g.times_monomial(m, 1)));
      std::size_t piv = 0;
      while (piv < row.size() && !row[piv]) ++piv;
      if (piv == row.size()) continue;
      const std::uint32_t inv = inverse_mod(row[piv], p);
      for (auto& v : row) v = static_cast<std::uint32_t>(std::uint64_t{v} * inv % p);
      // Keep earlier pivot rows reduced against the new one.
      for (auto& b : basis) {
        const std::uint32_t c = b[piv];
        if (!c) continue;
        for (std::size_t k = 0; k < b.size(); ++k) b[k] = static_cast<std::uint32_t>((b[k] + std::uint64_t{p - c} * row[k]) % p);
      }
      basis.push_back(row);
      pivots.push_back(piv);
    }
  }
  for (auto v : reduce(dense(z))) {
    if (v) return false;
  }
  return true;
}

}  // namespace phantom::testing
