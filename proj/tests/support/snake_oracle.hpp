#pragma once

// Textbook snake map for split short exact sequences of two-term complexes
// over F_2[x], with its own bit-packed polynomial arithmetic.

#include <array>
#include <cstdint>
#include <random>
#include <string>

#include "phantom/complexes/sequence.hpp"
#include "phantom/ring/parser.hpp"

namespace phantom::testing {

struct BitPoly {
  std::uint64_t bits = 0;

  bool iszero() const { return bits == 0; }
  BitPoly operator+(BitPoly o) const { return {bits ^ o.bits}; }
  BitPoly operator*(BitPoly o) const {
    std::uint64_t r = 0;
    for (int i = 0; i < 64; ++i) {
      if (bits >> i & 1u) r ^= o.bits << i;
    }
    return {r};
  }
  // f(x)^q = f(x^q) in characteristic 2.
  BitPoly frob(std::uint64_t q) const {
    std::uint64_t r = 0;
    for (int i = 0; i < 64; ++i) {
      if (bits >> i & 1u) r |= std::uint64_t{1} << (i * q);
    }
    return {r};
  }
  BitPoly pow(std::uint64_t n) const {
    BitPoly r{1};
    for (std::uint64_t k = 0; k < n; ++k) r = r * *this;
    return r;
  }
  std::string str() const {
    if (!bits) return "0";
    std::string s;
    for (int i = 63; i >= 0; --i) {
      if (!(bits >> i & 1u)) continue;
      if (!s.empty()) s += "+";
      s += i == 0 ? "1" : i == 1 ? "x" : "x^" + std::to_string(i);
    }
    return s;
  }
};

struct BitVec2 {
  BitPoly a, b;
  bool iszero() const { return a.iszero() && b.iszero(); }
};

// L: R^2 --[l1 l2]--> R,  N: R^2 --[f g]--> R,  M = L (+) N with
// d^M = [[l1 l2 h1 h2], [0 0 f g]]. alpha includes, beta projects.
struct SplitInstance {
  std::array<BitPoly, 2> dl;
  std::array<BitPoly, 2> h;
  std::array<BitPoly, 2> dn;
};

inline SplitInstance random_split_instance(std::mt19937& rng) {
  std::uniform_int_distribution<std::uint64_t> small(0, 7);
  std::uniform_int_distribution<std::uint64_t> nonzero(1, 7);
  return {{BitPoly{small(rng)}, BitPoly{small(rng)}},
          {BitPoly{nonzero(rng)}, BitPoly{small(rng)}},
          {BitPoly{nonzero(rng)}, BitPoly{small(rng)}}};
}

inline ShortSPSequence build_split_sequence(const SplitInstance& in, const QRingPtr& ring) {
  const RingPtr& s = ring->ambient();
  auto p = [&](BitPoly b) { return parse_polynomial(b.str(), s); };
  auto mat = [&](std::size_t cols, std::vector<std::vector<Polynomial>> rows) {
    return Matrix::from_rows(s, cols, rows);
  };
  Polynomial zero = p(BitPoly{0});
  Polynomial one = p(BitPoly{1});
  auto free = [&](std::size_t n) { return PresentedModule::free(ring, n); };
  ChainComplex l(ring, 0, {free(1), free(2)}, {mat(2, {{p(in.dl[0]), p(in.dl[1])}})});
  ChainComplex n(ring, 0, {free(1), free(2)}, {mat(2, {{p(in.dn[0]), p(in.dn[1])}})});
  ChainComplex m(ring, 0, {free(2), free(4)},
                 {mat(4, {{p(in.dl[0]), p(in.dl[1]), p(in.h[0]), p(in.h[1])}, {zero, zero, p(in.dn[0]), p(in.dn[1])}})});
  std::vector<Matrix> alpha{mat(1, {{one}, {zero}}), mat(2, {{one, zero}, {zero, one}, {zero, zero}, {zero, zero}})};
  std::vector<Matrix> beta{mat(2, {{zero, one}}), mat(4, {{zero, zero, one, zero}, {zero, zero, zero, one}})};
  return ShortSPSequence(l, m, n, alpha, beta);
}

// (g^q, f^q) is a cycle of F^e(N) at degree 1.
inline BitVec2 split_cycle(const SplitInstance& in, unsigned e) {
  const std::uint64_t q = std::uint64_t{1} << e;
  return {in.dn[1].frob(q), in.dn[0].frob(q)};
}

// Classical connecting map at level e: z lifts to (0, z), d^M(0, z) = (h^[q] z, 0),
// so x0 = h^[q] z. The phantom version is c^(1 + q'') x0^(q' q'').
inline BitPoly snake_oracle(const SplitInstance& in, BitVec2 z, unsigned e, unsigned e1, unsigned e2, BitPoly c) {
  const std::uint64_t q = std::uint64_t{1} << e;
  BitPoly x0 = in.h[0].frob(q) * z.a + in.h[1].frob(q) * z.b;
  const std::uint64_t q2 = std::uint64_t{1} << e2;
  return c.pow(1 + q2) * x0.frob((std::uint64_t{1} << e1) * q2);
}

}  // namespace phantom::testing
