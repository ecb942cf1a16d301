#include "phantom/ring/dimension.hpp"

#include <algorithm>

#include "phantom/ring/errors.hpp"

namespace phantom {

namespace {

std::uint32_t support_mask(const Monomial& m, std::size_t nvars) {
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < nvars; ++i) {
    if (m.exp[i] != 0) mask |= 1u << i;
  }
  return mask;
}

}  // namespace

int krull_dimension(const RingPtr& ring, const std::vector<Polynomial>& ideal) {
  const std::size_t n = ring->nvars();
  std::vector<Polynomial> gens;
  for (const auto& f : ideal) {
    if (!f.is_zero()) gens.push_back(f);
  }
  if (gens.empty()) return static_cast<int>(n);
  auto basis = buchberger(gens);
  std::vector<std::uint32_t> leads;
  for (const auto& g : basis) {
    if (g.lead().mono.is_one()) return -1;
    leads.push_back(support_mask(g.lead().mono, n));
  }
  int best = 0;
  for (std::uint32_t set = 0; set < (1u << n); ++set) {
    int size = __builtin_popcount(set);
    if (size <= best) continue;
    bool independent = std::none_of(leads.begin(), leads.end(), [&](std::uint32_t l) { return (l & ~set) == 0; });
    if (independent) best = size;
  }
  return best;
}

int krull_dimension(const QuotientRing& ring, const std::vector<Polynomial>& ideal) {
  std::vector<Polynomial> all = ring.ideal();
  all.insert(all.end(), ideal.begin(), ideal.end());
  return krull_dimension(ring.ambient(), all);
}

std::vector<VariableSet> monomial_minimal_primes(const RingPtr& ring, const std::vector<Polynomial>& ideal) {
  const std::size_t n = ring->nvars();
  std::vector<Polynomial> gens;
  for (const auto& f : ideal) {
    if (!f.is_zero()) gens.push_back(f);
  }
  std::vector<std::uint32_t> supports;
  for (const auto& g : buchberger(gens)) {
    if (!g.is_monomial()) {
      throw UnsupportedInput("minimal primes need a monomial ideal; found " + g.to_string());
    }
    if (g.lead().mono.is_one()) return {};
    supports.push_back(support_mask(g.lead().mono, n));
  }
  std::vector<std::uint32_t> covers;
  std::vector<std::uint32_t> order(1u << n);
  for (std::uint32_t s = 0; s < order.size(); ++s) order[s] = s;
  std::stable_sort(order.begin(), order.end(),
                   [](std::uint32_t a, std::uint32_t b) { return __builtin_popcount(a) < __builtin_popcount(b); });
  for (std::uint32_t set : order) {
    bool covers_all = std::all_of(supports.begin(), supports.end(), [&](std::uint32_t s) { return (s & set) != 0; });
    if (!covers_all) continue;
    bool minimal = std::none_of(covers.begin(), covers.end(), [&](std::uint32_t c) { return (c & ~set) == 0; });
    if (minimal) covers.push_back(set);
  }
  std::vector<VariableSet> primes;
  for (std::uint32_t c : covers) {
    VariableSet vars;
    for (std::size_t i = 0; i < n; ++i) {
      if (c & (1u << i)) vars.push_back(i);
    }
    primes.push_back(vars);
  }
  std::sort(primes.begin(), primes.end());
  return primes;
}

std::vector<Polynomial> prime_generators(const RingPtr& ring, const VariableSet& vars) {
  std::vector<Polynomial> gens;
  for (std::size_t v : vars) gens.push_back(Polynomial::variable(ring, v));
  return gens;
}

}  // namespace phantom
