#include "phantom/ring/groebner.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "phantom/ring/errors.hpp"

namespace phantom {

namespace {

std::vector<std::vector<std::size_t>> index_positions(const std::vector<Vector>& divisors, std::size_t rank) {
  std::vector<std::vector<std::size_t>> by_position(rank);
  for (std::size_t k = 0; k < divisors.size(); ++k) {
    if (!divisors[k].is_zero()) by_position[divisors[k].lead().pos].push_back(k);
  }
  return by_position;
}

// Full division of f by the divisors. Terms are consumed from the front of a
// working list; irreducible leading terms move to the remainder.
Vector divide(const Vector& f, const std::vector<Vector>& divisors,
              const std::vector<std::vector<std::size_t>>& by_position,
              std::size_t skip = static_cast<std::size_t>(-1)) {
  const PolyRing& ring = *f.ring();
  const PrimeField& field = ring.field();
  std::vector<VTerm> h = f.terms();
  std::vector<VTerm> rem;
  std::vector<VTerm> next;
  std::size_t start = 0;
  while (start < h.size()) {
    const VTerm lt = h[start];
    const Vector* g = nullptr;
    if (lt.pos < by_position.size()) {
      for (std::size_t k : by_position[lt.pos]) {
        if (k != skip && divisors[k].lead().mono.divides(lt.mono)) {
          g = &divisors[k];
          break;
        }
      }
    }
    if (!g) {
      rem.push_back(lt);
      ++start;
      continue;
    }
    const VTerm& gl = g->lead();
    Coeff c = field.neg(gl.coef == 1 ? lt.coef : field.mul(lt.coef, field.inv(gl.coef)));
    Monomial m = div(lt.mono, gl.mono);
    const auto& gt = g->terms();
    next.clear();
    next.reserve(h.size() - start + gt.size());
    std::size_t i = start + 1, j = 1;
    while (i < h.size() || j < gt.size()) {
      if (j == gt.size()) {
        next.insert(next.end(), h.begin() + static_cast<std::ptrdiff_t>(i), h.end());
        break;
      }
      VTerm t{field.mul(gt[j].coef, c), gt[j].pos, mul(gt[j].mono, m)};
      int cmp = i == h.size() ? -1 : compare_terms(ring, h[i], t);
      if (cmp > 0) {
        next.push_back(h[i++]);
      } else if (cmp < 0) {
        next.push_back(t);
        ++j;
      } else {
        Coeff s = field.add(h[i].coef, t.coef);
        if (s != 0) next.push_back({s, t.pos, t.mono});
        ++i;
        ++j;
      }
    }
    std::swap(h, next);
    start = 0;
  }
  return Vector::from_sorted_terms(f.ring(), f.rank(), std::move(rem));
}

struct Pair {
  std::uint32_t degree;
  std::uint32_t i;
  std::uint32_t j;
  bool operator<(const Pair& o) const {
    if (degree != o.degree) return degree < o.degree;
    if (j != o.j) return j < o.j;
    return i < o.i;
  }
};

std::uint64_t pair_key(std::size_t i, std::size_t j) {
  if (i > j) std::swap(i, j);
  return (static_cast<std::uint64_t>(i) << 32) | j;
}

}  // namespace

GroebnerBasis::GroebnerBasis(RingPtr ring, std::size_t rank, std::vector<Vector> elements)
    : ring_(std::move(ring)), rank_(rank), elements_(std::move(elements)) {
  by_position_ = index_positions(elements_, rank_);
}

Vector GroebnerBasis::reduce(const Vector& v) const {
  if (v.rank() != rank_) throw InputError("rank mismatch in reduction");
  require_same_ring(ring_, v.ring(), "reduction");
  return divide(v, elements_, by_position_);
}

bool GroebnerBasis::is_everything() const {
  for (std::size_t i = 0; i < rank_; ++i) {
    bool found = false;
    for (std::size_t k : by_position_[i]) {
      if (elements_[k].lead().mono.is_one()) found = true;
    }
    if (!found) return false;
  }
  return true;
}

std::vector<Polynomial> GroebnerBasis::as_polynomials() const {
  std::vector<Polynomial> out;
  for (const auto& g : elements_) out.push_back(g.coordinate(0));
  return out;
}

Vector reduce_by(const Vector& f, const std::vector<Vector>& divisors) {
  return divide(f, divisors, index_positions(divisors, f.rank()));
}

GroebnerBasis compute_groebner(const RingPtr& ring, std::size_t rank, std::vector<Vector> generators) {
  const Limits& limits = ring->limits();
  std::vector<Vector> g;
  std::vector<std::vector<std::size_t>> by_position(rank);
  std::set<Pair> queue;
  std::unordered_set<std::uint64_t> pending;

  auto add = [&](Vector v) {
    v = v.monic();
    ring->check_degree(static_cast<std::uint64_t>(v.degree()), "Groebner basis element");
    if (g.size() >= limits.max_basis) {
      throw ResourceError("Groebner basis exceeds " + std::to_string(limits.max_basis) + " elements");
    }
    std::size_t k = g.size();
    std::uint32_t pos = v.lead().pos;
    g.push_back(std::move(v));
    for (std::size_t i : by_position[pos]) {
      Monomial l = lcm(g[i].lead().mono, g[k].lead().mono);
      queue.insert({l.degree, static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(k)});
      pending.insert(pair_key(i, k));
    }
    by_position[pos].push_back(k);
  };

  for (auto& gen : generators) {
    if (gen.rank() != rank) throw InputError("generator rank mismatch");
    require_same_ring(ring, gen.ring(), "Groebner basis");
    Vector r = divide(gen, g, by_position);
    if (!r.is_zero()) add(std::move(r));
  }

  const PrimeField& field = ring->field();
  while (!queue.empty()) {
    Pair pr = *queue.begin();
    queue.erase(queue.begin());
    pending.erase(pair_key(pr.i, pr.j));
    const VTerm& li = g[pr.i].lead();
    const VTerm& lj = g[pr.j].lead();
    if (rank == 1 && coprime(li.mono, lj.mono)) continue;
    Monomial l = lcm(li.mono, lj.mono);
    bool chain = false;
    for (std::size_t k : by_position[li.pos]) {
      if (k == pr.i || k == pr.j) continue;
      if (!g[k].lead().mono.divides(l)) continue;
      if (pending.count(pair_key(pr.i, k)) || pending.count(pair_key(pr.j, k))) continue;
      chain = true;
      break;
    }
    if (chain) continue;
    Vector s = g[pr.i].times_term(1, div(l, li.mono)).add_multiple(g[pr.j], field.neg(1), div(l, lj.mono));
    Vector r = divide(s, g, by_position);
    if (!r.is_zero()) add(std::move(r));
  }

  // Minimalise, then reduce tails against the remaining elements.
  std::vector<Vector> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t j : by_position[g[i].lead().pos]) {
      if (j == i) continue;
      const Monomial& mj = g[j].lead().mono;
      const Monomial& mi = g[i].lead().mono;
      if (mj.divides(mi) && (mj != mi || j < i)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(g[i]);
  }
  auto minimal_positions = index_positions(minimal, rank);
  std::vector<Vector> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    reduced.push_back(divide(minimal[i], minimal, minimal_positions, i).monic());
  }
  std::sort(reduced.begin(), reduced.end(), [&](const Vector& a, const Vector& b) {
    return compare_terms(*ring, a.lead(), b.lead()) < 0;
  });
  return GroebnerBasis(ring, rank, std::move(reduced));
}

std::vector<Polynomial> buchberger(const std::vector<Polynomial>& generators) {
  if (generators.empty()) return {};
  return groebner(generators.front().ring(), 1, to_vectors(generators))->as_polynomials();
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis) {
  return reduce_by(Vector::from_coordinates(f.ring(), {f}), to_vectors(basis)).coordinate(0);
}

std::vector<Vector> to_vectors(const std::vector<Polynomial>& polys) {
  std::vector<Vector> out;
  out.reserve(polys.size());
  for (const auto& f : polys) out.push_back(Vector::from_coordinates(f.ring(), {f}));
  return out;
}

}  // namespace phantom
