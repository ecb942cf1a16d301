#include "phantom/closures/nakayama.hpp"

#include <algorithm>

#include "phantom/ring/errors.hpp"

namespace phantom {

namespace {

// m^[q] N for m generated by the variables.
std::vector<Vector> bracket_maximal_times(const Submodule& n, std::uint64_t q) {
  const RingPtr& s = n.ambient().ambient();
  std::vector<Vector> out;
  for (std::size_t i = 0; i < s->nvars(); ++i) {
    Monomial xq = pow(variable(i), q);
    for (const auto& g : n.generators()) out.push_back(g.times_term(1, xq));
  }
  return out;
}

// Nakayama needs a local ring. Computations happen in S/J, which only
// agrees with the localization at m for graded data: J homogeneous and all
// vectors homogeneous for one choice of generator shifts.
bool admits_grading(const QuotientRing& ring, std::size_t rank, const std::vector<Vector>& vectors) {
  for (const auto& f : ring.ideal()) {
    if (!f.is_homogeneous()) return false;
  }
  std::vector<std::optional<long>> shift(rank);
  // Repeated relaxation over the constraints deg(v_i) + shift_i = deg(v_j) + shift_j.
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& v : vectors) {
      std::optional<long> level;
      auto coords = v.coordinates();
      for (std::size_t i = 0; i < rank; ++i) {
        if (coords[i].is_zero()) continue;
        if (!coords[i].is_homogeneous()) return false;
        if (shift[i]) {
          long l = coords[i].degree() + *shift[i];
          if (level && *level != l) return false;
          level = l;
        }
      }
      if (!level) {
        for (std::size_t i = 0; i < rank && !level; ++i) {
          if (!coords[i].is_zero()) {
            shift[i] = 0;
            level = coords[i].degree();
            changed = true;
          }
        }
        if (!level) continue;
      }
      for (std::size_t i = 0; i < rank; ++i) {
        if (!coords[i].is_zero() && !shift[i]) {
          shift[i] = *level - coords[i].degree();
          changed = true;
        }
      }
    }
  }
  return true;
}

void require_graded(const PresentedModule& m, std::vector<Vector> vectors) {
  for (const auto& c : m.relations().columns()) vectors.push_back(c);
  if (!admits_grading(*m.ring(), m.rank(), vectors)) {
    throw UnsupportedInput("Nakayama checks need graded data: homogeneous ideal, relations and generators");
  }
}

}  // namespace

NakayamaInstance::NakayamaInstance(Submodule l, Submodule n) : l_(std::move(l)), n_(std::move(n)) {
  require_same_ring(l_.ambient().ambient(), n_.ambient().ambient(), "Nakayama instance");
  if (l_.ambient().rank() != n_.ambient().rank()) throw InputError("L and N live in different modules");
  std::vector<Vector> all = l_.generators();
  all.insert(all.end(), n_.generators().begin(), n_.generators().end());
  require_graded(n_.ambient(), all);
  if (!n_.contains(l_)) throw InputError("L is not contained in N");
}

NakayamaGenericReport nakayama_generic_check(const NakayamaInstance& inst, const TestElementSpec& spec, unsigned e_max) {
  const Submodule& n = inst.n();
  std::vector<Vector> hyp_gens = inst.l().generators();
  auto mn = bracket_maximal_times(n, 1);
  hyp_gens.insert(hyp_gens.end(), mn.begin(), mn.end());
  Submodule hyp(n.ambient(), hyp_gens);

  NakayamaGenericReport out;
  for (std::size_t k = 0; k < n.generators().size(); ++k) {
    const Vector& g = n.generators()[k];
    out.hypothesis.push_back(tight_closure_member(g, hyp, spec, e_max));
    out.conclusion.push_back(tight_closure_member(g, inst.l(), spec, e_max));
    for (auto* v : {&out.hypothesis.back(), &out.conclusion.back()}) {
      if (v->certificate) v->certificate->generator = k;
    }
    const Status h = out.hypothesis.back().status;
    if (out.conclusion.back().certified_non_member() &&
        (h == Status::kCertifiedMember || h == Status::kWitnessedUpTo)) {
      out.flagged.push_back(k);
    }
  }
  const unsigned top = std::max(spec.e0(*n.ambient().ring()), e_max);
  out.hypothesis_all = join_all(out.hypothesis, top, spec.q0, Reading::kHolds);
  out.conclusion_all = join_all(out.conclusion, top, spec.q0, Reading::kHolds);
  return out;
}

NakayamaFamilyReport nakayama_family_check(const Submodule& l, const std::vector<Submodule>& family,
                                           const TestElementSpec& spec, unsigned e_max) {
  const QuotientRing& ring = *l.ambient().ring();
  spec.validate(ring);
  const std::uint32_t p = ring.characteristic();
  const unsigned e0 = spec.e0(ring);
  const unsigned top = static_cast<unsigned>(family.size());
  if (top == 0 || e0 >= top) throw InputError("family too short to test any (e, e') pair with e' >= e0");

  for (unsigned e = 0; e < top; ++e) {
    std::vector<Vector> all = family[e].generators();
    if (e == 0) all.insert(all.end(), l.generators().begin(), l.generators().end());
    require_graded(family[e].ambient(), all);
  }

  std::vector<Submodule> lq;
  for (unsigned e = 0; e < top; ++e) {
    lq.push_back(bracket_power(l, e));
    if (family[e].ambient().rank() != l.ambient().rank()) throw InputError("family member has the wrong rank");
    if (!family[e].contains(lq.back())) throw InputError("L^[q] is not contained in N_e at e = " + std::to_string(e));
  }

  NakayamaFamilyReport out;
  out.hypothesis_met = true;
  for (unsigned e = 0; e < top; ++e) {
    for (unsigned ep = e0; e + ep < top; ++ep) {
      const unsigned total = e + ep;
      std::vector<Vector> gens = lq[total].generators();
      auto extra = bracket_maximal_times(family[total], frobenius_power(p, total));
      gens.insert(gens.end(), extra.begin(), extra.end());
      Submodule target(family[total].ambient(), gens);
      NakayamaPair pair{e, ep, true, std::nullopt};
      for (std::size_t k = 0; k < family[e].generators().size(); ++k) {
        if (!target.contains(element_power(family[e].generators()[k], p, ep) * spec.c)) {
          pair.holds = false;
          pair.failing_generator = k;
          break;
        }
      }
      out.hypothesis_met = out.hypothesis_met && pair.holds;
      out.pairs.push_back(pair);
    }
  }

  for (unsigned e = 0; e < top; ++e) {
    std::vector<Verdict> parts;
    for (std::size_t k = 0; k < family[e].generators().size(); ++k) {
      parts.push_back(tight_closure_member(family[e].generators()[k], lq[e], spec, e_max));
      if (parts.back().certificate) {
        parts.back().certificate->level = e;
        parts.back().certificate->generator = k;
      }
    }
    out.conclusion.push_back(join_all(parts, std::max(e0, e_max), spec.q0, Reading::kHolds));
    if (out.hypothesis_met && out.conclusion.back().certified_non_member()) out.potential_counterexample = true;
  }
  return out;
}

std::vector<Submodule> bracket_family(const Submodule& n, unsigned e_max) {
  std::vector<Submodule> out;
  for (unsigned e = 0; e <= e_max; ++e) out.push_back(bracket_power(n, e));
  return out;
}

}  // namespace phantom
