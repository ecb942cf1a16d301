#include "phantom/closures/closure.hpp"

#include <algorithm>

#include "phantom/ring/errors.hpp"

namespace phantom {

namespace {

constexpr const char* kTestElementCondition = "declared test element";
constexpr const char* kRegularCondition = "declared regular ring";

Verdict member_verdict(Certificate::Kind kind, std::uint64_t q, unsigned e_max, std::uint64_t q0) {
  Verdict v;
  v.status = Status::kCertifiedMember;
  v.certificate = Certificate{kind, q, "0", std::nullopt, std::nullopt, ""};
  v.e_max = e_max;
  v.q0 = q0;
  return v;
}

// Shared first two stages: trivial membership and Frobenius witnesses.
std::optional<Verdict> positive_certificate(const Vector& z, const Submodule& n, unsigned e_max, std::uint64_t q0) {
  if (n.contains(z)) return member_verdict(Certificate::Kind::kTrivial, 1, e_max, q0);
  const std::uint32_t p = n.ambient().ring()->characteristic();
  for (unsigned e = 1; e <= e_max; ++e) {
    if (bracket_power(n, e).contains(element_power(z, p, e))) {
      return member_verdict(Certificate::Kind::kFrobenius, frobenius_power(p, e), e_max, q0);
    }
  }
  return std::nullopt;
}

}  // namespace

void TestElementSpec::validate(const QuotientRing& ring) const {
  if (!c.ring()) throw InputError("test element is missing");
  require_same_ring(ring.ambient(), c.ring(), "test element");
  if (ring.is_zero(c)) throw InputError("test element c reduces to 0 in R");
  if (!log_p(ring.characteristic(), q0)) throw InputError("q0 must be a power of p");
}

unsigned TestElementSpec::e0(const QuotientRing& ring) const {
  auto e = log_p(ring.characteristic(), q0);
  if (!e) throw InputError("q0 must be a power of p");
  return *e;
}

TestElementSpec unit_test_element(const QuotientRing& ring, std::string provenance) {
  return TestElementSpec{ring.constant(1), 1, true, std::move(provenance)};
}

Polynomial cn_multiplier(const TestElementSpec& spec, int n, const QuotientRing& ring) {
  if (n < -1) throw InputError("c_n is defined for n >= -1");
  Polynomial cn = ring.constant(1);
  for (int k = -1; k < n; ++k) {
    Polynomial raised = spec.q0 == 1 ? cn : cn.frobenius(spec.q0);
    cn = ring.reduce(spec.c * raised);
  }
  return cn;
}

Verdict frobenius_closure_member(const Vector& z, const Submodule& n, unsigned e_max) {
  if (auto v = positive_certificate(z, n, e_max, 1)) return *v;
  Verdict v;
  v.e_max = e_max;
  if (n.ambient().ring()->regular()) {
    v.status = Status::kCertifiedNonMember;
    v.certificate = Certificate{Certificate::Kind::kTrivial, 1, n.reduce(z).to_string(), std::nullopt, std::nullopt, ""};
    v.conditional_on = kRegularCondition;
  } else {
    v.status = Status::kNoWitnessUpTo;
  }
  return v;
}

Verdict tight_closure_member(const Vector& z, const Submodule& n, const TestElementSpec& spec, unsigned e_max) {
  const QuotientRing& ring = *n.ambient().ring();
  spec.validate(ring);
  const unsigned e0 = spec.e0(ring);
  const unsigned top = std::max(e0, e_max);
  if (auto v = positive_certificate(z, n, e_max, spec.q0)) {
    v->e_max = top;
    return *v;
  }
  const std::uint32_t p = ring.characteristic();
  for (unsigned e = e0; e <= top; ++e) {
    Vector test = element_power(z, p, e) * spec.c;
    Vector r = bracket_power(n, e).reduce(test);
    if (!r.is_zero()) {
      Verdict v;
      v.status = Status::kCertifiedNonMember;
      v.certificate = Certificate{Certificate::Kind::kTestElement, frobenius_power(p, e), r.to_string(), std::nullopt,
                                  std::nullopt, ""};
      v.e_max = top;
      v.q0 = spec.q0;
      v.conditional_on = kTestElementCondition;
      return v;
    }
  }
  Verdict v;
  v.status = Status::kWitnessedUpTo;
  v.e_max = top;
  v.q0 = spec.q0;
  return v;
}

std::vector<Verdict> zero_star_members(const std::vector<Vector>& candidates, const PresentedModule& m,
                                       const TestElementSpec& spec, unsigned e_max) {
  std::vector<Verdict> out;
  out.reserve(candidates.size());
  Submodule zero = Submodule::zero(m);
  for (const auto& z : candidates) out.push_back(tight_closure_member(z, zero, spec, e_max));
  return out;
}

bool replay_certificate(const Verdict& v, const Vector& z, const Submodule& n, const TestElementSpec* spec) {
  if (!v.certificate) return false;
  const auto& cert = *v.certificate;
  const std::uint32_t p = n.ambient().ring()->characteristic();
  auto e = log_p(p, cert.q);
  if (!e) return false;
  // A fresh basis, bypassing the cache.
  auto fresh_reduce = [](const Submodule& sub, const Vector& x) {
    std::vector<Vector> gens = sub.generators();
    auto rels = sub.ambient().relation_vectors();
    gens.insert(gens.end(), rels.begin(), rels.end());
    return compute_groebner(sub.ambient().ambient(), sub.ambient().rank(), gens).reduce(x);
  };
  if (v.status == Status::kCertifiedMember) {
    if (cert.kind == Certificate::Kind::kTrivial) return fresh_reduce(n, z).is_zero();
    if (cert.kind == Certificate::Kind::kFrobenius) {
      return fresh_reduce(bracket_power(n, *e), element_power(z, p, *e)).is_zero();
    }
    return false;
  }
  if (v.status == Status::kCertifiedNonMember) {
    if (cert.kind == Certificate::Kind::kTrivial) {
      Vector r = fresh_reduce(n, z);
      return !r.is_zero() && r.to_string() == cert.reduction;
    }
    if (cert.kind == Certificate::Kind::kTestElement && spec) {
      Vector r = fresh_reduce(bracket_power(n, *e), element_power(z, p, *e) * spec->c);
      return !r.is_zero() && r.to_string() == cert.reduction;
    }
  }
  return false;
}

std::vector<Vector> standard_candidates(const PresentedModule& m, int max_degree) {
  const RingPtr& s = m.ambient();
  const std::size_t n = s->nvars();
  std::vector<Monomial> monomials{Monomial{}};
  std::vector<Monomial> frontier{Monomial{}};
  for (int d = 1; d <= max_degree; ++d) {
    std::vector<Monomial> next;
    for (const auto& mono : frontier) {
      // Only extend by variables at or after the last one used, so each
      // monomial is produced once.
      std::size_t last = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (mono.exp[i]) last = i;
      }
      for (std::size_t i = last; i < n; ++i) next.push_back(mul(mono, variable(i)));
    }
    monomials.insert(monomials.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  std::sort(monomials.begin(), monomials.end(),
            [&](const Monomial& a, const Monomial& b) { return s->compare(a, b) < 0; });
  auto basis = m.relation_basis();
  std::vector<Vector> out;
  for (std::size_t i = 0; i < m.rank(); ++i) {
    for (const auto& mono : monomials) {
      Vector v = Vector::unit(s, m.rank(), i).times_term(1, mono);
      if (basis->reduce(v) == v) out.push_back(std::move(v));
    }
  }
  return out;
}

ReducedFrobenius reduced_frobenius(const PresentedModule& m, unsigned e, const TestElementSpec& spec, unsigned e_max,
                                   std::optional<std::vector<Vector>> candidates, int candidate_degree) {
  PresentedModule fm = frobenius_module(m, e);
  std::vector<Vector> cands = candidates ? *candidates : standard_candidates(fm, candidate_degree);
  auto verdicts = zero_star_members(cands, fm, spec, e_max);
  ReducedFrobenius out;
  std::vector<Vector> killed;
  for (std::size_t k = 0; k < cands.size(); ++k) {
    const Status st = verdicts[k].status;
    if (st == Status::kCertifiedMember || st == Status::kWitnessedUpTo) {
      killed.push_back(cands[k]);
      if (st == Status::kWitnessedUpTo) out.witnessed_only.push_back(k);
    }
    out.candidates.push_back({cands[k], verdicts[k]});
  }
  out.module = Submodule(fm, killed).quotient();
  return out;
}

}  // namespace phantom
