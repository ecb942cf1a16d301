#include "phantom/depth/depth.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "phantom/ring/dimension.hpp"
#include "phantom/ring/errors.hpp"

namespace phantom {

namespace {

void require_in_m(const QuotientRing& ring, const std::vector<Polynomial>& xs) {
  for (const auto& x : xs) {
    require_same_ring(ring.ambient(), x.ring(), "sequence element");
    if (!ring.in_maximal_ideal(x)) throw InputError("sequence element " + x.to_string() + " is not in the maximal ideal");
  }
}

void require_nonzero(const PresentedModule& m) {
  if (m.is_zero_module()) throw InputError("module is zero");
}

bool proper_quotient(const PresentedModule& m, const std::vector<Polynomial>& xs) {
  return !quotient_by_sequence(m, xs).module.is_zero_module();
}

Verdict improper_verdict(unsigned e_max, std::uint64_t q0) {
  Verdict v;
  v.status = Status::kCertifiedNonMember;
  v.certificate = Certificate{Certificate::Kind::kTrivial, 1, "", std::nullopt, std::nullopt, "xM = M"};
  v.e_max = e_max;
  v.q0 = q0;
  v.reading = Reading::kRegular;
  return v;
}

// Generators of 0 :_{F^e(M)} f, canonically ordered.
std::vector<Vector> annihilated(const PresentedModule& fm, const Polynomial& f) {
  auto mult = ModuleMap::unchecked(fm, fm, Matrix::scalar(fm.ambient(), fm.rank(), f));
  return canonical_generators(mult.kernel()).generators();
}

std::vector<Verdict> zero_star_scan(const std::vector<Vector>& gens, const PresentedModule& fm,
                                    const TestElementSpec& spec, unsigned level, unsigned bound) {
  auto out = zero_star_members(gens, fm, spec, bound);
  for (std::size_t k = 0; k < out.size(); ++k) {
    if (!out[k].certificate) continue;
    out[k].certificate->level = level;
    out[k].certificate->generator = k;
    out[k].certificate->element = gens[k].to_string();
  }
  return out;
}

bool any_failure(const std::vector<Verdict>& vs) {
  return std::any_of(vs.begin(), vs.end(), [](const Verdict& v) { return v.certified_non_member(); });
}

unsigned scan_top(const QuotientRing& ring, const TestElementSpec& spec, unsigned e_max) {
  return std::max(spec.e0(ring), e_max);
}

// Turns a raw join into a step verdict: certified membership everywhere is
// reported as witnessed, with the clean bit kept.
StepVerdict finish_step(const Polynomial& x, Verdict raw) {
  StepVerdict s;
  s.x = x;
  s.certified_clean = raw.certified_member();
  if (raw.certified_member()) raw.status = Status::kWitnessedUpTo;
  raw.reading = Reading::kRegular;
  s.verdict = std::move(raw);
  return s;
}

// 0 :_{F^e(M)} x^t ⊆ 0^* at each level for one exponent, stopping at the
// first level with a certified failure.
Verdict kernel_scan(const Polynomial& x, std::uint64_t t, bool times_q, const PresentedModule& m,
                    const TestElementSpec& spec, unsigned e_max) {
  const QuotientRing& ring = *m.ring();
  std::vector<Verdict> parts;
  for (unsigned e = 0; e <= e_max; ++e) {
    const std::uint64_t exponent = times_q ? frobenius_q(ring, e) : t;
    PresentedModule fm = frobenius_module(m, e);
    auto part = zero_star_scan(annihilated(fm, ring.reduce(x.pow(exponent))), fm, spec, e, e_max - e);
    parts.insert(parts.end(), part.begin(), part.end());
    if (any_failure(part)) break;
  }
  return join_all(parts, scan_top(ring, spec, e_max), spec.q0, Reading::kRegular);
}

SequenceVerdict start_sequence(const std::vector<Polynomial>& xs, const PresentedModule& m,
                               const TestElementSpec& spec, unsigned e_max, std::uint64_t t_max) {
  spec.validate(*m.ring());
  require_in_m(*m.ring(), xs);
  require_nonzero(m);
  SequenceVerdict out;
  out.xs = xs;
  out.e_max = e_max;
  out.t_max = t_max;
  out.proper = proper_quotient(m, xs);
  return out;
}

void finish_sequence(SequenceVerdict& out, const TestElementSpec& spec, const QuotientRing& ring) {
  const unsigned top = scan_top(ring, spec, out.e_max);
  if (!out.proper) {
    out.aggregate = improper_verdict(top, spec.q0);
    return;
  }
  if (out.xs.empty()) {
    // Vacuous: there is no element to quantify over.
    out.aggregate.status = Status::kCertifiedMember;
    out.aggregate.e_max = top;
    out.aggregate.q0 = spec.q0;
    out.aggregate.reading = Reading::kRegular;
    return;
  }
  std::vector<Verdict> vs;
  for (const auto& s : out.steps) vs.push_back(s.verdict);
  out.aggregate = join_all(vs, top, spec.q0, Reading::kRegular);
}

std::vector<std::vector<std::uint64_t>> tuples(std::size_t len, std::uint64_t max) {
  std::vector<std::vector<std::uint64_t>> out{{}};
  for (std::size_t k = 0; k < len; ++k) {
    std::vector<std::vector<std::uint64_t>> next;
    for (const auto& t : out) {
      for (std::uint64_t v = 1; v <= max; ++v) {
        next.push_back(t);
        next.back().push_back(v);
      }
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace

bool SequenceVerdict::certified_clean() const {
  if (!proper) return false;
  return std::all_of(steps.begin(), steps.end(), [](const StepVerdict& s) { return s.certified_clean; }) &&
         steps.size() == xs.size();
}

StepVerdict ghost_regular_element(const Polynomial& x, const PresentedModule& m, const TestElementSpec& spec,
                                  unsigned e_max) {
  spec.validate(*m.ring());
  require_in_m(*m.ring(), {x});
  require_nonzero(m);
  if (!proper_quotient(m, {x})) {
    StepVerdict s;
    s.x = x;
    s.verdict = improper_verdict(scan_top(*m.ring(), spec, e_max), spec.q0);
    return s;
  }
  return finish_step(x, kernel_scan(x, 0, true, m, spec, e_max));
}

SequenceVerdict ghost_regular_sequence(const std::vector<Polynomial>& xs, const PresentedModule& m,
                                       const TestElementSpec& spec, unsigned e_max) {
  SequenceVerdict out = start_sequence(xs, m, spec, e_max, 0);
  if (out.proper) {
    PresentedModule cur = m;
    for (std::size_t j = 0; j < xs.size(); ++j) {
      out.steps.push_back(finish_step(xs[j], kernel_scan(xs[j], 0, true, cur, spec, e_max)));
      if (out.steps.back().verdict.certified_non_member()) {
        out.failing_step = j;
        break;
      }
      cur = quotient_by_sequence(cur, {xs[j]}).module;
    }
  }
  finish_sequence(out, spec, *m.ring());
  return out;
}

SequenceVerdict phantom_regular_sequence(const std::vector<Polynomial>& xs, const PresentedModule& m,
                                         const TestElementSpec& spec, unsigned e_max, std::uint64_t t_max) {
  if (t_max == 0) t_max = frobenius_q(*m.ring(), e_max);
  SequenceVerdict out = start_sequence(xs, m, spec, e_max, t_max);
  if (out.proper) {
    for (std::size_t j = 0; j < xs.size() && !out.failing_step; ++j) {
      std::vector<Verdict> parts;
      StepVerdict step;
      step.x = xs[j];
      for (const auto& u : tuples(j, t_max)) {
        std::vector<Polynomial> prefix;
        for (std::size_t k = 0; k < j; ++k) prefix.push_back(xs[k].pow(u[k]));
        PresentedModule mu = j == 0 ? m : quotient_by_sequence(m, prefix).module;
        // Annihilators grow with t, so t_max decides the whole range; the
        // smallest failing t is then searched for the certificate.
        Verdict v = kernel_scan(xs[j], t_max, false, mu, spec, e_max);
        if (v.certified_non_member()) {
          for (std::uint64_t t = 1; t < t_max; ++t) {
            Verdict w = kernel_scan(xs[j], t, false, mu, spec, e_max);
            if (w.certified_non_member()) {
              v = w;
              step.t = t;
              break;
            }
          }
          if (!step.t) step.t = t_max;
          step.u = u;
          parts.push_back(v);
          break;
        }
        parts.push_back(v);
      }
      Verdict raw = join_all(parts, scan_top(*m.ring(), spec, e_max), spec.q0, Reading::kRegular);
      StepVerdict fin = finish_step(xs[j], raw);
      fin.t = step.t;
      fin.u = step.u;
      out.steps.push_back(fin);
      if (fin.verdict.certified_non_member()) out.failing_step = j;
    }
  }
  finish_sequence(out, spec, *m.ring());
  return out;
}

PhantomDepthReport phantom_depth(const std::vector<Polynomial>& gens, const PresentedModule& m,
                                 const TestElementSpec& spec, unsigned e_max, bool trust_rigidity) {
  spec.validate(*m.ring());
  require_in_m(*m.ring(), gens);
  if (!proper_quotient(m, gens)) throw InputError("IM = M: phantom depth is undefined");
  const ChainComplex k = koszul(gens, m);
  const int n = static_cast<int>(gens.size());
  PhantomDepthReport out;
  std::vector<std::optional<Verdict>> seen(n + 1);
  auto spot = [&](int i) -> const Verdict& {
    if (!seen[i]) {
      seen[i] = stably_phantom_at(k, i, spec, e_max);
      out.spots.emplace_back(i, *seen[i]);
    }
    return *seen[i];
  };
  auto holds = [&](int i) { return !spot(i).certified_non_member(); };

  // Descending scan: the first spot without a certified failure stops nothing,
  // the first certified failure ends the count.
  auto descending = [&]() {
    unsigned d = 0;
    while (static_cast<int>(d) < n && holds(n - static_cast<int>(d))) ++d;
    return d;
  };

  unsigned d = 0;
  if (trust_rigidity) {
    // Holding spots form an upper interval; bisect for its lowest member.
    unsigned lo = 0, hi = static_cast<unsigned>(n);
    while (lo < hi) {
      unsigned mid = (lo + hi + 1) / 2;
      if (holds(n - static_cast<int>(mid) + 1)) lo = mid;
      else hi = mid - 1;
    }
    d = lo;
    // Re-verify the counted spots before anything is reported.
    for (unsigned j = 0; j < d; ++j) {
      if (spot(n - static_cast<int>(j)).certified_non_member()) {
        out.rigidity_flag = true;
        d = descending();
        break;
      }
    }
  } else {
    d = descending();
  }
  out.depth = d;
  bool certified = true;
  for (unsigned j = 0; j < d; ++j) certified = certified && spot(n - static_cast<int>(j)).certified_member();
  if (static_cast<int>(d) < n) certified = certified && spot(n - static_cast<int>(d)).certified_non_member();
  out.qualifier = certified ? DepthQualifier::kCertified : DepthQualifier::kBoundLimited;
  return out;
}

unsigned classical_depth(const std::vector<Polynomial>& gens, const PresentedModule& m) {
  require_in_m(*m.ring(), gens);
  if (!proper_quotient(m, gens)) throw InputError("IM = M: depth is undefined");
  const ChainComplex k = koszul(gens, m);
  const int n = static_cast<int>(gens.size());
  unsigned d = 0;
  while (static_cast<int>(d) < n && exact_at(k, n - static_cast<int>(d))) ++d;
  return d;
}

namespace {

Polynomial determinant(const Matrix& a, const std::vector<std::size_t>& cols, std::vector<std::size_t> rows) {
  if (rows.empty()) return Polynomial::constant(a.ring(), 1);
  const std::size_t r = rows.front();
  rows.erase(rows.begin());
  Polynomial sum(a.ring());
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const Polynomial& entry = a.at(r, cols[k]);
    if (entry.is_zero()) continue;
    std::vector<std::size_t> rest = cols;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
    Polynomial term = entry * determinant(a, rest, rows);
    sum = k % 2 ? sum - term : sum + term;
  }
  return sum;
}

constexpr std::size_t kMaxMinors = 4096;

}  // namespace

PrimeList module_minimal_primes(const PresentedModule& m) {
  const QuotientRing& ring = *m.ring();
  const Matrix& a = m.relations();
  const std::size_t r = m.rank();
  std::vector<Polynomial> fitting = ring.ideal();
  if (r == 0) throw InputError("module is zero");
  if (a.cols() >= r) {
    std::vector<std::size_t> rows(r);
    std::iota(rows.begin(), rows.end(), 0);
    std::vector<bool> pick(a.cols(), false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(r), true);
    std::size_t count = 0;
    do {
      if (++count > kMaxMinors) throw UnsupportedInput("too many minors for the Fitting ideal");
      std::vector<std::size_t> cols;
      for (std::size_t j = 0; j < a.cols(); ++j) {
        if (pick[j]) cols.push_back(j);
      }
      Polynomial det = determinant(a, cols, rows);
      if (!det.is_zero()) fitting.push_back(det);
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  PrimeList out;
  for (const auto& vars : monomial_minimal_primes(m.ambient(), fitting)) {
    auto gens = prime_generators(m.ambient(), vars);
    gens.insert(gens.end(), ring.ideal().begin(), ring.ideal().end());
    out.push_back(std::move(gens));
  }
  return out;
}

std::vector<int> relative_heights(const std::vector<Polynomial>& gens, const PrimeList& primes,
                                  const QuotientRing& ring) {
  require_in_m(ring, gens);
  std::vector<int> out;
  for (const auto& p : primes) {
    for (const auto& f : p) require_same_ring(ring.ambient(), f.ring(), "prime generator");
    std::vector<Polynomial> with_j = p;
    with_j.insert(with_j.end(), ring.ideal().begin(), ring.ideal().end());
    std::vector<Polynomial> sum = with_j;
    sum.insert(sum.end(), gens.begin(), gens.end());
    const int dp = krull_dimension(ring.ambient(), with_j);
    const int di = krull_dimension(ring.ambient(), sum);
    if (dp < 0 || di < 0) throw InputError("prime is the unit ideal");
    out.push_back(dp - di);
  }
  return out;
}

namespace {

std::vector<int> heights_for(const std::vector<Polynomial>& gens, const PresentedModule& m,
                             const std::optional<PrimeList>& primes) {
  PrimeList ps = primes ? *primes : module_minimal_primes(m);
  if (ps.empty()) throw InputError("no primes supplied");
  return relative_heights(gens, ps, *m.ring());
}

}  // namespace

int minheight(const std::vector<Polynomial>& gens, const PresentedModule& m, const std::optional<PrimeList>& primes) {
  auto hs = heights_for(gens, m, primes);
  return *std::min_element(hs.begin(), hs.end());
}

int height(const std::vector<Polynomial>& gens, const PresentedModule& m, const std::optional<PrimeList>& primes) {
  auto hs = heights_for(gens, m, primes);
  return *std::max_element(hs.begin(), hs.end());
}

DepthReport depth_chain_report(const std::vector<Polynomial>& gens, const PresentedModule& m,
                               const TestElementSpec& spec, unsigned e_max, const std::optional<PrimeList>& primes) {
  DepthReport out;
  out.gens = gens;
  out.depth = classical_depth(gens, m);
  out.phantom = phantom_depth(gens, m, spec, e_max);
  auto hs = heights_for(gens, m, primes);
  out.minheight = *std::min_element(hs.begin(), hs.end());
  out.height = *std::max_element(hs.begin(), hs.end());
  out.all_certified = out.phantom.qualifier == DepthQualifier::kCertified;
  const int ph = static_cast<int>(out.phantom.depth);
  out.chain_violation = out.all_certified && !(static_cast<int>(out.depth) <= ph && ph <= out.minheight &&
                                                out.minheight <= out.height);
  return out;
}

PermutabilityReport permutability_check(const Polynomial& x, const Polynomial& y, const PresentedModule& m,
                                        const TestElementSpec& spec, unsigned e_max) {
  PermutabilityReport out;
  out.forward = ghost_regular_sequence({x, y}, m, spec, e_max);
  out.backward = ghost_regular_sequence({y, x}, m, spec, e_max);
  out.flag = (out.forward.certified_no() && out.backward.certified_clean()) ||
             (out.backward.certified_no() && out.forward.certified_clean());
  return out;
}

std::vector<std::size_t> MaximalScanReport::lengths() const {
  std::vector<std::size_t> out;
  for (const auto& r : runs) out.push_back(r.sequence.size());
  std::sort(out.begin(), out.end());
  return out;
}

MaximalScanReport maximal_sequence_scan(const std::vector<Polynomial>& gens, const PresentedModule& m,
                                        const TestElementSpec& spec, unsigned e_max,
                                        std::optional<std::vector<Polynomial>> pool) {
  spec.validate(*m.ring());
  require_in_m(*m.ring(), gens);
  std::vector<Polynomial> cands = pool ? *pool : gens;
  require_in_m(*m.ring(), cands);
  require_nonzero(m);

  std::vector<std::vector<std::size_t>> orders;
  std::vector<std::size_t> idx(cands.size());
  std::iota(idx.begin(), idx.end(), 0);
  if (cands.size() <= 4) {
    do orders.push_back(idx);
    while (std::next_permutation(idx.begin(), idx.end()));
  } else {
    for (std::size_t r = 0; r < cands.size(); ++r) {
      orders.push_back(idx);
      std::rotate(idx.begin(), idx.begin() + 1, idx.end());
    }
  }

  MaximalScanReport out;
  std::set<std::vector<std::size_t>> seen_sequences;
  for (const auto& order : orders) {
    MaximalSequence run;
    run.order = order;
    std::vector<std::size_t> chosen;
    PresentedModule cur = m;
    auto extends = [&](std::size_t k, const PresentedModule& base) {
      std::vector<Polynomial> trial = run.sequence;
      trial.push_back(cands[k]);
      if (!proper_quotient(m, trial)) return false;
      return !kernel_scan(cands[k], 0, true, base, spec, e_max).certified_non_member();
    };
    for (std::size_t k : order) {
      if (extends(k, cur)) {
        run.sequence.push_back(cands[k]);
        chosen.push_back(k);
        cur = quotient_by_sequence(cur, {cands[k]}).module;
      }
    }
    // Certified maximality: each unused candidate now fails with a certificate
    // (or makes the quotient vanish), and the top Koszul spot of I fails on M/xM.
    bool certified = true;
    for (std::size_t k = 0; k < cands.size() && certified; ++k) {
      if (std::find(chosen.begin(), chosen.end(), k) != chosen.end()) continue;
      std::vector<Polynomial> trial = run.sequence;
      trial.push_back(cands[k]);
      certified = !proper_quotient(m, trial) || kernel_scan(cands[k], 0, true, cur, spec, e_max).certified_non_member();
    }
    if (certified && proper_quotient(cur, gens)) {
      ChainComplex k = koszul(gens, cur);
      certified = stably_phantom_at(k, static_cast<int>(gens.size()), spec, e_max).certified_non_member();
    } else {
      certified = false;
    }
    run.certified_maximal = certified;
    out.runs.push_back(std::move(run));
  }
  std::set<std::size_t> certified_lengths;
  for (const auto& r : out.runs) {
    if (r.certified_maximal) certified_lengths.insert(r.sequence.size());
  }
  out.flag = certified_lengths.size() > 1;
  return out;
}

GeRegularityReport ge_regularity_check(const Polynomial& x, const PresentedModule& m, const TestElementSpec& spec,
                                       unsigned e_max, int candidate_degree) {
  GeRegularityReport out;
  out.ghost = ghost_regular_element(x, m, spec, e_max);
  if (!out.ghost.certified_clean) return out;
  const QuotientRing& ring = *m.ring();
  for (unsigned e = 0; e <= e_max; ++e) {
    auto red = reduced_frobenius(m, e, spec, e_max - e, std::nullopt, candidate_degree);
    PresentedModule fm = frobenius_module(m, e);
    std::vector<Vector> kills;
    for (const auto& [v, verdict] : red.candidates) {
      if (verdict.certified_member()) kills.push_back(v);
    }
    PresentedModule g = Submodule(fm, kills).quotient();
    auto gens = annihilated(g, ring.reduce(x.pow(frobenius_q(ring, e))));
    auto verdicts = zero_star_scan(gens, fm, spec, e, e_max - e);
    for (std::size_t k = 0; k < verdicts.size(); ++k) {
      if (verdicts[k].certified_non_member()) {
        out.flag = true;
        out.detail = "level " + std::to_string(e) + ": " + gens[k].to_string() + " is killed by x^q modulo 0^* but lies outside 0^*";
        return out;
      }
    }
  }
  return out;
}

}  // namespace phantom
