#include "phantom/cli/corpus.hpp"

#include <chrono>
#include <random>

#include "phantom/closures/nakayama.hpp"
#include "phantom/ring/errors.hpp"
#include "phantom/ring/parser.hpp"

namespace phantom::cli {

namespace {

using Strings = std::vector<std::string>;

CorpusInstance inst(std::string name, std::uint32_t p, Strings vars, Strings ideal, bool regular, std::string c,
                    std::uint64_t q0, std::string provenance) {
  CorpusInstance i;
  i.name = std::move(name);
  i.p = p;
  i.vars = std::move(vars);
  i.ideal = std::move(ideal);
  i.regular = regular;
  i.c = std::move(c);
  i.q0 = q0;
  i.provenance = std::move(provenance);
  return i;
}

std::vector<CorpusInstance> make_corpus() {
  std::vector<CorpusInstance> out;
  const Strings xy{"x", "y"}, xyz{"x", "y", "z"};
  const char* regular = "regular ring, c = 1";
  const char* node = "Jacobian ideal of the node";
  const char* nilpotent = "reduced ring regular, nilpotents of order p";
  {
    auto i = inst("plane-f2", 2, xy, {}, true, "1", 1, regular);
    i.sequences = {{"x", "y"}, {"x^2", "y"}, {"x", "x*y"}};
    i.depth_ideal = {"x", "y"};
    i.maximal_scan = true;
    out.push_back(i);
  }
  {
    auto i = inst("plane-f3", 3, xy, {}, true, "1", 1, regular);
    i.sequences = {{"x+y", "y"}, {"x", "x"}};
    i.depth_ideal = {"x", "y"};
    i.e_max = 1;
    out.push_back(i);
  }
  {
    auto i = inst("plane-f5", 5, xy, {}, true, "1", 1, regular);
    i.sequences = {{"x", "y^2"}};
    i.depth_ideal = {"x"};
    i.e_max = 1;
    out.push_back(i);
  }
  {
    auto i = inst("space-f2", 2, xyz, {}, true, "1", 1, regular);
    i.sequences = {{"x", "y"}, {"x*y", "z"}};
    i.depth_ideal = {"x", "y", "z"};
    i.e_max = 1;
    out.push_back(i);
  }
  {
    auto i = inst("plane-f2-mod-x", 2, xy, {}, true, "1", 1, regular);
    i.relations = {{"x"}};
    i.sequences = {{"y", "x"}, {"x", "y"}};
    i.depth_ideal = {"x", "y"};
    out.push_back(i);
  }
  {
    auto i = inst("plane-f2-coker", 2, xy, {}, true, "1", 1, regular);
    i.rank = 2;
    i.relations = {{"x", "y"}};
    i.sequences = {{"x", "y"}};
    i.depth_ideal = {"x", "y"};
    out.push_back(i);
  }
  {
    auto i = inst("space-f2-mod-xy", 2, xyz, {}, true, "1", 1, regular);
    i.relations = {{"x*y"}};
    i.sequences = {{"z", "x+y"}};
    i.depth_ideal = {"z", "x+y"};
    out.push_back(i);
  }
  {
    auto i = inst("node-f2", 2, xy, {"x*y"}, false, "x+y", 1, node);
    i.sequences = {{"x", "y"}, {"x+y", "x"}};
    i.depth_ideal = {"x", "y"};
    i.maximal_scan = true;
    out.push_back(i);
  }
  {
    auto i = inst("node-f2-x", 2, xy, {"x*y"}, false, "x+y", 1, node);
    i.sequences = {{"x"}};
    i.depth_ideal = {"x"};
    i.maximal_scan = true;
    out.push_back(i);
  }
  {
    auto i = inst("node-f3", 3, xy, {"x*y"}, false, "x+y", 1, node);
    i.sequences = {{"x", "y"}, {"x+y", "x"}};
    i.depth_ideal = {"x"};
    i.e_max = 1;
    out.push_back(i);
  }
  {
    auto i = inst("node-f5", 5, xy, {"x*y"}, false, "x+y", 1, node);
    i.sequences = {{"x+y", "y"}};
    i.depth_ideal = {"x+y"};
    i.e_max = 1;
    out.push_back(i);
  }
  {
    auto i = inst("node-line-f2", 2, xyz, {"x*y"}, false, "x+y", 1, node);
    i.sequences = {{"z", "x"}, {"x+y", "z"}};
    i.depth_ideal = {"x+y", "z"};
    i.e_max = 1;
    out.push_back(i);
  }
  {
    auto i = inst("fermat-cubic", 2, xyz, {"x^3+y^3+z^3"}, false, "x^2", 1, "Jacobian ideal of the Fermat cubic");
    i.sequences = {{"x", "y"}, {"y", "z"}, {"x", "x"}};
    i.depth_ideal = {"x", "y"};
    i.primes = std::vector<Strings>{{"x^3+y^3+z^3"}};
    i.maximal_scan = true;
    out.push_back(i);
  }
  {
    auto i = inst("a1-f2", 2, xyz, {"x*y+z^2"}, false, "1", 1, "toric ring, a direct summand of a polynomial ring");
    i.sequences = {{"x", "y"}, {"z", "x"}};
    i.depth_ideal = {"x", "y"};
    i.primes = std::vector<Strings>{{"x*y+z^2"}};
    i.e_max = 1;
    out.push_back(i);
  }
  {
    auto i = inst("cusp-f2", 2, xy, {"y^2+x^3"}, false, "x^2", 1, "Jacobian ideal of the cusp");
    i.sequences = {{"x", "y"}, {"y"}};
    i.depth_ideal = {"x", "y"};
    i.primes = std::vector<Strings>{{"y^2+x^3"}};
    out.push_back(i);
  }
  {
    auto i = inst("cusp-f3", 3, xy, {"y^2-x^3"}, false, "y", 1, "Jacobian ideal of the cusp");
    i.sequences = {{"y", "x"}};
    i.depth_ideal = {"x", "y"};
    i.primes = std::vector<Strings>{{"y^2-x^3"}};
    i.e_max = 1;
    out.push_back(i);
  }
  {
    auto i = inst("a1-f3", 3, xyz, {"x*y-z^2"}, false, "1", 1, "toric ring, a direct summand of a polynomial ring");
    i.sequences = {{"x", "y"}};
    i.depth_ideal = {"x", "y"};
    i.primes = std::vector<Strings>{{"x*y-z^2"}};
    i.e_max = 1;
    out.push_back(i);
  }
  {
    auto i = inst("dual-numbers-f2", 2, {"x"}, {"x^2"}, false, "1", 2, nilpotent);
    i.sequences = {{"x"}};
    i.depth_ideal = {"x"};
    out.push_back(i);
  }
  {
    auto i = inst("double-line-f2", 2, xy, {"x^2"}, false, "1", 2, nilpotent);
    i.sequences = {{"y"}, {"y", "x"}};
    i.depth_ideal = {"y"};
    out.push_back(i);
  }
  {
    auto i = inst("double-plane-f2", 2, xyz, {"x^2"}, false, "1", 2, nilpotent);
    i.sequences = {{"y", "z"}};
    i.depth_ideal = {"y", "z"};
    i.e_max = 1;
    out.push_back(i);
  }
  {
    auto i = inst("triple-plane-f3", 3, xyz, {"(x+y+z)^3"}, false, "1", 3, nilpotent);
    i.sequences = {{"y", "z"}};
    i.depth_ideal = {"y", "z"};
    i.primes = std::vector<Strings>{{"x+y+z"}};
    i.e_max = 1;
    out.push_back(i);
  }
  return out;
}

struct Built {
  RingPtr s;
  QRingPtr r;
  TestElementSpec spec;
  PresentedModule m;
  unsigned e_max;
  std::uint64_t t_max;

  std::vector<Polynomial> polys(const Strings& ss) const {
    std::vector<Polynomial> out;
    for (const auto& x : ss) out.push_back(parse_polynomial(x, s));
    return out;
  }
};

Built build(const CorpusInstance& ci, const BoundOverrides& ov) {
  Limits limits;
  if (ov.degree_budget) limits.max_degree = *ov.degree_budget;
  Built b;
  b.s = make_ring(ci.p, ci.vars, MonomialOrder::kGrevlex, limits);
  b.r = make_quotient(b.s, ci.ideal, ci.regular);
  b.spec = TestElementSpec{parse_polynomial(ci.c, b.s), ci.q0, true, ci.provenance};
  b.spec.validate(*b.r);
  std::vector<Vector> cols;
  for (const auto& col : ci.relations) cols.push_back(Vector::from_coordinates(b.s, b.polys(col)));
  b.m = PresentedModule(b.r, ci.rank, cols.empty() ? Matrix(b.s, ci.rank, 0) : Matrix::from_columns(b.s, ci.rank, cols));
  b.e_max = ov.e_max ? *ov.e_max : ci.e_max;
  b.t_max = ov.t_max ? *ov.t_max : frobenius_power(ci.p, b.e_max);
  return b;
}

std::string seq_name(const Strings& xs) {
  std::string s = "(";
  for (std::size_t k = 0; k < xs.size(); ++k) s += (k ? ", " : "") + xs[k];
  return s + ")";
}

class Runner {
 public:
  explicit Runner(std::string filter) : filter_(std::move(filter)) {}

  bool wants(const std::string& category) const {
    if (filter_.empty()) return true;
    for (const auto& [cat, group] : corpus_categories()) {
      if (cat == category) return filter_ == cat || filter_ == group;
    }
    return false;
  }
  bool wants_any(std::initializer_list<const char*> cats) const {
    for (const char* c : cats) {
      if (wants(c)) return true;
    }
    return false;
  }
  void add(std::string category, std::string instance, std::string name, bool flag, std::string detail = "") {
    report.checks.push_back({std::move(category), std::move(instance), std::move(name), flag, std::move(detail)});
  }

  CorpusReport report;

 private:
  std::string filter_;
};

void sequence_harness(Runner& run, const CorpusInstance& ci, const Built& b, const Strings& xs_s, Json& out) {
  const std::string where = ci.name + " " + seq_name(xs_s);
  auto xs = b.polys(xs_s);
  Json j;
  j["sequence"] = xs_s;

  const bool need_ghost = run.wants_any({"equivalence", "koszul-characterization", "flex"});
  const bool need_koszul = run.wants_any({"koszul-characterization", "rigidity", "criteria", "flex", "shorter-sequence"});
  SequenceVerdict ghost;
  if (need_ghost) {
    ghost = ghost_regular_sequence(xs, b.m, b.spec, b.e_max);
    j["ghost"] = to_json(ghost.aggregate);
  }
  if (run.wants("equivalence")) {
    auto ph = phantom_regular_sequence(xs, b.m, b.spec, b.e_max, b.t_max);
    j["phantom"] = to_json(ph.aggregate);
    run.add("equivalence", where, "ghost failure seen by the phantom scan", ghost.certified_no() && !ph.certified_no(),
            ghost.certified_no() && !ph.certified_no() ? "phantom scan missed the ghost certificate" : "");
    const bool opposite = (ph.certified_no() && ghost.certified_clean()) || (ghost.certified_no() && ph.certified_clean());
    run.add("equivalence", where, "ghost and phantom verdicts agree", opposite,
            opposite ? "certified no against certified clean" : "");
  }

  std::vector<Verdict> spots;
  if (need_koszul) {
    ChainComplex k = koszul(xs, b.m);
    const int n = static_cast<int>(xs.size());
    Json sj = Json::array();
    for (int i = 0; i <= n; ++i) {
      auto cr = criteria_equivalence_check(k, i, b.spec, b.e_max);
      spots.push_back(cr.phantom);
      sj.push_back({{"spot", i}, {"exact", exact_at(k, i)}, {"stably_phantom", to_json(cr.phantom)},
                    {"kills", to_json(cr.kills)}});
      if (run.wants("criteria")) run.add("criteria", where, "criteria agree at spot " + std::to_string(i), cr.flag, cr.detail);
    }
    j["koszul"] = sj;
    if (run.wants("rigidity")) {
      for (int i = 1; i < n; ++i) {
        const bool f = spots[i].certified_member() && spots[i + 1].certified_non_member();
        run.add("rigidity", where, "spots " + std::to_string(i) + " and " + std::to_string(i + 1), f,
                f ? "holds at the lower spot, fails above it" : "");
      }
    }
    if (run.wants("koszul-characterization") && n >= 1) {
      const bool f = (ghost.certified_no() && spots[1].certified_member()) ||
                     (spots[1].certified_non_member() && ghost.certified_clean());
      run.add("koszul-characterization", where, "ghost sequence against spot 1", f,
              f ? "ghost " + ghost.aggregate.status_name() + ", spot 1 " + spots[1].status_name() : "");
    }
    if (run.wants("flex") && ghost.certified_clean()) {
      bool f = false;
      for (int i = 1; i <= n; ++i) f = f || spots[i].certified_non_member();
      run.add("flex", where, "clean ghost sequence against the top spots", f,
              f ? "a counted Koszul spot certified-fails" : "");
    }
    if (run.wants("shorter-sequence") && n == 2) {
      ChainComplex k1 = koszul({xs[0]}, b.m);
      Verdict v = stably_phantom_at(k1, 1, b.spec, b.e_max);
      const bool f = spots[1].certified_member() && v.certified_non_member();
      run.add("shorter-sequence", where, "dropping the last element keeps spot 1", f,
              f ? "K(x) fails at 1 while K(x, y) holds" : "");
    }
  }
  if (run.wants("permutability") && xs.size() == 2) {
    auto pr = permutability_check(xs[0], xs[1], b.m, b.spec, b.e_max);
    j["reversed"] = to_json(pr.backward.aggregate);
    run.add("permutability", where, "both orders", pr.flag,
            pr.flag ? pr.forward.aggregate.status_name() + " vs " + pr.backward.aggregate.status_name() : "");
  }
  if (run.wants("ge-regularity")) {
    auto gr = ge_regularity_check(xs[0], b.m, b.spec, b.e_max);
    run.add("ge-regularity", where, "x^q on the reduced Frobenius approximation", gr.flag, gr.detail);
  }
  out.push_back(j);
}

void instance_harness(Runner& run, const CorpusInstance& ci, const BoundOverrides& ov) {
  if (!run.wants_any({"equivalence", "koszul-characterization", "rigidity", "criteria", "flex", "shorter-sequence",
                      "permutability", "ge-regularity", "depth-chain"})) {
    return;
  }
  Built b = build(ci, ov);
  Json j;
  j["e_max"] = b.e_max;
  j["t_max"] = b.t_max;
  Json seqs = Json::array();
  for (const auto& xs : ci.sequences) sequence_harness(run, ci, b, xs, seqs);
  if (!seqs.empty()) j["sequences"] = seqs;
  if (run.wants("depth-chain") && !ci.depth_ideal.empty()) {
    std::optional<PrimeList> primes;
    if (ci.primes) {
      PrimeList pl;
      for (const auto& p : *ci.primes) pl.push_back(b.polys(p));
      primes = pl;
    }
    auto rep = depth_chain_report(b.polys(ci.depth_ideal), b.m, b.spec, b.e_max, primes);
    j["depth_chain"] = to_json(rep);
    run.add("depth-chain", ci.name + " " + seq_name(ci.depth_ideal), "depth <= phantom depth <= mnht <= ht",
            rep.chain_violation,
            rep.chain_violation ? "chain (" + std::to_string(rep.depth) + ", " + std::to_string(rep.phantom.depth) + ", " +
                                      std::to_string(rep.minheight) + ", " + std::to_string(rep.height) + ")"
                                : "");
    if (rep.phantom.rigidity_flag) run.add("rigidity", ci.name, "bisection against the direct scan", true);
  }
  if (run.wants("flex") && ci.maximal_scan && !ci.depth_ideal.empty()) {
    // The full ideal of the variables, so sequences can exceed the depth ideal.
    Strings pool = ci.vars;
    auto rep = maximal_sequence_scan(b.polys(pool), b.m, b.spec, b.e_max);
    Json lens = Json::array();
    for (const auto& r : rep.runs) lens.push_back({{"length", r.sequence.size()}, {"certified_maximal", r.certified_maximal}});
    j["maximal_sequences"] = lens;
    run.add("flex", ci.name + " " + seq_name(pool), "certified-maximal lengths agree", rep.flag);
  }
  run.report.data[ci.name] = j;
}

PresentedModule ideal_module(const Built& b) { return PresentedModule::free(b.r, 1); }

Submodule ideal(const Built& b, const Strings& gens) {
  std::vector<Vector> vs;
  for (const auto& g : b.polys(gens)) vs.push_back(Vector::from_coordinates(b.s, {g}));
  return Submodule(ideal_module(b), vs);
}

void nakayama_harness(Runner& run, const BoundOverrides& ov) {
  struct Pair {
    const char* instance;
    Strings l, n;
  };
  const auto& corpus = builtin_corpus();
  auto find_inst = [&](const char* name) -> const CorpusInstance& {
    for (const auto& c : corpus) {
      if (c.name == name) return c;
    }
    throw InputError("corpus instance missing");
  };
  std::vector<Pair> pairs{
      {"node-f2", {"x"}, {"x", "y^2"}},        {"node-f2", {"x^2"}, {"x^2", "y^2"}},
      {"fermat-cubic", {"x", "y"}, {"x", "y", "z^2"}}, {"fermat-cubic", {"x"}, {"x", "y*z"}},
      {"plane-f2", {"x^2"}, {"x^2", "x*y"}},    {"double-line-f2", {"y"}, {"y", "x"}},
  };
  for (const auto& pr : pairs) {
    const auto& ci = find_inst(pr.instance);
    Built b = build(ci, ov);
    Submodule l = ideal(b, pr.l), n = ideal(b, pr.n);
    const std::string where = ci.name + " L=" + seq_name(pr.l) + " N=" + seq_name(pr.n);
    auto g = nakayama_generic_check(NakayamaInstance(l, n), b.spec, b.e_max);
    run.add("nakayama", where, "generic form", g.potential_counterexample());
    auto f = nakayama_family_check(l, bracket_family(n, b.e_max), b.spec, b.e_max);
    run.add("nakayama", where, "family form", f.potential_counterexample);
    run.report.data["nakayama"][where] = {{"generic_hypothesis", to_json(g.hypothesis_all)},
                                          {"generic_conclusion", to_json(g.conclusion_all)},
                                          {"family_hypothesis_met", f.hypothesis_met}};
  }
}

// 0 -> L -> L (+) N -> N -> 0 for two-term complexes over F_2[x], with an
// off-diagonal block h in the middle differential.
ShortSPSequence split_sequence(const QRingPtr& r, const Strings& dl, const Strings& h, const Strings& dn) {
  const RingPtr& s = r->ambient();
  auto p = [&](const std::string& t) { return parse_polynomial(t, s); };
  Polynomial zero = p("0"), one = p("1");
  auto free = [&](std::size_t k) { return PresentedModule::free(r, k); };
  ChainComplex l(r, 0, {free(1), free(2)}, {Matrix::from_rows(s, 2, {{p(dl[0]), p(dl[1])}})});
  ChainComplex n(r, 0, {free(1), free(2)}, {Matrix::from_rows(s, 2, {{p(dn[0]), p(dn[1])}})});
  ChainComplex m(r, 0, {free(2), free(4)},
                 {Matrix::from_rows(s, 4, {{p(dl[0]), p(dl[1]), p(h[0]), p(h[1])}, {zero, zero, p(dn[0]), p(dn[1])}})});
  std::vector<Matrix> alpha{Matrix::from_rows(s, 1, {{one}, {zero}}),
                            Matrix::from_rows(s, 2, {{one, zero}, {zero, one}, {zero, zero}, {zero, zero}})};
  std::vector<Matrix> beta{Matrix::from_rows(s, 2, {{zero, one}}),
                           Matrix::from_rows(s, 4, {{zero, zero, one, zero}, {zero, zero, zero, one}})};
  return ShortSPSequence(l, m, n, alpha, beta);
}

std::string f2x(std::uint32_t bits) {
  std::string out;
  for (int i = 3; i >= 0; --i) {
    if (!(bits >> i & 1u)) continue;
    if (!out.empty()) out += "+";
    out += i == 0 ? "1" : i == 1 ? "x" : "x^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

void delta_harness(Runner& run, const BoundOverrides& ov) {
  Limits limits;
  if (ov.degree_budget) limits.max_degree = *ov.degree_budget;
  auto s = make_ring(2, {"x"}, MonomialOrder::kGrevlex, limits);
  auto r = make_quotient(s, std::vector<Polynomial>{}, true);
  TestElementSpec spec{parse_polynomial("x", s), 1, true, "regular ring"};
  std::mt19937 rng(4242);
  std::uniform_int_distribution<std::uint32_t> small(0, 7), nonzero(1, 7);
  for (int trial = 0; trial < 10; ++trial) {
    Strings dl{f2x(small(rng)), f2x(small(rng))};
    Strings h{f2x(nonzero(rng)), f2x(small(rng))};
    Strings dn{f2x(nonzero(rng)), f2x(small(rng))};
    auto seq = split_sequence(r, dl, h, dn);
    const std::string where = "split-f2x-" + std::to_string(trial);
    Json j = Json::array();
    for (unsigned e = 0; e <= 1; ++e) {
      // (g^q, f^q) is a cycle of F^e(N) at degree 1.
      const std::uint64_t q = frobenius_power(2, e);
      Vector z = Vector::from_coordinates(s, {parse_polynomial(dn[1], s).frobenius(q), parse_polynomial(dn[0], s).frobenius(q)});
      auto d = connecting_delta(seq, 1, z, e, 1, 0, spec);
      const bool bad = !d.is_cycle || !d.lift_independent;
      run.add("delta", where, "class independent of lifts at e=" + std::to_string(e), bad,
              bad ? (d.is_cycle ? "lifts disagree" : "representative is no cycle") : "");
      j.push_back({{"e", e}, {"lifts", 1 + d.alternates.size()}, {"zero", d.is_zero},
                   {"representative", d.primary.representative.to_string()}});
    }
    run.report.data["delta"][where] = j;
  }
}

void sp_sequence_harness(Runner& run, const BoundOverrides& ov) {
  auto s = make_ring(2, {"x", "y"});
  auto r = make_quotient(s, std::vector<Polynomial>{}, true);
  TestElementSpec spec{parse_polynomial("1", s), 1, true, "regular ring"};
  std::vector<Polynomial> xs{parse_polynomial("x", s), parse_polynomial("y", s)};
  auto k = koszul(xs, PresentedModule::free(r, 1));
  PresentedModule rx(r, 1, Matrix::from_rows(s, 1, {{xs[0]}}));
  auto kq = koszul(xs, rx);
  std::vector<Matrix> alpha, beta;
  for (int i = 0; i <= 2; ++i) {
    alpha.push_back(Matrix::scalar(s, k.module(i).rank(), xs[0]));
    beta.push_back(Matrix::identity(s, k.module(i).rank()));
  }
  ShortSPSequence seq(k, k, kq, alpha, beta);
  const unsigned e_max = ov.e_max ? *ov.e_max : 1;
  for (const auto& part : sp_sequence_checks(seq, {0, 1, 2}, spec, e_max)) {
    run.add("sp-sequence", "x on K(x, y; F2[x,y])", part.name + " at " + std::to_string(part.degree), part.flag,
            part.detail);
  }
}

void finf_harness(Runner& run, const BoundOverrides& ov) {
  auto s = make_ring(2, {"x", "y"});
  auto r = make_quotient(s, std::vector<Polynomial>{}, true);
  const unsigned e_max = ov.e_max ? *ov.e_max : 2;
  auto P = [&](const char* t) { return parse_polynomial(t, s); };
  struct Item {
    std::string name;
    ChainComplex c;
  };
  std::vector<Item> items{
      {"K(x, y)", koszul({P("x"), P("y")}, PresentedModule::free(r, 1))},
      {"K(x^2, y)", koszul({P("x^2"), P("y")}, PresentedModule::free(r, 1))},
      {"K(x, x)", koszul({P("x"), P("x")}, PresentedModule::free(r, 1))},
      {"R --0--> R", ChainComplex(r, 0, {PresentedModule::free(r, 1), PresentedModule::free(r, 1)}, {Matrix(s, 1, 1)})},
  };
  for (const auto& it : items) {
    for (int i = it.c.lo(); i <= it.c.hi(); ++i) {
      const bool exact = exact_at(it.c, i);
      Verdict v = finf_exact_at(it.c, i, e_max);
      // Over a regular ring Frobenius closures are trivial, so the two agree.
      const bool f = (exact && v.certified_non_member()) || (!exact && v.certified_member());
      run.add("finf", it.name + " spot " + std::to_string(i), "agrees with exactness", f,
              f ? "exact " + std::string(exact ? "yes" : "no") + ", F-infinity " + v.status_name() : "");
    }
  }
}

}  // namespace

const std::vector<CorpusInstance>& builtin_corpus() {
  static const std::vector<CorpusInstance> corpus = make_corpus();
  return corpus;
}

const std::vector<std::pair<std::string, std::string>>& corpus_categories() {
  static const std::vector<std::pair<std::string, std::string>> cats{
      {"equivalence", "regular-sequences"},
      {"permutability", "regular-sequences"},
      {"flex", "regular-sequences"},
      {"ge-regularity", "regular-sequences"},
      {"koszul-characterization", "rigidity"},
      {"rigidity", "rigidity"},
      {"shorter-sequence", "rigidity"},
      {"criteria", "phantom-homology"},
      {"nakayama", "nakayama"},
      {"delta", "sp-sequences"},
      {"sp-sequence", "sp-sequences"},
      {"finf", "frobenius-closure"},
      {"depth-chain", "depth"},
  };
  return cats;
}

std::size_t CorpusReport::flags() const {
  std::size_t n = 0;
  for (const auto& c : checks) n += c.flag;
  return n;
}

std::size_t CorpusReport::count(const std::string& category) const {
  std::size_t n = 0;
  for (const auto& c : checks) n += c.category == category;
  return n;
}

std::size_t CorpusReport::flags(const std::string& category) const {
  std::size_t n = 0;
  for (const auto& c : checks) n += c.category == category && c.flag;
  return n;
}

CorpusReport run_corpus(const std::string& filter, const BoundOverrides& overrides) {
  if (!filter.empty()) {
    bool known = false;
    for (const auto& [cat, group] : corpus_categories()) known = known || filter == cat || filter == group;
    if (!known) throw InputError("unknown corpus filter \"" + filter + "\"");
  }
  Runner run(filter);
  // A budget abort skips the rest of that harness only; the report lists it.
  auto guarded = [&](const std::string& name, auto&& body) {
    try {
      body();
    } catch (const ResourceError& e) {
      run.report.aborted.push_back({name, e.what()});
    }
  };
  for (const auto& ci : builtin_corpus()) guarded(ci.name, [&] { instance_harness(run, ci, overrides); });
  if (run.wants("nakayama")) guarded("nakayama", [&] { nakayama_harness(run, overrides); });
  if (run.wants("delta")) guarded("delta", [&] { delta_harness(run, overrides); });
  if (run.wants("sp-sequence")) guarded("sp-sequence", [&] { sp_sequence_harness(run, overrides); });
  if (run.wants("finf")) guarded("finf", [&] { finf_harness(run, overrides); });
  return std::move(run.report);
}

RunReport corpus_command(const std::string& filter, const BoundOverrides& overrides) {
  RunReport out;
  out.command = "corpus";
  out.task = {{"filter", filter}};
  const auto start = std::chrono::steady_clock::now();
  const CacheStats before = GroebnerCache::global().stats();
  auto rep = run_corpus(filter, overrides);
  const CacheStats after = GroebnerCache::global().stats();
  out.cache = {after.hits - before.hits, after.misses - before.misses, after.disk_hits - before.disk_hits,
               after.disk_writes - before.disk_writes, after.corrupt - before.corrupt};
  out.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  Json summary = Json::object();
  for (const auto& [cat, group] : corpus_categories()) {
    if (rep.count(cat)) summary[cat] = {{"checks", rep.count(cat)}, {"flags", rep.flags(cat)}};
  }
  Json aborted = Json::array();
  for (const auto& [where, why] : rep.aborted) aborted.push_back({{"harness", where}, {"reason", why}});
  Json flagged = Json::array();
  for (const auto& c : rep.checks) {
    if (c.flag) flagged.push_back({{"category", c.category}, {"instance", c.instance}, {"check", c.name}, {"detail", c.detail}});
  }
  out.result = {{"instances", builtin_corpus().size()},
                {"checks", rep.checks.size()},
                {"flags", rep.flags()},
                {"summary", summary},
                {"flagged", flagged},
                {"aborted", aborted},
                {"data", rep.data}};
  out.exit_code = rep.flags() ? kFlagged : rep.aborted.empty() ? kOk : kResourceAbort;
  return out;
}

}  // namespace phantom::cli
