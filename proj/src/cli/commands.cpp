#include "phantom/cli/commands.hpp"

#include <chrono>
#include <map>
#include <sstream>

#include "phantom/cli/corpus.hpp"
#include "phantom/ring/errors.hpp"

namespace phantom::cli {

namespace {

std::string vec_string(const Vector& v) {
  return v.coordinates().size() == 1 ? v.coordinates()[0].to_string() : v.to_string();
}

PresentedModule module_of(const Context& cx, const Json& pl) { return cx.module(find(pl, "module"), "payload.module"); }

struct MembershipInput {
  PresentedModule m;
  Vector z;
  Submodule n;
};

MembershipInput membership_input(const Context& cx, const Json& pl) {
  PresentedModule m = module_of(cx, pl);
  Vector z = cx.vector(require(pl, "element", "payload"), m.rank(), "payload.element");
  Submodule n(m, cx.vectors(require(pl, "submodule", "payload"), m.rank(), "payload.submodule"));
  return {m, z, n};
}

// "spots" from the payload, else every degree of the complex.
std::vector<int> spots_of(const ChainComplex& c, const Json& pl) {
  if (const Json* s = find(pl, "spots")) return s->get<std::vector<int>>();
  std::vector<int> spots;
  for (int i = c.lo(); i <= c.hi(); ++i) spots.push_back(i);
  return spots;
}

ShortSPSequence sequence_of(const Context& cx, const Json& pl) {
  auto mats = [&](const char* key) {
    const Json& arr = require(pl, key, "payload");
    if (!arr.is_array()) throw InputError(std::string("payload.") + key + ": expected an array of matrices");
    std::vector<Matrix> out;
    for (std::size_t k = 0; k < arr.size(); ++k) out.push_back(cx.matrix(arr[k], std::string("payload.") + key + "[" + std::to_string(k) + "]"));
    return out;
  };
  return ShortSPSequence(cx.complex(require(pl, "l", "payload"), "payload.l"),
                         cx.complex(require(pl, "m", "payload"), "payload.m"),
                         cx.complex(require(pl, "n", "payload"), "payload.n"), mats("alpha"), mats("beta"));
}

Json gb(const ProblemFile&, const Context& cx, const Json& pl) {
  std::size_t rank = 1;
  if (const Json* r = find(pl, "rank")) rank = r->get<std::size_t>();
  auto gens = cx.vectors(require(pl, "generators", "payload"), rank, "payload.generators");
  for (const auto& f : cx.r->ideal()) {
    for (std::size_t i = 0; i < rank; ++i) gens.push_back(Vector::unit(cx.s, rank, i) * f);
  }
  auto basis = GroebnerCache::global().get(cx.s, rank, gens);
  Json out = Json::array();
  for (const auto& v : basis->elements()) out.push_back(vec_string(v));
  return {{"basis", out}};
}

Json member(const ProblemFile&, const Context& cx, const Json& pl) {
  auto in = membership_input(cx, pl);
  Vector nf = in.n.reduce(in.z);
  Verdict v;
  v.status = nf.is_zero() ? Status::kCertifiedMember : Status::kCertifiedNonMember;
  v.certificate = Certificate{Certificate::Kind::kTrivial, 1, nf.to_string(), std::nullopt, std::nullopt, ""};
  return {{"verdict", to_json(v)}, {"normal_form", vec_string(nf)}};
}

Json fclosure(const ProblemFile& pf, const Context& cx, const Json& pl) {
  auto in = membership_input(cx, pl);
  return {{"verdict", to_json(frobenius_closure_member(in.z, in.n, pf.bounds.e_max))}};
}

Json tclosure(const ProblemFile& pf, const Context& cx, const Json& pl) {
  auto in = membership_input(cx, pl);
  return {{"verdict", to_json(tight_closure_member(in.z, in.n, cx.require_spec(), pf.bounds.e_max))}};
}

Json ghost_seq(const ProblemFile& pf, const Context& cx, const Json& pl) {
  auto xs = cx.polys(require(pl, "sequence", "payload"), "payload.sequence");
  return to_json(ghost_regular_sequence(xs, module_of(cx, pl), cx.require_spec(), pf.bounds.e_max));
}

Json phantom_seq(const ProblemFile& pf, const Context& cx, const Json& pl) {
  auto xs = cx.polys(require(pl, "sequence", "payload"), "payload.sequence");
  return to_json(phantom_regular_sequence(xs, module_of(cx, pl), cx.require_spec(), pf.bounds.e_max, pf.bounds.t_max));
}

Json phantom_depth_cmd(const ProblemFile& pf, const Context& cx, const Json& pl) {
  auto gens = cx.polys(require(pl, "ideal", "payload"), "payload.ideal");
  bool trust = false;
  if (const Json* t = find(pl, "trust_rigidity")) trust = t->get<bool>();
  return to_json(phantom_depth(gens, module_of(cx, pl), cx.require_spec(), pf.bounds.e_max, trust));
}

Json koszul_report(const ProblemFile& pf, const Context& cx, const Json& pl) {
  auto xs = cx.polys(require(pl, "sequence", "payload"), "payload.sequence");
  PresentedModule m = module_of(cx, pl);
  const auto& spec = cx.require_spec();
  ChainComplex k = koszul(xs, m);
  Json spots = Json::array();
  std::vector<Verdict> held;
  for (int i = 0; i <= k.hi(); ++i) {
    auto cr = criteria_equivalence_check(k, i, spec, pf.bounds.e_max);
    held.push_back(cr.phantom);
    spots.push_back({{"spot", i},
                     {"exact", exact_at(k, i)},
                     {"stably_phantom", to_json(cr.phantom)},
                     {"kills", to_json(cr.kills)},
                     {"criteria_flag", cr.flag}});
  }
  bool rigidity = false;
  for (int i = 1; i + 1 <= k.hi(); ++i) rigidity = rigidity || (held[i].certified_member() && held[i + 1].certified_non_member());
  Json out{{"spots", spots}, {"rigidity_flag", rigidity}};
  if (!xs.empty()) {
    auto ghost = ghost_regular_sequence(xs, m, spec, pf.bounds.e_max);
    out["ghost"] = to_json(ghost.aggregate);
    out["characterization_flag"] = (ghost.certified_no() && held[1].certified_member()) ||
                                   (held[1].certified_non_member() && ghost.certified_clean());
  }
  return out;
}

Json complex_check(const ProblemFile& pf, const Context& cx, const Json& pl) {
  ChainComplex c = cx.complex(require(pl, "complex", "payload"), "payload.complex");
  const auto& spec = cx.require_spec();
  Json out = Json::array();
  for (int i : spots_of(c, pl)) {
    auto cr = criteria_equivalence_check(c, i, spec, pf.bounds.e_max);
    out.push_back({{"spot", i},
                   {"exact", exact_at(c, i)},
                   {"stably_phantom", to_json(cr.phantom)},
                   {"kills", to_json(cr.kills)},
                   {"criteria_flag", cr.flag},
                   {"detail", cr.detail}});
  }
  return {{"spots", out}};
}

Json finf(const ProblemFile& pf, const Context& cx, const Json& pl) {
  ChainComplex c = cx.complex(require(pl, "complex", "payload"), "payload.complex");
  Json out = Json::array();
  for (int i : spots_of(c, pl)) {
    out.push_back({{"spot", i}, {"exact", exact_at(c, i)}, {"finf", to_json(finf_exact_at(c, i, pf.bounds.e_max))}});
  }
  return {{"spots", out}};
}

Json sp_sequence(const ProblemFile& pf, const Context& cx, const Json& pl) {
  ShortSPSequence s = sequence_of(cx, pl);
  std::vector<int> degrees;
  if (const Json* d = find(pl, "degrees")) {
    degrees = d->get<std::vector<int>>();
  } else {
    for (int i = s.m().lo(); i <= s.m().hi(); ++i) degrees.push_back(i);
  }
  const auto& spec = cx.require_spec();
  Json hyp = Json::array();
  for (const auto& h : s.hypotheses(spec, pf.bounds.e_max)) {
    hyp.push_back({{"degree", h.degree}, {"middle", to_json(h.middle)}, {"left", to_json(h.left)}});
  }
  Json parts = Json::array();
  bool any = false;
  for (const auto& part : sp_sequence_checks(s, degrees, spec, pf.bounds.e_max)) {
    Json items = Json::array();
    for (const auto& [name, v] : part.items) items.push_back({{"name", name}, {"verdict", to_json(v)}});
    parts.push_back({{"name", part.name}, {"degree", part.degree}, {"items", items}, {"flag", part.flag}, {"detail", part.detail}});
    any = any || part.flag;
  }
  return {{"hypotheses", hyp}, {"parts", parts}, {"flagged", any}};
}

Json lift_json(const DeltaLift& l) {
  return {{"y", l.y.to_string()}, {"x", l.x.to_string()}, {"representative", l.representative.to_string()}};
}

Json delta(const ProblemFile&, const Context& cx, const Json& pl) {
  ShortSPSequence s = sequence_of(cx, pl);
  const int i = require(pl, "degree", "payload").get<int>();
  auto level = [&](const char* key) {
    const Json* j = find(pl, key);
    return j ? j->get<unsigned>() : 0u;
  };
  const unsigned e = level("e"), e1 = level("e1"), e2 = level("e2");
  PresentedModule target = frobenius_module(s.n().module(i), e);
  Vector z = cx.vector(require(pl, "cycle", "payload"), target.rank(), "payload.cycle");
  auto d = connecting_delta(s, i, z, e, e1, e2, cx.require_spec());
  Json alts = Json::array();
  for (const auto& a : d.alternates) alts.push_back(lift_json(a));
  return {{"z", d.z.to_string()},       {"levels", {d.e, d.e1, d.e2}},      {"primary", lift_json(d.primary)},
          {"alternates", alts},         {"is_cycle", d.is_cycle},           {"lift_independent", d.lift_independent},
          {"is_zero", d.is_zero}};
}

Json ge_inject(const ProblemFile& pf, const Context& cx, const Json& pl) {
  PresentedModule a = cx.module(&require(pl, "a", "payload"), "payload.a");
  PresentedModule b = cx.module(&require(pl, "b", "payload"), "payload.b");
  PresentedModule c = cx.module(&require(pl, "c", "payload"), "payload.c");
  ModuleMap alpha(a, b, cx.matrix(require(pl, "alpha", "payload"), "payload.alpha"));
  ModuleMap beta(b, c, cx.matrix(require(pl, "beta", "payload"), "payload.beta"));
  int degree = 2;
  if (const Json* d = find(pl, "candidate_degree")) degree = d->get<int>();
  auto rep = ge_injectivity_check(alpha, beta, cx.require_spec(), pf.bounds.e_max, degree);
  return {{"direct", to_json(rep.direct)}, {"injective", to_json(rep.injective)}, {"agree", rep.agree}};
}

Json mnht(const ProblemFile&, const Context& cx, const Json& pl) {
  auto gens = cx.polys(require(pl, "ideal", "payload"), "payload.ideal");
  PresentedModule m = module_of(cx, pl);
  auto primes = cx.primes(find(pl, "primes"), "payload.primes");
  PrimeList ps = primes ? *primes : module_minimal_primes(m);
  auto hs = relative_heights(gens, ps, *cx.r);
  Json per = Json::array();
  for (std::size_t k = 0; k < ps.size(); ++k) {
    Json g = Json::array();
    for (const auto& f : ps[k]) g.push_back(f.to_string());
    per.push_back({{"prime", g}, {"height", hs[k]}});
  }
  return {{"minheight", minheight(gens, m, ps)}, {"height", height(gens, m, ps)}, {"primes", per}};
}

Json depth_chain(const ProblemFile& pf, const Context& cx, const Json& pl) {
  auto gens = cx.polys(require(pl, "ideal", "payload"), "payload.ideal");
  auto primes = cx.primes(find(pl, "primes"), "payload.primes");
  return to_json(depth_chain_report(gens, module_of(cx, pl), cx.require_spec(), pf.bounds.e_max, primes));
}

using Fn = Json (*)(const ProblemFile&, const Context&, const Json&);

const std::map<std::string, Fn>& handlers() {
  static const std::map<std::string, Fn> h{
      {"gb", gb},
      {"member", member},
      {"fclosure", fclosure},
      {"tclosure", tclosure},
      {"ghost-seq", ghost_seq},
      {"phantom-seq", phantom_seq},
      {"phantom-depth", phantom_depth_cmd},
      {"koszul-report", koszul_report},
      {"complex-check", complex_check},
      {"sp-sequence", sp_sequence},
      {"delta", delta},
      {"ge-inject", ge_inject},
      {"finf", finf},
      {"mnht", mnht},
      {"depth-chain", depth_chain},
  };
  return h;
}

Json error_body(const std::string& kind, const std::string& message) { return {{"error", {{"kind", kind}, {"message", message}}}}; }

}  // namespace

void BoundOverrides::apply(Bounds& b) const {
  if (e_max) b.e_max = *e_max;
  if (t_max) b.t_max = *t_max;
  if (degree_budget) b.degree_budget = *degree_budget;
}

Json RunReport::to_json(bool with_stats) const {
  Json j;
  j["command"] = command;
  j["task"] = task;
  j["result"] = result;
  j["exit_code"] = exit_code;
  if (with_stats) {
    j["stats"] = {{"wall_ms", wall_ms},
                  {"cache", {{"hits", cache.hits}, {"misses", cache.misses}, {"disk_hits", cache.disk_hits},
                             {"disk_writes", cache.disk_writes}, {"corrupt", cache.corrupt}}}};
  }
  return j;
}

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"gb",          "member",        "fclosure",      "tclosure",
                                              "ghost-seq",   "phantom-seq",   "phantom-depth", "koszul-report",
                                              "complex-check", "sp-sequence", "delta",         "ge-inject",
                                              "finf",        "mnht",          "depth-chain",   "corpus"};
  return names;
}

RunReport run_command(const std::string& command, const ProblemFile& pf) {
  auto it = handlers().find(command);
  if (it == handlers().end()) throw InputError("unknown command \"" + command + "\"");
  if (!pf.task.empty() && pf.task != command) {
    throw InputError("problem file is for task \"" + pf.task + "\", not \"" + command + "\"");
  }
  RunReport out;
  out.command = command;
  out.task = pf.to_json();
  Context cx = Context::build(pf);
  try {
    out.result = it->second(pf, cx, pf.payload);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("payload: ") + e.what());
  }
  return out;
}

RunReport run_guarded(const std::string& command, const std::string& problem_text, const BoundOverrides& overrides) {
  const auto start = std::chrono::steady_clock::now();
  const CacheStats before = GroebnerCache::global().stats();
  RunReport out;
  out.command = command;
  try {
    ProblemFile pf = ProblemFile::parse(problem_text);
    overrides.apply(pf.bounds);
    out = run_command(command, pf);
  } catch (const ResourceError& e) {
    out.result = error_body("resource", e.what());
    out.exit_code = kResourceAbort;
  } catch (const ParseError& e) {
    out.result = error_body("parse", e.what());
    out.exit_code = kInputError;
  } catch (const UnsupportedInput& e) {
    out.result = error_body("unsupported", e.what());
    out.exit_code = kInputError;
  } catch (const InputError& e) {
    out.result = error_body("input", e.what());
    out.exit_code = kInputError;
  } catch (const LiftError& e) {
    out.result = error_body("lift", e.what());
    out.exit_code = kInputError;
  }
  const CacheStats after = GroebnerCache::global().stats();
  out.cache = {after.hits - before.hits, after.misses - before.misses, after.disk_hits - before.disk_hits,
               after.disk_writes - before.disk_writes, after.corrupt - before.corrupt};
  out.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return out;
}

std::string render_text(const Json& j, int indent) {
  std::ostringstream os;
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  auto scalar = [](const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  auto is_flat = [](const Json& v) {
    if (!v.is_array()) return false;
    for (const auto& e : v) {
      if (e.is_structured()) return false;
    }
    return true;
  };
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_structured() && !is_flat(v)) {
        os << pad << k << ":\n" << render_text(v, indent + 1);
      } else if (is_flat(v)) {
        os << pad << k << ": [";
        for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << scalar(v[i]);
        os << "]\n";
      } else {
        os << pad << k << ": " << scalar(v) << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_structured()) {
        os << pad << "-\n" << render_text(v, indent + 1);
      } else {
        os << pad << "- " << scalar(v) << "\n";
      }
    }
  } else {
    os << pad << scalar(j) << "\n";
  }
  return os.str();
}

}  // namespace phantom::cli
