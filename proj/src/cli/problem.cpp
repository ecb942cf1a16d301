#include "phantom/cli/problem.hpp"

#include <set>

#include "phantom/ring/errors.hpp"
#include "phantom/ring/parser.hpp"

namespace phantom::cli {

namespace {

std::pair<std::size_t, std::size_t> line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

void only_keys(const Json& obj, std::set<std::string> allowed, const std::string& where) {
  if (!obj.is_object()) throw InputError(where + ": expected an object");
  for (const auto& [k, v] : obj.items()) {
    if (!allowed.count(k)) throw InputError(where + ": unknown key \"" + k + "\"");
  }
}

template <typename T>
T get(const Json& j, const std::string& where) {
  try {
    return j.get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw InputError(where + ": " + e.what());
  }
}

}  // namespace

const Json* find(const Json& obj, const char* key) {
  if (!obj.is_object()) return nullptr;
  auto it = obj.find(key);
  return it == obj.end() ? nullptr : &*it;
}

const Json& require(const Json& obj, const char* key, const std::string& where) {
  const Json* j = find(obj, key);
  if (!j) throw InputError(where + ": missing \"" + key + "\"");
  return *j;
}

ProblemFile ProblemFile::parse(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    auto [line, col] = line_column(text, e.byte);
    throw ParseError("malformed JSON", line, col);
  }
  return from_json(j);
}

ProblemFile ProblemFile::from_json(const Json& j) {
  only_keys(j, {"task", "ring", "test_element", "bounds", "payload"}, "problem");
  ProblemFile pf;
  if (const Json* t = find(j, "task")) pf.task = get<std::string>(*t, "task");
  const Json& ring = require(j, "ring", "problem");
  only_keys(ring, {"p", "vars", "order", "ideal", "regular"}, "ring");
  pf.ring.p = get<std::uint32_t>(require(ring, "p", "ring"), "ring.p");
  pf.ring.vars = get<std::vector<std::string>>(require(ring, "vars", "ring"), "ring.vars");
  if (const Json* o = find(ring, "order")) pf.ring.order = get<std::string>(*o, "ring.order");
  if (const Json* i = find(ring, "ideal")) pf.ring.ideal = get<std::vector<std::string>>(*i, "ring.ideal");
  if (const Json* r = find(ring, "regular")) pf.ring.regular = get<bool>(*r, "ring.regular");
  if (const Json* t = find(j, "test_element")) {
    only_keys(*t, {"c", "q0", "locally_stable", "provenance"}, "test_element");
    TestElementData te;
    te.c = get<std::string>(require(*t, "c", "test_element"), "test_element.c");
    if (const Json* q = find(*t, "q0")) te.q0 = get<std::uint64_t>(*q, "test_element.q0");
    if (const Json* l = find(*t, "locally_stable")) te.locally_stable = get<bool>(*l, "test_element.locally_stable");
    if (const Json* p = find(*t, "provenance")) te.provenance = get<std::string>(*p, "test_element.provenance");
    pf.test_element = te;
  }
  if (const Json* b = find(j, "bounds")) {
    only_keys(*b, {"e_max", "t_max", "degree_budget"}, "bounds");
    if (const Json* e = find(*b, "e_max")) pf.bounds.e_max = get<unsigned>(*e, "bounds.e_max");
    if (const Json* t = find(*b, "t_max")) pf.bounds.t_max = get<std::uint64_t>(*t, "bounds.t_max");
    if (const Json* d = find(*b, "degree_budget")) pf.bounds.degree_budget = get<std::uint32_t>(*d, "bounds.degree_budget");
  }
  if (const Json* p = find(j, "payload")) {
    if (!p->is_object()) throw InputError("payload: expected an object");
    pf.payload = *p;
  }
  return pf;
}

Json ProblemFile::to_json() const {
  Json j;
  j["task"] = task;
  j["ring"] = {{"p", ring.p}, {"vars", ring.vars}, {"order", ring.order}, {"ideal", ring.ideal}, {"regular", ring.regular}};
  if (test_element) {
    j["test_element"] = {{"c", test_element->c},
                         {"q0", test_element->q0},
                         {"locally_stable", test_element->locally_stable},
                         {"provenance", test_element->provenance}};
  }
  j["bounds"] = {{"e_max", bounds.e_max}, {"t_max", bounds.t_max}, {"degree_budget", bounds.degree_budget}};
  j["payload"] = payload;
  return j;
}

Context Context::build(const ProblemFile& pf) {
  if (pf.ring.vars.empty()) throw InputError("ring.vars: at least one variable is required");
  Limits limits;
  limits.max_degree = pf.bounds.degree_budget;
  Context c;
  c.s = make_ring(pf.ring.p, pf.ring.vars, parse_order(pf.ring.order), limits);
  c.r = make_quotient(c.s, pf.ring.ideal, pf.ring.regular);
  if (pf.test_element) {
    TestElementSpec spec{c.poly(pf.test_element->c, "test_element.c"), pf.test_element->q0,
                         pf.test_element->locally_stable, pf.test_element->provenance};
    spec.validate(*c.r);
    c.spec = spec;
  }
  return c;
}

const TestElementSpec& Context::require_spec() const {
  if (!spec) throw InputError("this task needs a test_element");
  return *spec;
}

Polynomial Context::poly(const Json& j, const std::string& where) const {
  if (j.is_number_integer()) return Polynomial::constant(s, j.get<std::int64_t>());
  std::string text = get<std::string>(j, where);
  try {
    return parse_polynomial(text, s);
  } catch (const ParseError& e) {
    throw InputError(where + ": " + e.what());
  }
}

std::vector<Polynomial> Context::polys(const Json& j, const std::string& where) const {
  if (!j.is_array()) throw InputError(where + ": expected an array");
  std::vector<Polynomial> out;
  for (std::size_t k = 0; k < j.size(); ++k) out.push_back(poly(j[k], where + "[" + std::to_string(k) + "]"));
  return out;
}

Vector Context::vector(const Json& j, std::size_t rank, const std::string& where) const {
  std::vector<Polynomial> coords = j.is_array() ? polys(j, where) : std::vector<Polynomial>{poly(j, where)};
  if (coords.size() != rank) {
    throw InputError(where + ": expected " + std::to_string(rank) + " coordinates, got " + std::to_string(coords.size()));
  }
  return Vector::from_coordinates(s, coords);
}

std::vector<Vector> Context::vectors(const Json& j, std::size_t rank, const std::string& where) const {
  if (!j.is_array()) throw InputError(where + ": expected an array");
  std::vector<Vector> out;
  for (std::size_t k = 0; k < j.size(); ++k) out.push_back(vector(j[k], rank, where + "[" + std::to_string(k) + "]"));
  return out;
}

Matrix Context::matrix(const Json& j, const std::string& where) const {
  if (j.is_object()) {
    only_keys(j, {"rows", "cols", "entries"}, where);
    auto rows = get<std::size_t>(require(j, "rows", where), where + ".rows");
    auto cols = get<std::size_t>(require(j, "cols", where), where + ".cols");
    Matrix m(s, rows, cols);
    if (const Json* e = find(j, "entries")) {
      if (!e->is_array() || e->size() != rows) throw InputError(where + ".entries: expected " + std::to_string(rows) + " rows");
      for (std::size_t i = 0; i < rows; ++i) {
        auto row = polys((*e)[i], where + ".entries[" + std::to_string(i) + "]");
        if (row.size() != cols) throw InputError(where + ".entries: row " + std::to_string(i) + " has the wrong length");
        for (std::size_t k = 0; k < cols; ++k) m.set(i, k, row[k]);
      }
    }
    return m;
  }
  if (!j.is_array() || j.empty()) throw InputError(where + ": expected a nonempty array of rows or an object");
  std::vector<std::vector<Polynomial>> rows;
  for (std::size_t i = 0; i < j.size(); ++i) rows.push_back(polys(j[i], where + "[" + std::to_string(i) + "]"));
  for (const auto& r : rows) {
    if (r.size() != rows.front().size()) throw InputError(where + ": ragged rows");
  }
  return Matrix::from_rows(s, rows.front().size(), rows);
}

PresentedModule Context::module(const Json* j, const std::string& where) const {
  if (!j) return PresentedModule::free(r, 1);
  only_keys(*j, {"rank", "relations"}, where);
  auto rank = get<std::size_t>(require(*j, "rank", where), where + ".rank");
  std::vector<Vector> cols;
  if (const Json* rel = find(*j, "relations")) cols = vectors(*rel, rank, where + ".relations");
  Matrix a = cols.empty() ? Matrix(s, rank, 0) : Matrix::from_columns(s, rank, cols);
  return PresentedModule(r, rank, std::move(a));
}

ChainComplex Context::complex(const Json& j, const std::string& where) const {
  if (const Json* k = find(j, "koszul")) {
    only_keys(j, {"koszul", "module"}, where);
    return koszul(polys(*k, where + ".koszul"), module(find(j, "module"), where + ".module"));
  }
  only_keys(j, {"lo", "modules", "differentials"}, where);
  int lo = 0;
  if (const Json* l = find(j, "lo")) lo = get<int>(*l, where + ".lo");
  const Json& mods = require(j, "modules", where);
  if (!mods.is_array() || mods.empty()) throw InputError(where + ".modules: expected a nonempty array");
  std::vector<PresentedModule> ms;
  for (std::size_t k = 0; k < mods.size(); ++k) ms.push_back(module(&mods[k], where + ".modules[" + std::to_string(k) + "]"));
  std::vector<Matrix> ds;
  if (const Json* d = find(j, "differentials")) {
    if (!d->is_array()) throw InputError(where + ".differentials: expected an array");
    for (std::size_t k = 0; k < d->size(); ++k) ds.push_back(matrix((*d)[k], where + ".differentials[" + std::to_string(k) + "]"));
  }
  return ChainComplex(r, lo, std::move(ms), std::move(ds));
}

std::optional<PrimeList> Context::primes(const Json* j, const std::string& where) const {
  if (!j) return std::nullopt;
  if (!j->is_array()) throw InputError(where + ": expected an array of generator lists");
  PrimeList out;
  for (std::size_t k = 0; k < j->size(); ++k) out.push_back(polys((*j)[k], where + "[" + std::to_string(k) + "]"));
  return out;
}

Json to_json(const Verdict& v) {
  Json j;
  j["status"] = v.status_name();
  if (v.certificate) {
    const auto& c = *v.certificate;
    Json cj;
    cj["kind"] = certificate_kind_name(c.kind);
    cj["q"] = c.q;
    if (!c.reduction.empty()) cj["reduction"] = c.reduction;
    if (c.level) cj["level"] = *c.level;
    if (c.generator) cj["generator"] = *c.generator;
    if (!c.element.empty()) cj["element"] = c.element;
    j["certificate"] = cj;
  }
  j["bounds"] = {{"e_max", v.e_max}, {"q0", v.q0}};
  if (!v.conditional_on.empty()) j["conditional_on"] = v.conditional_on;
  return j;
}

Json to_json(const StepVerdict& s) {
  Json j;
  j["x"] = s.x.to_string();
  j["verdict"] = to_json(s.verdict);
  j["certified_clean"] = s.certified_clean;
  if (s.t) j["t"] = *s.t;
  if (!s.u.empty()) j["u"] = s.u;
  return j;
}

Json to_json(const SequenceVerdict& s) {
  Json j;
  Json xs = Json::array();
  for (const auto& x : s.xs) xs.push_back(x.to_string());
  j["xs"] = xs;
  j["proper"] = s.proper;
  j["aggregate"] = to_json(s.aggregate);
  Json steps = Json::array();
  for (const auto& st : s.steps) steps.push_back(to_json(st));
  j["steps"] = steps;
  if (s.failing_step) j["failing_step"] = *s.failing_step;
  j["e_max"] = s.e_max;
  if (s.t_max) j["t_max"] = s.t_max;
  return j;
}

Json to_json(const PhantomDepthReport& r) {
  Json j;
  j["depth"] = r.depth;
  j["qualifier"] = r.qualifier == DepthQualifier::kCertified ? "certified" : "bound-limited";
  Json spots = Json::array();
  for (const auto& [i, v] : r.spots) spots.push_back({{"spot", i}, {"verdict", to_json(v)}});
  j["spots"] = spots;
  j["rigidity_flag"] = r.rigidity_flag;
  return j;
}

Json to_json(const DepthReport& r) {
  Json j;
  Json gens = Json::array();
  for (const auto& g : r.gens) gens.push_back(g.to_string());
  j["ideal"] = gens;
  j["depth"] = r.depth;
  j["phantom_depth"] = to_json(r.phantom);
  j["minheight"] = r.minheight;
  j["height"] = r.height;
  j["chain"] = {r.depth, r.phantom.depth, r.minheight, r.height};
  j["all_certified"] = r.all_certified;
  j["chain_violation"] = r.chain_violation;
  return j;
}

}  // namespace phantom::cli
