#pragma once

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "phantom/complexes/sequence.hpp"
#include "phantom/depth/depth.hpp"

namespace phantom::cli {

using Json = nlohmann::ordered_json;

struct RingData {
  std::uint32_t p = 2;
  std::vector<std::string> vars;
  std::string order = "grevlex";
  std::vector<std::string> ideal;
  bool regular = false;
};

struct TestElementData {
  std::string c;
  std::uint64_t q0 = 1;
  bool locally_stable = true;
  std::string provenance;
};

struct Bounds {
  unsigned e_max = 3;
  std::uint64_t t_max = 0;  // 0: p^e_max
  std::uint32_t degree_budget = 64;
};

// One task per file. Unknown top-level keys are rejected so typos surface.
struct ProblemFile {
  std::string task;
  RingData ring;
  std::optional<TestElementData> test_element;
  Bounds bounds;
  Json payload = Json::object();

  // Throws ParseError (with line and column) on malformed JSON, InputError on
  // structural problems.
  static ProblemFile parse(const std::string& text);
  static ProblemFile from_json(const Json& j);
  Json to_json() const;
};

// Objects built from a problem file.
struct Context {
  RingPtr s;
  QRingPtr r;
  std::optional<TestElementSpec> spec;

  static Context build(const ProblemFile& pf);
  const TestElementSpec& require_spec() const;

  Polynomial poly(const Json& j, const std::string& where) const;
  std::vector<Polynomial> polys(const Json& j, const std::string& where) const;
  // A list of strings, or one string for rank 1.
  Vector vector(const Json& j, std::size_t rank, const std::string& where) const;
  std::vector<Vector> vectors(const Json& j, std::size_t rank, const std::string& where) const;
  // Array of rows, or {"rows", "cols", "entries"} (needed for empty matrices).
  Matrix matrix(const Json& j, const std::string& where) const;
  // {"rank": r, "relations": [[column], ...]}; absent means R itself.
  PresentedModule module(const Json* j, const std::string& where) const;
  // {"lo", "modules", "differentials"} or {"koszul": [...], "module": {...}}.
  ChainComplex complex(const Json& j, const std::string& where) const;
  std::optional<PrimeList> primes(const Json* j, const std::string& where) const;
};

// Lookup of an optional payload key.
const Json* find(const Json& obj, const char* key);
const Json& require(const Json& obj, const char* key, const std::string& where);

Json to_json(const Verdict& v);
Json to_json(const StepVerdict& s);
Json to_json(const SequenceVerdict& s);
Json to_json(const PhantomDepthReport& r);
Json to_json(const DepthReport& r);

}  // namespace phantom::cli
