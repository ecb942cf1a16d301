#pragma once

#include <optional>
#include <string>
#include <vector>

#include "phantom/cli/commands.hpp"

namespace phantom::cli {

// A ring with a declared test element, a module over it, and the sequences
// and ideal the harnesses run on.
struct CorpusInstance {
  std::string name;
  std::uint32_t p = 2;
  std::vector<std::string> vars;
  std::vector<std::string> ideal;
  bool regular = false;
  std::string c = "1";
  std::uint64_t q0 = 1;
  std::string provenance;
  // Relation columns of M (each of length rank); rank 1 with none is R.
  std::size_t rank = 1;
  std::vector<std::vector<std::string>> relations;
  std::vector<std::vector<std::string>> sequences;
  std::vector<std::string> depth_ideal;
  std::optional<std::vector<std::vector<std::string>>> primes;
  unsigned e_max = 2;
  bool maximal_scan = false;
};

const std::vector<CorpusInstance>& builtin_corpus();

struct Check {
  std::string category;
  std::string instance;
  std::string name;
  bool flag = false;
  std::string detail;
};

// Categories and the groups a filter may also name.
const std::vector<std::pair<std::string, std::string>>& corpus_categories();

struct CorpusReport {
  std::vector<Check> checks;
  Json data = Json::object();  // per-instance verdicts and numbers
  std::vector<std::pair<std::string, std::string>> aborted;  // harness, budget message
  std::size_t flags() const;
  std::size_t count(const std::string& category) const;
  std::size_t flags(const std::string& category) const;
};

// Runs every harness whose category or group equals the filter (all when the
// filter is empty). Throws InputError for an unknown filter.
CorpusReport run_corpus(const std::string& filter, const BoundOverrides& overrides);

// Exit code 2 if anything is flagged, else 3 if a harness hit the budget.
RunReport corpus_command(const std::string& filter, const BoundOverrides& overrides);

}  // namespace phantom::cli
