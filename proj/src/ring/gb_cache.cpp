#include "phantom/ring/gb_cache.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "phantom/ring/errors.hpp"

namespace phantom {

namespace {

std::string serialize_vector(const Vector& v, std::size_t nvars) {
  std::string s;
  for (const auto& t : v.terms()) {
    s += std::to_string(t.coef) + ',' + std::to_string(t.pos);
    for (std::size_t i = 0; i < nvars; ++i) s += ',' + std::to_string(t.mono.exp[i]);
    s += ';';
  }
  return s;
}

std::optional<Vector> parse_vector(const std::string& text, const RingPtr& ring, std::size_t rank) {
  std::vector<VTerm> terms;
  std::stringstream terms_in(text);
  std::string item;
  const std::size_t n = ring->nvars();
  while (std::getline(terms_in, item, ';')) {
    if (item.empty()) continue;
    std::vector<std::uint64_t> fields;
    std::stringstream fields_in(item);
    std::string f;
    while (std::getline(fields_in, f, ',')) {
      if (f.empty() || f.size() > 10 || !std::all_of(f.begin(), f.end(), ::isdigit)) return std::nullopt;
      fields.push_back(std::stoull(f));
    }
    if (fields.size() != n + 2) return std::nullopt;
    if (fields[0] == 0 || fields[0] >= ring->characteristic() || fields[1] >= rank) return std::nullopt;
    VTerm t{static_cast<Coeff>(fields[0]), static_cast<std::uint32_t>(fields[1]), Monomial{}};
    for (std::size_t i = 0; i < n; ++i) {
      if (fields[i + 2] > 65535) return std::nullopt;
      t.mono.exp[i] = static_cast<std::uint16_t>(fields[i + 2]);
      t.mono.degree += t.mono.exp[i];
    }
    terms.push_back(t);
  }
  for (std::size_t i = 1; i < terms.size(); ++i) {
    if (compare_terms(*ring, terms[i - 1], terms[i]) <= 0) return std::nullopt;
  }
  if (terms.empty()) return std::nullopt;
  return Vector::from_sorted_terms(ring, rank, std::move(terms));
}

}  // namespace

GroebnerCache& GroebnerCache::global() {
  static GroebnerCache cache;
  return cache;
}

std::string GroebnerCache::canonical_key(const RingPtr& ring, std::size_t rank,
                                         const std::vector<Vector>& generators) {
  std::vector<std::string> parts;
  parts.reserve(generators.size());
  for (const auto& g : generators) {
    if (g.is_zero()) continue;
    parts.push_back(serialize_vector(g.monic(), ring->nvars()));
  }
  std::sort(parts.begin(), parts.end());
  parts.erase(std::unique(parts.begin(), parts.end()), parts.end());
  std::string key = ring->signature() + "|rank=" + std::to_string(rank) + "|";
  for (const auto& p : parts) key += p + '|';
  return key;
}

std::string GroebnerCache::digest(const std::string& text) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream out;
  out << std::hex;
  out.width(16);
  out.fill('0');
  out << h << '-' << text.size();
  return out.str();
}

BasisPtr GroebnerCache::get(const RingPtr& ring, std::size_t rank, const std::vector<Vector>& generators) {
  bool enabled;
  std::optional<std::filesystem::path> dir;
  {
    std::lock_guard<std::mutex> lock(mutex_);
    enabled = enabled_;
    dir = directory_;
  }
  if (!enabled) return std::make_shared<const GroebnerBasis>(compute_groebner(ring, rank, generators));

  std::string key = canonical_key(ring, rank, generators);
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = memory_.find(key);
    if (it != memory_.end()) {
      ++stats_.hits;
      return it->second;
    }
  }

  BasisPtr basis;
  std::filesystem::path file;
  if (dir) {
    file = *dir / (digest(key) + ".json");
    basis = load(file, key, ring, rank);
  }
  if (!basis) {
    basis = std::make_shared<const GroebnerBasis>(compute_groebner(ring, rank, generators));
    if (dir) store(file, key, *basis);
  }
  for (const auto& g : basis->elements()) {
    ring->check_degree(static_cast<std::uint64_t>(g.degree()), "Groebner basis element");
  }
  std::lock_guard<std::mutex> lock(mutex_);
  ++stats_.misses;
  // Equal keys always yield equal bases, so a concurrent fill is harmless.
  memory_[key] = basis;
  return basis;
}

BasisPtr GroebnerCache::load(const std::filesystem::path& file, const std::string& key, const RingPtr& ring,
                             std::size_t rank) {
  std::ifstream in(file);
  if (!in) return nullptr;
  auto corrupt = [&]() -> BasisPtr {
    std::lock_guard<std::mutex> lock(mutex_);
    ++stats_.corrupt;
    return nullptr;
  };
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const std::exception&) {
    return corrupt();
  }
  if (!doc.is_object() || !doc.contains("key") || !doc.contains("checksum") || !doc.contains("basis") ||
      !doc["key"].is_string() || !doc["checksum"].is_string() || !doc["basis"].is_array()) {
    return corrupt();
  }
  if (doc["key"].get<std::string>() != key) return corrupt();
  std::string joined;
  std::vector<Vector> elements;
  for (const auto& item : doc["basis"]) {
    if (!item.is_string()) return corrupt();
    auto text = item.get<std::string>();
    joined += text + '\n';
    auto v = parse_vector(text, ring, rank);
    if (!v) return corrupt();
    elements.push_back(std::move(*v));
  }
  if (digest(joined) != doc["checksum"].get<std::string>()) return corrupt();
  std::lock_guard<std::mutex> lock(mutex_);
  ++stats_.disk_hits;
  return std::make_shared<const GroebnerBasis>(ring, rank, std::move(elements));
}

void GroebnerCache::store(const std::filesystem::path& file, const std::string& key, const GroebnerBasis& basis) {
  static std::atomic<std::uint64_t> counter{0};
  nlohmann::json doc;
  doc["key"] = key;
  std::string joined;
  nlohmann::json items = nlohmann::json::array();
  for (const auto& g : basis.elements()) {
    auto text = serialize_vector(g, basis.ring()->nvars());
    joined += text + '\n';
    items.push_back(text);
  }
  doc["checksum"] = digest(joined);
  doc["basis"] = std::move(items);
  std::error_code ec;
  std::filesystem::create_directories(file.parent_path(), ec);
  std::ostringstream tmp_name;
  tmp_name << file.filename().string() << ".tmp." << std::hash<std::thread::id>{}(std::this_thread::get_id())
           << '.' << counter++;
  auto tmp = file.parent_path() / tmp_name.str();
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << doc.dump();
    if (!out) return;
  }
  std::filesystem::rename(tmp, file, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    return;
  }
  std::lock_guard<std::mutex> lock(mutex_);
  ++stats_.disk_writes;
}

void GroebnerCache::set_directory(std::optional<std::filesystem::path> dir) {
  std::lock_guard<std::mutex> lock(mutex_);
  directory_ = std::move(dir);
}

std::optional<std::filesystem::path> GroebnerCache::directory() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return directory_;
}

void GroebnerCache::set_enabled(bool enabled) {
  std::lock_guard<std::mutex> lock(mutex_);
  enabled_ = enabled;
}

void GroebnerCache::clear() {
  std::lock_guard<std::mutex> lock(mutex_);
  memory_.clear();
  stats_ = {};
}

CacheStats GroebnerCache::stats() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return stats_;
}

BasisPtr groebner(const RingPtr& ring, std::size_t rank, const std::vector<Vector>& generators) {
  return GroebnerCache::global().get(ring, rank, generators);
}

}  // namespace phantom
