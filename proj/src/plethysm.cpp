#include "grcone/plethysm.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace grcone {

BundleSpec::BundleSpec(int rank_k, std::vector<BundleSummand> summands)
    : rank_k_(rank_k), summands_(std::move(summands)) {
  if (rank_k_ < 1) throw std::invalid_argument("bundle rank must be >= 1");
  if (summands_.empty()) throw std::invalid_argument("bundle needs at least one summand");
  for (const auto& s : summands_) {
    if (s.mult < 1) throw std::invalid_argument("summand multiplicity must be >= 1");
    if (s.lambda.rows() > rank_k_)
      throw std::invalid_argument("summand shape has more rows than the bundle rank");
  }
}

Int BundleSpec::fiber_rank() const {
  Int r = 0;
  for (const auto& s : summands_) r += Int(s.mult) * hook_content_dim(s.lambda, rank_k_);
  return r;
}

int BundleSpec::max_weight() const {
  int w = 0;
  for (const auto& s : summands_) w = std::max(w, s.lambda.weight());
  return w;
}

int BundleSpec::min_weight() const {
  int w = summands_.front().lambda.weight();
  for (const auto& s : summands_) w = std::min(w, s.lambda.weight());
  return w;
}

MonomialMap weight_multiset(const BundleSpec& spec) {
  MonomialMap out;
  for (const auto& s : spec.summands()) {
    for (const auto& [e, c] : ssyt_weight_multiset(s.lambda, spec.rank_k()))
      out[e] += Int(s.mult) * c;
  }
  return out;
}

MonomialMap sym_power_character(const MonomialMap& weights, int m) {
  if (m < 0) throw std::invalid_argument("negative symmetric power");
  if (weights.empty()) throw std::invalid_argument("empty weight multiset");
  std::size_t nvars = weights.begin()->first.size();

  // Degree-graded product of (1 - s x^w)^{-mult} over the multiset, truncated
  // at s^m.
  std::vector<MonomialMap> acc(m + 1);
  acc[0][std::vector<int>(nvars, 0)] = 1;
  for (const auto& [w, mult] : weights) {
    std::vector<MonomialMap> next(m + 1);
    for (int d = 0; d <= m; ++d) {
      for (int a = 0; a <= d; ++a) {
        if (acc[d - a].empty()) continue;
        Int reps = binom(mpz_get_si(mult.get_mpz_t()) + a - 1, a);
        if (reps == 0) continue;
        std::vector<int> shift(nvars);
        for (std::size_t i = 0; i < nvars; ++i) shift[i] = a * w[i];
        for (const auto& [e, c] : acc[d - a]) {
          std::vector<int> key(nvars);
          for (std::size_t i = 0; i < nvars; ++i) key[i] = e[i] + shift[i];
          next[d][key] += c * reps;
        }
      }
    }
    acc = std::move(next);
  }
  return acc[m];
}

SchurExpansion schur_decompose(MonomialMap poly, int k) {
  SchurExpansion out(k);
  for (auto it = poly.begin(); it != poly.end();) {
    if (it->second == 0)
      it = poly.erase(it);
    else
      ++it;
  }
  while (!poly.empty()) {
    auto lead = std::prev(poly.end());
    const std::vector<int>& e = lead->first;
    for (std::size_t i = 1; i < e.size(); ++i)
      if (e[i] > e[i - 1])
        throw std::logic_error("leading monomial not dominant; input not symmetric");
    Int c = lead->second;
    Partition shape((std::vector<int>(e)));
    for (const auto& [w, mult] : ssyt_weight_multiset(shape, k)) {
      auto it = poly.find(w);
      Int& slot = it == poly.end() ? poly[w] : it->second;
      slot -= c * mult;
      if (slot == 0) poly.erase(w);
    }
    out.add(MixedWeight::from_partition(shape, k), c);
  }
  return out;
}

SchurExpansion plethysm_sym(int m, const Partition& lambda, int k, PlethysmCache* cache) {
  if (lambda.rows() > k)
    throw std::invalid_argument("plethysm_sym: shape deeper than the variable count");
  if (cache) {
    if (auto hit = cache->lookup(m, lambda, k)) return *hit;
  }
  MonomialMap base = ssyt_weight_multiset(lambda, k);
  SchurExpansion result = schur_decompose(sym_power_character(base, m), k);
  if (cache) cache->store(m, lambda, k, result);
  return result;
}

SchurExpansion sym_power_of_bundle(int m, const BundleSpec& spec, PlethysmCache* cache) {
  if (spec.summands().size() == 1 && spec.summands()[0].mult == 1)
    return plethysm_sym(m, spec.summands()[0].lambda, spec.rank_k(), cache);
  return schur_decompose(sym_power_character(weight_multiset(spec), m), spec.rank_k());
}

namespace {

constexpr int kCacheFormat = 1;

std::string entry_key(int m, const Partition& lambda, int k) {
  std::ostringstream os;
  os << "m=" << m << ";k=" << k << ";lam=";
  for (int i = 0; i < lambda.rows(); ++i) {
    if (i) os << ',';
    os << lambda.part(i);
  }
  return os.str();
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::string tok;
  std::istringstream is(text);
  while (std::getline(is, tok, ',')) out.push_back(std::stoi(tok));
  return out;
}

}  // namespace

PlethysmCache::PlethysmCache(std::filesystem::path file) : file_(std::move(file)) {
  std::lock_guard<std::mutex> lock(mutex_);
  load_locked();
}

PlethysmCache::~PlethysmCache() {
  try {
    flush();
  } catch (...) {
    // a failed flush only costs recomputation next run
  }
}

std::filesystem::path PlethysmCache::default_path() {
  if (const char* env = std::getenv("GRCONE_PLETHYSM_CACHE"); env && *env)
    return std::filesystem::path(env);
  if (const char* home = std::getenv("HOME"); home && *home)
    return std::filesystem::path(home) / ".cache" / "grcone" / "plethysm.json";
  return std::filesystem::path(".grcone-plethysm.json");
}

void PlethysmCache::load_locked() {
  entries_.clear();
  std::ifstream in(file_);
  if (!in) return;
  try {
    nlohmann::json doc = nlohmann::json::parse(in);
    if (!doc.is_object() || doc.value("format", -1) != kCacheFormat) return;
    for (const auto& [key, terms] : doc.at("entries").items()) {
      std::map<MixedWeight, Int> parsed;
      for (const auto& [wtext, mult] : terms.items()) {
        std::string body = wtext;
        if (body.size() < 2 || body.front() != '(' || body.back() != ')')
          throw std::runtime_error("bad weight key");
        body = body.substr(1, body.size() - 2);
        parsed.emplace(MixedWeight(parse_int_list(body)), Int(mult.get<std::string>()));
      }
      entries_.emplace(key, std::move(parsed));
    }
  } catch (const std::exception&) {
    entries_.clear();  // unreadable cache: recompute everything
  }
}

std::optional<SchurExpansion> PlethysmCache::lookup(int m, const Partition& lambda, int k) {
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = entries_.find(entry_key(m, lambda, k));
  if (it == entries_.end()) return std::nullopt;
  SchurExpansion out(k);
  for (const auto& [w, mult] : it->second) out.add(w, mult);
  return out;
}

void PlethysmCache::store(int m, const Partition& lambda, int k, const SchurExpansion& value) {
  std::lock_guard<std::mutex> lock(mutex_);
  std::map<MixedWeight, Int> terms;
  for (const auto& [w, mult] : value.terms()) terms.emplace(w, mult);
  auto [it, inserted] = entries_.emplace(entry_key(m, lambda, k), std::move(terms));
  if (inserted) dirty_ = true;
}

void PlethysmCache::flush() {
  std::lock_guard<std::mutex> lock(mutex_);
  if (!dirty_) return;
  nlohmann::json doc;
  doc["format"] = kCacheFormat;
  nlohmann::json entries = nlohmann::json::object();
  for (const auto& [key, terms] : entries_) {
    nlohmann::json obj = nlohmann::json::object();
    for (const auto& [w, mult] : terms) obj[w.str()] = mult.get_str();
    entries[key] = std::move(obj);
  }
  doc["entries"] = std::move(entries);

  std::error_code ec;
  if (file_.has_parent_path()) std::filesystem::create_directories(file_.parent_path(), ec);
  std::filesystem::path tmp = file_;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
    out << doc.dump(1) << '\n';
  }
  std::filesystem::rename(tmp, file_);
  dirty_ = false;
}

std::size_t PlethysmCache::entry_count() {
  std::lock_guard<std::mutex> lock(mutex_);
  return entries_.size();
}

}  // namespace grcone
