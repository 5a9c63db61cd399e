#include "grcone/partitions.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace grcone {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw std::invalid_argument("partition part < 0");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts not weakly decreasing");
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

int Partition::weight() const {
  int s = 0;
  for (int p : parts_) s += p;
  return s;
}

int Partition::part(int i) const {
  return (i >= 0 && i < rows()) ? parts_[i] : 0;
}

Partition Partition::conjugate() const {
  if (parts_.empty()) return Partition{};
  std::vector<int> c(parts_[0], 0);
  for (int p : parts_)
    for (int j = 0; j < p; ++j) c[j]++;
  return Partition(std::move(c));
}

bool Partition::contains(const Partition& inner) const {
  for (int i = 0; i < inner.rows(); ++i)
    if (part(i) < inner.part(i)) return false;
  return true;
}

bool Partition::all_parts_even() const {
  for (int p : parts_)
    if (p % 2 != 0) return false;
  return true;
}

std::strong_ordering Partition::operator<=>(const Partition& o) const {
  int n = std::max(rows(), o.rows());
  for (int i = 0; i < n; ++i) {
    if (part(i) != o.part(i)) return part(i) <=> o.part(i);
  }
  return std::strong_ordering::equal;
}

std::string Partition::str() const {
  std::ostringstream os;
  os << '(';
  for (int i = 0; i < rows(); ++i) {
    if (i) os << ',';
    os << parts_[i];
  }
  os << ')';
  return os.str();
}

MixedWeight::MixedWeight(std::vector<int> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw std::invalid_argument("mixed weight needs rank >= 1");
  for (std::size_t i = 1; i < entries_.size(); ++i)
    if (entries_[i] > entries_[i - 1])
      throw std::invalid_argument("mixed weight not weakly decreasing");
}

MixedWeight MixedWeight::from_partition(const Partition& p, int rank) {
  if (p.rows() > rank) throw std::invalid_argument("partition has more rows than the rank");
  std::vector<int> e(rank, 0);
  for (int i = 0; i < p.rows(); ++i) e[i] = p.part(i);
  return MixedWeight(std::move(e));
}

int MixedWeight::sum() const {
  int s = 0;
  for (int e : entries_) s += e;
  return s;
}

bool MixedWeight::is_partition() const { return entries_.back() >= 0; }

Partition MixedWeight::to_partition() const {
  if (!is_partition()) throw std::invalid_argument("negative entry in weight");
  return Partition(entries_);
}

MixedWeight MixedWeight::dual() const {
  std::vector<int> e(entries_.rbegin(), entries_.rend());
  for (int& x : e) x = -x;
  return MixedWeight(std::move(e));
}

MixedWeight MixedWeight::shifted(int c) const {
  std::vector<int> e = entries_;
  for (int& x : e) x += c;
  return MixedWeight(std::move(e));
}

std::strong_ordering MixedWeight::operator<=>(const MixedWeight& o) const {
  if (rank() != o.rank()) return rank() <=> o.rank();
  for (int i = 0; i < rank(); ++i)
    if (entries_[i] != o.entries_[i]) return entries_[i] <=> o.entries_[i];
  return std::strong_ordering::equal;
}

std::string MixedWeight::str() const {
  std::ostringstream os;
  os << '(';
  for (int i = 0; i < rank(); ++i) {
    if (i) os << ',';
    os << entries_[i];
  }
  os << ')';
  return os.str();
}

Int weight_dim(const MixedWeight& w) {
  int c = std::max(0, -w.entry(w.rank() - 1));
  return hook_content_dim(w.shifted(c).to_partition(), w.rank());
}

void SchurExpansion::add(const MixedWeight& w, const Int& mult) {
  if (w.rank() != rank_) throw std::invalid_argument("rank mismatch in expansion");
  if (mult == 0) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, mult);
  } else {
    it->second += mult;
    if (it->second == 0) terms_.erase(it);
  }
}

Int SchurExpansion::mult(const MixedWeight& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Int(0) : it->second;
}

Int SchurExpansion::total_dim() const {
  Int s = 0;
  for (const auto& [w, m] : terms_) s += m * weight_dim(w);
  return s;
}

bool SchurExpansion::operator==(const SchurExpansion& o) const {
  return rank_ == o.rank_ && terms_ == o.terms_;
}

std::string SchurExpansion::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, m] : terms_) {
    if (!first) os << " + ";
    first = false;
    if (m != 1) os << m.get_str() << "*";
    os << "s" << w.str();
  }
  return os.str();
}

Int hook_content_dim(const Partition& lambda, int n) {
  if (n < 1) throw std::invalid_argument("hook_content_dim: n < 1");
  if (lambda.rows() > n) return 0;
  Partition conj = lambda.conjugate();
  Int num = 1, den = 1;
  for (int i = 0; i < lambda.rows(); ++i) {
    for (int j = 0; j < lambda.part(i); ++j) {
      num *= n + j - i;
      den *= lambda.part(i) - j + conj.part(j) - i - 1;
    }
  }
  Int out;
  mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return out;
}

namespace {

void ssyt_fill(const Partition& shape, int k, int r, int c,
               std::vector<std::vector<int>>& val, std::vector<int>& content,
               std::map<std::vector<int>, Int>& out) {
  if (r == shape.rows()) {
    out[content] += 1;
    return;
  }
  int nr = c + 1 < shape.part(r) ? r : r + 1;
  int nc = c + 1 < shape.part(r) ? c + 1 : 0;
  int lo = 1;
  if (c > 0) lo = std::max(lo, val[r][c - 1]);
  if (r > 0) lo = std::max(lo, val[r - 1][c] + 1);
  for (int v = lo; v <= k; ++v) {
    val[r][c] = v;
    content[v - 1]++;
    ssyt_fill(shape, k, nr, nc, val, content, out);
    content[v - 1]--;
  }
}

std::mutex ssyt_cache_mutex;
std::map<std::pair<std::vector<int>, int>, std::map<std::vector<int>, Int>> ssyt_cache;

}  // namespace

std::map<std::vector<int>, Int> ssyt_weight_multiset(const Partition& lambda, int k) {
  if (k < 1) throw std::invalid_argument("ssyt_weight_multiset: k < 1");
  {
    std::lock_guard<std::mutex> lock(ssyt_cache_mutex);
    auto it = ssyt_cache.find({lambda.parts(), k});
    if (it != ssyt_cache.end()) return it->second;
  }
  std::map<std::vector<int>, Int> out;
  if (lambda.rows() > k) {
    // no fillings
  } else if (lambda.rows() == 0) {
    out[std::vector<int>(k, 0)] = 1;
  } else {
    std::vector<std::vector<int>> val(lambda.rows());
    for (int i = 0; i < lambda.rows(); ++i) val[i].assign(lambda.part(i), 0);
    std::vector<int> content(k, 0);
    ssyt_fill(lambda, k, 0, 0, val, content, out);
  }
  std::lock_guard<std::mutex> lock(ssyt_cache_mutex);
  ssyt_cache.insert({{lambda.parts(), k}, out});
  return out;
}

namespace {

struct SkewCell {
  int r, c;
};

// Cells of nu/lambda in reverse reading order: rows top to bottom, right to
// left inside each row.  Filling in this order makes the lattice condition a
// running prefix check.
Int count_lr_fillings(const Partition& nu, const Partition& lambda, const Partition& mu) {
  std::vector<SkewCell> cells;
  for (int r = 0; r < nu.rows(); ++r)
    for (int c = nu.part(r) - 1; c >= lambda.part(r); --c) cells.push_back({r, c});

  int letters = mu.rows();
  std::vector<std::vector<int>> val(nu.rows());
  for (int r = 0; r < nu.rows(); ++r) val[r].assign(nu.part(r), 0);
  std::vector<int> count(letters + 1, 0);

  Int total = 0;
  auto rec = [&](auto&& self, std::size_t idx) -> void {
    if (idx == cells.size()) {
      total += 1;
      return;
    }
    auto [r, c] = cells[idx];
    int hi = letters;
    if (c + 1 < nu.part(r)) hi = std::min(hi, val[r][c + 1]);
    int lo = 1;
    if (r > 0 && c >= lambda.part(r - 1)) lo = std::max(lo, val[r - 1][c] + 1);
    for (int v = lo; v <= hi; ++v) {
      if (count[v] >= mu.part(v - 1)) continue;
      if (v > 1 && count[v] >= count[v - 1]) continue;
      val[r][c] = v;
      count[v]++;
      self(self, idx + 1);
      count[v]--;
    }
  };
  rec(rec, 0);
  return total;
}

}  // namespace

Int lr_coefficient(const Partition& nu, const Partition& lambda, const Partition& mu) {
  if (nu.weight() != lambda.weight() + mu.weight()) return 0;
  if (!nu.contains(lambda)) return 0;
  if (mu.rows() == 0) return nu == lambda ? 1 : 0;
  return count_lr_fillings(nu, lambda, mu);
}

SchurExpansion lr_product(const MixedWeight& a, const MixedWeight& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("lr_product: rank mismatch");
  int k = a.rank();
  int ca = std::max(0, -a.entry(k - 1));
  int cb = std::max(0, -b.entry(k - 1));
  Partition pa = a.shifted(ca).to_partition();
  Partition pb = b.shifted(cb).to_partition();

  SchurExpansion out(k);
  int total = pa.weight() + pb.weight();
  for (const Partition& nu : partitions_of(total, k)) {
    if (!nu.contains(pa) || nu.part(0) > pa.part(0) + pb.part(0)) continue;
    Int c = lr_coefficient(nu, pa, pb);
    if (c != 0) out.add(MixedWeight::from_partition(nu, k).shifted(-(ca + cb)), c);
  }
  return out;
}

namespace {

void box_rec(int rows, int cols, std::vector<int>& prefix, std::vector<Partition>& out) {
  if (static_cast<int>(prefix.size()) == rows) {
    out.push_back(Partition(prefix));
    return;
  }
  int hi = prefix.empty() ? cols : prefix.back();
  for (int p = 0; p <= hi; ++p) {
    prefix.push_back(p);
    box_rec(rows, cols, prefix, out);
    prefix.pop_back();
  }
}

void partitions_rec(int remaining, int max_part, int rows_left, std::vector<int>& prefix,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition(prefix));
    return;
  }
  if (rows_left == 0) return;
  int lo = (remaining + rows_left - 1) / rows_left;
  for (int p = lo; p <= std::min(max_part, remaining); ++p) {
    prefix.push_back(p);
    partitions_rec(remaining - p, p, rows_left - 1, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_in_box(int rows, int cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("partitions_in_box: negative box");
  std::vector<Partition> out;
  if (rows == 0 || cols == 0) {
    out.push_back(Partition{});
    return out;
  }
  std::vector<int> prefix;
  box_rec(rows, cols, prefix, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Partition> partitions_of(int n, int max_rows) {
  if (n < 0) throw std::invalid_argument("partitions_of: n < 0");
  std::vector<Partition> out;
  std::vector<int> prefix;
  partitions_rec(n, n, max_rows, prefix, out);
  std::sort(out.begin(), out.end());
  return out;
}

Partition parse_partition(const std::string& text) {
  std::vector<int> parts;
  std::string tok;
  std::istringstream is(text);
  while (std::getline(is, tok, ',')) {
    if (tok.empty()) throw std::invalid_argument("empty partition part");
    std::size_t pos = 0;
    int v = std::stoi(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument("bad partition part: " + tok);
    parts.push_back(v);
  }
  return Partition(std::move(parts));
}

}  // namespace grcone
