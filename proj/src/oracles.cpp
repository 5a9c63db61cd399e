#include "grcone/oracles.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

namespace grcone {

LaurentPoly LaurentPoly::monomial(std::vector<int> exponents, Int coeff) {
  LaurentPoly p(static_cast<int>(exponents.size()));
  p.add_term(exponents, coeff);
  return p;
}

void LaurentPoly::add_term(const std::vector<int>& e, const Int& c) {
  if (static_cast<int>(e.size()) != nvars_)
    throw std::invalid_argument("exponent vector has wrong arity");
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Int LaurentPoly::coeff(const std::vector<int>& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Int(0) : it->second;
}

Int LaurentPoly::constant_term() const { return coeff(std::vector<int>(nvars_, 0)); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("arity mismatch");
  LaurentPoly out(nvars_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      std::vector<int> e(nvars_);
      for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (nvars_ != o.nvars_) throw std::invalid_argument("arity mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

namespace {

// Contribution of one exponent vector against the full symmetric-power tower
// of Hom(Z, V): each variable contributes binom(N + e_i - 1, e_i).
Int hom_side_factor(const std::vector<int>& e, int N) {
  Int f = 1;
  for (int x : e) f *= binom(N + x - 1, x);
  return f;
}

}  // namespace

Int molien_invariant_dim(const GLSMPresentation& p, int m) {
  int k = p.k();
  if (k > 2)
    throw std::invalid_argument("Weyl integration oracle supports k <= 2 only");
  int N = p.N();

  LaurentPoly chi_f(k);
  for (const auto& [e, c] : sym_power_character(weight_multiset(p.bundle()), m))
    chi_f.add_term(e, c);

  LaurentPoly weyl(k);
  if (k == 1) {
    weyl.add_term({0}, 1);
  } else {
    weyl.add_term({0, 0}, 2);
    weyl.add_term({1, -1}, -1);
    weyl.add_term({-1, 1}, -1);
  }

  LaurentPoly integrand = chi_f * weyl;

  // Only exponent vectors with all entries >= 0 can balance against a
  // symmetric power of Hom(Z, V); that power is a = |e|, bounded by
  // m * max|lambda|.
  int a_max = m * p.bundle().max_weight();
  Int total = 0;
  for (const auto& [e, c] : integrand.terms()) {
    if (std::any_of(e.begin(), e.end(), [](int x) { return x < 0; })) continue;
    int a = std::accumulate(e.begin(), e.end(), 0);
    if (a > a_max + 1)
      throw std::logic_error("degree balance bound violated");
    if (a == a_max + 1) {
      // One slice past the bound must contribute nothing.
      if (c * hom_side_factor(e, N) != 0)
        throw std::logic_error("degree balance bound violated");
      continue;
    }
    total += c * hom_side_factor(e, N);
  }

  Int kfact = factorial(k);
  if (!mpz_divisible_p(total.get_mpz_t(), kfact.get_mpz_t()))
    throw std::logic_error("Weyl integration produced a non-integer");
  Int out;
  mpz_divexact(out.get_mpz_t(), total.get_mpz_t(), kfact.get_mpz_t());
  return out;
}

namespace {

constexpr int kPrimePool[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
                              43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};

// Dense integer Laurent polynomial in one variable; c[i] is the coefficient
// of x^(off + i).  Zero is the empty vector.
struct XPoly {
  int off = 0;
  std::vector<Int> c;
};

void xtrim(XPoly& p) {
  std::size_t lo = 0, hi = p.c.size();
  while (lo < hi && p.c[lo] == 0) ++lo;
  while (hi > lo && p.c[hi - 1] == 0) --hi;
  if (lo == hi) {
    p.off = 0;
    p.c.clear();
    return;
  }
  if (lo > 0) p.c.erase(p.c.begin(), p.c.begin() + static_cast<long>(lo));
  p.c.resize(hi - lo);
  p.off += static_cast<int>(lo);
}

XPoly xmul(const XPoly& a, const XPoly& b) {
  if (a.c.empty() || b.c.empty()) return {};
  XPoly out;
  out.off = a.off + b.off;
  out.c.assign(a.c.size() + b.c.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j) out.c[i + j] += a.c[i] * b.c[j];
  }
  return out;
}

void xadd(XPoly& a, const XPoly& b) {
  if (b.c.empty()) return;
  if (a.c.empty()) {
    a = b;
    return;
  }
  int lo = std::min(a.off, b.off);
  int hi = std::max(a.off + static_cast<int>(a.c.size()),
                    b.off + static_cast<int>(b.c.size()));
  std::vector<Int> merged(static_cast<std::size_t>(hi - lo), Int(0));
  for (std::size_t i = 0; i < a.c.size(); ++i)
    merged[static_cast<std::size_t>(a.off - lo) + i] = a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i)
    merged[static_cast<std::size_t>(b.off - lo) + i] += b.c[i];
  a.off = lo;
  a.c = std::move(merged);
  xtrim(a);
}

// Quotient t / d for a divisor with lowest coefficient 1; a nonzero remainder
// means the fixed-point sum failed to collapse to a Laurent polynomial, which
// only a convention bug can cause.
XPoly xdiv_exact(XPoly t, const XPoly& d) {
  if (t.c.empty()) return {};
  if (t.c.size() < d.c.size())
    throw std::logic_error("localization sum is not a Laurent polynomial");
  XPoly q;
  q.off = t.off - d.off;
  q.c.assign(t.c.size() - d.c.size() + 1, Int(0));
  for (std::size_t j = 0; j < q.c.size(); ++j) {
    if (t.c[j] == 0) continue;
    Int v = t.c[j];
    q.c[j] = v;
    for (std::size_t i = 0; i < d.c.size(); ++i) t.c[j + i] -= v * d.c[i];
  }
  for (const Int& r : t.c)
    if (r != 0) throw std::logic_error("localization sum is not a Laurent polynomial");
  return q;
}

// 1 - x^d for d >= 1.
XPoly one_minus_power(int d) {
  XPoly p;
  p.c.assign(static_cast<std::size_t>(d) + 1, Int(0));
  p.c.front() = 1;
  p.c.back() = -1;
  return p;
}

// Character of the bundle fiber at the fixed point with torus values x^e[i],
// as a Laurent polynomial in x.  Negative weight entries are handled by the
// determinant twist.
XPoly fiber_character(const SchurExpansion& exp, const std::vector<int>& e) {
  int k = static_cast<int>(e.size());
  int esum = std::accumulate(e.begin(), e.end(), 0);
  std::map<int, Int> acc;
  for (const auto& [w, mult] : exp.terms()) {
    int c = std::max(0, -w.entry(k - 1));
    std::vector<int> mu;
    for (int i = 0; i < k; ++i)
      if (w.entry(i) + c > 0) mu.push_back(w.entry(i) + c);
    for (const auto& [wt, n] : ssyt_weight_multiset(Partition(mu), k)) {
      int deg = -c * esum;
      for (int i = 0; i < k; ++i) deg += e[i] * wt[i];
      acc[deg] += mult * n;
    }
  }
  XPoly out;
  if (acc.empty()) return out;
  out.off = acc.begin()->first;
  out.c.assign(static_cast<std::size_t>(acc.rbegin()->first - out.off) + 1, Int(0));
  for (const auto& [deg, v] : acc) out.c[static_cast<std::size_t>(deg - out.off)] = v;
  xtrim(out);
  return out;
}

}  // namespace

Int localization_euler(const HomogeneousBundle& bundle, int draw) {
  const GrassmannianContext& ctx = bundle.ctx;
  int N = ctx.N, k = ctx.k;
  if (N > 8) throw std::invalid_argument("localization oracle supports N <= 8 only");

  // Torus values x^e[i] for distinct primes e[i].  Distinct exponents keep
  // every tangent weight a nonunit, so no draw can hit a pole; the draw only
  // permutes which prime lands on which coordinate.
  std::vector<int> pool(std::begin(kPrimePool), std::end(kPrimePool));
  std::mt19937 rng(911u + 131u * static_cast<unsigned>(draw));
  std::shuffle(pool.begin(), pool.end(), rng);
  std::vector<int> e(pool.begin(), pool.begin() + N);

  // Fixed-point terms are summed over the common denominator
  // D = prod over pairs i < j of (1 - x^|e_i - e_j|); the factors a given
  // k-subset does not separate multiply into its numerator instead.
  XPoly common_den{0, {Int(1)}};
  for (int i = 0; i < N; ++i)
    for (int j = i + 1; j < N; ++j)
      common_den = xmul(common_den, one_minus_power(std::abs(e[i] - e[j])));

  XPoly total;
  std::vector<int> subset(k);
  std::iota(subset.begin(), subset.end(), 0);
  while (true) {
    std::vector<bool> in(N, false);
    for (int i : subset) in[i] = true;

    std::vector<int> es;
    for (int i : subset) es.push_back(e[i]);
    XPoly term = fiber_character(bundle.expansion, es);

    // Normalizing each tangent factor 1 - x^(e_j - e_i) with e_j < e_i to
    // 1 - x^|d| flips the sign and shifts by x^(e_i - e_j).
    int shift = 0;
    bool negate = false;
    for (int i : subset)
      for (int j = 0; j < N; ++j) {
        if (in[j]) continue;
        if (e[j] < e[i]) {
          negate = !negate;
          shift += e[i] - e[j];
        }
      }
    term.off += shift;
    if (negate)
      for (Int& v : term.c) v = -v;

    for (int i = 0; i < N; ++i)
      for (int j = i + 1; j < N; ++j)
        if (in[i] == in[j]) term = xmul(term, one_minus_power(std::abs(e[i] - e[j])));
    xadd(total, term);

    int i = k - 1;
    while (i >= 0 && subset[i] == N - k + i) --i;
    if (i < 0) break;
    subset[i]++;
    for (int j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
  }

  XPoly chi = xdiv_exact(std::move(total), common_den);
  Int value = 0;
  for (const Int& v : chi.c) value += v;
  return value;
}

}  // namespace grcone
