#include "dsr/bounds.hpp"

#include <algorithm>
#include <stdexcept>

namespace dsr {

namespace {

constexpr int kMaxPasses = 500;

int floor_div(int a, int b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }
int ceil_div(int a, int b) { return -floor_div(-a, b); }

}  // namespace

BoundState::BoundState(const SequenceProfile& profile)
    : profile_(&profile), bits_(profile.num_classes()), mask_((1U << profile.num_classes()) - 1) {
  if (bits_ > kMaxClasses) throw std::length_error("too many distinct degrees for BoundState");
  const int n = profile.n();
  const std::uint32_t full = mask_;
  const std::size_t cells = std::size_t{1} << (2 * bits_);
  lo_.assign(cells, 0);
  hi_.assign(cells, 0);
  if (bits_ == 0) return;

  std::vector<int> cnt(bits_), deg(bits_);
  for (int c = 0; c < bits_; ++c) {
    cnt[c] = profile.cls(c).count;
    deg[c] = profile.cls(c).degree;
  }
  std::vector<int> size(full + 1, 0);
  for (std::uint32_t x = 1; x <= full; ++x) size[x] = profile.size(ClassSet{x});

  // Sum over the classes of x of count * f(degree).
  auto per_vertex = [&](std::uint32_t x, auto f) {
    int total = 0;
    for (int c = 0; c < bits_; ++c)
      if ((x >> c) & 1U) total += cnt[c] * f(deg[c]);
    return total;
  };

  for (std::uint32_t x = 1; x <= full; ++x) {
    const int nx = size[x];
    std::uint32_t k = key(x, x);
    // A vertex of X has at most n - n_X neighbours outside X.
    int lo = per_vertex(x, [&](int d) { return std::max(0, d - (n - nx)); });
    int hi = per_vertex(x, [&](int d) { return std::min(d, nx - 1); });
    lo_[k] = lo + (lo & 1);
    hi_[k] = hi - (hi & 1);
    if (x == full) {
      lo_[k] = std::max(lo_[k], profile.stubs(profile.all()));
      hi_[k] = std::min(hi_[k], profile.stubs(profile.all()));
    }
    const std::uint32_t comp = full & ~x;
    for (std::uint32_t y = comp; y != 0; y = (y - 1) & comp) {
      if (y < x) continue;
      const int ny = size[y];
      std::uint32_t kk = key(x, y);
      // Each vertex is non-adjacent to at most n-1-d others.
      lo_[kk] = std::max(per_vertex(y, [&](int d) { return std::max(0, d - (n - 1 - nx)); }),
                         per_vertex(x, [&](int d) { return std::max(0, d - (n - 1 - ny)); }));
      hi_[kk] = std::min(per_vertex(x, [&](int d) { return std::min(d, ny); }),
                         per_vertex(y, [&](int d) { return std::min(d, nx); }));
    }
  }
  for (std::size_t k = 0; k < cells; ++k)
    if (lo_[k] > hi_[k]) contradiction_ = true;
}

std::uint32_t BoundState::key(std::uint64_t x, std::uint64_t y) const {
  if (x > y) std::swap(x, y);
  return static_cast<std::uint32_t>((x << bits_) | y);
}

std::vector<BoundState::Term> BoundState::decompose(ClassSet x, ClassSet y) const {
  std::vector<Term> out;
  if (x.empty() || y.empty()) return out;
  ClassSet outside = y - x;
  ClassSet inside = x & y;
  if (!outside.empty()) out.push_back({key(x.bits, outside.bits), 1});
  if (!inside.empty()) {
    out.push_back({key(inside.bits, inside.bits), 1});
    ClassSet rest = x - inside;
    if (!rest.empty()) out.push_back({key(rest.bits, inside.bits), 1});
  }
  return out;
}

int BoundState::sigma(ClassSet x, ClassSet y) const {
  auto terms = decompose(x, y);
  int total = 0;
  for (const auto& t : terms) total += t.coef * lo_[t.key];
  if (terms.size() > 1) {
    std::vector<std::uint32_t> keys;
    for (const auto& t : terms) keys.push_back(t.key);
    std::sort(keys.begin(), keys.end());
    if (auto it = linear_index_.find(keys); it != linear_index_.end())
      total = std::max(total, linears_[it->second].lo);
  }
  return total;
}

int BoundState::tau(ClassSet x, ClassSet y) const {
  auto terms = decompose(x, y);
  int total = 0;
  for (const auto& t : terms) total += t.coef * hi_[t.key];
  if (terms.size() > 1) {
    std::vector<std::uint32_t> keys;
    for (const auto& t : terms) keys.push_back(t.key);
    std::sort(keys.begin(), keys.end());
    if (auto it = linear_index_.find(keys); it != linear_index_.end())
      total = std::min(total, linears_[it->second].hi);
  }
  return total;
}

bool BoundState::set_lo(std::uint32_t k, int v) {
  if (is_diag(k)) v += v & 1;
  if (v <= lo_[k]) return false;
  lo_[k] = v;
  if (v > hi_[k]) contradiction_ = true;
  return true;
}

bool BoundState::set_hi(std::uint32_t k, int v) {
  if (is_diag(k)) v -= v & 1;
  if (v >= hi_[k]) return false;
  hi_[k] = v;
  if (v < lo_[k]) contradiction_ = true;
  return true;
}

bool BoundState::raise_sigma(ClassSet x, ClassSet y, int value) {
  auto terms = decompose(x, y);
  if (terms.empty()) {
    if (value > 0 && !contradiction_) {
      contradiction_ = true;
      return true;
    }
    return false;
  }
  if (terms.size() == 1) return set_lo(terms[0].key, value);
  std::vector<std::uint32_t> keys;
  for (const auto& t : terms) keys.push_back(t.key);
  std::sort(keys.begin(), keys.end());
  auto [it, fresh] = linear_index_.try_emplace(keys, linears_.size());
  if (fresh) linears_.push_back({terms, 0, 1 << 29});
  Linear& lin = linears_[it->second];
  if (value <= lin.lo) return false;
  lin.lo = value;
  linear(lin);
  return true;
}

bool BoundState::lower_tau(ClassSet x, ClassSet y, int value) {
  auto terms = decompose(x, y);
  if (terms.empty()) {
    if (value < 0 && !contradiction_) {
      contradiction_ = true;
      return true;
    }
    return false;
  }
  if (terms.size() == 1) return set_hi(terms[0].key, value);
  std::vector<std::uint32_t> keys;
  for (const auto& t : terms) keys.push_back(t.key);
  std::sort(keys.begin(), keys.end());
  auto [it, fresh] = linear_index_.try_emplace(keys, linears_.size());
  if (fresh) linears_.push_back({terms, 0, 1 << 29});
  Linear& lin = linears_[it->second];
  if (value >= lin.hi) return false;
  lin.hi = value;
  linear(lin);
  return true;
}

// a = b + c
bool BoundState::sum3(std::uint32_t a, std::uint32_t b, std::uint32_t c) {
  bool ch = false;
  ch |= set_lo(a, lo_[b] + lo_[c]);
  ch |= set_hi(a, hi_[b] + hi_[c]);
  ch |= set_lo(b, lo_[a] - hi_[c]);
  ch |= set_hi(b, hi_[a] - lo_[c]);
  ch |= set_lo(c, lo_[a] - hi_[b]);
  ch |= set_hi(c, hi_[a] - lo_[b]);
  return ch;
}

// a = b + c + 2d
bool BoundState::diag_split(std::uint32_t a, std::uint32_t b, std::uint32_t c, std::uint32_t d) {
  bool ch = false;
  ch |= set_lo(a, lo_[b] + lo_[c] + 2 * lo_[d]);
  ch |= set_hi(a, hi_[b] + hi_[c] + 2 * hi_[d]);
  ch |= set_lo(b, lo_[a] - hi_[c] - 2 * hi_[d]);
  ch |= set_hi(b, hi_[a] - lo_[c] - 2 * lo_[d]);
  ch |= set_lo(c, lo_[a] - hi_[b] - 2 * hi_[d]);
  ch |= set_hi(c, hi_[a] - lo_[b] - 2 * lo_[d]);
  ch |= set_lo(d, ceil_div(lo_[a] - hi_[b] - hi_[c], 2));
  ch |= set_hi(d, floor_div(hi_[a] - lo_[b] - lo_[c], 2));
  return ch;
}

bool BoundState::linear(Linear& lin) {
  bool ch = false;
  int sum_lo = 0, sum_hi = 0;
  for (const auto& t : lin.terms) {
    sum_lo += t.coef * lo_[t.key];
    sum_hi += t.coef * hi_[t.key];
  }
  if (sum_lo > lin.lo) lin.lo = sum_lo, ch = true;
  if (sum_hi < lin.hi) lin.hi = sum_hi, ch = true;
  if (lin.lo > lin.hi) {
    contradiction_ = true;
    return true;
  }
  for (const auto& t : lin.terms) {
    int others_hi = sum_hi - t.coef * hi_[t.key];
    int others_lo = sum_lo - t.coef * lo_[t.key];
    ch |= set_lo(t.key, ceil_div(lin.lo - others_hi, t.coef));
    ch |= set_hi(t.key, floor_div(lin.hi - others_lo, t.coef));
  }
  return ch;
}

bool BoundState::propagate() {
  if (bits_ == 0) return false;
  const std::uint32_t full = mask_;
  const int m_total = profile_->stubs(profile_->all());
  bool any = false;
  for (int pass = 0; pass < kMaxPasses && !contradiction_; ++pass) {
    bool ch = false;
    ch |= set_lo(key(full, full), m_total);
    ch |= set_hi(key(full, full), m_total);
    for (std::uint32_t x = 1; x < full && !contradiction_; ++x) {
      const std::uint32_t comp = full & ~x;
      // Totals: eps(X, X) + eps(X, V - X) = m_X.
      {
        const int mx = profile_->stubs(ClassSet{x});
        std::uint32_t d = key(x, x), o = key(x, comp);
        ch |= set_lo(d, mx - hi_[o]);
        ch |= set_hi(d, mx - lo_[o]);
        int olo = mx - hi_[d], ohi = mx - lo_[d];
        if ((olo - mx) & 1) ++olo;
        if ((ohi - mx) & 1) --ohi;
        ch |= set_lo(o, olo);
        ch |= set_hi(o, ohi);
      }
      // Additivity in the second argument (and by symmetry the first).
      for (std::uint32_t y = comp; y != 0; y = (y - 1) & comp) {
        if ((y & (y - 1)) == 0) continue;
        for (std::uint32_t y1 = (y - 1) & y; y1 != 0; y1 = (y1 - 1) & y) {
          std::uint32_t y2 = y ^ y1;
          if (y1 > y2) continue;
          ch |= sum3(key(x, y), key(x, y1), key(x, y2));
        }
      }
    }
    // Diagonal splits: eps(X1+X2, X1+X2) = eps(X1,X1) + eps(X2,X2) + 2 eps(X1,X2).
    for (std::uint32_t x = 1; x <= full && !contradiction_; ++x) {
      if ((x & (x - 1)) == 0) continue;
      for (std::uint32_t x1 = (x - 1) & x; x1 != 0; x1 = (x1 - 1) & x) {
        std::uint32_t x2 = x ^ x1;
        if (x1 > x2) continue;
        ch |= diag_split(key(x, x), key(x1, x1), key(x2, x2), key(x1, x2));
      }
    }
    for (auto& lin : linears_) {
      if (contradiction_) break;
      ch |= linear(lin);
    }
    any |= ch;
    if (!ch) break;
  }
  return any;
}

}  // namespace dsr
