#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "klrsk/hecke.hpp"

namespace klrsk {

namespace {

using Index = SymmetricGroup::Index;
using QPoly = std::vector<std::int64_t>;

void trimQ(QPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

const QPoly kEmpty;

}  // namespace

std::uint32_t KLTable::intern(const QPoly& poly, std::map<QPoly, std::uint32_t>& pool) {
  auto it = pool.find(poly);
  if (it != pool.end()) return it->second;
  const auto id = static_cast<std::uint32_t>(polys_.size());
  polys_.push_back(poly);
  pool.emplace(poly, id);
  return id;
}

void KLTable::finishMu(Index w) {
  const SymmetricGroup& G = SymmetricGroup::of(n_);
  const int lw = G.length(w);
  auto& out = mu_[w];
  out.clear();
  for (std::size_t k = 0; k < below_[w].size(); ++k) {
    const Index y = below_[w][k];
    const int gap = lw - G.length(y);
    if (gap % 2 == 0) continue;
    const QPoly& f = polys_[polyId_[w][k]];
    const auto deg = static_cast<std::size_t>((gap - 1) / 2);
    if (deg < f.size() && f[deg] != 0) out.emplace_back(y, f[deg]);
  }
}

KLTable KLTable::build(int n) {
  if (n < 1) throw std::invalid_argument("KL table needs n >= 1");
  const SymmetricGroup& G = SymmetricGroup::of(n);
  const std::size_t N = G.order();
  const int maxLen = n * (n - 1) / 2;
  const std::size_t K = static_cast<std::size_t>(maxLen / 2 + 2);

  KLTable t;
  t.n_ = n;
  t.below_.assign(N, {});
  t.polyId_.assign(N, {});
  t.mu_.assign(N, {});
  std::map<QPoly, std::uint32_t> pool;
  const std::uint32_t oneId = t.intern(QPoly{1}, pool);

  std::vector<std::int64_t> acc(N * K, 0);
  std::vector<char> touched(N, 0);
  std::vector<Index> touchedList;
  auto touch = [&](Index y) {
    if (!touched[y]) {
      touched[y] = 1;
      touchedList.push_back(y);
    }
  };

  for (Index w : G.byLength()) {
    if (w == G.identityIndex()) {
      t.below_[w] = {w};
      t.polyId_[w] = {oneId};
      continue;
    }
    const int lw = G.length(w);
    const int s = G.firstLeftDescent(w);
    const Index v = G.leftMul(s, w);
    touchedList.clear();
    // P_{x,w} = q^{1-c} P_{sx,v} + q^c P_{x,v} - sum_z mu(z,v) q^{(l(w)-l(z))/2} P_{x,z}, c = [sx < x]
    for (std::size_t k = 0; k < t.below_[v].size(); ++k) {
      const Index y = t.below_[v][k];
      const Index sy = G.leftMul(s, y);
      const std::size_t shift = G.length(sy) < G.length(y) ? 1 : 0;
      const QPoly& f = t.polys_[t.polyId_[v][k]];
      touch(y);
      touch(sy);
      for (std::size_t d = 0; d < f.size(); ++d) {
        acc[y * K + d + shift] += f[d];
        acc[sy * K + d + shift] += f[d];
      }
    }
    for (const auto& [z, m] : t.mu_[v]) {
      if (G.length(G.leftMul(s, z)) > G.length(z)) continue;
      const std::size_t shift = static_cast<std::size_t>((lw - G.length(z)) / 2);
      for (std::size_t k = 0; k < t.below_[z].size(); ++k) {
        const Index y = t.below_[z][k];
        const QPoly& f = t.polys_[t.polyId_[z][k]];
        for (std::size_t d = 0; d < f.size(); ++d) acc[y * K + d + shift] -= m * f[d];
      }
    }
    std::sort(touchedList.begin(), touchedList.end());
    auto& below = t.below_[w];
    auto& ids = t.polyId_[w];
    QPoly f;
    for (Index y : touchedList) {
      touched[y] = 0;
      f.assign(acc.begin() + static_cast<std::ptrdiff_t>(y * K), acc.begin() + static_cast<std::ptrdiff_t>((y + 1) * K));
      std::fill(acc.begin() + static_cast<std::ptrdiff_t>(y * K), acc.begin() + static_cast<std::ptrdiff_t>((y + 1) * K), 0);
      trimQ(f);
      if (f.empty()) continue;
      below.push_back(y);
      ids.push_back(t.intern(f, pool));
    }
    t.finishMu(w);
  }
  return t;
}

const QPoly& KLTable::P(Index y, Index w) const {
  const auto& below = below_[w];
  auto it = std::lower_bound(below.begin(), below.end(), y);
  if (it == below.end() || *it != y) return kEmpty;
  return polys_[polyId_[w][static_cast<std::size_t>(it - below.begin())]];
}

LaurentPoly KLTable::p(Index y, Index w) const {
  const QPoly& f = P(y, w);
  const SymmetricGroup& G = SymmetricGroup::of(n_);
  const int base = G.length(y) - G.length(w);
  LaurentPoly out;
  for (std::size_t d = 0; d < f.size(); ++d)
    if (f[d] != 0) out.addScaled(LaurentPoly(1), BigInt(f[d]), base + 2 * static_cast<int>(d));
  return out;
}

LaurentPoly KLTable::p(const Permutation& y, const Permutation& w) const {
  const SymmetricGroup& G = SymmetricGroup::of(n_);
  return p(G.index(y), G.index(w));
}

std::int64_t KLTable::mu(Index y, Index w) const {
  if (y == w) return 0;
  const SymmetricGroup& G = SymmetricGroup::of(n_);
  if (G.length(y) > G.length(w)) std::swap(y, w);
  const int gap = G.length(w) - G.length(y);
  if (gap % 2 == 0) return 0;
  const QPoly& f = P(y, w);
  const auto deg = static_cast<std::size_t>((gap - 1) / 2);
  return deg < f.size() ? f[deg] : 0;
}

std::size_t KLTable::pairCount() const {
  std::size_t k = 0;
  for (const auto& b : below_) k += b.size();
  return k;
}

void KLTable::save(std::ostream& os) const {
  const SymmetricGroup& G = SymmetricGroup::of(n_);
  for (Index w : G.byLength()) {
    const std::string ws = G.element(w).str();
    for (Index y : below_[w]) {
      if (y == w) continue;
      os << G.element(y).str() << ';' << ws << ';' << p(y, w).str() << '\n';
    }
  }
}

KLTable KLTable::load(std::istream& is, int n) {
  const SymmetricGroup& G = SymmetricGroup::of(n);
  const std::size_t N = G.order();
  KLTable t;
  t.n_ = n;
  t.below_.assign(N, {});
  t.polyId_.assign(N, {});
  t.mu_.assign(N, {});
  std::map<QPoly, std::uint32_t> pool;
  const std::uint32_t oneId = t.intern(QPoly{1}, pool);
  std::vector<std::vector<std::pair<Index, std::uint32_t>>> rows(N);
  for (Index w = 0; w < N; ++w) rows[w].emplace_back(w, oneId);

  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto a = line.find(';');
    const auto b = line.find(';', a == std::string::npos ? a : a + 1);
    if (a == std::string::npos || b == std::string::npos) throw std::runtime_error("malformed KL cache line: " + line);
    const Index y = G.index(Permutation::parse(line.substr(0, a)));
    const Index w = G.index(Permutation::parse(line.substr(a + 1, b - a - 1)));
    const LaurentPoly f = LaurentPoly::parse(line.substr(b + 1));
    const int base = G.length(y) - G.length(w);
    QPoly q;
    bool ok = !f.isZero();
    f.forEachTerm([&](int e, const BigInt& c) {
      const int d2 = e - base;
      if (d2 < 0 || d2 % 2) {
        ok = false;
        return;
      }
      const auto d = static_cast<std::size_t>(d2 / 2);
      if (q.size() <= d) q.resize(d + 1, 0);
      q[d] = static_cast<std::int64_t>(c);
    });
    if (!ok) throw std::runtime_error("KL cache entry is not of the form v^{l(y)-l(w)} P(v^2): " + line);
    rows[w].emplace_back(y, t.intern(q, pool));
  }
  for (Index w : G.byLength()) {
    auto& r = rows[w];
    std::sort(r.begin(), r.end());
    for (const auto& [y, id] : r) {
      t.below_[w].push_back(y);
      t.polyId_[w].push_back(id);
    }
    t.finishMu(w);
  }
  return t;
}

bool operator==(const KLTable& a, const KLTable& b) {
  if (a.n_ != b.n_ || a.below_ != b.below_) return false;
  for (std::size_t w = 0; w < a.below_.size(); ++w)
    for (std::size_t k = 0; k < a.below_[w].size(); ++k)
      if (a.polys_[a.polyId_[w][k]] != b.polys_[b.polyId_[w][k]]) return false;
  return true;
}

std::filesystem::path klCacheDirectory() {
  if (const char* dir = std::getenv("KLRSK_CACHE_DIR"); dir != nullptr && *dir != '\0') return dir;
  return ".cache";
}

namespace {

// The recursion is faster than parsing the text cache, so persistence is opt-in:
// only when KLRSK_CACHE_DIR is set.
bool cacheEnabled() {
  const char* dir = std::getenv("KLRSK_CACHE_DIR");
  const char* off = std::getenv("KLRSK_NO_CACHE");
  const bool disabled = off != nullptr && *off != '\0' && std::string(off) != "0";
  return dir != nullptr && *dir != '\0' && !disabled;
}

std::unique_ptr<KLTable> obtain(int n) {
  if (!cacheEnabled()) return std::make_unique<KLTable>(KLTable::build(n));
  const auto file = klCacheDirectory() / ("kl-s" + std::to_string(n) + ".txt");
  if (std::ifstream in(file); in) {
    try {
      return std::make_unique<KLTable>(KLTable::load(in, n));
    } catch (const std::exception& e) {
      std::cerr << "ignoring unreadable KL cache " << file << ": " << e.what() << '\n';
    }
  }
  auto t = std::make_unique<KLTable>(KLTable::build(n));
  std::error_code ec;
  std::filesystem::create_directories(file.parent_path(), ec);
  const auto tmp = file.string() + ".tmp";
  if (std::ofstream out(tmp); out) {
    t->save(out);
    out.close();
    if (out) std::filesystem::rename(tmp, file, ec);
  }
  return t;
}

}  // namespace

const KLTable& klTable(int n) {
  static std::mutex m;
  static std::map<int, std::unique_ptr<KLTable>> tables;
  std::lock_guard<std::mutex> lock(m);
  auto& slot = tables[n];
  if (!slot) slot = obtain(n);
  return *slot;
}

}  // namespace klrsk
