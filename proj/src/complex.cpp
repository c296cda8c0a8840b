#include "vphi/complex.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <unordered_map>

#include "vphi/error.hpp"

namespace vphi {

SimplicialComplex::SimplicialComplex(std::vector<std::string> vertex_keys,
                                     const std::vector<Simplex>& simplices)
    : keys_(std::move(vertex_keys)) {
  std::vector<std::set<Simplex>> faces;
  for (Simplex s : simplices) {
    std::sort(s.begin(), s.end());
    if (s.empty()) continue;
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
      throw DiagramError("simplex with repeated vertex");
    }
    if (s.back() >= keys_.size()) throw DiagramError("simplex vertex out of range");
    if (s.size() > 24) throw DiagramError("simplex too large to close under faces");
    if (faces.size() < s.size()) faces.resize(s.size());
    if (faces[s.size() - 1].contains(s)) continue;
    for (std::uint32_t mask = 1; mask < (1U << s.size()); ++mask) {
      Simplex f;
      for (std::size_t i = 0; i < s.size(); ++i)
        if (mask & (1U << i)) f.push_back(s[i]);
      faces[f.size() - 1].insert(std::move(f));
    }
  }
  for (auto& level : faces) faces_.emplace_back(level.begin(), level.end());
}

const std::vector<Simplex>& SimplicialComplex::simplices(int k) const {
  static const std::vector<Simplex> none;
  if (k < 0 || k >= static_cast<int>(faces_.size())) return none;
  return faces_[static_cast<std::size_t>(k)];
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
  std::vector<std::size_t> out;
  for (const auto& level : faces_) out.push_back(level.size());
  return out;
}

bool SimplicialComplex::contains(const Simplex& s) const {
  if (s.empty()) return true;
  Simplex t = s;
  std::sort(t.begin(), t.end());
  const auto& level = simplices(static_cast<int>(t.size()) - 1);
  return std::binary_search(level.begin(), level.end(), t);
}

std::vector<Simplex> SimplicialComplex::maximal() const {
  std::vector<Simplex> out;
  for (int k = 0; k <= dimension(); ++k) {
    const auto& up = simplices(k + 1);
    std::set<Simplex> covered;
    for (const auto& s : up)
      for (std::size_t i = 0; i < s.size(); ++i) {
        Simplex f = s;
        f.erase(f.begin() + static_cast<std::ptrdiff_t>(i));
        covered.insert(std::move(f));
      }
    for (const auto& s : simplices(k))
      if (!covered.contains(s)) out.push_back(s);
  }
  return out;
}

namespace {

std::vector<std::pair<std::uint32_t, std::uint32_t>> all_pairs(std::size_t n) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  for (std::uint32_t i = 1; i <= n; ++i)
    for (std::uint32_t j = i + 1; j <= n; ++j) out.emplace_back(i, j);
  return out;
}

// every nonempty matching, as sorted lists of pair indices
void matchings(const std::vector<std::pair<std::uint32_t, std::uint32_t>>& pairs, std::size_t from,
               std::vector<bool>& used, Simplex& cur, std::vector<Simplex>& out) {
  for (std::size_t p = from; p < pairs.size(); ++p) {
    auto [a, b] = pairs[p];
    if (used[a] || used[b]) continue;
    used[a] = used[b] = true;
    cur.push_back(static_cast<std::uint32_t>(p));
    out.push_back(cur);
    matchings(pairs, p + 1, used, cur, out);
    cur.pop_back();
    used[a] = used[b] = false;
  }
}

std::vector<Simplex> all_matchings(std::size_t n) {
  auto pairs = all_pairs(n);
  std::vector<bool> used(n + 1, false);
  Simplex cur;
  std::vector<Simplex> out;
  matchings(pairs, 0, used, cur, out);
  return out;
}

std::string pair_key(std::uint32_t a, std::uint32_t b) {
  return "{" + std::to_string(a) + "," + std::to_string(b) + "}";
}

}  // namespace

SimplicialComplex matching_complex(std::size_t n) {
  if (n < 2) throw PreconditionError("matching complex needs n >= 2");
  std::vector<std::string> keys;
  for (auto [a, b] : all_pairs(n)) keys.push_back(pair_key(a, b));
  return SimplicialComplex(std::move(keys), all_matchings(n));
}

// ---------------------------------------------------------------------------

bool HomologyResult::vanishes_through(int k) const {
  if (k >= -1 && empty_complex) return false;
  for (int i = 0; i <= k; ++i) {
    auto u = static_cast<std::size_t>(i);
    if (u >= betti.size()) return false;
    if (betti[u] != 0 || !torsion[u].empty()) return false;
  }
  return true;
}

namespace {

SparseMatrix boundary(const SimplicialComplex& c, int k) {
  const auto& rows = c.simplices(k);
  SparseMatrix m;
  m.rows = rows.size();
  m.entries.resize(rows.size());
  if (k == 0) {
    m.cols = 1;
    for (auto& e : m.entries) e.emplace_back(0, 1);
    return m;
  }
  const auto& cols = c.simplices(k - 1);
  m.cols = cols.size();
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const Simplex& s = rows[r];
    for (std::size_t i = 0; i < s.size(); ++i) {
      Simplex f = s;
      f.erase(f.begin() + static_cast<std::ptrdiff_t>(i));
      auto it = std::lower_bound(cols.begin(), cols.end(), f);
      m.entries[r].emplace_back(static_cast<std::uint32_t>(it - cols.begin()),
                                i % 2 == 0 ? 1 : -1);
    }
  }
  return m;
}

}  // namespace

HomologyResult homology(const SimplicialComplex& c, int up_to) {
  const int top = c.dimension();
  if (up_to < 0) up_to = std::max(top, 0);
  HomologyResult out;
  out.empty_complex = c.vertex_count() == 0 || top < 0;
  const int last = std::min(up_to + 1, top);
  // factors[k] = invariant factors of the boundary C_k -> C_{k-1}
  std::vector<std::vector<BigInt>> factors(static_cast<std::size_t>(std::max(last, 0) + 2));
  for (int k = 0; k <= last; ++k) {
    factors[static_cast<std::size_t>(k)] = invariant_factors(boundary(c, k));
  }
  for (int k = 0; k <= up_to; ++k) {
    auto u = static_cast<std::size_t>(k);
    std::size_t fk = c.simplices(k).size();
    std::size_t rk = k <= last ? factors[u].size() : 0;
    std::size_t rk1 = k + 1 <= last ? factors[u + 1].size() : 0;
    out.betti.push_back(fk - rk - rk1);
    std::vector<BigInt> tors;
    if (k + 1 <= last) {
      for (const auto& d : factors[u + 1])
        if (d > 1) tors.push_back(d);
    }
    out.torsion.push_back(std::move(tors));
  }
  if (up_to >= top) {
    out.euler_checked = true;
    long long faces = -1;  // the empty simplex sits in dimension -1
    long long ranks = out.empty_complex ? -1 : 0;
    for (int k = 0; k <= top; ++k) {
      long long sign = k % 2 == 0 ? 1 : -1;
      faces += sign * static_cast<long long>(c.simplices(k).size());
      ranks += sign * static_cast<long long>(out.betti[static_cast<std::size_t>(k)]);
    }
    out.euler_consistent = faces == ranks;
  }
  return out;
}

// ---------------------------------------------------------------------------

std::size_t enumeration_cap() {
  if (const char* env = std::getenv("VPHI_ENUM_CAP")) {
    char* end = nullptr;
    auto v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 200000;
}

namespace {

std::string element_key(const Element& e) {
  const Group& G = e.context()->group();
  std::string key;
  for (const auto& c : e.columns()) {
    key += std::to_string(G.index_of(c.label));
    key += ',';
    key += c.ran.str();
    key += ';';
  }
  return key;
}

// leaves of F_J on k roots, lex order
std::vector<Address> forest_leaves(std::uint32_t k, const std::vector<bool>& caret) {
  std::vector<Address> out;
  for (std::uint32_t r = 0; r < k; ++r) {
    if (caret[r]) {
      out.push_back({r, BitWord("0")});
      out.push_back({r, BitWord("1")});
    } else {
      out.push_back({r, BitWord()});
    }
  }
  return out;
}

// [F_S, 1, 1_{k+|S|}]
Element splitter(const ContextPtr& ctx, std::uint32_t k, const std::vector<bool>& split) {
  std::vector<Column> cols;
  std::uint32_t t = 0;
  const auto e = ctx->group().identity();
  for (std::uint32_t r = 0; r < k; ++r) {
    if (split[r]) {
      cols.push_back({{r, BitWord("0")}, e, {t++, BitWord()}});
      cols.push_back({{r, BitWord("1")}, e, {t++, BitWord()}});
    } else {
      cols.push_back({{r, BitWord()}, e, {t++, BitWord()}});
    }
  }
  return Element(ctx, LabeledDiagram(ctx->phi(), k, t, std::move(cols)));
}

// all [1_k, (h, tau), 1_k]
std::vector<Element> wreath_elements(const ContextPtr& ctx, std::uint32_t k) {
  const Group& G = ctx->group();
  const std::size_t q = *G.order();
  std::vector<Element> out;
  std::vector<std::uint32_t> tau(k);
  std::iota(tau.begin(), tau.end(), 0);
  do {
    std::vector<std::size_t> h(k, 0);
    while (true) {
      std::vector<Column> cols;
      for (std::uint32_t r = 0; r < k; ++r) {
        cols.push_back({{r, BitWord()}, G.element_at(h[r]), {tau[r], BitWord()}});
      }
      out.emplace_back(ctx, LabeledDiagram(ctx->phi(), k, k, std::move(cols)));
      std::size_t i = 0;
      while (i < k && ++h[i] == q) h[i++] = 0;
      if (i == k) break;
    }
  } while (std::next_permutation(tau.begin(), tau.end()));
  return out;
}

std::vector<bool> caret_roots(const Element& e) {
  std::vector<bool> caret(e.n(), false);
  for (const auto& c : e.columns())
    if (!c.ran.word.empty()) caret[c.ran.root] = true;
  return caret;
}

}  // namespace

std::pair<std::uint32_t, std::uint32_t> forgetful_pi(const Element& v) {
  auto caret = caret_roots(v);
  if (std::count(caret.begin(), caret.end(), true) != 1) {
    throw PreconditionError("forgetful_pi expects a single-caret vertex");
  }
  std::vector<std::uint32_t> roots;
  for (const auto& c : v.columns()) {
    if (!c.ran.word.empty()) roots.push_back(c.dom.root + 1);
  }
  std::sort(roots.begin(), roots.end());
  return {roots[0], roots[1]};
}

DlinkComplex dlink_complex(std::size_t n, const ContextPtr& ctx) {
  const Group& G = ctx->group();
  if (!G.is_finite()) throw PreconditionError("descending links need a finite group");
  if (n < 2) throw PreconditionError("descending links need n >= 2");
  {
    double total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= static_cast<double>(*G.order()) * static_cast<double>(i + 1);
    if (total > static_cast<double>(enumeration_cap())) {
      throw CapExceeded("|G|^n n! = " + std::to_string(static_cast<unsigned long long>(total)) +
                        " exceeds the enumeration cap " + std::to_string(enumeration_cap()));
    }
  }
  const std::size_t q = *G.order();
  const auto N = static_cast<std::uint32_t>(n);

  DlinkComplex out;
  out.n = n;
  std::unordered_map<std::string, std::uint32_t> class_of;
  struct ClassInfo {
    Element rep;
    std::size_t carets;
  };
  std::vector<ClassInfo> classes;

  for (std::uint32_t j = 1; 2 * j <= N; ++j) {
    const std::uint32_t k = N - j;
    auto wreath = wreath_elements(ctx, k);
    // J runs over the j-subsets of the k roots
    std::vector<bool> caret(k, false);
    std::fill(caret.end() - j, caret.end(), true);
    do {
      auto leaves = forest_leaves(k, caret);
      std::vector<std::uint32_t> sigma(N);
      std::iota(sigma.begin(), sigma.end(), 0);
      do {
        std::vector<std::size_t> g(N, 0);
        while (true) {
          std::vector<Column> cols;
          for (std::uint32_t i = 0; i < N; ++i) {
            cols.push_back({{i, BitWord()}, G.element_at(g[i]), leaves[sigma[i]]});
          }
          Element y(ctx, LabeledDiagram(ctx->phi(), N, k, std::move(cols)));
          auto key = element_key(y);
          ++out.elements;
          if (!class_of.contains(key)) {
            std::vector<std::pair<std::string, Element>> orbit;
            for (const auto& w : wreath) {
              Element z = y * w;
              orbit.emplace_back(element_key(z), z);
            }
            std::sort(orbit.begin(), orbit.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            for (std::size_t i = 1; i < orbit.size(); ++i) {
              if (orbit[i].first == orbit[i - 1].first) {
                throw Error("internal error: right action is not free");
              }
            }
            const auto id = static_cast<std::uint32_t>(classes.size());
            for (const auto& [kk, z] : orbit) {
              if (!class_of.emplace(kk, id).second) {
                throw Error("internal error: orbits overlap");
              }
            }
            if (j == 1) {
              auto p = forgetful_pi(orbit.front().second);
              for (const auto& [kk, z] : orbit) {
                if (forgetful_pi(z) != p) throw Error("internal error: pi is not orbit invariant");
              }
            }
            classes.push_back({orbit.front().second, j});
          }
          std::size_t i = 0;
          while (i < N && ++g[i] == q) g[i++] = 0;
          if (i == N) break;
        }
      } while (std::next_permutation(sigma.begin(), sigma.end()));
    } while (std::next_permutation(caret.begin(), caret.end()));
  }
  out.classes = classes.size();

  // vertices are the single-caret classes
  std::vector<std::int64_t> vertex_of(classes.size(), -1);
  std::vector<std::string> keys;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (classes[c].carets != 1) continue;
    vertex_of[c] = static_cast<std::int64_t>(keys.size());
    keys.push_back(element_key(classes[c].rep));
    out.vertex_rep.push_back(classes[c].rep);
    out.pi.push_back(forgetful_pi(classes[c].rep));
  }
  std::vector<Simplex> simplices;
  std::set<Simplex> seen;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    const auto& rep = classes[c].rep;
    Simplex s;
    if (classes[c].carets == 1) {
      s.push_back(static_cast<std::uint32_t>(vertex_of[c]));
    } else {
      auto caret = caret_roots(rep);
      for (std::uint32_t r = 0; r < caret.size(); ++r) {
        if (!caret[r]) continue;
        auto split = caret;
        split[r] = false;
        Element face = rep * splitter(ctx, rep.n(), split);
        auto it = class_of.find(element_key(face));
        if (it == class_of.end() || vertex_of[it->second] < 0) {
          throw Error("internal error: face is not a vertex class");
        }
        s.push_back(static_cast<std::uint32_t>(vertex_of[it->second]));
      }
      std::sort(s.begin(), s.end());
    }
    if (!seen.insert(s).second) throw Error("internal error: two simplices share a vertex set");
    simplices.push_back(std::move(s));
  }
  out.complex = SimplicialComplex(std::move(keys), simplices);
  return out;
}

SimplicialComplex fiber_join(const DlinkComplex& d) {
  auto pairs = all_pairs(d.n);
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<std::uint32_t>> fiber;
  for (std::uint32_t v = 0; v < d.pi.size(); ++v) fiber[d.pi[v]].push_back(v);
  std::vector<Simplex> simplices;
  for (const auto& m : all_matchings(d.n)) {
    // every transversal of the fibers over m
    std::vector<const std::vector<std::uint32_t>*> fibers;
    bool empty = false;
    for (auto p : m) {
      auto it = fiber.find(pairs[p]);
      if (it == fiber.end()) {
        empty = true;
        break;
      }
      fibers.push_back(&it->second);
    }
    if (empty) continue;
    std::vector<std::size_t> idx(fibers.size(), 0);
    while (true) {
      Simplex s;
      for (std::size_t i = 0; i < fibers.size(); ++i) s.push_back((*fibers[i])[idx[i]]);
      simplices.push_back(std::move(s));
      std::size_t i = 0;
      while (i < fibers.size() && ++idx[i] == fibers[i]->size()) idx[i++] = 0;
      if (i == fibers.size()) break;
    }
  }
  return SimplicialComplex(d.complex.keys(), simplices);
}

CompleteJoinReport check_complete_join(const DlinkComplex& d) {
  CompleteJoinReport r;
  std::set<std::pair<std::uint32_t, std::uint32_t>> hit(d.pi.begin(), d.pi.end());
  r.surjective = hit.size() == d.n * (d.n - 1) / 2;
  r.simplicial = true;
  r.injective_on_simplices = true;
  for (int k = 0; k <= d.complex.dimension(); ++k) {
    for (const auto& s : d.complex.simplices(k)) {
      std::set<std::pair<std::uint32_t, std::uint32_t>> image;
      std::set<std::uint32_t> points;
      for (auto v : s) {
        image.insert(d.pi[v]);
        points.insert(d.pi[v].first);
        points.insert(d.pi[v].second);
      }
      if (image.size() != s.size()) r.injective_on_simplices = false;
      if (points.size() != 2 * image.size()) r.simplicial = false;
    }
  }
  r.join = fiber_join(d) == d.complex;
  return r;
}

CompleteJoinReport check_complete_join(std::size_t n, const ContextPtr& ctx) {
  return check_complete_join(dlink_complex(n, ctx));
}

ConnectivityReport connectivity_check(const SimplicialComplex& c, std::size_t n) {
  ConnectivityReport r;
  r.n = n;
  r.bound = static_cast<int>((n + 1) / 3) - 2;
  r.homology = homology(c, std::max(r.bound, 0));
  r.ok = r.homology.vanishes_through(r.bound);
  return r;
}

ConnectivityReport connectivity_check(std::size_t n, const ContextPtr& ctx) {
  return connectivity_check(dlink_complex(n, ctx).complex, n);
}

}  // namespace vphi
