#include "vphi/recursion.hpp"

#include <map>
#include <random>

#include "vphi/error.hpp"

namespace vphi {

WreathImage wreath_mul(const Group& g, const WreathImage& a, const WreathImage& b) {
  const int s = a.swap ? 1 : 0;
  return {g.mul(a.left, b.slot(0 ^ s)), g.mul(a.right, b.slot(1 ^ s)), a.swap != b.swap};
}

std::string to_string(Rule r) {
  switch (r) {
    case Rule::diagonal: return "diagonal";
    case Rule::vanishing: return "vanishing";
    case Rule::right: return "right";
    case Rule::left: return "left";
    case Rule::kappa: return "kappa";
    case Rule::adding: return "adding";
    case Rule::custom: return "custom";
  }
  return "?";
}

std::string to_string(Injectivity i) {
  switch (i) {
    case Injectivity::injective: return "true";
    case Injectivity::noninjective: return "false";
    case Injectivity::unknown: return "unknown";
  }
  return "?";
}

std::size_t WreathRecursion::image_key(const WreathImage& w) const {
  const std::size_t n = *group_->order();
  return (group_->index_of(w.left) * n + group_->index_of(w.right)) * 2 + (w.swap ? 1 : 0);
}

void WreathRecursion::tabulate(std::vector<WreathImage> table) {
  if (!group_->is_finite()) return;
  auto n = *group_->order();
  if (table.empty()) {
    table.reserve(n);
    for (std::size_t i = 0; i < n; ++i) table.push_back(formula(group_->element_at(i)));
  }
  if (table.size() != n) throw RecursionError("recursion table must have one image per element");
  for (const auto& w : table) {
    group_->require(w.left);
    group_->require(w.right);
  }
  table_ = std::move(table);
  inverse_.clear();
  bool injective = true;
  for (std::size_t i = 0; i < n; ++i) {
    if (!inverse_.emplace(image_key(table_[i]), i).second) injective = false;
  }
  injectivity_ = injective ? Injectivity::injective : Injectivity::noninjective;
}

WreathImage WreathRecursion::formula(const GroupElement& g) const {
  const Group& G = *group_;
  auto e = G.identity();
  switch (rule_) {
    case Rule::diagonal: return {g, g, false};
    case Rule::vanishing: return {e, e, false};
    case Rule::right: return {e, g, false};
    case Rule::left: return {g, e, false};
    case Rule::kappa: return {g, g, static_cast<bool>(kappa_[G.index_of(g)])};
    case Rule::adding: {
      std::int64_t k = g.value();
      std::int64_t m = k >= 0 ? k / 2 : -((-k + 1) / 2);
      if (k - 2 * m == 0) return {GroupElement::scalar(m), GroupElement::scalar(m), false};
      return {GroupElement::scalar(m), GroupElement::scalar(m + 1), true};
    }
    case Rule::custom: break;
  }
  throw RecursionError("custom recursion has no closed form");
}

RecursionPtr WreathRecursion::diagonal(GroupPtr g) {
  std::shared_ptr<WreathRecursion> r(new WreathRecursion(std::move(g), Rule::diagonal));
  r->tabulate({});
  r->injectivity_ = Injectivity::injective;
  return r;
}

RecursionPtr WreathRecursion::vanishing(GroupPtr g) {
  std::shared_ptr<WreathRecursion> r(new WreathRecursion(std::move(g), Rule::vanishing));
  r->tabulate({});
  r->injectivity_ = r->group_->is_trivial() ? Injectivity::injective : Injectivity::noninjective;
  return r;
}

RecursionPtr WreathRecursion::right(GroupPtr g) {
  std::shared_ptr<WreathRecursion> r(new WreathRecursion(std::move(g), Rule::right));
  r->tabulate({});
  r->injectivity_ = Injectivity::injective;
  return r;
}

RecursionPtr WreathRecursion::left(GroupPtr g) {
  std::shared_ptr<WreathRecursion> r(new WreathRecursion(std::move(g), Rule::left));
  r->tabulate({});
  r->injectivity_ = Injectivity::injective;
  return r;
}

RecursionPtr WreathRecursion::kappa(GroupPtr g, std::vector<bool> kappa) {
  if (!g->is_finite()) throw RecursionError("kappa rule needs a finite group");
  if (kappa.size() != *g->order()) throw RecursionError("kappa must be given on every element");
  auto elems = g->elements();
  for (const auto& a : elems)
    for (const auto& b : elems)
      if (kappa[g->index_of(g->mul(a, b))] != (kappa[g->index_of(a)] != kappa[g->index_of(b)])) {
        throw RecursionError("kappa is not a homomorphism to S2");
      }
  std::shared_ptr<WreathRecursion> r(new WreathRecursion(std::move(g), Rule::kappa));
  r->kappa_ = std::move(kappa);
  r->tabulate({});
  r->injectivity_ = Injectivity::injective;
  return r;
}

RecursionPtr WreathRecursion::adding(GroupPtr g) {
  if (g->kind() != GroupKind::cyclic || g->is_finite()) {
    throw RecursionError("the adding machine needs the infinite cyclic group");
  }
  std::shared_ptr<WreathRecursion> r(new WreathRecursion(std::move(g), Rule::adding));
  r->injectivity_ = Injectivity::injective;
  return r;
}

RecursionPtr WreathRecursion::custom(GroupPtr g, std::vector<WreathImage> table) {
  if (!g->is_finite()) throw RecursionError("custom recursions need a finite group");
  std::shared_ptr<WreathRecursion> r(new WreathRecursion(std::move(g), Rule::custom));
  r->tabulate(std::move(table));
  const Group& G = *r->group_;
  auto elems = G.elements();
  for (const auto& a : elems)
    for (const auto& b : elems)
      if (r->apply(G.mul(a, b)) != wreath_mul(G, r->apply(a), r->apply(b))) {
        throw RecursionError("recursion table is not a homomorphism into G wr S2");
      }
  return r;
}

WreathImage WreathRecursion::apply(const GroupElement& g) const {
  if (!table_.empty()) return table_[group_->index_of(g)];
  group_->require(g);
  return formula(g);
}

std::optional<GroupElement> WreathRecursion::preimage(const WreathImage& w) const {
  if (!injective()) throw RecursionError("preimage undefined for non-injective recursion");
  const Group& G = *group_;
  if (!G.contains(w.left) || !G.contains(w.right)) {
    throw GroupError("backend mismatch: wreath image is not over " + G.describe());
  }
  if (!table_.empty()) {
    auto it = inverse_.find(image_key(w));
    if (it == inverse_.end()) return std::nullopt;
    return G.element_at(it->second);
  }
  switch (rule_) {
    case Rule::diagonal:
      if (!w.swap && w.left == w.right) return w.left;
      return std::nullopt;
    case Rule::right:
      if (!w.swap && G.is_identity(w.left)) return w.right;
      return std::nullopt;
    case Rule::left:
      if (!w.swap && G.is_identity(w.right)) return w.left;
      return std::nullopt;
    case Rule::vanishing:
      if (!w.swap && G.is_identity(w.left) && G.is_identity(w.right)) return G.identity();
      return std::nullopt;
    case Rule::adding: {
      std::int64_t m = w.left.value();
      if (!w.swap && w.right.value() == m) return GroupElement::scalar(2 * m);
      if (w.swap && w.right.value() == m + 1) return GroupElement::scalar(2 * m + 1);
      return std::nullopt;
    }
    case Rule::kappa:
    case Rule::custom: break;
  }
  throw RecursionError("no preimage procedure for this recursion");
}

std::pair<BitWord, GroupElement> WreathRecursion::act(const GroupElement& g,
                                                      const BitWord& w) const {
  std::string out;
  out.reserve(w.size());
  GroupElement cur = g;
  for (std::size_t i = 0; i < w.size(); ++i) {
    auto im = apply(cur);
    int x = w[i];
    out.push_back((x ^ (im.swap ? 1 : 0)) ? '1' : '0');
    cur = im.slot(x);
  }
  return {BitWord(std::move(out)), cur};
}

bool WreathRecursion::check_homomorphism(std::size_t samples) const {
  const Group& G = *group_;
  auto ok = [&](const GroupElement& a, const GroupElement& b) {
    return apply(G.mul(a, b)) == wreath_mul(G, apply(a), apply(b));
  };
  if (G.is_finite()) {
    auto elems = G.elements();
    for (const auto& a : elems)
      for (const auto& b : elems)
        if (!ok(a, b)) return false;
    return true;
  }
  std::mt19937_64 rng(7);
  for (std::size_t i = 0; i < samples; ++i) {
    if (!ok(G.random(rng, 50), G.random(rng, 50))) return false;
  }
  return true;
}

std::vector<std::size_t> WreathRecursion::kernel() const {
  if (!group_->is_finite()) throw RecursionError("kernel scan needs a finite group");
  std::vector<std::size_t> out;
  const WreathImage one{group_->identity(), group_->identity(), false};
  for (std::size_t i = 0; i < table_.size(); ++i) {
    if (table_[i] == one) out.push_back(i);
  }
  return out;
}

std::string WreathRecursion::describe() const {
  return to_string(rule_) + " recursion on " + group_->describe();
}

// ---------------------------------------------------------------------------

Injectivization injectivize(const RecursionPtr& phi) {
  const GroupPtr& G = phi->group();
  if (!G->is_finite()) throw RecursionError("tower may not stabilize for an infinite group");
  Injectivization out;
  out.orders.push_back(*G->order());

  GroupPtr cur_group = G;
  RecursionPtr cur = phi;
  // images of the original elements in cur_group, by original index
  std::vector<GroupElement> proj = G->elements();

  while (true) {
    auto ker = cur->kernel();
    if (ker.size() == 1) break;
    const Group& H = *cur_group;
    const std::size_t n = *H.order();
    std::vector<std::size_t> coset(n, n);
    std::vector<std::size_t> reps;
    for (std::size_t i = 0; i < n; ++i) {
      if (coset[i] != n) continue;
      const std::size_t c = reps.size();
      reps.push_back(i);
      auto g = H.element_at(i);
      for (auto k : ker) coset[H.index_of(H.mul(g, H.element_at(k)))] = c;
    }
    const std::size_t q = reps.size();
    std::vector<std::vector<std::size_t>> table(q, std::vector<std::size_t>(q));
    for (std::size_t a = 0; a < q; ++a)
      for (std::size_t b = 0; b < q; ++b)
        table[a][b] = coset[H.index_of(H.mul(H.element_at(reps[a]), H.element_at(reps[b])))];

    std::vector<std::string> names;
    for (std::size_t a = 0; a < q; ++a) {
      auto s = H.format(H.element_at(reps[a]));
      if ((a == 0) != (s == "1") || s.empty() || s.front() == '#') {
        names.clear();
        break;
      }
      names.push_back(s);
    }
    GroupPtr Q;
    try {
      Q = make_finite_table(table, names);
    } catch (const GroupError&) {
      Q = make_finite_table(table);
    }
    auto to_q = [&](const GroupElement& g) {
      return Q->element_at(coset[H.index_of(g)]);
    };
    std::vector<WreathImage> images;
    for (std::size_t a = 0; a < q; ++a) {
      auto w = cur->apply(H.element_at(reps[a]));
      images.push_back({to_q(w.left), to_q(w.right), w.swap});
    }
    std::shared_ptr<WreathRecursion> next(new WreathRecursion(Q, cur->rule()));
    next->kappa_.assign(q, false);
    for (std::size_t a = 0; a < q; ++a) next->kappa_[a] = images[a].swap;
    next->tabulate(std::move(images));
    for (auto& p : proj) p = to_q(p);
    cur_group = Q;
    cur = next;
    ++out.steps;
    out.orders.push_back(q);
  }
  out.quotient = cur_group;
  out.recursion = cur;
  out.projection = std::make_shared<const FiniteHomomorphism>(G, cur_group, std::move(proj));
  return out;
}

}  // namespace vphi
