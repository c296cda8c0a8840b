#include "vphi/diagram.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "vphi/error.hpp"

namespace vphi {

LabeledDiagram::LabeledDiagram(RecursionPtr phi, std::uint32_t m, std::uint32_t n,
                               std::vector<Column> columns)
    : LabeledDiagram(std::move(phi), m, n, std::move(columns), false) {}

LabeledDiagram::LabeledDiagram(RecursionPtr phi, std::uint32_t m, std::uint32_t n,
                               std::vector<Column> columns, bool trusted)
    : phi_(std::move(phi)), m_(m), n_(n), columns_(std::move(columns)) {
  std::sort(columns_.begin(), columns_.end(),
            [](const Column& a, const Column& b) { return a.dom < b.dom; });
  if (trusted) return;
  if (!phi_) throw DiagramError("diagram without a recursion");
  if (m_ == 0 || n_ == 0) throw DiagramError("forests need at least one root");
  if (!is_partition_set(domain(), m_)) {
    throw DiagramError("domain words do not form a partition set");
  }
  if (!is_partition_set(range(), n_)) {
    throw DiagramError("range words do not form a partition set");
  }
  for (const auto& c : columns_) phi_->group()->require(c.label);
}

LabeledDiagram LabeledDiagram::identity(RecursionPtr phi, std::uint32_t roots) {
  std::vector<Column> cols;
  for (std::uint32_t r = 0; r < roots; ++r) {
    cols.push_back({{r, {}}, phi->group()->identity(), {r, {}}});
  }
  return LabeledDiagram(std::move(phi), roots, roots, std::move(cols), true);
}

std::vector<Address> LabeledDiagram::domain() const {
  std::vector<Address> out;
  out.reserve(columns_.size());
  for (const auto& c : columns_) out.push_back(c.dom);
  return out;
}

std::vector<Address> LabeledDiagram::range() const {
  std::vector<Address> out;
  out.reserve(columns_.size());
  for (const auto& c : columns_) out.push_back(c.ran);
  return out;
}

std::vector<std::size_t> LabeledDiagram::sigma() const {
  std::vector<std::size_t> order(columns_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return columns_[a].ran < columns_[b].ran;
  });
  std::vector<std::size_t> rank(columns_.size());
  for (std::size_t r = 0; r < order.size(); ++r) rank[order[r]] = r;
  return rank;
}

std::size_t LabeledDiagram::depth() const {
  std::size_t d = 0;
  for (const auto& c : columns_) d = std::max(d, c.dom.word.size());
  return d;
}

bool LabeledDiagram::all_labels_trivial() const {
  const Group& g = group();
  return std::all_of(columns_.begin(), columns_.end(),
                     [&](const Column& c) { return g.is_identity(c.label); });
}

std::pair<Column, Column> LabeledDiagram::split(const Column& c) const {
  auto im = phi_->apply(c.label);
  const int s = im.swap ? 1 : 0;
  return {Column{c.dom.child(0), im.left, c.ran.child(0 ^ s)},
          Column{c.dom.child(1), im.right, c.ran.child(1 ^ s)}};
}

LabeledDiagram LabeledDiagram::simple_expand(std::size_t k) const {
  if (k >= columns_.size()) throw DiagramError("column index out of range");
  auto cols = columns_;
  auto [a, b] = split(cols[k]);
  cols[k] = std::move(a);
  cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(k) + 1, std::move(b));
  return LabeledDiagram(phi_, m_, n_, std::move(cols), true);
}

namespace {

struct Tail {
  GroupElement label;
  Address ran;
};

// Tries to merge parent.0 and parent.1; on success updates the map.
bool try_merge(const WreathRecursion& phi, std::map<Address, Tail>& cols,
               const Address& parent) {
  auto i0 = cols.find(parent.child(0));
  if (i0 == cols.end()) return false;
  auto i1 = std::next(i0);
  if (i1 == cols.end() || i1->first != parent.child(1)) return false;
  const Address& r0 = i0->second.ran;
  const Address& r1 = i1->second.ran;
  if (r0.word.empty() || r1.word.empty() || r0.root != r1.root) return false;
  if (r0.word.size() != r1.word.size() || r0.word.back() == r1.word.back()) return false;
  auto rp = r0.word.parent();
  if (rp != r1.word.parent()) return false;
  auto g = phi.preimage({i0->second.label, i1->second.label, r0.word.back() == 1});
  if (!g) return false;
  Tail merged{std::move(*g), Address{r0.root, std::move(rp)}};
  cols.erase(i0, std::next(i1));
  cols.emplace(parent, std::move(merged));
  return true;
}

}  // namespace

std::optional<LabeledDiagram> LabeledDiagram::simple_reduce(const Address& parent) const {
  if (!phi_->injective()) throw RecursionError("reduction requires injective recursion");
  std::map<Address, Tail> cols;
  for (const auto& c : columns_) cols.emplace(c.dom, Tail{c.label, c.ran});
  if (!cols.contains(parent.child(0)) || !cols.contains(parent.child(1))) {
    throw DiagramError("no sibling domain pair below " + parent.str());
  }
  if (!try_merge(*phi_, cols, parent)) return std::nullopt;
  std::vector<Column> out;
  for (auto& [d, t] : cols) out.push_back({d, t.label, t.ran});
  return LabeledDiagram(phi_, m_, n_, std::move(out), true);
}

LabeledDiagram LabeledDiagram::reduce() const {
  if (!phi_->injective()) throw RecursionError("reduction requires injective recursion");
  std::map<Address, Tail> cols;
  for (const auto& c : columns_) cols.emplace(c.dom, Tail{c.label, c.ran});
  // candidate parents, deepest first
  auto deeper = [](const Address& a, const Address& b) {
    if (a.word.size() != b.word.size()) return a.word.size() > b.word.size();
    return a < b;
  };
  std::set<Address, decltype(deeper)> todo(deeper);
  for (const auto& c : columns_) {
    if (!c.dom.word.empty() && c.dom.word.back() == 0) {
      todo.insert({c.dom.root, c.dom.word.parent()});
    }
  }
  while (!todo.empty()) {
    Address p = *todo.begin();
    todo.erase(todo.begin());
    if (try_merge(*phi_, cols, p) && !p.word.empty()) {
      todo.insert({p.root, p.word.parent()});
    }
  }
  std::vector<Column> out;
  out.reserve(cols.size());
  for (auto& [d, t] : cols) out.push_back({d, std::move(t.label), std::move(t.ran)});
  return LabeledDiagram(phi_, m_, n_, std::move(out), true);
}

namespace {

template <typename Key, typename Split>
std::vector<Column> refine(const std::vector<Column>& columns,
                           const std::vector<Address>& target, Key key, Split split) {
  std::set<Address> want(target.begin(), target.end());
  std::vector<Column> out;
  std::vector<Column> stack(columns.rbegin(), columns.rend());
  while (!stack.empty()) {
    Column c = std::move(stack.back());
    stack.pop_back();
    const Address& k = key(c);
    auto it = want.lower_bound(k);
    if (it != want.end() && *it == k) {
      out.push_back(std::move(c));
      continue;
    }
    if (it == want.end() || !k.is_prefix_of(*it)) {
      throw DiagramError("target does not refine the diagram at " + k.str());
    }
    auto [a, b] = split(c);
    stack.push_back(std::move(b));
    stack.push_back(std::move(a));
  }
  if (out.size() != want.size()) throw DiagramError("target does not refine the diagram");
  return out;
}

}  // namespace

LabeledDiagram LabeledDiagram::expand_to(const std::vector<Address>& target) const {
  auto cols = refine(
      columns_, target, [](const Column& c) -> const Address& { return c.dom; },
      [this](const Column& c) { return split(c); });
  return LabeledDiagram(phi_, m_, n_, std::move(cols), true);
}

LabeledDiagram LabeledDiagram::expand_range_to(const std::vector<Address>& target) const {
  auto cols = refine(
      columns_, target, [](const Column& c) -> const Address& { return c.ran; },
      [this](const Column& c) { return split(c); });
  return LabeledDiagram(phi_, m_, n_, std::move(cols), true);
}

LabeledDiagram LabeledDiagram::expand_uniform(std::size_t depth) const {
  std::vector<Column> out;
  std::vector<Column> stack(columns_.rbegin(), columns_.rend());
  while (!stack.empty()) {
    Column c = std::move(stack.back());
    stack.pop_back();
    if (c.dom.word.size() >= depth) {
      out.push_back(std::move(c));
      continue;
    }
    auto [a, b] = split(c);
    stack.push_back(std::move(b));
    stack.push_back(std::move(a));
  }
  return LabeledDiagram(phi_, m_, n_, std::move(out), true);
}

LabeledDiagram LabeledDiagram::inverse() const {
  std::vector<Column> cols;
  cols.reserve(columns_.size());
  const Group& g = group();
  for (const auto& c : columns_) cols.push_back({c.ran, g.inv(c.label), c.dom});
  return LabeledDiagram(phi_, n_, m_, std::move(cols), true);
}

LabeledDiagram compose(const LabeledDiagram& a, const LabeledDiagram& b) {
  if (a.phi_ != b.phi_) throw PreconditionError("context mismatch");
  if (a.n_ != b.m_) throw PreconditionError("arity mismatch");
  auto common = common_refinement(a.range(), b.domain());
  auto left = a.expand_range_to(common);
  auto right = b.expand_to(common);
  // right is sorted by domain, so look up each range address by binary search
  const auto& rc = right.columns_;
  const Group& g = a.group();
  std::vector<Column> cols;
  cols.reserve(left.columns_.size());
  for (const auto& c : left.columns_) {
    auto it = std::lower_bound(rc.begin(), rc.end(), c.ran,
                               [](const Column& x, const Address& k) { return x.dom < k; });
    cols.push_back({c.dom, g.mul(c.label, it->label), it->ran});
  }
  return LabeledDiagram(a.phi_, a.m_, b.n_, std::move(cols), true);
}

std::string LabeledDiagram::str() const {
  const bool forest = m_ != 1 || n_ != 1;
  auto fmt = [&](const Address& a) { return forest ? a.str() : a.word.str(); };
  std::string out = "[";
  for (std::size_t i = 0; i < columns_.size(); ++i) {
    if (i) out += "; ";
    out += fmt(columns_[i].dom) + "|" + group().format(columns_[i].label) + "|" +
           fmt(columns_[i].ran);
  }
  return out + "]";
}

}  // namespace vphi
