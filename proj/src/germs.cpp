#include "vphi/germs.hpp"

#include <algorithm>
#include <set>

#include "vphi/error.hpp"

namespace vphi {

namespace {

void require_tree(const Element& a) {
  if (a.m() != 1 || a.n() != 1) throw PreconditionError("tree element expected");
}

struct SpineColumn {
  GroupElement label;
  BitWord ran;
  std::size_t spine = 0;  // depth of the reduced column containing 000...
};

SpineColumn spine_leaf(const Element& a) {
  for (const auto& c : a.columns()) {
    const auto& w = c.dom.word.bits();
    if (std::all_of(w.begin(), w.end(), [](char x) { return x == '0'; })) {
      return {c.label, c.ran.word, w.size()};
    }
  }
  throw DiagramError("no column contains 000...");
}

void step(const WreathRecursion& phi, SpineColumn& s) {
  auto im = phi.apply(s.label);
  s.ran = s.ran.child(im.swap ? 1 : 0);
  s.label = im.left;
  ++s.spine;
}

SpineColumn spine_column(const Element& a, std::size_t k) {
  auto s = spine_leaf(a);
  while (s.spine < k) step(*a.context()->phi(), s);
  return s;
}

}  // namespace

GroupElement label_at(const Element& a, const BitWord& u) {
  require_tree(a);
  const auto& phi = *a.context()->phi();
  for (const auto& c : a.columns()) {
    if (c.dom.word.is_prefix_of(u)) {
      GroupElement g = c.label;
      for (std::size_t i = c.dom.word.size(); i < u.size(); ++i) g = phi.apply(g).slot(u[i]);
      return g;
    }
  }
  throw PreconditionError("label undefined at this interval");
}

SupportApprox lsupp_approx(const Element& a, std::size_t depth) {
  require_tree(a);
  if (depth < a.diagram().depth()) throw PreconditionError("depth too shallow");
  const Group& G = a.context()->group();
  SupportApprox out{depth, {}};
  const auto d = a.diagram().expand_uniform(depth);
  for (const auto& c : d.columns()) {
    if (c.dom == c.ran && G.is_identity(c.label)) continue;
    out.included.push_back(c.dom.word);
  }
  return out;
}

bool disjoint_supports_commute(const Element& a, const Element& b, std::size_t depth) {
  auto sa = lsupp_approx(a, depth);
  auto sb = lsupp_approx(b, depth);
  std::vector<BitWord> both;
  std::set_intersection(sa.included.begin(), sa.included.end(), sb.included.begin(),
                        sb.included.end(), std::back_inserter(both));
  if (!both.empty()) throw PreconditionError("precondition not certified");
  return commutator(a, b).is_identity();
}

GermResult germ_compare(const Element& a, const Element& b, std::size_t budget) {
  require_tree(a);
  require_tree(b);
  if (a.context() != b.context()) throw PreconditionError("context mismatch");
  if (a == b) return {Verdict::yes, 0};
  const auto& phi = *a.context()->phi();
  std::size_t k0 = std::max(spine_leaf(a).spine, spine_leaf(b).spine);
  auto sa = spine_column(a, k0);
  auto sb = spine_column(b, k0);
  std::set<std::pair<GroupElement, GroupElement>> seen;
  for (std::size_t d = 0; d <= budget; ++d) {
    // equal-length range words that differ stay disjoint below; different
    // lengths can never give the same map on a cone
    if (sa.ran != sb.ran) return {Verdict::no, k0 + d};
    if (sa.label == sb.label) return {Verdict::yes, k0 + d};
    if (!seen.emplace(sa.label, sb.label).second) return {Verdict::no, k0 + d};
    step(phi, sa);
    step(phi, sb);
  }
  return {Verdict::unknown, budget};
}

GermResult perp(const Element& a, const Element& b, std::size_t budget) {
  require_tree(a);
  require_tree(b);
  const auto w = EventuallyPeriodicWord::zeros();
  auto ea = act_exact(a, w, budget);
  auto eb = act_exact(b, w, budget);
  if (ea && eb && *ea == *eb) return {Verdict::no, 0};
  // first difference; bounded when both are exact and distinct
  std::size_t limit = budget;
  if (ea && eb) {
    limit = std::max(ea->prefix().size(), eb->prefix().size()) +
            ea->period().size() * eb->period().size() + 1;
  }
  for (std::size_t i = 0; i < limit; ++i) {
    int xa = ea ? ea->letter(i) : act_point(a, w, i + 1)[i];
    int xb = eb ? eb->letter(i) : act_point(b, w, i + 1)[i];
    if (xa != xb) return {Verdict::yes, i + 1};
  }
  return {Verdict::unknown, budget};
}

namespace {

bool pairwise_incomparable(const std::vector<BitWord>& w) {
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (w[i].comparable(w[j])) return false;
  return true;
}

// leaves of the smallest full tree containing every chosen word, minus them
std::vector<BitWord> complement(const std::vector<BitWord>& chosen) {
  std::set<BitWord> internal;
  for (const auto& w : chosen)
    for (std::size_t i = 0; i < w.size(); ++i) internal.insert(w.prefix(i));
  std::set<BitWord> taken(chosen.begin(), chosen.end());
  std::vector<BitWord> out;
  for (const auto& p : internal) {
    for (int x = 0; x < 2; ++x) {
      auto c = p.child(x);
      if (!internal.contains(c) && !taken.contains(c)) out.push_back(c);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Element transitivity_witness(const std::vector<Element>& A, const std::vector<Element>& B,
                             std::size_t budget) {
  if (A.size() != B.size() || A.empty()) {
    throw PreconditionError("tuples must be nonempty and of equal length");
  }
  const auto& ctx = A.front().context();
  for (const auto* tuple : {&A, &B}) {
    for (std::size_t i = 0; i < tuple->size(); ++i) {
      if ((*tuple)[i].context() != ctx) throw PreconditionError("context mismatch");
      for (std::size_t j = i + 1; j < tuple->size(); ++j) {
        if (perp((*tuple)[i], (*tuple)[j]).verdict != Verdict::yes) {
          throw PreconditionError("tuples not certified generic within budget");
        }
      }
    }
  }
  const Group& G = ctx->group();
  std::size_t k = 0;
  for (const auto* tuple : {&A, &B})
    for (const auto& e : *tuple) k = std::max(k, spine_leaf(e).spine);

  for (std::size_t tries = 0; tries <= budget; ++tries, ++k) {
    std::vector<SpineColumn> ca;
    std::vector<SpineColumn> cb;
    std::vector<BitWord> ra;
    std::vector<BitWord> rb;
    for (const auto& e : A) ca.push_back(spine_column(e, k));
    for (const auto& e : B) cb.push_back(spine_column(e, k));
    for (const auto& c : ca) ra.push_back(c.ran);
    for (const auto& c : cb) rb.push_back(c.ran);
    if (!pairwise_incomparable(ra) || !pairwise_incomparable(rb)) continue;
    auto fa = complement(ra);
    auto fb = complement(rb);
    // equalize by splitting free leaves of the smaller side
    while (fa.size() != fb.size()) {
      auto& small = fa.size() < fb.size() ? fa : fb;
      if (small.empty()) break;
      auto leaf = small.front();
      small.erase(small.begin());
      small.push_back(leaf.child(0));
      small.push_back(leaf.child(1));
      std::sort(small.begin(), small.end());
    }
    if (fa.size() != fb.size()) continue;
    std::vector<Column> cols;
    for (std::size_t i = 0; i < A.size(); ++i) {
      cols.push_back({{0, rb[i]}, G.mul(G.inv(cb[i].label), ca[i].label), {0, ra[i]}});
    }
    for (std::size_t i = 0; i < fa.size(); ++i) {
      cols.push_back({{0, fb[i]}, G.identity(), {0, fa[i]}});
    }
    Element gamma(ctx, LabeledDiagram(ctx->phi(), 1, 1, std::move(cols)));
    for (std::size_t i = 0; i < A.size(); ++i) {
      if (germ_compare(B[i] * gamma, A[i]).verdict != Verdict::yes) {
        throw Error("internal error: transitivity witness failed verification");
      }
    }
    return gamma;
  }
  throw PreconditionError("tuples not certified generic within budget");
}

}  // namespace vphi
