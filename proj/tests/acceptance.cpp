// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "support.hpp"
#include "vphi/complex.hpp"
#include "vphi/germs.hpp"
#include "vphi/perfection.hpp"
#include "vphi/splinter.hpp"

using namespace vphi;
using namespace vtest;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

// records the first failure only
struct Check {
  Outcome& out;
  void operator()(bool cond, const std::string& what) const {
    if (!cond && out.ok) {
      out.ok = false;
      out.detail = what;
    }
  }
};

ContextPtr adding_context() { return make_context(make_cyclic(0), Rule::adding); }

// ---------------------------------------------------------------------------

Outcome group_axioms() {
  Outcome out;
  Check check{out};
  std::mt19937_64 rng(101);
  std::vector<std::pair<std::string, ContextPtr>> contexts{
      {"Z/2 diagonal", make_context(make_cyclic(2), Rule::diagonal)},
      {"S3 diagonal", make_context(make_symmetric(3), Rule::diagonal)},
      {"Z/3 right", make_context(make_cyclic(3), Rule::right)},
      {"Z adding", adding_context()}};
  for (const auto& [name, ctx] : contexts) {
    const Element e = Element::identity(ctx);
    for (int i = 0; i < 1000 && out.ok; ++i) {
      auto a = random_element(ctx, rng, 6);
      auto b = random_element(ctx, rng, 6);
      auto c = random_element(ctx, rng, 6);
      check((a * b) * c == a * (b * c), name + ": associativity");
      check(a * a.inverse() == e && a.inverse() * a == e, name + ": inverse");
      check(a * e == a && e * a == a, name + ": identity");
      check((a * a.inverse()).is_identity(), name + ": is_identity of a a^-1");
    }
  }
  return out;
}

// every terminal diagram reachable by simple reductions in any order
void terminal_forms(const LabeledDiagram& d, std::set<std::string>& seen,
                    std::set<std::string>& terminals) {
  if (!seen.insert(d.str()).second) return;
  bool any = false;
  const auto& cols = d.columns();
  for (std::size_t i = 0; i + 1 < cols.size(); ++i) {
    const auto& x = cols[i].dom;
    const auto& y = cols[i + 1].dom;
    if (x.root != y.root || x.word.empty() || x.word.size() != y.word.size()) continue;
    if (x.word.back() != 0 || y.word.parent() != x.word.parent() || y.word.back() != 1) continue;
    if (auto r = d.simple_reduce({x.root, x.word.parent()})) {
      any = true;
      terminal_forms(*r, seen, terminals);
    }
  }
  if (!any) terminals.insert(d.str());
}

Outcome confluence() {
  Outcome out;
  Check check{out};
  std::mt19937_64 rng(202);
  std::vector<ContextPtr> contexts{make_context(make_symmetric(3), Rule::diagonal),
                                   make_context(make_cyclic(3), Rule::right),
                                   make_context(make_cyclic(2), Rule::diagonal),
                                   adding_context()};
  for (int i = 0; i < 500 && out.ok; ++i) {
    const auto& ctx = contexts[i % contexts.size()];
    auto k = std::uniform_int_distribution<std::size_t>(1, 8)(rng);
    std::vector<Column> cols = random_columns(ctx, rng, 1, 1, k);
    for (auto& c : cols) c.label = ctx->project(c.label);
    LabeledDiagram d(ctx->phi(), 1, 1, cols);
    LabeledDiagram x = d;
    auto steps = std::uniform_int_distribution<int>(0, 10)(rng);
    for (int s = 0; s < steps; ++s) {
      x = x.simple_expand(std::uniform_int_distribution<std::size_t>(0, x.size() - 1)(rng));
    }
    check(x.reduce() == d.reduce(), "expanded diagram reduces differently: " + d.str());
  }
  for (int i = 0; i < 100 && out.ok; ++i) {
    const auto& ctx = contexts[i % contexts.size()];
    auto k = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
    std::vector<Column> cols = random_columns(ctx, rng, 1, 1, k);
    for (auto& c : cols) c.label = ctx->project(c.label);
    LabeledDiagram d(ctx->phi(), 1, 1, cols);
    while (d.size() < 5 && std::uniform_int_distribution<int>(0, 4)(rng) != 0) {
      d = d.simple_expand(std::uniform_int_distribution<std::size_t>(0, d.size() - 1)(rng));
    }
    std::set<std::string> seen;
    std::set<std::string> terminals;
    terminal_forms(d, seen, terminals);
    check(terminals.size() == 1 && *terminals.begin() == d.reduce().str(),
          "reduction orders disagree on " + d.str());
  }
  return out;
}

Outcome action_consistency() {
  Outcome out;
  Check check{out};
  std::mt19937_64 rng(303);
  std::vector<ContextPtr> contexts{make_context(make_symmetric(3), Rule::diagonal),
                                   make_context(make_cyclic(3), Rule::right),
                                   make_context(make_cyclic(2), Rule::left), adding_context()};
  for (int i = 0; i < 200 && out.ok; ++i) {
    const auto& ctx = contexts[i % contexts.size()];
    auto a = random_element(ctx, rng, 6);
    auto b = random_element(ctx, rng, 6);
    auto ab = a * b;
    for (int j = 0; j < 20; ++j) {
      auto w = random_point(rng);
      auto wa = act_exact(a, w);
      check(wa.has_value(), "no exact image");
      if (!wa) break;
      check(act_point(ab, w, 12) == act_point(b, *wa, 12),
            "act(ab) != act(b) after act(a) at " + w.str());
    }
  }
  return out;
}

Outcome quasi_retract() {
  Outcome out;
  Check check{out};
  std::mt19937_64 rng(404);
  std::vector<ContextPtr> contexts{make_context(make_cyclic(2), Rule::diagonal),
                                   make_context(make_cyclic(3), Rule::diagonal),
                                   make_context(make_symmetric(3), Rule::diagonal)};
  for (const auto& ctx : contexts) {
    for (const auto& g : ctx->group().elements()) check(rho(iota(ctx, g)) == g, "rho(iota(g)) != g");
  }
  for (int i = 0; i < 500 && out.ok; ++i) {
    const auto& ctx = contexts[i % contexts.size()];
    const Group& G = ctx->group();
    auto x = random_element(ctx, rng, 6);
    auto s = G.random(rng, 1);
    auto r = rho(x * iota(ctx, s));
    check(r == rho(x) || r == G.mul(rho(x), s), "rho(x iota(s)) not in {rho(x), rho(x)s}");
    auto y = random_element(ctx, rng, 6, false);
    check(rho(x * y) == rho(x), "rho(x y) != rho(x) for trivial-label y");
  }
  return out;
}

// Oracle for the injectivization: expand the diagram over the original
// recursion far enough for every kernel element to die, then look for an
// identity pattern.
bool identity_by_expansion(const ContextPtr& ctx, const std::vector<Column>& cols) {
  LabeledDiagram d(ctx->source(), 1, 1, cols);
  auto deep = d.expand_uniform(d.depth() + ctx->tower_steps());
  const Group& G = *ctx->source()->group();
  for (const auto& c : deep.columns()) {
    if (!(c.dom == c.ran) || !G.is_identity(c.label)) return false;
  }
  return true;
}

Outcome injectivization() {
  Outcome out;
  Check check{out};
  std::mt19937_64 rng(505);
  auto z2 = make_cyclic(2);
  auto vanishing = WreathRecursion::vanishing(z2);
  auto i1 = injectivize(vanishing);
  check(i1.steps == 1 && *i1.quotient->order() == 1, "vanishing Z/2: expected 1 step to 1");
  auto z4 = make_cyclic(4);
  std::vector<WreathImage> table;
  for (std::int64_t g = 0; g < 4; ++g) {
    auto h = GroupElement::scalar((2 * g) % 4);
    table.push_back({h, h, false});
  }
  auto custom = WreathRecursion::custom(z4, table);
  auto i2 = injectivize(custom);
  check(i2.steps == 2 && *i2.quotient->order() == 1 && i2.orders == std::vector<std::size_t>{4, 2, 1},
        "custom Z/4: expected tower 4 -> 2 -> 1");

  for (const auto& phi : {vanishing, custom}) {
    auto ctx = Context::make(phi);
    for (int i = 0; i < 200 && out.ok; ++i) {
      auto k = std::uniform_int_distribution<std::size_t>(1, 6)(rng);
      auto cols = random_columns(ctx, rng, 1, 1, k);
      if (i % 2 == 0) {
        for (auto& c : cols) c.ran = c.dom;
      }
      bool expected = identity_by_expansion(ctx, cols);
      bool got = Element::from_columns(ctx, 1, 1, cols).is_identity();
      check(expected == got, "is_identity disagrees with the expanded source diagram");
    }
  }
  return out;
}

Outcome certificates() {
  Outcome out;
  Check check{out};
  std::mt19937_64 rng(606);
  auto ctx = make_context(make_symmetric(3), Rule::diagonal);
  const Group& G = ctx->group();
  for (int i = 0; i < 200 && out.ok; ++i) {
    auto k = std::uniform_int_distribution<std::size_t>(1, 8)(rng);
    auto leaves = random_tree(rng, k, 3);
    std::vector<Column> cols;
    for (std::size_t j = 0; j < leaves.size(); ++j) {
      cols.push_back({{0, leaves[j]}, j == 0 ? G.identity() : G.random(rng, 1), {0, leaves[j]}});
    }
    auto v = Element::from_columns(ctx, 1, 1, cols);
    auto [p, q] = commutator_witness(v);
    check(commutator(p, q) == v, "v != [p, q] for " + v.str());
  }
  for (int i = 0; i < 200 && out.ok; ++i) {
    auto a = random_element(ctx, rng, 8);
    auto c = decompose(a);
    check(c.factors.size() <= 2, "more than two commutators");
    check(c.tail.trivial_labels(), "tail has labels");
    check(c.target == a && c.product() == a, "certificate does not multiply out to a");
  }
  return out;
}

Outcome splinter() {
  Outcome out;
  Check check{out};
  std::mt19937_64 rng(707);
  auto ctx = make_context(make_symmetric(3), Rule::diagonal);
  const Group& G = ctx->group();
  // S3 on {0,1,2} and S3 on itself
  std::vector<std::vector<std::size_t>> natural(3);
  for (std::size_t x = 0; x < 3; ++x)
    for (std::size_t gi = 0; gi < *G.order(); ++gi)
      natural[x].push_back(static_cast<std::size_t>(G.element_at(gi).data()[x]));
  SplinterModel models[] = {SplinterModel(ctx, natural), SplinterModel(ctx)};
  for (int i = 0; i < 100 && out.ok; ++i) {
    auto a = random_element(ctx, rng, 6, true, 3);
    auto b = random_element(ctx, rng, 6, true, 3);
    check(models[i % 2].check_hom(a, b, 50, 10, rng), "F_ab != F_b after F_a");
  }
  for (int i = 0; i < 200 && out.ok; ++i) {
    Element a = Element::identity(ctx);
    switch (i % 4) {
      case 0: a = random_element(ctx, rng, 6, true, 3); break;
      case 1: a = random_element(ctx, rng, 6, false, 3); break;
      case 2: a = iota(ctx, G.random(rng, 1)); break;
      default: {
        auto x = random_element(ctx, rng, 5, true, 3);
        auto y = random_element(ctx, rng, 5, true, 3);
        a = x * y * x.inverse() * y.inverse();
      }
    }
    for (const auto& m : models) {
      check(m.check_faithful(a, 10) == a.is_identity(), "check_faithful disagrees: " + a.str());
    }
  }
  return out;
}

Outcome matching_connectivity() {
  Outcome out;
  Check check{out};
  for (std::size_t n = 4; n <= 9; ++n) {
    auto r = connectivity_check(matching_complex(n), n);
    check(r.ok, "M_" + std::to_string(n) + " has homology below the bound");
  }
  auto h = homology(matching_complex(4), 0);
  check(h.betti.size() == 1 && h.betti[0] == 2 && h.torsion[0].empty(), "H~_0(M_4) != Z^2");
  return out;
}

Outcome descending_links() {
  Outcome out;
  Check check{out};
  std::vector<std::pair<std::string, ContextPtr>> contexts{
      {"(1,-)", make_context(make_trivial(), Rule::diagonal)},
      {"(Z/2,diag)", make_context(make_cyclic(2), Rule::diagonal)},
      {"(Z/3,diag)", make_context(make_cyclic(3), Rule::diagonal)},
      {"(Z/2,right)", make_context(make_cyclic(2), Rule::right)}};
  for (const auto& [name, ctx] : contexts) {
    for (std::size_t n = 2; n <= 5; ++n) {
      const std::string at = name + " n=" + std::to_string(n);
      auto d = dlink_complex(n, ctx);
      check(fiber_join(d) == d.complex, at + ": brute force != fiber join");
      check(check_complete_join(d).ok(), at + ": complete join fails");
      check(connectivity_check(d.complex, n).ok, at + ": homology below the bound");
      if (ctx->group().is_trivial()) {
        check(d.complex.vertex_count() == n * (n - 1), at + ": vertex count != n(n-1)");
      }
    }
  }
  return out;
}

Outcome labeled_support() {
  Outcome out;
  Check check{out};
  std::mt19937_64 rng(1010);
  for (auto g : {make_cyclic(3), make_symmetric(3)}) {
    auto diag = make_context(g, Rule::diagonal);
    auto right = make_context(g, Rule::right);
    for (std::size_t len = 0; len <= 4; ++len) {
      for (const auto& u : all_words(len)) {
        GroupElement x;
        do x = g->random(rng, 1); while (g->is_identity(x));
        auto ld = lambda(diag, u, x);
        auto lr = lambda(right, u, x);
        for (std::size_t d = len; d <= len + 4; ++d) {
          std::vector<BitWord> cone;
          for (const auto& w : all_words(d - len)) cone.push_back(u + w);
          check(lsupp_approx(ld, d).included == cone, "diagonal support of lambda(" + u.str() + ")");
          std::vector<BitWord> spine{u + BitWord(std::string(d - len, '1'))};
          check(lsupp_approx(lr, d).included == spine, "right-rule support of lambda(" + u.str() + ")");
        }
      }
    }
  }
  return out;
}

// Element acting like `inner` inside the cone of u and trivially elsewhere.
Element localize(const ContextPtr& ctx, const BitWord& u, const Element& inner) {
  std::vector<Column> cols;
  for (const auto& c : inner.columns()) {
    cols.push_back({{0, u + c.dom.word}, c.label, {0, u + c.ran.word}});
  }
  const auto e = ctx->group().identity();
  for (std::size_t i = 0; i < u.size(); ++i) {
    Address s{0, u.prefix(i).child(1 - u[i])};
    cols.push_back({s, e, s});
  }
  return Element(ctx, LabeledDiagram(ctx->phi(), 1, 1, std::move(cols)));
}

Outcome disjoint_commutation() {
  Outcome out;
  Check check{out};
  std::mt19937_64 rng(1111);
  std::vector<ContextPtr> contexts{make_context(make_symmetric(3), Rule::diagonal),
                                   make_context(make_cyclic(3), Rule::right), adding_context()};
  for (int i = 0; i < 200 && out.ok; ++i) {
    const auto& ctx = contexts[i % contexts.size()];
    // two incomparable words: a common stem, then 0 and 1, then random tails
    auto stem = random_tree(rng, std::uniform_int_distribution<std::size_t>(1, 4)(rng), 2);
    BitWord base = stem[std::uniform_int_distribution<std::size_t>(0, stem.size() - 1)(rng)];
    auto tail = [&] {
      std::string s(std::uniform_int_distribution<std::size_t>(0, 2)(rng), '0');
      for (auto& c : s) c = std::uniform_int_distribution<int>(0, 1)(rng) ? '1' : '0';
      return BitWord(s);
    };
    BitWord u = base.child(0) + tail();
    BitWord v = base.child(1) + tail();
    auto a = localize(ctx, u, random_element(ctx, rng, 5, true, 3));
    auto b = localize(ctx, v, random_element(ctx, rng, 5, true, 3));
    auto depth = std::max(a.diagram().depth(), b.diagram().depth());
    try {
      check(disjoint_supports_commute(a, b, depth), "certified-disjoint pair does not commute");
    } catch (const PreconditionError& e) {
      check(false, std::string("disjointness not certified: ") + e.what());
    }
  }
  return out;
}

Outcome transitivity() {
  Outcome out;
  Check check{out};
  std::mt19937_64 rng(1212);
  std::vector<ContextPtr> contexts{make_context(make_symmetric(3), Rule::diagonal),
                                   make_context(make_cyclic(2), Rule::diagonal)};
  auto generic_tuple = [&](const ContextPtr& ctx) {
    while (true) {
      std::vector<Element> t;
      for (int i = 0; i < 3; ++i) t.push_back(random_element(ctx, rng, 5, true, 3));
      bool ok = true;
      for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) ok = ok && perp(t[i], t[j]).verdict == Verdict::yes;
      if (ok) return t;
    }
  };
  for (int i = 0; i < 100 && out.ok; ++i) {
    const auto& ctx = contexts[i % contexts.size()];
    auto A = generic_tuple(ctx);
    auto B = generic_tuple(ctx);
    try {
      auto g = transitivity_witness(A, B);
      for (int k = 0; k < 3; ++k) {
        check(germ_compare(B[k] * g, A[k]).verdict == Verdict::yes, "B_i gamma not equivalent to A_i");
      }
    } catch (const Error& e) {
      check(false, std::string("no witness: ") + e.what());
    }
  }
  return out;
}

Outcome odometer() {
  Outcome out;
  Check check{out};
  auto ctx = adding_context();
  auto t = lambda(ctx, BitWord(), ctx->label("t"));
  auto tk = Element::identity(ctx);
  for (std::size_t k = 0; k <= 1024; ++k) {
    std::string expect(10, '0');
    for (std::size_t i = 0; i < 10; ++i) expect[i] = ((k % 1024) >> i) & 1U ? '1' : '0';
    check(act_point(tk, EventuallyPeriodicWord::zeros(), 10).bits() == expect,
          "t^" + std::to_string(k) + " image of 0^w");
    tk = tk * t;
  }
  return out;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit;  // seconds, 0 = none
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {1, "group axioms, 1000 triples in four contexts", 60, group_axioms},
      {2, "canonical-form confluence", 0, confluence},
      {3, "action/diagram consistency", 0, action_consistency},
      {4, "quasi-retract identities for rho", 0, quasi_retract},
      {5, "injectivization towers and identity agreement", 0, injectivization},
      {6, "commutator certificates", 120, certificates},
      {7, "splinter oracle", 0, splinter},
      {8, "matching-complex connectivity", 300, matching_connectivity},
      {9, "descending links", 600, descending_links},
      {10, "labeled support examples", 0, labeled_support},
      {11, "disjoint-support commutation", 0, disjoint_commutation},
      {12, "germ transitivity", 0, transitivity},
      {13, "adding-machine odometer", 0, odometer},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (o.ok && c.limit > 0 && secs > c.limit) {
      o = {false, "over the time limit of " + std::to_string(static_cast<int>(c.limit)) + " s"};
    }
    char line[256];
    std::snprintf(line, sizeof line, "%s AC%02d %s (%.2f s)", o.ok ? "PASS" : "FAIL", c.id, c.name,
                  secs);
    std::cout << line;
    if (!o.ok) std::cout << ": " << o.detail;
    std::cout << std::endl;
    if (!o.ok) ++failed;
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : "all 13 criteria pass") << "\n";
  return failed ? 1 : 0;
}
