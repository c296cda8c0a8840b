#include "vphi/element.hpp"

#include <unordered_map>

#include "vphi/error.hpp"

namespace vphi {

ContextPtr Context::make(RecursionPtr phi) {
  std::shared_ptr<Context> ctx(new Context());
  ctx->source_ = phi;
  ctx->orders_ = {};
  if (phi->injective()) {
    ctx->phi_ = phi;
  } else {
    auto inj = injectivize(phi);
    ctx->phi_ = inj.recursion;
    ctx->projection_ = inj.projection;
    ctx->steps_ = inj.steps;
    ctx->orders_ = inj.orders;
    const Group& Q = *inj.quotient;
    ctx->reps_.assign(*Q.order(), GroupElement());
    std::vector<bool> done(*Q.order(), false);
    for (const auto& g : phi->group()->elements()) {
      auto i = Q.index_of((*inj.projection)(g));
      if (!done[i]) {
        done[i] = true;
        ctx->reps_[i] = g;
      }
    }
  }
  return ctx;
}

GroupElement Context::project(const GroupElement& g) const {
  if (!projection_) {
    phi_->group()->require(g);
    return g;
  }
  return (*projection_)(g);
}

std::string Context::format(const GroupElement& g) const {
  if (!projection_) return group().format(g);
  return source_->group()->format(reps_[group().index_of(g)]);
}

GroupElement Context::label(std::string_view token) const {
  return project(source_->group()->parse(token));
}

// ---------------------------------------------------------------------------

Element::Element(ContextPtr ctx, const LabeledDiagram& d) : Element(ctx, d.reduce(), true) {
  if (d.phi() != ctx_->phi()) throw PreconditionError("context mismatch");
}

Element::Element(ContextPtr ctx, LabeledDiagram d, bool) : ctx_(std::move(ctx)), d_(std::move(d)) {}

Element Element::from_columns(ContextPtr ctx, std::uint32_t m, std::uint32_t n,
                              std::vector<Column> source_columns) {
  for (auto& c : source_columns) c.label = ctx->project(c.label);
  LabeledDiagram d(ctx->phi(), m, n, std::move(source_columns));
  return Element(std::move(ctx), d);
}

Element Element::identity(ContextPtr ctx, std::uint32_t roots) {
  auto d = LabeledDiagram::identity(ctx->phi(), roots);
  return Element(std::move(ctx), std::move(d), true);
}

Element Element::operator*(const Element& b) const {
  if (ctx_ != b.ctx_) throw PreconditionError("context mismatch");
  return Element(ctx_, compose(d_, b.d_).reduce(), true);
}

Element Element::inverse() const { return Element(ctx_, d_.inverse().reduce(), true); }

Element Element::pow(std::int64_t k) const {
  if (m() != n()) throw PreconditionError("powers need m = n");
  Element base = k < 0 ? inverse() : *this;
  auto e = static_cast<std::uint64_t>(k < 0 ? -k : k);
  Element result = identity(ctx_, m());
  while (e) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e) base = base * base;
  }
  return result;
}

bool Element::is_identity() const {
  if (m() != n() || d_.size() != m()) return false;
  const Group& g = ctx_->group();
  for (const auto& c : d_.columns()) {
    if (!c.dom.word.empty() || c.dom != c.ran || !g.is_identity(c.label)) return false;
  }
  return true;
}

Element commutator(const Element& p, const Element& q) {
  return p * q * p.inverse() * q.inverse();
}

Element conjugate(const Element& x, const Element& y) { return y.inverse() * x * y; }

// ---------------------------------------------------------------------------

namespace {

const Column& column_at(const Element& a, const EventuallyPeriodicWord& w) {
  if (a.m() != 1) throw PreconditionError("point actions need a tree element");
  for (const auto& c : a.columns()) {
    const auto& u = c.dom.word;
    bool match = true;
    for (std::size_t i = 0; i < u.size() && match; ++i) match = u[i] == w.letter(i);
    if (match) return c;
  }
  throw DiagramError("no domain column contains the point");
}

}  // namespace

BitWord act_point(const Element& a, const EventuallyPeriodicWord& w, std::size_t depth) {
  const Column& c = column_at(a, w);
  const auto& phi = *a.context()->phi();
  std::string out = c.ran.word.bits();
  GroupElement g = c.label;
  for (std::size_t i = c.dom.word.size(); out.size() < depth; ++i) {
    auto im = phi.apply(g);
    int x = w.letter(i);
    out.push_back((x ^ (im.swap ? 1 : 0)) ? '1' : '0');
    g = im.slot(x);
  }
  out.resize(depth);
  return BitWord(std::move(out));
}

std::optional<EventuallyPeriodicWord> act_exact(const Element& a,
                                                const EventuallyPeriodicWord& w,
                                                std::size_t budget) {
  const Column& c = column_at(a, w);
  const auto& phi = *a.context()->phi();
  auto tail = w.drop(c.dom.word.size());
  GroupElement g = c.label;
  auto run = [&](const BitWord& in) {
    std::string out;
    for (std::size_t i = 0; i < in.size(); ++i) {
      auto im = phi.apply(g);
      out.push_back((in[i] ^ (im.swap ? 1 : 0)) ? '1' : '0');
      g = im.slot(in[i]);
    }
    return out;
  };
  std::string head = c.ran.word.bits() + run(tail.prefix());
  std::unordered_map<GroupElement, std::size_t> seen;
  std::vector<std::string> blocks;
  for (std::size_t k = 0; k <= budget; ++k) {
    auto [it, fresh] = seen.emplace(g, k);
    if (!fresh) {
      std::string pre = head;
      std::string per;
      for (std::size_t j = 0; j < it->second; ++j) pre += blocks[j];
      for (std::size_t j = it->second; j < blocks.size(); ++j) per += blocks[j];
      return EventuallyPeriodicWord(BitWord(std::move(pre)), BitWord(std::move(per)));
    }
    blocks.push_back(run(tail.period()));
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

Element iota(const ContextPtr& ctx, const GroupElement& g) {
  const auto e = ctx->group().identity();
  LabeledDiagram d(ctx->phi(), 1, 1,
                   {{{0, BitWord("0")}, g, {0, BitWord("0")}},
                    {{0, BitWord("1")}, e, {0, BitWord("1")}}});
  return Element(ctx, d);
}

Element lambda(const ContextPtr& ctx, const BitWord& u, const GroupElement& g) {
  const auto e = ctx->group().identity();
  std::vector<Column> cols{{{0, u}, g, {0, u}}};
  for (std::size_t i = 0; i < u.size(); ++i) {
    Address s{0, u.prefix(i).child(1 - u[i])};
    cols.push_back({s, e, s});
  }
  return Element(ctx, LabeledDiagram(ctx->phi(), 1, 1, std::move(cols)));
}

Element a_g(const ContextPtr& ctx, const GroupElement& g) {
  if (ctx->rule() != Rule::diagonal) {
    throw PreconditionError("a_g is defined for the diagonal recursion");
  }
  const auto e = ctx->group().identity();
  LabeledDiagram d(ctx->phi(), 1, 1,
                   {{{0, BitWord("00")}, e, {0, BitWord("00")}},
                    {{0, BitWord("01")}, g, {0, BitWord("01")}},
                    {{0, BitWord("1")}, e, {0, BitWord("1")}}});
  return Element(ctx, d);
}

namespace {

void require_diagonal(const Element& a, const char* what) {
  if (a.context()->rule() != Rule::diagonal) {
    throw PreconditionError(std::string(what) + " defined only for the diagonal recursion");
  }
}

}  // namespace

GroupElement rho(const Element& a) {
  require_diagonal(a, "rho");
  return a.columns().front().label;
}

Element v_strip(const Element& a) {
  require_diagonal(a, "v_strip");
  auto cols = a.columns();
  for (auto& c : cols) c.label = a.context()->group().identity();
  return Element(a.context(), LabeledDiagram(a.context()->phi(), a.m(), a.n(), std::move(cols)));
}

Element v_functor(const FiniteHomomorphism& f, const Element& a, const ContextPtr& target) {
  require_diagonal(a, "v_functor");
  if (target->rule() != Rule::diagonal) {
    throw PreconditionError("v_functor needs a diagonal target context");
  }
  if (f.source() != a.context()->group_ptr() || f.target() != target->group_ptr()) {
    throw PreconditionError("homomorphism does not match the contexts");
  }
  auto cols = a.columns();
  for (auto& c : cols) c.label = f(c.label);
  return Element(target, LabeledDiagram(target->phi(), a.m(), a.n(), std::move(cols)));
}

bool in_F(const Element& a) {
  auto s = a.diagram().sigma();
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i] != i) return false;
  return true;
}

bool in_T(const Element& a) {
  auto s = a.diagram().sigma();
  const std::size_t n = s.size();
  for (std::size_t i = 0; i < n; ++i)
    if (s[i] != (s[0] + i) % n) return false;
  return true;
}

Element permutation_element(const ContextPtr& ctx, const std::vector<BitWord>& dom,
                            const std::vector<BitWord>& ran) {
  if (dom.size() != ran.size()) throw DiagramError("leaf counts differ");
  std::vector<Column> cols;
  for (std::size_t i = 0; i < dom.size(); ++i) {
    cols.push_back({{0, dom[i]}, ctx->group().identity(), {0, ran[i]}});
  }
  return Element(ctx, LabeledDiagram(ctx->phi(), 1, 1, std::move(cols)));
}

std::vector<Element> generation_word(const Element& a) {
  require_diagonal(a, "generation_word");
  if (a.m() != 1 || a.n() != 1) throw PreconditionError("generation_word needs a tree element");
  const auto& ctx = a.context();
  const Group& G = ctx->group();
  std::vector<Element> out;
  // v maps the 0-cone onto the u-cone: {0,10,...,1^k} -> {u, siblings of u}
  auto mover = [&](const BitWord& u) {
    std::vector<BitWord> dom{BitWord("0")};
    std::vector<BitWord> ran{u};
    std::string ones;
    for (std::size_t i = 0; i < u.size(); ++i) {
      ran.push_back(u.prefix(i).child(1 - u[i]));
      ones.push_back('1');
      dom.push_back(i + 1 < u.size() ? BitWord(ones + "0") : BitWord(ones));
    }
    return permutation_element(ctx, dom, ran);
  };
  auto emit_lambda = [&](const BitWord& u, const GroupElement& g) {
    if (u == BitWord("0")) {
      out.push_back(iota(ctx, g));
      return;
    }
    auto v = mover(u);
    out.push_back(v.inverse());
    out.push_back(iota(ctx, g));
    out.push_back(v);
  };
  for (const auto& c : a.columns()) {
    if (G.is_identity(c.label)) continue;
    if (c.dom.word.empty()) {
      emit_lambda(BitWord("0"), c.label);
      emit_lambda(BitWord("1"), c.label);
    } else {
      emit_lambda(c.dom.word, c.label);
    }
  }
  out.push_back(v_strip(a));
  return out;
}

}  // namespace vphi
