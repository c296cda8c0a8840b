#include "vphi/perfection.hpp"

#include "vphi/error.hpp"

namespace vphi {

namespace {

void require_diagonal_tree(const Element& a) {
  if (a.context()->rule() != Rule::diagonal) {
    throw PreconditionError("perfection certificates need the diagonal recursion");
  }
  if (a.m() != 1 || a.n() != 1) throw PreconditionError("tree element expected");
}

std::vector<BitWord> leaves_of(const LabeledDiagram& d) {
  std::vector<BitWord> out;
  for (const auto& c : d.columns()) out.push_back(c.dom.word);
  return out;
}

}  // namespace

Element CommutatorCertificate::product() const {
  Element out = Element::identity(target.context());
  for (const auto& [p, q] : factors) out = out * commutator(p, q);
  return out * tail;
}

bool CommutatorCertificate::verify() const {
  return tail.trivial_labels() && factors.size() <= 2 && product() == target;
}

Split3 split3(const Element& a) {
  require_diagonal_tree(a);
  const auto& ctx = a.context();
  const auto& phi = ctx->phi();
  const Group& G = ctx->group();
  LabeledDiagram d = a.diagram();
  if (d.size() == 1) d = d.simple_expand(0);
  std::vector<Column> r;
  std::vector<Column> f;
  std::vector<Column> v;
  for (std::size_t i = 0; i < d.size(); ++i) {
    const auto& c = d.columns()[i];
    r.push_back({c.dom, i == 0 ? G.identity() : c.label, c.dom});
    f.push_back({c.dom, i == 0 ? c.label : G.identity(), c.dom});
    v.push_back({c.dom, G.identity(), c.ran});
  }
  return {Element(ctx, LabeledDiagram(phi, 1, 1, std::move(r))),
          Element(ctx, LabeledDiagram(phi, 1, 1, std::move(f))),
          Element(ctx, LabeledDiagram(phi, 1, 1, std::move(v)))};
}

Element swap12_conjugator(const ContextPtr& ctx, const std::vector<BitWord>& leaves) {
  if (leaves.size() < 2) throw PreconditionError("swap conjugator needs at least two leaves");
  auto ran = leaves;
  std::swap(ran[0], ran[1]);
  return permutation_element(ctx, leaves, ran);
}

WitnessParts witness_parts(const Element& v) {
  require_diagonal_tree(v);
  const Group& G = v.context()->group();
  for (const auto& c : v.columns()) {
    if (c.dom != c.ran) throw PreconditionError("witness input must fix every leaf");
  }
  if (!G.is_identity(v.columns().front().label)) {
    throw PreconditionError("witness input must have trivial first label");
  }
  auto u = leaves_of(v.diagram());
  const std::size_t n = u.size();

  WitnessParts out{v, v, {}, {}};
  // T': left comb of n-1 carets hanging at u_1
  out.t_prime.push_back(u[0] + BitWord(std::string(n - 1, '0')));
  for (std::size_t j = n - 1; j-- > 0;) {
    out.t_prime.push_back(u[0] + BitWord(std::string(j, '0') + "1"));
  }
  for (std::size_t i = 1; i < n; ++i) out.t_prime.push_back(u[i]);
  // T'': a caret on every leaf but the first
  out.t_double.push_back(u[0]);
  for (std::size_t i = 1; i < n; ++i) {
    out.t_double.push_back(u[i].child(0));
    out.t_double.push_back(u[i].child(1));
  }
  const std::size_t m = 2 * n - 1;

  // alpha (1-based): 2k-1 -> k, 2k -> n+k
  std::vector<BitWord> a_ran(m);
  for (std::size_t j = 1; j <= m; ++j) {
    std::size_t k = (j + 1) / 2;
    a_ran[j - 1] = out.t_prime[(j % 2 == 1 ? k : n + k) - 1];
  }
  out.a = permutation_element(v.context(), out.t_double, a_ran);

  // beta (1-based): k <= n -> k-th of {1,2,4,...,2n-2}; n+i-1 -> 2i-1
  std::vector<BitWord> b_ran(m);
  for (std::size_t k = 1; k <= n; ++k) {
    std::size_t pos = k == 1 ? 1 : 2 * (k - 1);
    b_ran[k - 1] = out.t_double[pos - 1];
  }
  for (std::size_t i = 2; i <= n; ++i) b_ran[n + i - 2] = out.t_double[2 * i - 2];
  out.b = permutation_element(v.context(), out.t_prime, b_ran);
  return out;
}

std::pair<Element, Element> commutator_witness(const Element& v) {
  auto parts = witness_parts(v);
  const Element binv = parts.b.inverse();
  return {parts.b * v * binv, parts.b * parts.a * binv};
}

CommutatorCertificate decompose(const Element& a) {
  require_diagonal_tree(a);
  const auto& ctx = a.context();
  if (a.trivial_labels()) return {{}, a, a};
  auto [r, f, v] = split3(a);
  CommutatorCertificate cert{{}, v, a};
  cert.factors.push_back(commutator_witness(r));
  if (f.is_identity()) {
    cert.factors.emplace_back(Element::identity(ctx), Element::identity(ctx));
  } else {
    auto c = swap12_conjugator(ctx, leaves_of(f.diagram()));
    auto [p, q] = commutator_witness(conjugate(f, c));
    // c is an involution, so f = c (c^-1 f c) c^-1
    cert.factors.emplace_back(c * p * c, c * q * c);
  }
  if (!cert.verify()) throw Error("internal error: commutator certificate does not verify");
  return cert;
}

}  // namespace vphi
