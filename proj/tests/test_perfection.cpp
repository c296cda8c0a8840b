#include <catch_amalgamated.hpp>

#include "support.hpp"
#include "vphi/perfection.hpp"

using namespace vphi;
using namespace vtest;

namespace {

// [T, ((1, g2, .., gn), id), T] on a random tree T
Element first_label_free(const ContextPtr& ctx, std::mt19937_64& rng, std::size_t leaves) {
  auto t = random_forest(rng, 1, leaves);
  const auto& G = *ctx->source()->group();
  std::vector<Column> cols;
  for (std::size_t i = 0; i < t.size(); ++i)
    cols.push_back({t[i], i == 0 ? G.identity() : G.random(rng, 3), t[i]});
  return Element::from_columns(ctx, 1, 1, cols);
}

}  // namespace

TEST_CASE("split3") {
  auto s3 = make_symmetric(3);
  auto ctx = make_context(s3, Rule::diagonal);
  auto e = Element::identity(ctx);
  auto id = split3(e);
  CHECK(id.r == e);
  CHECK(id.f == e);
  CHECK(id.v == e);
  auto g = s3->parse("(1,3)");
  auto io = split3(iota(ctx, g));
  CHECK(io.r == e);
  CHECK(io.f == iota(ctx, g));
  CHECK(io.v == e);

  std::mt19937_64 rng(2);
  for (int i = 0; i < 100; ++i) {
    auto a = random_element(ctx, rng, 8);
    auto s = split3(a);
    CHECK(s.r * s.f * s.v == a);
    CHECK(s.v.trivial_labels());
    CHECK(rho(s.r) == s3->identity());
    CHECK(rho(s.f) == rho(a));
    // a one-column input is split over the caret {0, 1}
    auto first = a.columns().size() == 1 ? BitWord("0") : a.columns()[0].dom.word;
    CHECK(s.f == lambda(ctx, first, rho(a)));
    CHECK(v_strip(s.r).is_identity());
  }
  CHECK_THROWS_AS(split3(Element::identity(make_context(s3, Rule::right))), PreconditionError);
}

TEST_CASE("swap conjugator") {
  auto z2 = make_cyclic(2);
  auto ctx = make_context(z2, Rule::diagonal);
  auto g = z2->parse("t");
  std::vector<BitWord> t{BitWord("0"), BitWord("1")};
  auto s = swap12_conjugator(ctx, t);
  CHECK((s * s).is_identity());
  CHECK(conjugate(iota(ctx, g), s) == lambda(ctx, BitWord("1"), g));
  CHECK(conjugate(Element::identity(ctx), s).is_identity());
  CHECK_THROWS_AS(swap12_conjugator(ctx, {BitWord("")}), PreconditionError);

  auto s3 = make_symmetric(3);
  auto c3 = make_context(s3, Rule::diagonal);
  std::vector<BitWord> t4{BitWord("00"), BitWord("01"), BitWord("10"), BitWord("11")};
  auto s4 = swap12_conjugator(c3, t4);
  auto h = s3->parse("(1,2,3)");
  CHECK(conjugate(lambda(c3, BitWord("00"), h), s4) == lambda(c3, BitWord("01"), h));
  CHECK((s4 * s4).is_identity());
}

TEST_CASE("commutator witness") {
  auto z2 = make_cyclic(2);
  auto c2 = make_context(z2, Rule::diagonal);
  auto e2 = Element::identity(c2);
  auto [p0, q0] = commutator_witness(e2);
  CHECK(p0.is_identity());
  CHECK(q0.is_identity());

  auto v2 = lambda(c2, BitWord("1"), z2->parse("t"));
  auto [p, q] = commutator_witness(v2);
  CHECK(commutator(p, q) == v2);

  auto s3 = make_symmetric(3);
  auto ctx = make_context(s3, Rule::diagonal);
  std::mt19937_64 rng(9);
  for (int i = 0; i < 60; ++i) {
    auto v = first_label_free(ctx, rng, 2 + i % 5);
    auto [pv, qv] = commutator_witness(v);
    CHECK(commutator(pv, qv) == v);

    // v a v^-1 a^-1 carries g_i on the right child of the i-th new caret
    auto parts = witness_parts(v);
    const auto& cols = v.columns();
    std::size_t n = cols.size();
    REQUIRE(parts.t_double.size() == 2 * n - 1);
    REQUIRE(parts.t_prime.size() == 2 * n - 1);
    std::vector<Column> want;
    for (std::size_t k = 0; k < parts.t_double.size(); ++k) {
      auto label = (k >= 2 && k % 2 == 0) ? cols[k / 2].label : s3->identity();
      Address leaf{0, parts.t_double[k]};
      want.push_back({leaf, label, leaf});
    }
    CHECK(commutator(v, parts.a) == Element::from_columns(ctx, 1, 1, want));
    CHECK(pv == parts.b * v * parts.b.inverse());
    CHECK(qv == parts.b * parts.a * parts.b.inverse());
  }
  CHECK_THROWS_AS(commutator_witness(iota(ctx, s3->parse("(1,2)"))), PreconditionError);
}

TEST_CASE("decompose") {
  auto s3 = make_symmetric(3);
  auto ctx = make_context(s3, Rule::diagonal);
  std::mt19937_64 rng(10);
  auto v = random_element(ctx, rng, 6, false);
  auto c0 = decompose(v);
  CHECK(c0.factors.empty());
  CHECK(c0.tail == v);
  CHECK(c0.verify());

  auto g = s3->parse("(1,2)");
  auto ci = decompose(iota(ctx, g));
  CHECK(ci.factors.size() == 2);
  CHECK(ci.tail.trivial_labels());
  CHECK(ci.verify());
  CHECK(ci.product() == iota(ctx, g));

  for (int i = 0; i < 100; ++i) {
    auto a = random_element(ctx, rng, 8);
    auto c = decompose(a);
    CHECK(c.factors.size() <= 2);
    CHECK(c.tail.trivial_labels());
    CHECK(c.target == a);
    // recompute the product independently of product()
    auto prod = Element::identity(ctx);
    for (const auto& [x, y] : c.factors) prod = prod * x * y * x.inverse() * y.inverse();
    CHECK(prod * c.tail == a);
  }

  auto bad = decompose(iota(ctx, g));
  bad.tail = iota(ctx, g);
  CHECK_FALSE(bad.verify());
}
