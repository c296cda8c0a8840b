#include <catch_amalgamated.hpp>

#include "support.hpp"
#include "vphi/splinter.hpp"

using namespace vphi;
using namespace vtest;

namespace {

// natural action of S3 on {0, 1, 2}
SplinterModel natural(const ContextPtr& ctx) {
  const Group& G = ctx->group();
  std::vector<std::vector<std::size_t>> table(3);
  for (std::size_t x = 0; x < 3; ++x)
    for (const auto& g : G.elements()) table[x].push_back(static_cast<std::size_t>(g.data()[x]));
  return SplinterModel(ctx, table);
}

// direct evaluation from the columns, independent of SplinterModel
SplinterPoint by_columns(const Element& a, const SplinterPoint& p,
                         const std::function<std::size_t(std::size_t, const GroupElement&)>& dot) {
  for (const auto& c : a.columns()) {
    if (c.dom.word.is_prefix_of(p.w)) {
      auto tail = p.w.suffix(c.dom.word.size());
      return {dot(p.x, c.label), c.ran.word + tail};
    }
  }
  throw std::logic_error("no column");
}

}  // namespace

TEST_CASE("a_g on the splinter model") {
  auto s3 = make_symmetric(3);
  auto ctx = make_context(s3, Rule::diagonal);
  auto model = natural(ctx);
  auto g = s3->parse("(1,2,3)");
  auto ag = a_g(ctx, g);
  CHECK(a_g(ctx, s3->identity()).is_identity());
  CHECK(a_g(ctx, g) * a_g(ctx, s3->parse("(1,2)")) == a_g(ctx, s3->mul(g, s3->parse("(1,2)"))));

  std::mt19937_64 rng(1);
  for (int i = 0; i < 100; ++i) {
    std::size_t x = rng() % 3;
    auto tail = random_point(rng).take(5);
    auto in01 = model.act(ag, {x, BitWord("01") + tail});
    CHECK(in01 == SplinterPoint{static_cast<std::size_t>(g.data()[x]), BitWord("01") + tail});
    CHECK(model.act(ag, {x, BitWord("00") + tail}) == SplinterPoint{x, BitWord("00") + tail});
    CHECK(model.act(ag, {x, BitWord("1") + tail}) == SplinterPoint{x, BitWord("1") + tail});
    CHECK(model.act(Element::identity(ctx), {x, tail}) == SplinterPoint{x, tail});
  }
  CHECK_THROWS_WITH(model.act(ag, {0, BitWord("0")}), Catch::Matchers::ContainsSubstring("insufficient depth"));
}

TEST_CASE("regular model") {
  auto s3 = make_symmetric(3);
  auto ctx = make_context(s3, Rule::diagonal);
  SplinterModel model(ctx);
  CHECK(model.points() == 6);
  auto dot = [&](std::size_t x, const GroupElement& g) {
    return s3->index_of(s3->mul(s3->element_at(x), g));
  };
  std::mt19937_64 rng(6);
  for (int i = 0; i < 50; ++i) {
    auto a = random_element(ctx, rng);
    for (int k = 0; k < 20; ++k) {
      SplinterPoint p{rng() % 6, random_point(rng).take(10)};
      CHECK(model.act(a, p) == by_columns(a, p, dot));
    }
  }
}

TEST_CASE("homomorphism check") {
  auto s3 = make_symmetric(3);
  auto ctx = make_context(s3, Rule::diagonal);
  auto model = natural(ctx);
  std::mt19937_64 rng(3);
  auto e = Element::identity(ctx);
  CHECK(model.check_hom(e, e, 20, 6, rng));
  for (int i = 0; i < 50; ++i) {
    auto a = random_element(ctx, rng);
    auto b = random_element(ctx, rng);
    CHECK(model.check_hom(a, b, 50, 10, rng));
  }
  // perturb one label of ab
  int caught = 0;
  for (int i = 0; i < 20; ++i) {
    auto a = random_element(ctx, rng);
    auto b = random_element(ctx, rng);
    auto cols = (a * b).columns();
    cols[rng() % cols.size()].label = s3->mul(cols[0].label, s3->parse("(1,2)"));
    auto bad = Element::from_columns(ctx, 1, 1, cols);
    if (bad == a * b) continue;
    CHECK_FALSE(model.check_hom(a, b, bad, 400, 10, rng));
    ++caught;
  }
  CHECK(caught > 10);
}

TEST_CASE("faithfulness") {
  auto s3 = make_symmetric(3);
  auto ctx = make_context(s3, Rule::diagonal);
  auto model = natural(ctx);
  for (std::size_t d = 0; d < 6; ++d) CHECK(model.check_faithful(Element::identity(ctx), d));
  CHECK_FALSE(model.check_faithful(iota(ctx, s3->parse("(1,2)")), 3));
  std::vector<BitWord> dom{BitWord("0"), BitWord("1")};
  std::vector<BitWord> ran{BitWord("1"), BitWord("0")};
  CHECK_FALSE(model.check_faithful(permutation_element(ctx, dom, ran), 2));

  std::mt19937_64 rng(12);
  for (int i = 0; i < 100; ++i) {
    auto a = i % 3 == 0 ? random_element(ctx, rng, 4) * random_element(ctx, rng, 4).inverse()
                        : random_element(ctx, rng, 5, i % 2 == 0, 4);
    std::size_t depth = 0;
    for (const auto& c : a.columns()) depth = std::max({depth, c.dom.word.size(), c.ran.word.size()});
    CHECK(model.check_faithful(a, depth) == a.is_identity());
  }
}

TEST_CASE("model validation") {
  auto z2 = make_cyclic(2);
  auto ctx = make_context(z2, Rule::diagonal);
  // trivial action is not faithful
  CHECK_THROWS_AS(SplinterModel(ctx, {{0, 0}, {1, 1}}), Error);
  CHECK_NOTHROW(SplinterModel(ctx, {{0, 1}, {1, 0}}));
  CHECK_THROWS_AS(SplinterModel(ctx, {{0, 2}, {1, 0}}), Error);
  CHECK_THROWS_AS(SplinterModel(make_context(z2, Rule::right)), PreconditionError);
}
