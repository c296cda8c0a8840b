#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>

#include "support.hpp"
#include "vphi/complex.hpp"
#include "vphi/expression.hpp"
#include "vphi/io.hpp"
#include "vphi/perfection.hpp"

using namespace vphi;
using namespace vtest;

TEST_CASE("context files") {
  auto c = context_from_json(Json::parse(R"({"group": {"kind": "cyclic", "n": 0}, "recursion": {"rule": "adding"}})"));
  CHECK(c->rule() == Rule::adding);
  CHECK_FALSE(c->group().is_finite());
  auto s = context_from_json(Json::parse(R"({"group": {"kind": "symmetric", "m": 3}})"));
  CHECK(s->rule() == Rule::diagonal);
  CHECK(s->group().order() == std::size_t{6});
  auto f = context_from_json(Json::parse(R"({"group": {"kind": "free", "rank": 2}, "recursion": {"rule": "phi_l"}})"));
  CHECK(f->rule() == Rule::left);
  auto p = context_from_json(Json::parse(
      R"({"group": {"kind": "product", "factors": [{"kind": "cyclic", "n": 2}, {"kind": "cyclic", "n": 3}]}})"));
  CHECK(p->group().order() == std::size_t{6});
  auto k = context_from_json(Json::parse(R"({"group": {"kind": "cyclic", "n": 4}, "recursion": {"rule": "kappa", "kappa": [false, true, false, true]}})"));
  CHECK(k->rule() == Rule::kappa);
  CHECK_THROWS_AS(context_from_json(Json::parse(R"({"group": {"kind": "cyclic", "n": 2}, "recursion": {"rule": "kappa", "kappa": ["t", "1"]}})")),
                  FormatError);

  // ((2g, 2g), id) on Z/4: two tower steps
  auto custom = context_from_json(Json::parse(R"({
    "group": {"kind": "cyclic", "n": 4},
    "recursion": {"rule": "custom", "table": [["1", "1", false], ["t^2", "t^2", false],
                                              {"left": "1", "right": "1"}, ["t^2", "t^2", false]]}})"));
  CHECK(custom->tower_steps() == 2);
  CHECK(custom->group().order() == std::size_t{1});
  auto named = context_from_json(Json::parse(R"({
    "group": {"kind": "finite", "table": [[0, 1], [1, 0]], "names": ["e", "s"]},
    "recursion": {"rule": "custom", "table": [[0, 0, false], [1, 1, true]]}})"));
  CHECK(named->tower_steps() == 0);
  CHECK(named->format(named->label("s")) == "s");

  CHECK_THROWS_AS(context_from_json(Json::parse(R"({"group": {"kind": "cyclic", "n": 3}, "recursion": {"rule": "adding"}})")),
                  RecursionError);
  CHECK_THROWS_AS(context_from_json(Json::parse(R"({"group": {"kind": "nope"}})")), Error);
  CHECK_THROWS_AS(context_from_json(Json::parse(R"({"recursion": {"rule": "diagonal"}})")), Error);
  CHECK(default_context()->group().is_trivial());

  auto path = std::filesystem::temp_directory_path() / "vphi_io_ctx.json";
  std::ofstream(path) << R"({"group": {"kind": "cyclic", "n": 2}, "recursion": {"rule": "vanishing"}})";
  auto v = load_context(path.string());
  CHECK(v->tower_steps() == 1);
  std::filesystem::remove(path);
  CHECK_THROWS_AS(load_context("/nonexistent/vphi.json"), Error);
}

TEST_CASE("element round trips") {
  std::vector<ContextPtr> ctxs{make_context(make_symmetric(3), Rule::diagonal),
                               make_context(make_cyclic(0), Rule::adding),
                               make_context(make_free(2), Rule::left),
                               make_context(make_cyclic(2), Rule::vanishing)};
  std::mt19937_64 rng(24);
  for (const auto& ctx : ctxs) {
    for (int i = 0; i < 40; ++i) {
      auto a = random_element(ctx, rng);
      auto j = to_json(a);
      CHECK(j.at("kind") == "tree");
      CHECK(element_from_json(ctx, Json::parse(j.dump())) == a);
      CHECK(to_json(element_from_json(ctx, j)) == j);
      CHECK(evaluate(to_text(a), ctx) == a);

      auto g = Element::from_columns(ctx, 2, 3, random_columns(ctx, rng, 2, 3, 5));
      auto jg = to_json(g);
      CHECK(jg.at("kind") == "forest");
      CHECK(element_from_json(ctx, jg) == g);
      CHECK(evaluate(to_text(g), ctx) == g);
    }
  }
  auto s3 = ctxs[0];
  auto e = to_json(Element::identity(s3));
  CHECK(e.at("columns").size() == 1);
  CHECK(e.at("columns")[0].at("dom") == "");
  CHECK_THROWS_AS(element_from_json(s3, Json::parse(R"({"columns": [{"dom": "0", "label": "1", "ran": "0"}]})")),
                  Error);
  CHECK_THROWS_AS(element_from_json(s3, Json::parse(R"j({"columns": [{"dom": "", "label": "(1,5)", "ran": ""}]})j")),
                  Error);
}

TEST_CASE("complex round trips") {
  for (std::size_t n = 2; n <= 6; ++n) {
    auto m = matching_complex(n);
    auto j = to_json(m);
    CHECK(complex_from_json(Json::parse(j.dump())) == m);
  }
  auto j = Json::parse(R"({"vertices": ["a", "b", "c"], "maximal": [[0, 1], [1, 2]]})");
  auto c = complex_from_json(j);
  CHECK(c.f_vector() == std::vector<std::size_t>{3, 2});
  auto h = to_json(homology(c));
  CHECK(h[0].at("betti") == 0);
  CHECK_THROWS_AS(complex_from_json(Json::parse(R"({"vertices": ["a"], "maximal": [[0, 3]]})")), Error);
}

TEST_CASE("certificate round trips") {
  auto ctx = make_context(make_symmetric(3), Rule::diagonal);
  std::mt19937_64 rng(25);
  for (int i = 0; i < 20; ++i) {
    auto cert = decompose(random_element(ctx, rng));
    auto j = to_json(cert);
    CHECK(j.at("verified") == true);
    auto back = certificate_from_json(ctx, Json::parse(j.dump()));
    CHECK(back.verify());
    CHECK(back.target == cert.target);
    CHECK(back.factors.size() == cert.factors.size());
    j["tail"] = to_json(iota(ctx, ctx->group().parse("(1,2)")));
    CHECK_FALSE(certificate_from_json(ctx, j).verify());
  }
}

TEST_CASE("support reports") {
  auto z3 = make_cyclic(3);
  auto ctx = make_context(z3, Rule::right);
  SupportApprox s{3, {BitWord("011")}};
  auto j = to_json(s);
  CHECK(j.at("depth") == 3);
  CHECK(j.at("cones") == Json::array({"011"}));
}
