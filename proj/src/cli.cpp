#include "vphi/cli.hpp"

#include <algorithm>
#include <cctype>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "vphi/complex.hpp"
#include "vphi/error.hpp"
#include "vphi/expression.hpp"
#include "vphi/germs.hpp"
#include "vphi/io.hpp"
#include "vphi/perfection.hpp"
#include "vphi/splinter.hpp"

namespace vphi::cli {

namespace {

struct Options {
  std::string context_file;
  bool json = false;
  std::vector<std::string> exprs;
  std::string point;
  std::size_t depth = 0;
  std::string at;
  std::size_t samples = 50;
  std::uint64_t seed = 1;
  bool compare = false;
  bool perp = false;
  bool witness = false;
  std::vector<std::string> tuple_a;
  std::vector<std::string> tuple_b;
  std::size_t n = 0;
  bool verify = false;
  int up_to = -1;
  std::string input;
  bool exact = false;
};

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::yes: return "equivalent";
    case Verdict::no: return "distinct";
    case Verdict::unknown: return "unknown";
  }
  return "unknown";
}

std::string group_text(std::size_t betti, const std::vector<BigInt>& torsion) {
  std::vector<std::string> parts;
  if (betti == 1) parts.emplace_back("Z");
  if (betti > 1) parts.push_back("Z^" + std::to_string(betti));
  for (const auto& d : torsion) parts.push_back("Z/" + d.str());
  if (parts.empty()) return "0";
  std::string s = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) s += " + " + parts[i];
  return s;
}

std::size_t tree_depth(const Element& a) {
  std::size_t d = 0;
  for (const auto& c : a.columns()) d = std::max({d, c.dom.word.size(), c.ran.word.size()});
  return d;
}

class Runner {
 public:
  Runner(Options& o, std::ostream& out, std::ostream& err, std::istream& in)
      : o_(o), out_(out), err_(err), in_(in) {}

  ContextPtr context() {
    if (!ctx_) ctx_ = o_.context_file.empty() ? default_context() : load_context(o_.context_file);
    return ctx_;
  }

  Element element(std::size_t i) {
    if (i >= o_.exprs.size()) throw CLI::ValidationError("missing element expression");
    return evaluate(o_.exprs[i], context());
  }

  void print(const Element& a) {
    if (o_.json) {
      out_ << to_json(a).dump() << "\n";
    } else {
      out_ << to_text(a) << "\n";
    }
  }

  int answer(const char* key, bool value) {
    if (o_.json) {
      out_ << Json{{key, value}}.dump() << "\n";
    } else {
      out_ << key << ": " << (value ? "true" : "false") << "\n";
    }
    return value ? 0 : 1;
  }

  int mul() {
    if (o_.exprs.empty()) throw CLI::ValidationError("mul needs at least one expression");
    Element p = element(0);
    for (std::size_t i = 1; i < o_.exprs.size(); ++i) p = p * element(i);
    print(p);
    return 0;
  }

  int single(const char* name, bool invert) {
    if (o_.exprs.size() != 1) throw CLI::ValidationError(std::string(name) + " takes one expression");
    print(invert ? element(0).inverse() : element(0));
    return 0;
  }

  int eq() {
    if (o_.exprs.size() != 2) throw CLI::ValidationError("eq takes two expressions");
    return answer("equal", element(0) == element(1));
  }

  int is_id() {
    if (o_.exprs.size() != 1) throw CLI::ValidationError("is-id takes one expression");
    return answer("identity", element(0).is_identity());
  }

  int act() {
    Element a = element(0);
    auto w = EventuallyPeriodicWord::parse(o_.point);
    if (o_.exact) {
      auto img = act_exact(a, w);
      if (!img) throw PreconditionError("image not periodic within budget");
      if (o_.json) {
        out_ << Json{{"point", w.str()}, {"image", img->str()}}.dump() << "\n";
      } else {
        out_ << img->str() << "\n";
      }
      return 0;
    }
    auto img = act_point(a, w, o_.depth);
    if (o_.json) {
      out_ << Json{{"point", w.str()}, {"depth", o_.depth}, {"image", img.bits()}}.dump() << "\n";
    } else {
      out_ << img.bits() << "\n";
    }
    return 0;
  }

  int label() {
    Element a = element(0);
    auto u = BitWord::parse(o_.at);
    auto tok = context()->format(label_at(a, u));
    if (o_.json) {
      out_ << Json{{"at", u.bits()}, {"label", tok}}.dump() << "\n";
    } else {
      out_ << tok << "\n";
    }
    return 0;
  }

  int lsupp() {
    auto s = lsupp_approx(element(0), o_.depth);
    if (o_.json) {
      out_ << to_json(s).dump() << "\n";
    } else {
      out_ << "depth " << s.depth << ":";
      for (const auto& w : s.included) out_ << " " << w.str();
      out_ << "\n";
    }
    return 0;
  }

  int decompose_cmd() {
    Element a = element(0);
    auto cert = decompose(a);
    const bool ok = cert.verify() && cert.target == a && cert.tail.trivial_labels();
    if (o_.json) {
      auto j = to_json(cert);
      j["verified"] = ok;
      out_ << j.dump() << "\n";
    } else {
      for (std::size_t i = 0; i < cert.factors.size(); ++i) {
        out_ << "p" << i + 1 << ": " << to_text(cert.factors[i].first) << "\n";
        out_ << "q" << i + 1 << ": " << to_text(cert.factors[i].second) << "\n";
      }
      out_ << "tail: " << to_text(cert.tail) << "\n";
      out_ << "verified: " << (ok ? "true" : "false") << "\n";
    }
    return ok ? 0 : 1;
  }

  int witness_commutator() {
    Element v = element(0);
    auto [p, q] = commutator_witness(v);
    const bool ok = commutator(p, q) == v;
    if (o_.json) {
      out_ << Json{{"p", to_json(p)}, {"q", to_json(q)}, {"verified", ok}}.dump() << "\n";
    } else {
      out_ << "p: " << to_text(p) << "\nq: " << to_text(q) << "\n";
      out_ << "verified: " << (ok ? "true" : "false") << "\n";
    }
    return ok ? 0 : 1;
  }

  int splinter_check() {
    if (o_.exprs.empty() || o_.exprs.size() > 2) {
      throw CLI::ValidationError("splinter-check takes one or two expressions");
    }
    SplinterModel model(context());
    Element a = element(0);
    std::size_t depth = std::max(o_.depth, tree_depth(a));
    const bool faithful = model.check_faithful(a, depth) == a.is_identity();
    bool hom = true;
    Json j{{"depth", depth}, {"faithful_agrees", faithful}};
    if (o_.exprs.size() == 2) {
      Element b = element(1);
      depth = std::max({depth, tree_depth(b), tree_depth(a * b)}) + tree_depth(a);
      std::mt19937_64 rng(o_.seed);
      hom = model.check_hom(a, b, o_.samples, depth, rng);
      j["hom_depth"] = depth;
      j["hom_agrees"] = hom;
    }
    if (o_.json) {
      out_ << j.dump() << "\n";
    } else {
      out_ << "faithful check agrees with is-id: " << (faithful ? "true" : "false") << "\n";
      if (o_.exprs.size() == 2) out_ << "homomorphism check: " << (hom ? "true" : "false") << "\n";
    }
    return faithful && hom ? 0 : 1;
  }

  int germ() {
    const int modes = int(o_.compare) + int(o_.perp) + int(o_.witness);
    if (modes != 1) throw CLI::ValidationError("germ needs exactly one of --compare, --perp, --witness");
    if (o_.witness) {
      if (o_.tuple_a.empty() || o_.tuple_a.size() != o_.tuple_b.size()) {
        throw CLI::ValidationError("--witness needs equally many --a and --b expressions");
      }
      std::vector<Element> A;
      std::vector<Element> B;
      for (const auto& s : o_.tuple_a) A.push_back(evaluate(s, context()));
      for (const auto& s : o_.tuple_b) B.push_back(evaluate(s, context()));
      Element g = transitivity_witness(A, B);
      bool ok = true;
      for (std::size_t i = 0; i < A.size(); ++i) {
        ok = ok && germ_compare(B[i] * g, A[i]).verdict == Verdict::yes;
      }
      if (o_.json) {
        out_ << Json{{"gamma", to_json(g)}, {"verified", ok}}.dump() << "\n";
      } else {
        out_ << "gamma: " << to_text(g) << "\nverified: " << (ok ? "true" : "false") << "\n";
      }
      return ok ? 0 : 1;
    }
    if (o_.exprs.size() != 2) throw CLI::ValidationError("germ takes two expressions");
    Element a = element(0);
    Element b = element(1);
    GermResult r = o_.compare ? germ_compare(a, b) : perp(a, b);
    const char* word = o_.compare ? verdict_name(r.verdict)
                                  : (r.verdict == Verdict::yes   ? "perpendicular"
                                     : r.verdict == Verdict::no ? "same point"
                                                                : "unknown");
    if (o_.json) {
      out_ << Json{{"mode", o_.compare ? "compare" : "perp"}, {"verdict", word}, {"depth", r.depth}}.dump()
           << "\n";
    } else {
      out_ << word << " (depth " << r.depth << ")\n";
    }
    return 0;
  }

  int complex_matching() {
    auto c = matching_complex(o_.n);
    out_ << to_json(c).dump() << "\n";
    return 0;
  }

  int complex_dlink() {
    auto d = dlink_complex(o_.n, context());
    bool ok = true;
    Json j = to_json(d.complex);
    if (o_.verify) {
      auto r = check_complete_join(d);
      ok = r.ok();
      j["complete_join"] = ok;
      if (!ok) err_ << "complete join check failed\n";
    }
    out_ << j.dump() << "\n";
    return ok ? 0 : 1;
  }

  int homology_cmd() {
    Json j;
    if (o_.input.empty() || o_.input == "-") {
      try {
        j = Json::parse(in_);
      } catch (const Json::parse_error& e) {
        throw FormatError(std::string("stdin: ") + e.what());
      }
    } else {
      j = read_json_file(o_.input);
    }
    auto c = complex_from_json(j);
    auto h = homology(c, o_.up_to);
    if (o_.json) {
      out_ << to_json(h).dump() << "\n";
    } else {
      if (h.empty_complex) out_ << "H~_-1 = Z\n";
      for (std::size_t k = 0; k < h.betti.size(); ++k) {
        out_ << "H~_" << k << " = " << group_text(h.betti[k], h.torsion[k]) << "\n";
      }
    }
    if (h.euler_checked && !h.euler_consistent) {
      err_ << "Euler characteristic check failed\n";
      return 1;
    }
    return 0;
  }

  int injectivize_cmd() {
    auto ctx = context();
    const auto& orders = ctx->tower_orders();
    if (o_.json) {
      out_ << Json{{"steps", ctx->tower_steps()},
                   {"orders", orders},
                   {"group", ctx->group().describe()},
                   {"recursion", ctx->phi()->describe()}}
                  .dump()
           << "\n";
    } else {
      out_ << "steps: " << ctx->tower_steps() << "\n";
      if (!orders.empty()) {
        out_ << "orders:";
        for (auto k : orders) out_ << " " << k;
        out_ << "\n";
      }
      out_ << "recursion: " << ctx->phi()->describe() << "\n";
    }
    return 0;
  }

 private:
  Options& o_;
  std::ostream& out_;
  std::ostream& err_;
  std::istream& in_;
  ContextPtr ctx_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        std::istream& in) {
  Options o;
  CLI::App app{"Exact computation in labeled Thompson groups V_phi(G)", "vphi"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--context,--group", o.context_file, "group/recursion JSON file");
  app.add_flag("--json", o.json, "machine-readable output");

  auto with_exprs = [&](CLI::App* s, const char* what) {
    s->add_option("expr", o.exprs, what);
    return s;
  };
  auto* mul = with_exprs(app.add_subcommand("mul", "product of expressions"), "factors");
  auto* inv = with_exprs(app.add_subcommand("inv", "inverse"), "element");
  auto* reduce = with_exprs(app.add_subcommand("reduce", "reduced diagram"), "element");
  auto* eq = with_exprs(app.add_subcommand("eq", "equality of two elements"), "elements");
  auto* is_id = with_exprs(app.add_subcommand("is-id", "identity test"), "element");
  auto* act = with_exprs(app.add_subcommand("act", "image of a Cantor point"), "element");
  act->add_option("--point", o.point, "prefix(period)")->required();
  act->add_option("--depth", o.depth, "letters to print");
  act->add_flag("--exact", o.exact, "exact eventually periodic image");
  auto* label = with_exprs(app.add_subcommand("label", "label on a dyadic interval"), "element");
  label->add_option("--at", o.at, "word")->required();
  auto* lsupp = with_exprs(app.add_subcommand("lsupp", "labeled support approximation"), "element");
  lsupp->add_option("--depth", o.depth)->required();
  auto* dec = with_exprs(app.add_subcommand("decompose", "commutator certificate"), "element");
  auto* wit = with_exprs(app.add_subcommand("witness-commutator", "v = [p, q]"), "element");
  auto* spl = with_exprs(app.add_subcommand("splinter-check", "splinter action checks"), "elements");
  spl->add_option("--depth", o.depth);
  spl->add_option("--samples", o.samples);
  spl->add_option("--seed", o.seed);
  auto* germ = with_exprs(app.add_subcommand("germ", "germs at 000..."), "elements");
  germ->add_flag("--compare", o.compare);
  germ->add_flag("--perp", o.perp);
  germ->add_flag("--witness", o.witness);
  germ->add_option("--a", o.tuple_a, "first tuple (repeat)");
  germ->add_option("--b", o.tuple_b, "second tuple (repeat)");
  auto* cx = app.add_subcommand("complex", "export a complex as JSON");
  cx->require_subcommand(1);
  auto* matching = cx->add_subcommand("matching", "matching complex M_n");
  matching->add_option("-n", o.n)->required();
  auto* dlink = cx->add_subcommand("dlink", "descending link E_n(G, phi)");
  dlink->add_option("-n", o.n)->required();
  dlink->add_flag("--verify", o.verify, "check the complete-join structure");
  auto* hom = app.add_subcommand("homology", "reduced homology of a complex JSON");
  hom->add_option("--up-to", o.up_to);
  hom->add_option("file", o.input, "complex file, stdin when absent");
  auto* inj = app.add_subcommand("injectivize", "injectivization tower");

  // CLI11 splits a vector argument of the form "[x,y]" at the commas; a
  // leading blank keeps diagram literals whole and the expression parser
  // skips it.
  std::vector<std::string> rev;
  for (auto it = args.rbegin(); it != args.rend(); ++it) {
    rev.push_back(!it->empty() && it->front() == '[' ? " " + *it : *it);
  }
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  Runner r(o, out, err, in);
  try {
    if (mul->parsed()) return r.mul();
    if (inv->parsed()) return r.single("inv", true);
    if (reduce->parsed()) return r.single("reduce", false);
    if (eq->parsed()) return r.eq();
    if (is_id->parsed()) return r.is_id();
    if (act->parsed()) return r.act();
    if (label->parsed()) return r.label();
    if (lsupp->parsed()) return r.lsupp();
    if (dec->parsed()) return r.decompose_cmd();
    if (wit->parsed()) return r.witness_commutator();
    if (spl->parsed()) return r.splinter_check();
    if (germ->parsed()) return r.germ();
    if (matching->parsed()) return r.complex_matching();
    if (dlink->parsed()) return r.complex_dlink();
    if (hom->parsed()) return r.homology_cmd();
    if (inj->parsed()) return r.injectivize_cmd();
  } catch (const CLI::Error& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "usage error: no command\n";
  return 2;
}

}  // namespace vphi::cli
