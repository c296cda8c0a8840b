#include "vphi/io.hpp"

#include <fstream>
#include <sstream>

#include "vphi/error.hpp"

namespace vphi {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw FormatError(std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

std::size_t as_size(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0) {
    throw FormatError(std::string(what) + " must be a non-negative integer");
  }
  return j.get<std::size_t>();
}

std::string token_of(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return "#" + std::to_string(j.get<std::int64_t>());
  throw FormatError("label must be a string token or an element index");
}

}  // namespace

GroupPtr group_from_json(const Json& j) {
  const std::string kind = field(j, "kind").get<std::string>();
  if (kind == "finite") {
    auto table = field(j, "table").get<std::vector<std::vector<std::size_t>>>();
    std::vector<std::string> names;
    if (j.contains("names")) names = j.at("names").get<std::vector<std::string>>();
    return make_finite_table(std::move(table), std::move(names));
  }
  if (kind == "cyclic") {
    if (!j.contains("n") || j.at("n").is_null()) return make_cyclic(0);
    if (j.at("n").is_string() && j.at("n").get<std::string>() == "infinite") return make_cyclic(0);
    return make_cyclic(as_size(j.at("n"), "n"));
  }
  if (kind == "free") return make_free(as_size(field(j, "rank"), "rank"));
  if (kind == "symmetric") return make_symmetric(as_size(field(j, "m"), "m"));
  if (kind == "trivial") return make_trivial();
  if (kind == "product") {
    std::vector<GroupPtr> factors;
    for (const auto& f : field(j, "factors")) factors.push_back(group_from_json(f));
    return make_product(std::move(factors));
  }
  throw FormatError("unknown group kind '" + kind + "'");
}

RecursionPtr recursion_from_json(const Json& j) {
  GroupPtr g = group_from_json(field(j, "group"));
  Json rec = j.contains("recursion") ? j.at("recursion") : Json{{"rule", "diagonal"}};
  const std::string rule = field(rec, "rule").get<std::string>();
  if (rule == "diagonal") return WreathRecursion::diagonal(g);
  if (rule == "vanishing") return WreathRecursion::vanishing(g);
  if (rule == "right" || rule == "phi_r") return WreathRecursion::right(g);
  if (rule == "left" || rule == "phi_l") return WreathRecursion::left(g);
  if (rule == "adding") return WreathRecursion::adding(g);
  if (rule == "kappa") {
    std::vector<bool> k;
    for (const auto& x : field(rec, "kappa")) {
      k.push_back(x.is_boolean() ? x.get<bool>() : x.get<int>() != 0);
    }
    return WreathRecursion::kappa(g, std::move(k));
  }
  if (rule == "custom") {
    std::vector<WreathImage> table;
    for (const auto& e : field(rec, "table")) {
      Json l;
      Json r;
      Json s;
      if (e.is_array() && e.size() == 3) {
        l = e[0];
        r = e[1];
        s = e[2];
      } else if (e.is_object()) {
        l = field(e, "left");
        r = field(e, "right");
        s = e.value("swap", Json(false));
      } else {
        throw FormatError("custom table entries are [left, right, swap]");
      }
      bool swap = s.is_boolean() ? s.get<bool>() : s.get<int>() != 0;
      table.push_back({g->parse(token_of(l)), g->parse(token_of(r)), swap});
    }
    return WreathRecursion::custom(g, std::move(table));
  }
  throw FormatError("unknown recursion rule '" + rule + "'");
}

ContextPtr context_from_json(const Json& j) {
  try {
    return Context::make(recursion_from_json(j));
  } catch (const Json::exception& e) {
    throw FormatError(e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw FormatError(path + ": " + e.what());
  }
}

ContextPtr load_context(const std::string& path) {
  try {
    return context_from_json(read_json_file(path));
  } catch (const Json::exception& e) {
    throw FormatError(path + ": " + e.what());
  }
}

ContextPtr default_context() {
  return Context::make(WreathRecursion::diagonal(make_trivial()));
}

// ---------------------------------------------------------------------------

namespace {

std::string address_text(const Address& a, bool forest) {
  if (forest) return a.str();
  return a.word.bits();
}

}  // namespace

Json to_json(const Element& a) {
  const bool forest = a.m() != 1 || a.n() != 1;
  Json cols = Json::array();
  for (const auto& c : a.columns()) {
    cols.push_back({{"dom", address_text(c.dom, forest)},
                    {"label", a.context()->format(c.label)},
                    {"ran", address_text(c.ran, forest)}});
  }
  return {{"columns", cols}, {"kind", forest ? "forest" : "tree"}, {"roots", {a.m(), a.n()}}};
}

Element element_from_json(const ContextPtr& ctx, const Json& j) {
  try {
    std::uint32_t m = 1;
    std::uint32_t n = 1;
    if (j.contains("roots")) {
      const auto& r = j.at("roots");
      if (!r.is_array() || r.size() != 2) throw FormatError("roots must be [m, n]");
      m = static_cast<std::uint32_t>(as_size(r[0], "roots"));
      n = static_cast<std::uint32_t>(as_size(r[1], "roots"));
    }
    if (j.value("kind", std::string("tree")) == "tree" && (m != 1 || n != 1)) {
      throw FormatError("a tree element has roots [1, 1]");
    }
    std::vector<Column> cols;
    for (const auto& c : field(j, "columns")) {
      cols.push_back({Address::parse(field(c, "dom").get<std::string>()),
                      ctx->source()->group()->parse(token_of(field(c, "label"))),
                      Address::parse(field(c, "ran").get<std::string>())});
    }
    return Element::from_columns(ctx, m, n, std::move(cols));
  } catch (const Json::exception& e) {
    throw FormatError(std::string("element: ") + e.what());
  }
}

std::string to_text(const Element& a) {
  const bool forest = a.m() != 1 || a.n() != 1;
  std::string out = "[";
  bool first = true;
  for (const auto& c : a.columns()) {
    if (!first) out += "; ";
    first = false;
    out += forest ? c.dom.str() : c.dom.word.str();
    out += "|" + a.context()->format(c.label) + "|";
    out += forest ? c.ran.str() : c.ran.word.str();
  }
  return out + "]";
}

// ---------------------------------------------------------------------------

Json to_json(const SimplicialComplex& c) {
  Json maximal = Json::array();
  for (const auto& s : c.maximal()) maximal.push_back(s);
  return {{"vertices", c.keys()}, {"maximal", maximal}};
}

SimplicialComplex complex_from_json(const Json& j) {
  try {
    std::vector<std::string> keys;
    for (const auto& v : field(j, "vertices")) {
      keys.push_back(v.is_string() ? v.get<std::string>() : v.dump());
    }
    std::vector<Simplex> simplices;
    for (const auto& s : field(j, "maximal")) {
      Simplex t;
      for (const auto& v : s) {
        auto i = as_size(v, "vertex index");
        if (i >= keys.size()) throw FormatError("vertex index out of range");
        t.push_back(static_cast<std::uint32_t>(i));
      }
      simplices.push_back(std::move(t));
    }
    return SimplicialComplex(std::move(keys), simplices);
  } catch (const Json::exception& e) {
    throw FormatError(std::string("complex: ") + e.what());
  }
}

Json to_json(const HomologyResult& h) {
  Json out = Json::array();
  for (std::size_t k = 0; k < h.betti.size(); ++k) {
    Json torsion = Json::array();
    for (const auto& d : h.torsion[k]) {
      if (d <= std::numeric_limits<std::int64_t>::max()) {
        torsion.push_back(static_cast<std::int64_t>(d));
      } else {
        torsion.push_back(d.str());
      }
    }
    out.push_back({{"dim", k}, {"betti", h.betti[k]}, {"torsion", torsion}});
  }
  return out;
}

Json to_json(const SupportApprox& s) {
  Json cones = Json::array();
  for (const auto& w : s.included) cones.push_back(w.bits());
  return {{"depth", s.depth}, {"cones", cones}};
}

Json to_json(const CommutatorCertificate& c) {
  Json factors = Json::array();
  for (const auto& [p, q] : c.factors) factors.push_back({{"p", to_json(p)}, {"q", to_json(q)}});
  return {{"target", to_json(c.target)},
          {"factors", factors},
          {"tail", to_json(c.tail)},
          {"verified", c.verify()}};
}

CommutatorCertificate certificate_from_json(const ContextPtr& ctx, const Json& j) {
  std::vector<std::pair<Element, Element>> factors;
  for (const auto& f : field(j, "factors")) {
    factors.emplace_back(element_from_json(ctx, field(f, "p")),
                         element_from_json(ctx, field(f, "q")));
  }
  Element tail = element_from_json(ctx, field(j, "tail"));
  CommutatorCertificate c{std::move(factors), tail, tail};
  c.target = j.contains("target") ? element_from_json(ctx, j.at("target")) : c.product();
  return c;
}

}  // namespace vphi
