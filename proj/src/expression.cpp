#include "vphi/expression.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "vphi/error.hpp"
#include "vphi/io.hpp"

namespace vphi {

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : s_(text) {}

  ExprPtr run() {
    auto e = expr();
    skip();
    if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, i_); }

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }

  bool accept(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool keyword(const char* kw) {
    skip();
    std::string_view k(kw);
    if (s_.compare(i_, k.size(), k) != 0) return false;
    std::size_t j = i_ + k.size();
    while (j < s_.size() && std::isspace(static_cast<unsigned char>(s_[j]))) ++j;
    if (j >= s_.size() || s_[j] != '(') return false;
    i_ = j + 1;
    return true;
  }

  // Raw text up to a terminator at bracket depth 0; () and <> nest.
  std::string scan(std::string_view stops) {
    skip();
    const std::size_t start = i_;
    int round = 0;
    int angle = 0;
    for (; i_ < s_.size(); ++i_) {
      char c = s_[i_];
      if (round == 0 && angle == 0 && stops.find(c) != std::string_view::npos) break;
      if (c == '(') ++round;
      if (c == ')' && --round < 0) fail("unbalanced ')'");
      if (c == '<') ++angle;
      if (c == '>' && --angle < 0) fail("unbalanced '>'");
    }
    if (i_ == s_.size()) fail("unterminated token");
    std::string t = s_.substr(start, i_ - start);
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.pop_back();
    if (t.empty()) fail("empty token");
    return t;
  }

  std::shared_ptr<Expr> node(Expr::Kind k, std::size_t pos) {
    auto e = std::make_shared<Expr>();
    e->kind = k;
    e->position = pos;
    return e;
  }

  ExprPtr expr() {
    auto left = term();
    while (true) {
      skip();
      if (i_ < s_.size() && (s_[i_] == '*' || s_[i_] == '.')) {
        auto pos = i_++;
        auto p = node(Expr::Kind::product, pos);
        p->args = {left, term()};
        left = p;
      } else {
        return left;
      }
    }
  }

  ExprPtr term() {
    auto a = atom();
    skip();
    if (i_ < s_.size() && s_[i_] == '^') {
      auto pos = i_++;
      skip();
      std::size_t start = i_;
      if (i_ < s_.size() && (s_[i_] == '-' || s_[i_] == '+')) ++i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      std::int64_t k = 0;
      const char* first = s_.data() + start + (s_[start] == '+' ? 1 : 0);
      auto [ptr, ec] = std::from_chars(first, s_.data() + i_, k);
      if (ec != std::errc{} || ptr != s_.data() + i_) {
        i_ = start;
        fail("expected an integer exponent");
      }
      auto p = node(Expr::Kind::power, pos);
      p->exponent = k;
      p->args = {a};
      return p;
    }
    return a;
  }

  BitWord word(const std::string& t, std::size_t pos) {
    try {
      return BitWord::parse(t);
    } catch (const Error&) {
      throw ParseError("bad word '" + t + "'", pos);
    }
  }

  ExprPtr atom() {
    skip();
    if (i_ >= s_.size()) fail("unexpected end of expression");
    const std::size_t pos = i_;
    if (keyword("iota")) {
      auto e = node(Expr::Kind::iota, pos);
      e->label = scan(")");
      expect(')');
      return e;
    }
    if (keyword("a_g")) {
      auto e = node(Expr::Kind::a_g, pos);
      e->label = scan(")");
      expect(')');
      return e;
    }
    if (keyword("lambda")) {
      auto e = node(Expr::Kind::lambda, pos);
      skip();
      const std::size_t wpos = i_;
      e->word = word(scan(","), wpos);
      expect(',');
      e->label = scan(")");
      expect(')');
      return e;
    }
    for (auto [kw, kind] : {std::pair{"comm", Expr::Kind::comm}, std::pair{"conj", Expr::Kind::conj}}) {
      if (keyword(kw)) {
        auto e = node(kind, pos);
        auto x = expr();
        expect(',');
        auto y = expr();
        expect(')');
        e->args = {x, y};
        return e;
      }
    }
    if (accept('(')) {
      auto e = expr();
      expect(')');
      return e;
    }
    if (accept('[')) {
      auto e = node(Expr::Kind::literal, pos);
      while (true) {
        Expr::LiteralColumn c;
        c.dom = scan("|");
        expect('|');
        c.label = scan("|");
        expect('|');
        c.ran = scan(";]");
        e->columns.push_back(std::move(c));
        if (accept(']')) break;
        expect(';');
      }
      return e;
    }
    if (accept('@')) {
      auto e = node(Expr::Kind::file, pos);
      const std::size_t start = i_;
      while (i_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[i_])) &&
             s_[i_] != ')' && s_[i_] != ',' && s_[i_] != '*' && s_[i_] != '^') {
        ++i_;
      }
      e->path = s_.substr(start, i_ - start);
      if (e->path.empty()) fail("expected a file name");
      return e;
    }
    fail("expected an element");
  }

  const std::string& s_;
  std::size_t i_ = 0;
};

}  // namespace

ExprPtr parse_expression(const std::string& text) { return Parser(text).run(); }

Element evaluate(const Expr& e, const ContextPtr& ctx) {
  switch (e.kind) {
    case Expr::Kind::iota:
      return iota(ctx, ctx->label(e.label));
    case Expr::Kind::lambda:
      return lambda(ctx, e.word, ctx->label(e.label));
    case Expr::Kind::a_g:
      return a_g(ctx, ctx->label(e.label));
    case Expr::Kind::literal: {
      std::vector<Column> cols;
      std::uint32_t m = 1;
      std::uint32_t n = 1;
      for (const auto& c : e.columns) {
        auto d = Address::parse(c.dom == "eps" ? "" : c.dom);
        auto r = Address::parse(c.ran == "eps" ? "" : c.ran);
        m = std::max(m, d.root + 1);
        n = std::max(n, r.root + 1);
        cols.push_back({d, ctx->source()->group()->parse(c.label), r});
      }
      return Element::from_columns(ctx, m, n, std::move(cols));
    }
    case Expr::Kind::file:
      return element_from_json(ctx, read_json_file(e.path));
    case Expr::Kind::product:
      return evaluate(*e.args[0], ctx) * evaluate(*e.args[1], ctx);
    case Expr::Kind::power:
      return evaluate(*e.args[0], ctx).pow(e.exponent);
    case Expr::Kind::comm:
      return commutator(evaluate(*e.args[0], ctx), evaluate(*e.args[1], ctx));
    case Expr::Kind::conj:
      return conjugate(evaluate(*e.args[0], ctx), evaluate(*e.args[1], ctx));
  }
  throw PreconditionError("unknown expression node");
}

}  // namespace vphi
