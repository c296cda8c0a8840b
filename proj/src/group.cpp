#include "vphi/group.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include <boost/container_hash/hash.hpp>

#include "vphi/error.hpp"

namespace vphi {

std::size_t GroupElement::hash() const noexcept {
  return boost::hash_range(data_.begin(), data_.end());
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

std::optional<std::int64_t> parse_int(std::string_view s) {
  std::int64_t v = 0;
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
    return std::nullopt;
  }
  return v;
}

[[noreturn]] void bad_token(std::string_view token, const std::string& group) {
  throw GroupError("cannot parse '" + std::string(token) + "' as an element of " +
                   group);
}

std::int64_t floor_mod(std::int64_t a, std::int64_t n) {
  std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

// ---------------------------------------------------------------------------

class FiniteTableGroup final : public Group {
 public:
  FiniteTableGroup(std::vector<std::vector<std::size_t>> table,
                   std::vector<std::string> names)
      : table_(std::move(table)), names_(std::move(names)) {
    const std::size_t n = table_.size();
    if (n == 0) throw GroupError("Cayley table is empty");
    for (const auto& row : table_) {
      if (row.size() != n) throw GroupError("Cayley table is not square");
      std::vector<bool> seen(n, false);
      for (auto v : row) {
        if (v >= n || seen[v]) throw GroupError("Cayley table is not a Latin square");
        seen[v] = true;
      }
    }
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<bool> seen(n, false);
      for (std::size_t i = 0; i < n; ++i) {
        if (seen[table_[i][j]]) throw GroupError("Cayley table is not a Latin square");
        seen[table_[i][j]] = true;
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (table_[0][i] != i || table_[i][0] != i) {
        throw GroupError("Cayley table must have identity at index 0");
      }
    }
    if (n <= 64) {
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          for (std::size_t c = 0; c < n; ++c)
            if (table_[table_[a][b]][c] != table_[a][table_[b][c]]) {
              throw GroupError("Cayley table is not associative");
            }
    }
    inverse_.resize(n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (table_[a][b] == 0) inverse_[a] = b;
    if (!names_.empty()) {
      if (names_.size() != n) throw GroupError("names must cover every element");
      for (std::size_t i = 0; i < n; ++i) {
        if (names_[i].empty() || names_[i] == "1" || names_[i].front() == '#') {
          if (!(i == 0 && names_[i] == "1")) {
            throw GroupError("invalid element name '" + names_[i] + "'");
          }
        }
        by_name_[names_[i]] = i;
      }
      if (by_name_.size() != n) throw GroupError("element names must be distinct");
    }
  }

  GroupKind kind() const noexcept override { return GroupKind::finite_table; }
  std::optional<std::size_t> order() const noexcept override { return table_.size(); }
  GroupElement identity() const override { return GroupElement::scalar(0); }
  bool contains(const GroupElement& g) const override {
    return g.size() == 1 && g.value() >= 0 &&
           static_cast<std::size_t>(g.value()) < table_.size();
  }
  std::size_t index_of(const GroupElement& g) const override {
    require(g);
    return static_cast<std::size_t>(g.value());
  }
  GroupElement element_at(std::size_t i) const override {
    if (i >= table_.size()) throw GroupError("element index out of range");
    return GroupElement::scalar(static_cast<std::int64_t>(i));
  }
  std::string format(const GroupElement& g) const override {
    require(g);
    auto i = static_cast<std::size_t>(g.value());
    if (!names_.empty()) return names_[i];
    return i == 0 ? "1" : "#" + std::to_string(i);
  }
  std::string describe() const override {
    return "finite group of order " + std::to_string(table_.size());
  }
  GroupElement random(std::mt19937_64& rng, int) const override {
    std::uniform_int_distribution<std::size_t> d(0, table_.size() - 1);
    return element_at(d(rng));
  }
  const std::vector<std::string>& names() const { return names_; }

 protected:
  GroupElement do_mul(const GroupElement& a, const GroupElement& b) const override {
    return GroupElement::scalar(static_cast<std::int64_t>(
        table_[static_cast<std::size_t>(a.value())][static_cast<std::size_t>(b.value())]));
  }
  GroupElement do_inv(const GroupElement& a) const override {
    return GroupElement::scalar(
        static_cast<std::int64_t>(inverse_[static_cast<std::size_t>(a.value())]));
  }
  GroupElement do_parse(std::string_view token) const override {
    if (token == "1" || (token == "e" && !by_name_.contains("e"))) return identity();
    if (auto it = by_name_.find(std::string(token)); it != by_name_.end()) {
      return element_at(it->second);
    }
    if (!token.empty() && token.front() == '#') {
      if (auto v = parse_int(token.substr(1));
          v && *v >= 0 && static_cast<std::size_t>(*v) < table_.size()) {
        return GroupElement::scalar(*v);
      }
    }
    bad_token(token, describe());
  }

 private:
  std::vector<std::vector<std::size_t>> table_;
  std::vector<std::size_t> inverse_;
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> by_name_;
};

// ---------------------------------------------------------------------------

class CyclicGroup final : public Group {
 public:
  explicit CyclicGroup(std::size_t n) : n_(static_cast<std::int64_t>(n)) {}

  GroupKind kind() const noexcept override { return GroupKind::cyclic; }
  std::optional<std::size_t> order() const noexcept override {
    if (n_ == 0) return std::nullopt;
    return static_cast<std::size_t>(n_);
  }
  GroupElement identity() const override { return GroupElement::scalar(0); }
  bool contains(const GroupElement& g) const override {
    return g.size() == 1 && (n_ == 0 || (g.value() >= 0 && g.value() < n_));
  }
  std::size_t index_of(const GroupElement& g) const override {
    if (n_ == 0) return Group::index_of(g);
    require(g);
    return static_cast<std::size_t>(g.value());
  }
  GroupElement element_at(std::size_t i) const override {
    if (n_ == 0 || static_cast<std::int64_t>(i) >= n_) return Group::element_at(i);
    return GroupElement::scalar(static_cast<std::int64_t>(i));
  }
  std::string format(const GroupElement& g) const override {
    require(g);
    auto k = g.value();
    if (k == 0) return "1";
    if (k == 1) return "t";
    return "t^" + std::to_string(k);
  }
  std::string describe() const override {
    return n_ == 0 ? std::string("infinite cyclic group")
                   : "cyclic group of order " + std::to_string(n_);
  }
  GroupElement random(std::mt19937_64& rng, int scale) const override {
    if (n_ == 0) {
      std::uniform_int_distribution<std::int64_t> d(-scale, scale);
      return GroupElement::scalar(d(rng));
    }
    std::uniform_int_distribution<std::int64_t> d(0, n_ - 1);
    return GroupElement::scalar(d(rng));
  }
  bool infinite() const { return n_ == 0; }

 protected:
  GroupElement do_mul(const GroupElement& a, const GroupElement& b) const override {
    return reduce(a.value() + b.value());
  }
  GroupElement do_inv(const GroupElement& a) const override { return reduce(-a.value()); }
  GroupElement do_parse(std::string_view token) const override {
    if (token == "1" || token == "e") return identity();
    if (token == "t") return reduce(1);
    if (token.starts_with("t^")) {
      if (auto v = parse_int(token.substr(2))) return reduce(*v);
    }
    bad_token(token, describe());
  }

 private:
  GroupElement reduce(std::int64_t k) const {
    return GroupElement::scalar(n_ == 0 ? k : floor_mod(k, n_));
  }
  std::int64_t n_;
};

// ---------------------------------------------------------------------------

/// Permutations of {0..m-1} acting on the right; data[i] is the image of i.
class SymmetricGroup final : public Group {
 public:
  explicit SymmetricGroup(std::size_t m) : m_(m) {
    if (m == 0) throw GroupError("symmetric group needs m >= 1");
    if (m > 12) throw GroupError("symmetric group too large to index");
    order_ = 1;
    for (std::size_t i = 2; i <= m; ++i) order_ *= i;
  }

  GroupKind kind() const noexcept override { return GroupKind::symmetric; }
  std::optional<std::size_t> order() const noexcept override { return order_; }
  GroupElement identity() const override {
    GroupElement::Storage s(m_);
    std::iota(s.begin(), s.end(), 0);
    return GroupElement(std::move(s));
  }
  bool contains(const GroupElement& g) const override {
    if (g.size() != m_) return false;
    std::vector<bool> seen(m_, false);
    for (auto v : g.data()) {
      if (v < 0 || static_cast<std::size_t>(v) >= m_ || seen[v]) return false;
      seen[v] = true;
    }
    return true;
  }
  // Lehmer code rank; the identity has rank 0.
  std::size_t index_of(const GroupElement& g) const override {
    require(g);
    auto d = g.data();
    std::size_t rank = 0;
    for (std::size_t i = 0; i < m_; ++i) {
      std::size_t smaller = 0;
      for (std::size_t j = i + 1; j < m_; ++j) smaller += d[j] < d[i] ? 1 : 0;
      rank = rank * (m_ - i) + smaller;
    }
    return rank;
  }
  GroupElement element_at(std::size_t index) const override {
    if (index >= order_) throw GroupError("element index out of range");
    std::vector<std::size_t> digits(m_);
    for (std::size_t i = m_; i-- > 0;) {
      digits[i] = index % (m_ - i);
      index /= (m_ - i);
    }
    std::vector<std::int64_t> pool(m_);
    std::iota(pool.begin(), pool.end(), 0);
    GroupElement::Storage s;
    for (std::size_t i = 0; i < m_; ++i) {
      s.push_back(pool[digits[i]]);
      pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(digits[i]));
    }
    return GroupElement(std::move(s));
  }
  std::string format(const GroupElement& g) const override {
    require(g);
    auto d = g.data();
    std::string out;
    std::vector<bool> done(m_, false);
    for (std::size_t i = 0; i < m_; ++i) {
      if (done[i] || static_cast<std::size_t>(d[i]) == i) continue;
      out += "(";
      std::size_t j = i;
      bool first = true;
      while (!done[j]) {
        done[j] = true;
        if (!first) out += ",";
        out += std::to_string(j + 1);
        first = false;
        j = static_cast<std::size_t>(d[j]);
      }
      out += ")";
    }
    return out.empty() ? "1" : out;
  }
  std::string describe() const override {
    return "symmetric group S" + std::to_string(m_);
  }
  GroupElement random(std::mt19937_64& rng, int) const override {
    std::uniform_int_distribution<std::size_t> d(0, order_ - 1);
    return element_at(d(rng));
  }

 protected:
  GroupElement do_mul(const GroupElement& a, const GroupElement& b) const override {
    GroupElement::Storage s(m_);
    auto da = a.data();
    auto db = b.data();
    for (std::size_t i = 0; i < m_; ++i) s[i] = db[static_cast<std::size_t>(da[i])];
    return GroupElement(std::move(s));
  }
  GroupElement do_inv(const GroupElement& a) const override {
    GroupElement::Storage s(m_);
    auto da = a.data();
    for (std::size_t i = 0; i < m_; ++i) s[static_cast<std::size_t>(da[i])] = static_cast<std::int64_t>(i);
    return GroupElement(std::move(s));
  }
  // Product of cycles written left to right, points 1-based: "(1,2)(2,3)".
  GroupElement do_parse(std::string_view token) const override {
    if (token == "1" || token == "e" || token == "()") return identity();
    GroupElement result = identity();
    std::size_t pos = 0;
    while (pos < token.size()) {
      if (token[pos] != '(') bad_token(token, describe());
      auto close = token.find(')', pos);
      if (close == std::string_view::npos) bad_token(token, describe());
      std::vector<std::int64_t> cycle;
      std::string_view body = token.substr(pos + 1, close - pos - 1);
      std::size_t start = 0;
      while (start <= body.size()) {
        auto comma = body.find(',', start);
        auto part = trim(body.substr(start, comma == std::string_view::npos
                                                ? std::string_view::npos
                                                : comma - start));
        auto v = parse_int(part);
        if (!v || *v < 1 || static_cast<std::size_t>(*v) > m_) bad_token(token, describe());
        cycle.push_back(*v - 1);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
      }
      GroupElement c = identity();
      GroupElement::Storage s(c.storage());
      for (std::size_t k = 0; k < cycle.size(); ++k) {
        s[static_cast<std::size_t>(cycle[k])] = cycle[(k + 1) % cycle.size()];
      }
      GroupElement cyc(std::move(s));
      if (!contains(cyc)) bad_token(token, describe());
      result = do_mul(result, cyc);
      pos = close + 1;
    }
    return result;
  }

 private:
  std::size_t m_;
  std::size_t order_;
};

// ---------------------------------------------------------------------------

/// Free group; letters are +-(1..rank), words kept freely reduced.
class FreeGroup final : public Group {
 public:
  explicit FreeGroup(std::size_t rank) : rank_(static_cast<std::int64_t>(rank)) {
    if (rank == 0 || rank > 26) throw GroupError("free group rank must be 1..26");
  }

  GroupKind kind() const noexcept override { return GroupKind::free; }
  std::optional<std::size_t> order() const noexcept override { return std::nullopt; }
  GroupElement identity() const override { return GroupElement{}; }
  bool contains(const GroupElement& g) const override {
    auto d = g.data();
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (d[i] == 0 || d[i] > rank_ || d[i] < -rank_) return false;
      if (i > 0 && d[i] == -d[i - 1]) return false;
    }
    return true;
  }
  std::string format(const GroupElement& g) const override {
    require(g);
    if (g.size() == 0) return "1";
    std::string out;
    for (auto l : g.data()) {
      out += l > 0 ? static_cast<char>('a' + l - 1) : static_cast<char>('A' - l - 1);
    }
    return out;
  }
  std::string describe() const override {
    return "free group of rank " + std::to_string(rank_);
  }
  GroupElement random(std::mt19937_64& rng, int scale) const override {
    std::uniform_int_distribution<int> len(0, std::max(scale, 0));
    std::uniform_int_distribution<std::int64_t> letter(1, 2 * rank_);
    GroupElement::Storage s;
    int n = len(rng);
    while (static_cast<int>(s.size()) < n) {
      auto l = letter(rng);
      std::int64_t x = l <= rank_ ? l : -(l - rank_);
      if (!s.empty() && s.back() == -x) continue;
      s.push_back(x);
    }
    return GroupElement(std::move(s));
  }

 protected:
  GroupElement do_mul(const GroupElement& a, const GroupElement& b) const override {
    GroupElement::Storage s(a.storage());
    for (auto l : b.data()) {
      if (!s.empty() && s.back() == -l) {
        s.pop_back();
      } else {
        s.push_back(l);
      }
    }
    return GroupElement(std::move(s));
  }
  GroupElement do_inv(const GroupElement& a) const override {
    GroupElement::Storage s;
    auto d = a.data();
    for (std::size_t i = d.size(); i-- > 0;) s.push_back(-d[i]);
    return GroupElement(std::move(s));
  }
  GroupElement do_parse(std::string_view token) const override {
    if (token == "1" || (token == "e" && rank_ < 5)) return identity();
    GroupElement::Storage s;
    for (char c : token) {
      std::int64_t x = 0;
      if (c >= 'a' && c < 'a' + rank_) {
        x = c - 'a' + 1;
      } else if (c >= 'A' && c < 'A' + rank_) {
        x = -(c - 'A' + 1);
      } else {
        bad_token(token, describe());
      }
      if (!s.empty() && s.back() == -x) {
        s.pop_back();
      } else {
        s.push_back(x);
      }
    }
    return GroupElement(std::move(s));
  }

 private:
  std::int64_t rank_;
};

// ---------------------------------------------------------------------------

/// Direct product; encoded as [len_0, data_0..., len_1, data_1..., ...].
class ProductGroup final : public Group {
 public:
  explicit ProductGroup(std::vector<GroupPtr> factors) : factors_(std::move(factors)) {
    if (factors_.empty()) throw GroupError("product needs at least one factor");
    std::size_t ord = 1;
    finite_ = true;
    for (const auto& f : factors_) {
      if (!f) throw GroupError("null factor");
      auto o = f->order();
      if (!o) {
        finite_ = false;
      } else {
        ord *= *o;
      }
    }
    order_ = ord;
  }

  GroupKind kind() const noexcept override { return GroupKind::product; }
  std::optional<std::size_t> order() const noexcept override {
    if (!finite_) return std::nullopt;
    return order_;
  }
  GroupElement identity() const override {
    std::vector<GroupElement> parts;
    for (const auto& f : factors_) parts.push_back(f->identity());
    return pack(parts);
  }
  bool contains(const GroupElement& g) const override {
    auto parts = unpack(g);
    if (!parts) return false;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      if (!factors_[i]->contains((*parts)[i])) return false;
    }
    return true;
  }
  std::size_t index_of(const GroupElement& g) const override {
    if (!finite_) return Group::index_of(g);
    require(g);
    auto parts = *unpack(g);
    std::size_t idx = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      idx = idx * *factors_[i]->order() + factors_[i]->index_of(parts[i]);
    }
    return idx;
  }
  GroupElement element_at(std::size_t index) const override {
    if (!finite_ || index >= order_) return Group::element_at(index);
    std::vector<GroupElement> parts(factors_.size());
    for (std::size_t i = factors_.size(); i-- > 0;) {
      auto o = *factors_[i]->order();
      parts[i] = factors_[i]->element_at(index % o);
      index /= o;
    }
    return pack(parts);
  }
  std::string format(const GroupElement& g) const override {
    require(g);
    if (g == identity()) return "1";
    auto parts = *unpack(g);
    std::string out = "<";
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i) out += ",";
      out += factors_[i]->format(parts[i]);
    }
    return out + ">";
  }
  std::string describe() const override {
    std::string out = "product(";
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      if (i) out += ", ";
      out += factors_[i]->describe();
    }
    return out + ")";
  }
  GroupElement random(std::mt19937_64& rng, int scale) const override {
    std::vector<GroupElement> parts;
    for (const auto& f : factors_) parts.push_back(f->random(rng, scale));
    return pack(parts);
  }
  const std::vector<GroupPtr>& factors() const { return factors_; }

 protected:
  GroupElement do_mul(const GroupElement& a, const GroupElement& b) const override {
    auto pa = *unpack(a);
    auto pb = *unpack(b);
    for (std::size_t i = 0; i < pa.size(); ++i) pa[i] = factors_[i]->mul(pa[i], pb[i]);
    return pack(pa);
  }
  GroupElement do_inv(const GroupElement& a) const override {
    auto pa = *unpack(a);
    for (std::size_t i = 0; i < pa.size(); ++i) pa[i] = factors_[i]->inv(pa[i]);
    return pack(pa);
  }
  GroupElement do_parse(std::string_view token) const override {
    if (token == "1" || token == "e") return identity();
    if (token.size() < 2 || token.front() != '<' || token.back() != '>') {
      bad_token(token, describe());
    }
    std::string_view body = token.substr(1, token.size() - 2);
    std::vector<std::string_view> pieces;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < body.size(); ++i) {
      char c = body[i];
      if (c == '(' || c == '<') ++depth;
      if (c == ')' || c == '>') --depth;
      if (c == ',' && depth == 0) {
        pieces.push_back(trim(body.substr(start, i - start)));
        start = i + 1;
      }
    }
    pieces.push_back(trim(body.substr(start)));
    if (pieces.size() != factors_.size()) bad_token(token, describe());
    std::vector<GroupElement> parts;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      parts.push_back(factors_[i]->parse(pieces[i]));
    }
    return pack(parts);
  }

 private:
  static GroupElement pack(const std::vector<GroupElement>& parts) {
    GroupElement::Storage s;
    for (const auto& p : parts) {
      s.push_back(static_cast<std::int64_t>(p.size()));
      s.insert(s.end(), p.storage().begin(), p.storage().end());
    }
    return GroupElement(std::move(s));
  }
  std::optional<std::vector<GroupElement>> unpack(const GroupElement& g) const {
    std::vector<GroupElement> parts;
    auto d = g.data();
    std::size_t pos = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      if (pos >= d.size() || d[pos] < 0) return std::nullopt;
      auto len = static_cast<std::size_t>(d[pos]);
      if (pos + 1 + len > d.size()) return std::nullopt;
      parts.emplace_back(GroupElement::Storage(d.begin() + static_cast<std::ptrdiff_t>(pos + 1),
                                               d.begin() + static_cast<std::ptrdiff_t>(pos + 1 + len)));
      pos += 1 + len;
    }
    if (pos != d.size()) return std::nullopt;
    return parts;
  }

  std::vector<GroupPtr> factors_;
  std::size_t order_ = 0;
  bool finite_ = true;
};

}  // namespace

// ---------------------------------------------------------------------------

void Group::require(const GroupElement& g) const {
  if (!contains(g)) throw GroupError("backend mismatch: element is not in " + describe());
}

GroupElement Group::mul(const GroupElement& a, const GroupElement& b) const {
  require(a);
  require(b);
  return do_mul(a, b);
}

GroupElement Group::inv(const GroupElement& a) const {
  require(a);
  return do_inv(a);
}

GroupElement Group::pow(const GroupElement& a, std::int64_t k) const {
  require(a);
  GroupElement base = k < 0 ? do_inv(a) : a;
  auto e = static_cast<std::uint64_t>(k < 0 ? -k : k);
  GroupElement result = identity();
  while (e) {
    if (e & 1U) result = do_mul(result, base);
    base = do_mul(base, base);
    e >>= 1U;
  }
  return result;
}

std::size_t Group::index_of(const GroupElement&) const {
  throw GroupError("index_of requires a finite group, got " + describe());
}

GroupElement Group::element_at(std::size_t) const {
  throw GroupError("element_at requires a finite group or a valid index");
}

std::vector<GroupElement> Group::elements() const {
  auto n = order();
  if (!n) throw GroupError("cannot enumerate " + describe());
  std::vector<GroupElement> out;
  out.reserve(*n);
  for (std::size_t i = 0; i < *n; ++i) out.push_back(element_at(i));
  return out;
}

GroupElement Group::parse(std::string_view token) const {
  token = trim(token);
  if (token.empty()) throw GroupError("empty group element token");
  GroupElement g = do_parse(token);
  require(g);
  return g;
}

GroupPtr make_finite_table(std::vector<std::vector<std::size_t>> table,
                           std::vector<std::string> names) {
  return std::make_shared<FiniteTableGroup>(std::move(table), std::move(names));
}

GroupPtr make_cyclic(std::size_t n) { return std::make_shared<CyclicGroup>(n); }
GroupPtr make_symmetric(std::size_t m) { return std::make_shared<SymmetricGroup>(m); }
GroupPtr make_free(std::size_t rank) { return std::make_shared<FreeGroup>(rank); }
GroupPtr make_product(std::vector<GroupPtr> factors) {
  return std::make_shared<ProductGroup>(std::move(factors));
}
GroupPtr make_trivial() { return make_finite_table({{0}}); }

std::vector<std::vector<std::size_t>> cayley_table(const Group& group) {
  auto elems = group.elements();
  std::vector<std::vector<std::size_t>> table(elems.size(),
                                              std::vector<std::size_t>(elems.size()));
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = 0; j < elems.size(); ++j)
      table[i][j] = group.index_of(group.mul(elems[i], elems[j]));
  return table;
}

bool check_group_axioms(const Group& group, std::mt19937_64& rng,
                        std::size_t exhaustive_limit, std::size_t samples) {
  auto e = group.identity();
  auto check = [&](const GroupElement& a, const GroupElement& b, const GroupElement& c) {
    if (group.mul(group.mul(a, b), c) != group.mul(a, group.mul(b, c))) return false;
    if (group.mul(a, e) != a || group.mul(e, a) != a) return false;
    if (!group.is_identity(group.mul(a, group.inv(a)))) return false;
    return group.is_identity(group.mul(group.inv(a), a));
  };
  auto n = group.order();
  if (n && *n <= exhaustive_limit) {
    auto elems = group.elements();
    for (const auto& a : elems)
      for (const auto& b : elems)
        for (const auto& c : elems)
          if (!check(a, b, c)) return false;
    return true;
  }
  for (std::size_t i = 0; i < samples; ++i) {
    if (!check(group.random(rng, 6), group.random(rng, 6), group.random(rng, 6))) {
      return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------

FiniteHomomorphism::FiniteHomomorphism(GroupPtr source, GroupPtr target,
                                       std::vector<GroupElement> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (!source_->is_finite() || !target_->is_finite()) {
    throw GroupError("homomorphism maps are only supported between finite groups");
  }
  if (images_.size() != *source_->order()) {
    throw GroupError("homomorphism must give an image for every element");
  }
  for (const auto& img : images_) target_->require(img);
  auto elems = source_->elements();
  for (const auto& a : elems) {
    for (const auto& b : elems) {
      auto lhs = (*this)(source_->mul(a, b));
      auto rhs = target_->mul((*this)(a), (*this)(b));
      if (lhs != rhs) throw GroupError("map is not a homomorphism");
    }
  }
}

FiniteHomomorphism FiniteHomomorphism::identity(const GroupPtr& group) {
  return FiniteHomomorphism(group, group, group->elements());
}

FiniteHomomorphism FiniteHomomorphism::trivial(const GroupPtr& source,
                                               const GroupPtr& target) {
  return FiniteHomomorphism(
      source, target, std::vector<GroupElement>(*source->order(), target->identity()));
}

GroupElement FiniteHomomorphism::operator()(const GroupElement& g) const {
  return images_[source_->index_of(g)];
}

bool FiniteHomomorphism::is_injective() const {
  std::vector<GroupElement> sorted = images_;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

}  // namespace vphi
