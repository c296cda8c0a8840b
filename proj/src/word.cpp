#include "vphi/word.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <map>
#include <set>

#include "vphi/error.hpp"

namespace vphi {

BitWord::BitWord(std::string bits) : bits_(std::move(bits)) {
  for (char c : bits_) {
    if (c != '0' && c != '1') throw DiagramError("bit word contains '" + std::string(1, c) + "'");
  }
}

BitWord BitWord::parse(std::string_view text) {
  if (text == "eps" || text == "e" || text == "ε") return {};
  return BitWord(std::string(text));
}

BitWord BitWord::child(int bit) const {
  return BitWord(bits_ + (bit ? '1' : '0'), 0);
}

BitWord BitWord::parent() const {
  if (bits_.empty()) throw DiagramError("the root has no parent");
  return BitWord(bits_.substr(0, bits_.size() - 1), 0);
}

bool BitWord::is_prefix_of(const BitWord& other) const noexcept {
  return other.bits_.size() >= bits_.size() &&
         other.bits_.compare(0, bits_.size(), bits_) == 0;
}

std::string Address::str() const {
  return std::to_string(root) + ":" + word.bits();
}

Address Address::parse(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos) return {0, BitWord::parse(text)};
  std::uint32_t r = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + colon, r);
  if (ec != std::errc{} || ptr != text.data() + colon) {
    throw DiagramError("bad forest address '" + std::string(text) + "'");
  }
  return {r, BitWord::parse(text.substr(colon + 1))};
}

namespace {

// words sorted; checks that they are exactly the leaves of a full subtree at
// `depth` under the common prefix of the range.
bool full_below(const std::vector<BitWord>& w, std::size_t lo, std::size_t hi,
                std::size_t depth) {
  if (lo == hi) return false;
  if (w[lo].size() == depth) return hi - lo == 1;
  std::size_t mid = lo;
  while (mid < hi && w[mid].size() > depth && w[mid][depth] == 0) ++mid;
  for (std::size_t i = lo; i < hi; ++i) {
    if (w[i].size() <= depth) return false;
  }
  return full_below(w, lo, mid, depth + 1) && full_below(w, mid, hi, depth + 1);
}

}  // namespace

bool is_partition_set(std::vector<BitWord> words) {
  std::sort(words.begin(), words.end());
  return full_below(words, 0, words.size(), 0);
}

bool is_partition_set(std::vector<Address> leaves, std::uint32_t roots) {
  std::map<std::uint32_t, std::vector<BitWord>> by_root;
  for (auto& a : leaves) {
    if (a.root >= roots) return false;
    by_root[a.root].push_back(std::move(a.word));
  }
  if (by_root.size() != roots) return false;
  for (auto& [r, ws] : by_root) {
    if (!is_partition_set(std::move(ws))) return false;
  }
  return true;
}

std::vector<Address> common_refinement(const std::vector<Address>& p,
                                       const std::vector<Address>& q) {
  std::set<Address> all(p.begin(), p.end());
  all.insert(q.begin(), q.end());
  std::vector<Address> out;
  // in sorted order a proper prefix comes immediately before some extension
  for (auto it = all.begin(); it != all.end(); ++it) {
    auto next = std::next(it);
    if (next != all.end() && it->is_prefix_of(*next)) continue;
    out.push_back(*it);
  }
  return out;
}

std::vector<BitWord> common_refinement(const std::vector<BitWord>& p,
                                       const std::vector<BitWord>& q) {
  std::vector<Address> a;
  std::vector<Address> b;
  for (const auto& w : p) a.push_back({0, w});
  for (const auto& w : q) b.push_back({0, w});
  std::vector<BitWord> out;
  for (auto& x : common_refinement(a, b)) out.push_back(std::move(x.word));
  return out;
}

// ---------------------------------------------------------------------------

EventuallyPeriodicWord::EventuallyPeriodicWord(BitWord prefix, BitWord period) {
  if (period.empty()) throw DiagramError("period must be nonempty");
  const std::string& s = period.bits();
  const std::size_t n = s.size();
  std::vector<std::size_t> fail(n, 0);
  for (std::size_t i = 1, k = 0; i < n; ++i) {
    while (k > 0 && s[i] != s[k]) k = fail[k - 1];
    if (s[i] == s[k]) ++k;
    fail[i] = k;
  }
  std::size_t p = n - fail[n - 1];
  std::string per = (n % p == 0) ? s.substr(0, p) : s;
  std::string pre = prefix.bits();
  while (!pre.empty() && pre.back() == per.back()) {
    pre.pop_back();
    std::rotate(per.rbegin(), per.rbegin() + 1, per.rend());
  }
  prefix_ = BitWord(std::move(pre));
  period_ = BitWord(std::move(per));
}

EventuallyPeriodicWord EventuallyPeriodicWord::parse(std::string_view text) {
  auto open = text.find('(');
  if (open == std::string_view::npos || text.empty() || text.back() != ')') {
    throw ParseError("expected prefix(period)", open == std::string_view::npos ? 0 : text.size());
  }
  try {
    return {BitWord::parse(text.substr(0, open)),
            BitWord(std::string(text.substr(open + 1, text.size() - open - 2)))};
  } catch (const DiagramError& e) {
    throw ParseError(e.what(), open);
  }
}

int EventuallyPeriodicWord::letter(std::size_t i) const {
  if (i < prefix_.size()) return prefix_[i];
  return period_[(i - prefix_.size()) % period_.size()];
}

BitWord EventuallyPeriodicWord::take(std::size_t n) const {
  std::string out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(letter(i) ? '1' : '0');
  return BitWord(std::move(out));
}

EventuallyPeriodicWord EventuallyPeriodicWord::drop(std::size_t n) const {
  if (n <= prefix_.size()) return {prefix_.suffix(n), period_};
  std::size_t shift = (n - prefix_.size()) % period_.size();
  const std::string& s = period_.bits();
  return {BitWord(), BitWord(s.substr(shift) + s.substr(0, shift))};
}

EventuallyPeriodicWord EventuallyPeriodicWord::prepend(const BitWord& w) const {
  return {w + prefix_, period_};
}

}  // namespace vphi
