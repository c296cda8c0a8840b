#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace vphi {

/// A finite binary word, stored as a string over {'0','1'}. The empty word is
/// the root of the tree; ordering is lexicographic with 0 < 1.
class BitWord {
 public:
  BitWord() = default;
  explicit BitWord(std::string bits);

  /// Accepts "", "eps" or a string of 0/1.
  static BitWord parse(std::string_view text);

  const std::string& bits() const noexcept { return bits_; }
  std::size_t size() const noexcept { return bits_.size(); }
  bool empty() const noexcept { return bits_.empty(); }
  int operator[](std::size_t i) const { return bits_[i] == '1' ? 1 : 0; }
  int back() const { return bits_.back() == '1' ? 1 : 0; }

  BitWord child(int bit) const;
  BitWord parent() const;
  BitWord prefix(std::size_t n) const { return BitWord(bits_.substr(0, n), 0); }
  BitWord suffix(std::size_t from) const { return BitWord(bits_.substr(from), 0); }
  bool is_prefix_of(const BitWord& other) const noexcept;
  bool comparable(const BitWord& other) const noexcept {
    return is_prefix_of(other) || other.is_prefix_of(*this);
  }

  /// "eps" for the empty word, the bits otherwise.
  std::string str() const { return bits_.empty() ? "eps" : bits_; }

  friend BitWord operator+(const BitWord& a, const BitWord& b) {
    return BitWord(a.bits_ + b.bits_, 0);
  }
  friend bool operator==(const BitWord&, const BitWord&) = default;
  friend std::strong_ordering operator<=>(const BitWord& a, const BitWord& b) {
    return a.bits_.compare(b.bits_) <=> 0;
  }

 private:
  BitWord(std::string bits, int) : bits_(std::move(bits)) {}
  std::string bits_;
};

/// A vertex of an m-rooted binary forest: root index and a word below it.
struct Address {
  std::uint32_t root = 0;
  BitWord word;

  Address child(int bit) const { return {root, word.child(bit)}; }
  bool is_prefix_of(const Address& o) const {
    return root == o.root && word.is_prefix_of(o.word);
  }
  bool comparable(const Address& o) const {
    return root == o.root && word.comparable(o.word);
  }
  /// "r:word" (word may be empty).
  std::string str() const;
  static Address parse(std::string_view text);

  friend bool operator==(const Address&, const Address&) = default;
  friend std::strong_ordering operator<=>(const Address& a, const Address& b) {
    if (auto c = a.root <=> b.root; c != 0) return c;
    return a.word <=> b.word;
  }
};

/// True iff the words are pairwise prefix-incomparable and every infinite
/// word has exactly one of them as a prefix.
bool is_partition_set(std::vector<BitWord> words);
/// Same for an m-rooted forest.
bool is_partition_set(std::vector<Address> leaves, std::uint32_t roots);

/// Coarsest partition refining both inputs (both must be partitions of the
/// same forest).
std::vector<Address> common_refinement(const std::vector<Address>& p,
                                       const std::vector<Address>& q);
std::vector<BitWord> common_refinement(const std::vector<BitWord>& p,
                                       const std::vector<BitWord>& q);

/// A point of the Cantor set given as prefix followed by a repeated block,
/// kept canonical: shortest period, then shortest prefix.
class EventuallyPeriodicWord {
 public:
  EventuallyPeriodicWord(BitWord prefix, BitWord period);

  /// Syntax "prefix(period)", e.g. "(0)" for 000... or "1(01)".
  static EventuallyPeriodicWord parse(std::string_view text);
  static EventuallyPeriodicWord zeros() { return {BitWord(), BitWord("0")}; }

  const BitWord& prefix() const noexcept { return prefix_; }
  const BitWord& period() const noexcept { return period_; }

  int letter(std::size_t i) const;
  BitWord take(std::size_t n) const;
  /// The tail after removing the first n letters.
  EventuallyPeriodicWord drop(std::size_t n) const;
  /// w prepended to this point.
  EventuallyPeriodicWord prepend(const BitWord& w) const;

  std::string str() const { return prefix_.bits() + "(" + period_.bits() + ")"; }

  friend bool operator==(const EventuallyPeriodicWord&,
                         const EventuallyPeriodicWord&) = default;
  friend auto operator<=>(const EventuallyPeriodicWord&,
                          const EventuallyPeriodicWord&) = default;

 private:
  BitWord prefix_;
  BitWord period_;
};

}  // namespace vphi
