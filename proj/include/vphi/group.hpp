#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace vphi {

/// A group element as a canonical integer encoding. The encoding is owned by
/// the backend that produced it: a table index, an integer exponent, the image
/// list of a permutation, a freely reduced word, or a length-prefixed tuple.
class GroupElement {
 public:
  using Storage = boost::container::small_vector<std::int64_t, 3>;

  GroupElement() = default;
  GroupElement(std::initializer_list<std::int64_t> values) : data_(values) {}
  explicit GroupElement(Storage data) : data_(std::move(data)) {}

  static GroupElement scalar(std::int64_t value) { return GroupElement{value}; }

  std::span<const std::int64_t> data() const noexcept {
    return {data_.data(), data_.size()};
  }
  const Storage& storage() const noexcept { return data_; }
  std::int64_t value() const { return data_.at(0); }
  std::size_t size() const noexcept { return data_.size(); }

  friend bool operator==(const GroupElement& a, const GroupElement& b) {
    return a.data_ == b.data_;
  }
  friend std::strong_ordering operator<=>(const GroupElement& a,
                                          const GroupElement& b) {
    return std::lexicographical_compare_three_way(
        a.data_.begin(), a.data_.end(), b.data_.begin(), b.data_.end());
  }

  std::size_t hash() const noexcept;

 private:
  Storage data_;
};

enum class GroupKind { finite_table, cyclic, symmetric, free, product };

/// Exact arithmetic with decidable equality. Instances are immutable and
/// shared through GroupPtr.
class Group {
 public:
  virtual ~Group() = default;

  virtual GroupKind kind() const noexcept = 0;
  /// Number of elements, or nullopt for infinite groups.
  virtual std::optional<std::size_t> order() const noexcept = 0;
  bool is_finite() const noexcept { return order().has_value(); }
  bool is_trivial() const noexcept { return order() == std::size_t{1}; }

  virtual GroupElement identity() const = 0;
  virtual bool contains(const GroupElement& g) const = 0;

  /// Throws GroupError("backend mismatch") unless both operands belong here.
  GroupElement mul(const GroupElement& a, const GroupElement& b) const;
  GroupElement inv(const GroupElement& a) const;
  GroupElement pow(const GroupElement& a, std::int64_t k) const;
  bool is_identity(const GroupElement& a) const { return a == identity(); }

  /// Finite groups only: a bijection with 0..order()-1, identity at 0.
  virtual std::size_t index_of(const GroupElement& g) const;
  virtual GroupElement element_at(std::size_t index) const;
  std::vector<GroupElement> elements() const;

  /// Backend token syntax; "1" always denotes the identity.
  virtual std::string format(const GroupElement& g) const = 0;
  GroupElement parse(std::string_view token) const;

  virtual std::string describe() const = 0;

  /// Uniform for finite groups; `scale` bounds word length or absolute value
  /// for infinite ones.
  virtual GroupElement random(std::mt19937_64& rng, int scale) const = 0;

  void require(const GroupElement& g) const;

 protected:
  virtual GroupElement do_mul(const GroupElement& a,
                              const GroupElement& b) const = 0;
  virtual GroupElement do_inv(const GroupElement& a) const = 0;
  virtual GroupElement do_parse(std::string_view token) const = 0;
};

using GroupPtr = std::shared_ptr<const Group>;

/// Cayley table with 0 as identity; validated as a group at construction.
GroupPtr make_finite_table(std::vector<std::vector<std::size_t>> table,
                           std::vector<std::string> names = {});
/// Cyclic group of order n; n == 0 gives the infinite cyclic group.
GroupPtr make_cyclic(std::size_t n);
GroupPtr make_symmetric(std::size_t m);
GroupPtr make_free(std::size_t rank);
GroupPtr make_product(std::vector<GroupPtr> factors);
GroupPtr make_trivial();

/// Cayley table of a finite backend (used to quotient and to re-encode).
std::vector<std::vector<std::size_t>> cayley_table(const Group& group);

/// Exhaustive (order <= exhaustive_limit) or sampled check of the group laws.
bool check_group_axioms(const Group& group, std::mt19937_64& rng,
                        std::size_t exhaustive_limit = 24,
                        std::size_t samples = 2000);

/// A homomorphism between finite backends given by images of every element
/// in index order. Validated at construction.
class FiniteHomomorphism {
 public:
  FiniteHomomorphism(GroupPtr source, GroupPtr target,
                     std::vector<GroupElement> images);

  static FiniteHomomorphism identity(const GroupPtr& group);
  static FiniteHomomorphism trivial(const GroupPtr& source,
                                    const GroupPtr& target);

  GroupElement operator()(const GroupElement& g) const;
  bool is_injective() const;
  const GroupPtr& source() const noexcept { return source_; }
  const GroupPtr& target() const noexcept { return target_; }

 private:
  GroupPtr source_;
  GroupPtr target_;
  std::vector<GroupElement> images_;
};

}  // namespace vphi

template <>
struct std::hash<vphi::GroupElement> {
  std::size_t operator()(const vphi::GroupElement& g) const noexcept {
    return g.hash();
  }
};
