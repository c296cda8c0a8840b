#pragma once

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "vphi/group.hpp"
#include "vphi/word.hpp"

namespace vphi {

/// ((left, right), swap) in G wr S2.
struct WreathImage {
  GroupElement left;
  GroupElement right;
  bool swap = false;

  const GroupElement& slot(int x) const { return x ? right : left; }
  friend bool operator==(const WreathImage&, const WreathImage&) = default;
};

/// Product in G wr S2 with right actions: the second factor's slots are read
/// through the first factor's swap.
WreathImage wreath_mul(const Group& g, const WreathImage& a, const WreathImage& b);

enum class Rule { diagonal, vanishing, right, left, kappa, adding, custom };
enum class Injectivity { injective, noninjective, unknown };

std::string to_string(Rule r);
std::string to_string(Injectivity i);

class WreathRecursion;
using RecursionPtr = std::shared_ptr<const WreathRecursion>;

class WreathRecursion {
 public:
  static RecursionPtr diagonal(GroupPtr g);
  static RecursionPtr vanishing(GroupPtr g);
  static RecursionPtr right(GroupPtr g);
  static RecursionPtr left(GroupPtr g);
  /// g -> ((g,g), kappa(g)); kappa given per element index, must be a
  /// homomorphism to S2.
  static RecursionPtr kappa(GroupPtr g, std::vector<bool> kappa);
  /// t -> ((1,t), swap) on the infinite cyclic group.
  static RecursionPtr adding(GroupPtr g);
  /// One image per element index; validated to be a homomorphism.
  static RecursionPtr custom(GroupPtr g, std::vector<WreathImage> table);

  const GroupPtr& group() const noexcept { return group_; }
  Rule rule() const noexcept { return rule_; }
  Injectivity injectivity() const noexcept { return injectivity_; }
  bool injective() const noexcept { return injectivity_ == Injectivity::injective; }

  WreathImage apply(const GroupElement& g) const;
  /// Unique g with apply(g) == w, if any. Throws RecursionError unless the
  /// recursion is proven injective.
  std::optional<GroupElement> preimage(const WreathImage& w) const;

  /// Image of a finite word under g, and the section of g at that word.
  std::pair<BitWord, GroupElement> act(const GroupElement& g, const BitWord& w) const;
  BitWord tree_action(const GroupElement& g, const BitWord& w) const {
    return act(g, w).first;
  }

  /// Exhaustive homomorphism check for finite groups, sampled otherwise.
  bool check_homomorphism(std::size_t samples = 500) const;

  /// Kernel of a finite recursion, by element index.
  std::vector<std::size_t> kernel() const;

  std::string describe() const;

 private:
  WreathRecursion(GroupPtr g, Rule r) : group_(std::move(g)), rule_(r) {}
  void tabulate(std::vector<WreathImage> table);
  WreathImage formula(const GroupElement& g) const;

  GroupPtr group_;
  Rule rule_;
  Injectivity injectivity_ = Injectivity::unknown;
  std::vector<bool> kappa_;
  // finite groups: image of every element and the inverse lookup
  std::vector<WreathImage> table_;
  std::unordered_map<std::size_t, std::size_t> inverse_;
  std::size_t image_key(const WreathImage& w) const;

  friend struct Injectivization injectivize(const RecursionPtr& phi);
};

struct Injectivization {
  GroupPtr quotient;
  /// G -> quotient; identity when no step was needed.
  std::shared_ptr<const FiniteHomomorphism> projection;
  RecursionPtr recursion;
  std::size_t steps = 0;
  /// |G_0|, |G_1|, ..., |quotient|
  std::vector<std::size_t> orders;
};

/// Quotients G by ker(phi) until the recursion becomes injective.
Injectivization injectivize(const RecursionPtr& phi);

}  // namespace vphi
