#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vphi/diagram.hpp"

namespace vphi {

class Context;
using ContextPtr = std::shared_ptr<const Context>;

/// The (G, phi) an element lives over. Non-injective finite recursions are
/// replaced by their injectivization; labels given in the original group are
/// pushed through the projection.
class Context {
 public:
  static ContextPtr make(RecursionPtr phi);

  /// The recursion as supplied.
  const RecursionPtr& source() const noexcept { return source_; }
  /// The injective recursion all elements use.
  const RecursionPtr& phi() const noexcept { return phi_; }
  const Group& group() const { return *phi_->group(); }
  const GroupPtr& group_ptr() const { return phi_->group(); }
  Rule rule() const noexcept { return phi_->rule(); }
  std::size_t tower_steps() const noexcept { return steps_; }
  const std::vector<std::size_t>& tower_orders() const noexcept { return orders_; }

  /// Parses a token of the source group and projects it.
  GroupElement label(std::string_view token) const;
  GroupElement project(const GroupElement& source_element) const;
  /// Working-group element printed as a source-group token, so that
  /// label(format(g)) == g.
  std::string format(const GroupElement& g) const;

 private:
  Context() = default;
  RecursionPtr source_;
  RecursionPtr phi_;
  std::shared_ptr<const FiniteHomomorphism> projection_;
  std::vector<GroupElement> reps_;
  std::size_t steps_ = 0;
  std::vector<std::size_t> orders_;
};

/// An element of V_phi(G) (m = n = 1) or of the labeled Thompson groupoid,
/// held as its reduced diagram.
class Element {
 public:
  /// Reduces `d`, which must use ctx->phi().
  Element(ContextPtr ctx, const LabeledDiagram& d);

  /// Columns with labels in the source group of `ctx`.
  static Element from_columns(ContextPtr ctx, std::uint32_t m, std::uint32_t n,
                              std::vector<Column> source_columns);
  static Element identity(ContextPtr ctx, std::uint32_t roots = 1);

  const ContextPtr& context() const noexcept { return ctx_; }
  const LabeledDiagram& diagram() const noexcept { return d_; }
  const std::vector<Column>& columns() const noexcept { return d_.columns(); }
  std::uint32_t m() const noexcept { return d_.m(); }
  std::uint32_t n() const noexcept { return d_.n(); }

  Element operator*(const Element& b) const;
  Element inverse() const;
  Element pow(std::int64_t k) const;
  bool is_identity() const;
  bool trivial_labels() const { return d_.all_labels_trivial(); }

  std::string str() const { return d_.str(); }

  friend bool operator==(const Element& a, const Element& b) {
    return a.ctx_ == b.ctx_ && a.d_ == b.d_;
  }

 private:
  Element(ContextPtr ctx, LabeledDiagram d, bool reduced);
  ContextPtr ctx_;
  LabeledDiagram d_;
};

/// p q p^-1 q^-1
Element commutator(const Element& p, const Element& q);
/// y^-1 x y
Element conjugate(const Element& x, const Element& y);

/// First `depth` letters of the image of w (tree elements only).
BitWord act_point(const Element& a, const EventuallyPeriodicWord& w, std::size_t depth);
/// Exact image as an eventually periodic word; nullopt if the transducer
/// state does not repeat within `budget` period blocks.
std::optional<EventuallyPeriodicWord> act_exact(const Element& a,
                                                const EventuallyPeriodicWord& w,
                                                std::size_t budget = 4096);

/// [C, ((g,1),id), C] for the caret C.
Element iota(const ContextPtr& ctx, const GroupElement& g);
/// Label g on the cone of u, trivial elsewhere, identity map.
Element lambda(const ContextPtr& ctx, const BitWord& u, const GroupElement& g);
/// [T0, ((1,g,1),id), T0] with leaves {00, 01, 1}; diagonal context.
Element a_g(const ContextPtr& ctx, const GroupElement& g);

/// First label of the reduced diagram; diagonal context only.
GroupElement rho(const Element& a);
/// All labels replaced by 1; diagonal context only.
Element v_strip(const Element& a);
/// Labels pushed through f; both contexts diagonal.
Element v_functor(const FiniteHomomorphism& f, const Element& a, const ContextPtr& target);

bool in_F(const Element& a);
bool in_T(const Element& a);

/// A trivial-label element with the given domain and range leaf orders
/// (column i maps dom[i] to ran[i]).
Element permutation_element(const ContextPtr& ctx, const std::vector<BitWord>& dom,
                            const std::vector<BitWord>& ran);

/// Factors whose product is a, each either trivial-label or an iota image;
/// diagonal context only.
std::vector<Element> generation_word(const Element& a);

}  // namespace vphi
