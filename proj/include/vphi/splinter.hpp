#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "vphi/element.hpp"

namespace vphi {

struct SplinterPoint {
  std::size_t x = 0;
  BitWord w;
  friend bool operator==(const SplinterPoint&, const SplinterPoint&) = default;
};

/// A finite G-set X with a faithful right action; by default G acting on
/// itself by right multiplication.
class SplinterModel {
 public:
  explicit SplinterModel(ContextPtr ctx);
  /// action[x][index of g] = x.g; validated as a faithful right action.
  SplinterModel(ContextPtr ctx, std::vector<std::vector<std::size_t>> action);

  std::size_t points() const noexcept { return action_.size(); }

  /// (x, u_i w) -> (x.g_i, v_i w). Throws "insufficient depth" if no domain
  /// word prefixes w.
  SplinterPoint act(const Element& a, const SplinterPoint& p) const;

  /// act(ab, p) == act(b, act(a, p)) on `samples` random points with words of
  /// length `depth`. `product` defaults to a*b.
  bool check_hom(const Element& a, const Element& b, std::size_t samples, std::size_t depth,
                 std::mt19937_64& rng) const;
  bool check_hom(const Element& a, const Element& b, const Element& product,
                 std::size_t samples, std::size_t depth, std::mt19937_64& rng) const;

  /// True iff a fixes every point (x, w) with |w| = depth.
  bool check_faithful(const Element& a, std::size_t depth) const;

 private:
  void validate();
  ContextPtr ctx_;
  std::vector<std::vector<std::size_t>> action_;
};

}  // namespace vphi
