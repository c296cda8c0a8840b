#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vphi/recursion.hpp"
#include "vphi/word.hpp"

namespace vphi {

struct Column {
  Address dom;
  GroupElement label;
  Address ran;

  friend bool operator==(const Column&, const Column&) = default;
};

/// A G-labeled paired forest diagram (G-matrix) with m domain roots and n
/// range roots. Columns are kept sorted by domain address; the permutation is
/// implicit in the range addresses.
class LabeledDiagram {
 public:
  LabeledDiagram(RecursionPtr phi, std::uint32_t m, std::uint32_t n,
                 std::vector<Column> columns);

  /// One column (r:eps | 1 | r:eps) per root.
  static LabeledDiagram identity(RecursionPtr phi, std::uint32_t roots = 1);

  const RecursionPtr& phi() const noexcept { return phi_; }
  const Group& group() const { return *phi_->group(); }
  std::uint32_t m() const noexcept { return m_; }
  std::uint32_t n() const noexcept { return n_; }
  const std::vector<Column>& columns() const noexcept { return columns_; }
  std::size_t size() const noexcept { return columns_.size(); }

  std::vector<Address> domain() const;
  std::vector<Address> range() const;
  /// sigma[i] = lex rank of the range address of column i.
  std::vector<std::size_t> sigma() const;
  /// Longest domain word.
  std::size_t depth() const;
  bool all_labels_trivial() const;

  LabeledDiagram simple_expand(std::size_t k) const;
  /// Merge the columns at parent.child(0) and parent.child(1), if possible.
  std::optional<LabeledDiagram> simple_reduce(const Address& parent) const;
  /// The unique reduced representative.
  LabeledDiagram reduce() const;
  /// Expand until the domain equals `target` (a refinement of the domain).
  LabeledDiagram expand_to(const std::vector<Address>& target) const;
  LabeledDiagram expand_range_to(const std::vector<Address>& target) const;
  /// Every domain word expanded to at least `depth` letters.
  LabeledDiagram expand_uniform(std::size_t depth) const;

  /// Columns swapped and labels inverted; not reduced.
  LabeledDiagram inverse() const;
  /// Column-wise composition over the common refinement; not reduced.
  friend LabeledDiagram compose(const LabeledDiagram& a, const LabeledDiagram& b);

  std::string str() const;

  friend bool operator==(const LabeledDiagram& a, const LabeledDiagram& b) {
    return a.phi_ == b.phi_ && a.m_ == b.m_ && a.n_ == b.n_ && a.columns_ == b.columns_;
  }

 private:
  LabeledDiagram(RecursionPtr phi, std::uint32_t m, std::uint32_t n,
                 std::vector<Column> columns, bool trusted);
  std::pair<Column, Column> split(const Column& c) const;

  RecursionPtr phi_;
  std::uint32_t m_ = 1;
  std::uint32_t n_ = 1;
  std::vector<Column> columns_;
};

LabeledDiagram compose(const LabeledDiagram& a, const LabeledDiagram& b);

}  // namespace vphi
