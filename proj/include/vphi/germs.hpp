#pragma once

#include <cstddef>
#include <vector>

#include "vphi/element.hpp"

namespace vphi {

/// Label of a on the dyadic interval u. Throws when u is coarser than the
/// reduced diagram along its path.
GroupElement label_at(const Element& a, const BitWord& u);

struct SupportApprox {
  std::size_t depth = 0;
  /// depth-length words not certified outside the labeled support, sorted
  std::vector<BitWord> included;
};

SupportApprox lsupp_approx(const Element& a, std::size_t depth);

/// Whether [a, b] is trivial; throws unless the supports at `depth` are
/// disjoint.
bool disjoint_supports_commute(const Element& a, const Element& b, std::size_t depth);

enum class Verdict { yes, no, unknown };

struct GermResult {
  Verdict verdict = Verdict::unknown;  // yes = equivalent, no = distinct
  std::size_t depth = 0;               // germ_compare: k of the cone 0^k examined last
};

/// Labeled germs at 000... compared by following the spine.
GermResult germ_compare(const Element& a, const Element& b, std::size_t budget = 4096);

/// yes iff the images of 000... differ; depth is the first differing letter
/// position plus one.
GermResult perp(const Element& a, const Element& b, std::size_t budget = 4096);

/// gamma with B_i gamma ~ A_i at 000... for all i.
Element transitivity_witness(const std::vector<Element>& A, const std::vector<Element>& B,
                             std::size_t budget = 64);

}  // namespace vphi
