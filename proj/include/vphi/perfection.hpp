#pragma once

#include <tuple>
#include <utility>
#include <vector>

#include "vphi/element.hpp"

namespace vphi {

struct CommutatorCertificate {
  std::vector<std::pair<Element, Element>> factors;
  Element tail;
  Element target;

  /// product of [p_i, q_i] times tail
  Element product() const;
  bool verify() const;
};

struct Split3 {
  Element r;
  Element f;
  Element v;
};

/// a = r f v with r = [T,((1,g2..gn),id),T], f = [T,((g1,1..1),id),T] and v
/// label-free. Diagonal context.
Split3 split3(const Element& a);

/// [T, ((1..1), (1 2)), T].
Element swap12_conjugator(const ContextPtr& ctx, const std::vector<BitWord>& leaves);

/// The elements a, b of the commutator construction, exposed for stepwise
/// checks; v must be [T,((1,g2..gn),id),T].
struct WitnessParts {
  Element a;
  Element b;
  std::vector<BitWord> t_prime;
  std::vector<BitWord> t_double;
};
WitnessParts witness_parts(const Element& v);

/// (p, q) with v = p q p^-1 q^-1.
std::pair<Element, Element> commutator_witness(const Element& v);

CommutatorCertificate decompose(const Element& a);

}  // namespace vphi
