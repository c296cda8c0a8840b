#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vphi/element.hpp"
#include "vphi/homology.hpp"

namespace vphi {

using Simplex = std::vector<std::uint32_t>;

/// A finite abstract simplicial complex, closed under faces. Simplices are
/// sorted vertex tuples, grouped by dimension.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  /// Adds every face of every given simplex.
  SimplicialComplex(std::vector<std::string> vertex_keys, const std::vector<Simplex>& simplices);

  std::size_t vertex_count() const noexcept { return keys_.size(); }
  const std::vector<std::string>& keys() const noexcept { return keys_; }
  /// -1 for the empty complex.
  int dimension() const noexcept { return static_cast<int>(faces_.size()) - 1; }
  /// Sorted k-simplices; empty beyond the dimension.
  const std::vector<Simplex>& simplices(int k) const;
  std::vector<std::size_t> f_vector() const;
  std::vector<Simplex> maximal() const;
  bool contains(const Simplex& s) const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  std::vector<std::string> keys_;
  std::vector<std::vector<Simplex>> faces_;
};

SimplicialComplex matching_complex(std::size_t n);

struct HomologyResult {
  /// reduced Betti numbers for dimensions 0..betti.size()-1
  std::vector<std::size_t> betti;
  /// elementary divisors > 1 per dimension
  std::vector<std::vector<BigInt>> torsion;
  /// reduced H_{-1} is Z for the empty complex
  bool empty_complex = false;
  /// alternating face count equals alternating Betti sum; only meaningful
  /// when every dimension was computed
  bool euler_checked = false;
  bool euler_consistent = false;

  bool vanishes_through(int k) const;
};

/// Reduced integer homology in dimensions 0..up_to (all when up_to < 0).
HomologyResult homology(const SimplicialComplex& c, int up_to = -1);

/// The descending link complex together with its vertex data.
struct DlinkComplex {
  SimplicialComplex complex;
  std::size_t n = 0;
  /// lex-min representative of every vertex class
  std::vector<Element> vertex_rep;
  /// 1-based pair for every vertex
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pi;
  std::size_t classes = 0;
  std::size_t elements = 0;
};

/// Enumeration cap for |G|^n n!; read from VPHI_ENUM_CAP, default 200000.
std::size_t enumeration_cap();

/// Brute-force descending link E_n(G, phi).
DlinkComplex dlink_complex(std::size_t n, const ContextPtr& ctx);

/// Roots (1-based) sent to the two leaves of the caret of a single-caret
/// element [1_n, (g, s), F_i].
std::pair<std::uint32_t, std::uint32_t> forgetful_pi(const Element& vertex);

/// Complex with the same vertices whose simplices are all choices of one
/// vertex per pair over every matching.
SimplicialComplex fiber_join(const DlinkComplex& d);

struct CompleteJoinReport {
  bool simplicial = false;
  bool surjective = false;
  bool injective_on_simplices = false;
  bool join = false;
  bool ok() const { return simplicial && surjective && injective_on_simplices && join; }
};

CompleteJoinReport check_complete_join(const DlinkComplex& d);
CompleteJoinReport check_complete_join(std::size_t n, const ContextPtr& ctx);

struct ConnectivityReport {
  std::size_t n = 0;
  int bound = 0;  // floor((n+1)/3) - 2
  HomologyResult homology;
  bool ok = false;
};

ConnectivityReport connectivity_check(const SimplicialComplex& c, std::size_t n);
ConnectivityReport connectivity_check(std::size_t n, const ContextPtr& ctx);

}  // namespace vphi
