#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "vphi/complex.hpp"
#include "vphi/germs.hpp"
#include "vphi/perfection.hpp"

namespace vphi {

using Json = nlohmann::json;

/// Group and recursion from a context file:
///   {"group": {...}, "recursion": {"rule": ..., "table": [...], "kappa": [...]}}
/// Group kinds: finite (table, optional names), cyclic (n, 0 or absent for Z),
/// free (rank), symmetric (m), product (factors). Custom table entries are
/// [left, right, swap] or {"left","right","swap"}, one per element index,
/// with left/right given as tokens.
GroupPtr group_from_json(const Json& j);
RecursionPtr recursion_from_json(const Json& j);
ContextPtr context_from_json(const Json& j);
ContextPtr load_context(const std::string& path);
/// Trivial group with the diagonal recursion.
ContextPtr default_context();

Json to_json(const Element& a);
Element element_from_json(const ContextPtr& ctx, const Json& j);
/// [dom|label|ran; ...] with source-group tokens.
std::string to_text(const Element& a);

Json to_json(const SimplicialComplex& c);
SimplicialComplex complex_from_json(const Json& j);

/// One object per dimension: {"dim", "betti", "torsion"}.
Json to_json(const HomologyResult& h);

Json to_json(const SupportApprox& s);

/// {"target", "factors": [{"p","q"}], "tail", "verified"}
Json to_json(const CommutatorCertificate& c);
CommutatorCertificate certificate_from_json(const ContextPtr& ctx, const Json& j);

Json read_json_file(const std::string& path);

}  // namespace vphi
