#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace vphi {

using BigInt = boost::multiprecision::cpp_int;

/// Sparse integer matrix given by its nonzero entries, row by row.
struct SparseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>> entries;
};

/// Nonzero invariant factors (Smith normal form diagonal), ascending; their
/// count is the rank.
std::vector<BigInt> invariant_factors(const SparseMatrix& m);

/// Dense exact Smith normal form diagonal, used for small remainders and as a
/// reference implementation.
std::vector<BigInt> invariant_factors_dense(std::vector<std::vector<BigInt>> a);

}  // namespace vphi
