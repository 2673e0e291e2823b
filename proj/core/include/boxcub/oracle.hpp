#pragma once

#include <stdexcept>

#include "boxcub/graph.hpp"
#include "boxcub/interval.hpp"

namespace boxcub {

inline constexpr int kDefaultOracleLimit = 7;
// Non-edges are tracked in a 64-bit mask, so C(n,2) must fit.
inline constexpr int kOracleHardLimit = 11;

class OracleLimitError : public std::length_error {
 public:
  using std::length_error::length_error;
};

struct BoxicityResult {
  int boxicity = 0;
  BoxRepresentation witness;
};

struct CubicityResult {
  int cubicity = 0;
  CubeRepresentation witness;
};

// Exact boxicity / cubicity with a certifying representation.
//
// Every vertex ordering determines the smallest interval (resp. unit
// interval) supergraph for which that ordering is a left-endpoint order; each
// such supergraph omits a "break set" of the graph's non-edges. Every interval
// supergraph contains one of these, so the answer is the minimum number of
// break sets covering all non-edges. Ties go to the lexicographically
// smallest cover over break sets sorted by mask value, and each break set is
// realized by the first ordering (in lexicographic permutation order) that
// produces it.
//
// Throws OracleLimitError when n > max_n or n > kOracleHardLimit. Complete
// graphs return 0 with an empty witness before any enumeration.
BoxicityResult exact_boxicity(const Graph& g, int max_n = kDefaultOracleLimit);
CubicityResult exact_cubicity(const Graph& g, int max_n = kDefaultOracleLimit);

}  // namespace boxcub
