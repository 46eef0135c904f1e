// Part of ssttool, a toolkit for symmetry handling in stable set problems.
// Licensed under the Apache License 2.0; see LICENSE.

#ifndef SST_TU_HPP
#define SST_TU_HPP

#include "sst/matrix.hpp"

#include <optional>

namespace sst
{

enum class TuMode
{
   Exhaustive, // exact; exponential, requires min(rows, cols) <= 16
   Sampled,    // seeded random square submatrices; "true" means no counterexample found
};

struct TuWitness
{
   std::vector<int> rows;
   std::vector<int> cols;
   Int det; // not in {0, +-1}

   std::string to_text() const;
};

struct TuVerdict
{
   bool is_tu = false;
   bool certified = false; // false for a sampled "no counterexample found"
   std::optional<TuWitness> witness;
};

/// Total-unimodularity check for a {0,+-1} matrix.
///
/// Exhaustive mode decides exactly via the Ghouila-Houri criterion,
/// enumerating all subsets of the smaller dimension and searching for a
/// +-1 signing with sums in {-1,0,1}; a failing subset is turned into a
/// determinant witness by a canonical-order submatrix search (Bareiss,
/// first found).  Sampled mode draws `samples` random square submatrices
/// per size from the given seed.
///
/// Throws std::invalid_argument on entries outside {0,+-1} or when the
/// exhaustive size cap is exceeded.
TuVerdict is_totally_unimodular(const RatMatrix& m, TuMode mode = TuMode::Exhaustive,
                                int samples = 2000, unsigned seed = 0);

/// Independent oracle: checks every square submatrix determinant directly.
/// Only sensible for small matrices; used to cross-check the main path.
TuVerdict tu_by_all_determinants(const RatMatrix& m);

} // namespace sst

#endif
