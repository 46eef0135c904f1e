// Part of ssttool, a toolkit for symmetry handling in stable set problems.
// Licensed under the Apache License 2.0; see LICENSE.

#ifndef SST_MATRIX_HPP
#define SST_MATRIX_HPP

#include "sst/plan.hpp"
#include "sst/rat.hpp"

#include <string>
#include <vector>

namespace sst
{

/// Dense exact-rational matrix.  mpq_class keeps entries normalized
/// (gcd-reduced, positive denominator) by construction.
class RatMatrix
{
public:
   RatMatrix() = default;
   RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

   int rows() const { return rows_; }
   int cols() const { return cols_; }

   Rat& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
   const Rat& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

   RatMatrix submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const;
   RatMatrix transpose() const;

   bool operator==(const RatMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

   /// Plain-text integer/rational grid, rows on lines.
   std::string to_text() const;

private:
   int rows_ = 0;
   int cols_ = 0;
   std::vector<Rat> a_;
};

/// Inequality system A x <= b with per-variable bounds [lo, hi].
struct IneqSystem
{
   RatMatrix a;
   std::vector<Rat> b;
   std::vector<std::pair<Rat, Rat>> bounds;

   int num_vars() const { return static_cast<int>(bounds.size()); }

   /// Appends one <= row (resizes the matrix).
   void add_row(const LinIneq& row);
   /// Appends an equality as two <= rows.
   void add_eq(const LinIneq& row);

   static IneqSystem boxed(int nvars, const Rat& lo = Rat(0), const Rat& hi = Rat(1));
};

/// Clique-node incidence matrix: rows are the maximal cliques (sorted
/// lexicographically), columns the nodes.
RatMatrix clique_matrix(const Graph& g);

/// Exact determinant via fraction-free (Bareiss) elimination on big
/// integers after clearing denominators.
Rat determinant(const RatMatrix& m);
/// Determinant of an integer matrix (entries must be integral).
Int determinant_int(const RatMatrix& m);

/// Clique matrix of g stacked with one row per SST clique cut (-1 at the
/// leader, +1 at each clique member), then with the columns of nodes removed
/// by the deletion operation dropped and all-zero rows removed.
RatMatrix extend_for_theorem(const Graph& g, const SstPlan& plan);

/// Affine rank of a point set: rank of the differences to the first point
/// (the dimension of the affine hull).  Throws on an empty list.
int affine_rank(const std::vector<std::vector<Rat>>& points);

} // namespace sst

#endif
