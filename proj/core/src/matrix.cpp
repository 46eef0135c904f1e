// Part of ssttool, a toolkit for symmetry handling in stable set problems.
// Licensed under the Apache License 2.0; see LICENSE.

#include "sst/matrix.hpp"

#include "sst/presolve.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace sst
{

RatMatrix RatMatrix::submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const
{
   RatMatrix s(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
   for (size_t i = 0; i < rows.size(); ++i)
      for (size_t j = 0; j < cols.size(); ++j)
         s.at(static_cast<int>(i), static_cast<int>(j)) = at(rows[i], cols[j]);
   return s;
}

RatMatrix RatMatrix::transpose() const
{
   RatMatrix t(cols_, rows_);
   for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c)
         t.at(c, r) = at(r, c);
   return t;
}

std::string RatMatrix::to_text() const
{
   std::ostringstream out;
   for (int r = 0; r < rows_; ++r)
   {
      for (int c = 0; c < cols_; ++c)
         out << (c ? " " : "") << to_string(at(r, c));
      out << '\n';
   }
   return out.str();
}

void IneqSystem::add_row(const LinIneq& row)
{
   RatMatrix next(a.rows() + 1, num_vars());
   for (int r = 0; r < a.rows(); ++r)
      for (int c = 0; c < a.cols(); ++c)
         next.at(r, c) = a.at(r, c);
   for (const auto& [v, coef] : row.terms)
      next.at(a.rows(), v) = coef;
   a = std::move(next);
   b.push_back(row.rhs);
}

void IneqSystem::add_eq(const LinIneq& row)
{
   add_row(row);
   LinIneq neg;
   neg.rhs = -row.rhs;
   for (const auto& [v, c] : row.terms)
      neg.terms.emplace_back(v, -c);
   add_row(neg);
}

IneqSystem IneqSystem::boxed(int nvars, const Rat& lo, const Rat& hi)
{
   IneqSystem sys;
   sys.a = RatMatrix(0, nvars);
   sys.bounds.assign(static_cast<size_t>(nvars), {lo, hi});
   return sys;
}

RatMatrix clique_matrix(const Graph& g)
{
   auto cliques = maximal_cliques(g);
   RatMatrix m(static_cast<int>(cliques.size()), g.num_nodes());
   for (size_t r = 0; r < cliques.size(); ++r)
      for (int v : cliques[r])
         m.at(static_cast<int>(r), v) = 1;
   return m;
}

Int determinant_int(const RatMatrix& m)
{
   if (m.rows() != m.cols())
      throw std::invalid_argument("determinant: matrix not square");
   const int n = m.rows();
   std::vector<std::vector<Int>> a(static_cast<size_t>(n), std::vector<Int>(static_cast<size_t>(n)));
   for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c)
      {
         const Rat& x = m.at(r, c);
         if (!is_integer(x))
            throw std::invalid_argument("determinant_int: non-integer entry");
         a[static_cast<size_t>(r)][static_cast<size_t>(c)] = x.get_num();
      }

   // Bareiss fraction-free elimination
   Int prev = 1;
   int sign = 1;
   for (int k = 0; k < n - 1; ++k)
   {
      if (a[static_cast<size_t>(k)][static_cast<size_t>(k)] == 0)
      {
         int pivot = -1;
         for (int r = k + 1; r < n; ++r)
            if (a[static_cast<size_t>(r)][static_cast<size_t>(k)] != 0)
            {
               pivot = r;
               break;
            }
         if (pivot < 0)
            return 0;
         std::swap(a[static_cast<size_t>(k)], a[static_cast<size_t>(pivot)]);
         sign = -sign;
      }
      for (int i = k + 1; i < n; ++i)
         for (int j = k + 1; j < n; ++j)
         {
            Int num = a[static_cast<size_t>(i)][static_cast<size_t>(j)] * a[static_cast<size_t>(k)][static_cast<size_t>(k)] -
                      a[static_cast<size_t>(i)][static_cast<size_t>(k)] * a[static_cast<size_t>(k)][static_cast<size_t>(j)];
            a[static_cast<size_t>(i)][static_cast<size_t>(j)] = num / prev; // exact by Bareiss
         }
      prev = a[static_cast<size_t>(k)][static_cast<size_t>(k)];
   }
   return sign * a[static_cast<size_t>(n - 1)][static_cast<size_t>(n - 1)];
}

Rat determinant(const RatMatrix& m)
{
   if (m.rows() != m.cols())
      throw std::invalid_argument("determinant: matrix not square");
   const int n = m.rows();
   // clear denominators row by row
   RatMatrix scaled = m;
   Rat scale = 1;
   for (int r = 0; r < n; ++r)
   {
      Int lcm = 1;
      for (int c = 0; c < n; ++c)
         mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m.at(r, c).get_den_mpz_t());
      for (int c = 0; c < n; ++c)
         scaled.at(r, c) = m.at(r, c) * Rat(lcm);
      scale /= Rat(lcm);
   }
   return scale * Rat(determinant_int(scaled));
}

RatMatrix extend_for_theorem(const Graph& g, const SstPlan& plan)
{
   RatMatrix cm = clique_matrix(g);
   auto cuts = sst_clique_cuts(plan, g);

   RatMatrix full(cm.rows() + static_cast<int>(cuts.size()), g.num_nodes());
   for (int r = 0; r < cm.rows(); ++r)
      for (int c = 0; c < cm.cols(); ++c)
         full.at(r, c) = cm.at(r, c);
   for (size_t i = 0; i < cuts.size(); ++i)
   {
      int r = cm.rows() + static_cast<int>(i);
      full.at(r, cuts[i].leader) = -1;
      for (int f : cuts[i].clique)
         full.at(r, f) += 1;
   }

   // deletion operation: drop deleted columns, then all-zero rows
   std::vector<int> deleted = deletion_fixings(g, plan);
   std::vector<char> dead(static_cast<size_t>(g.num_nodes()), 0);
   for (int v : deleted)
      dead[static_cast<size_t>(v)] = 1;
   std::vector<int> keep_cols;
   for (int v = 0; v < g.num_nodes(); ++v)
      if (!dead[static_cast<size_t>(v)])
         keep_cols.push_back(v);
   std::vector<int> keep_rows;
   for (int r = 0; r < full.rows(); ++r)
   {
      bool nonzero = false;
      for (int c : keep_cols)
         if (full.at(r, c) != 0)
         {
            nonzero = true;
            break;
         }
      if (nonzero)
         keep_rows.push_back(r);
   }
   return full.submatrix(keep_rows, keep_cols);
}

int affine_rank(const std::vector<std::vector<Rat>>& points)
{
   if (points.empty())
      throw std::invalid_argument("affine_rank: empty point list");
   const size_t dim = points.front().size();
   std::vector<std::vector<Rat>> rows;
   for (size_t i = 1; i < points.size(); ++i)
   {
      std::vector<Rat> d(dim);
      for (size_t j = 0; j < dim; ++j)
         d[j] = points[i][j] - points[0][j];
      rows.push_back(std::move(d));
   }
   // exact Gaussian elimination
   int rank = 0;
   size_t col = 0;
   for (; col < dim && rank < static_cast<int>(rows.size()); ++col)
   {
      int pivot = -1;
      for (size_t r = static_cast<size_t>(rank); r < rows.size(); ++r)
         if (rows[r][col] != 0)
         {
            pivot = static_cast<int>(r);
            break;
         }
      if (pivot < 0)
         continue;
      std::swap(rows[static_cast<size_t>(rank)], rows[static_cast<size_t>(pivot)]);
      for (size_t r = 0; r < rows.size(); ++r)
      {
         if (static_cast<int>(r) == rank || rows[r][col] == 0)
            continue;
         Rat f = rows[r][col] / rows[static_cast<size_t>(rank)][col];
         for (size_t c = col; c < dim; ++c)
            rows[r][c] -= f * rows[static_cast<size_t>(rank)][c];
      }
      ++rank;
   }
   return rank;
}

} // namespace sst
