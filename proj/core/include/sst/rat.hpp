// Part of ssttool, a toolkit for symmetry handling in stable set problems.
// Licensed under the Apache License 2.0; see LICENSE.

#ifndef SST_RAT_HPP
#define SST_RAT_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace sst
{

/// Arbitrary-precision integer and exact rational.  All polyhedral
/// computations in this project run over these types; doubles only appear
/// in reporting code.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat rat(long num, long den = 1)
{
   Rat r(num, den);
   r.canonicalize();
   return r;
}

inline bool is_integer(const Rat& r)
{
   return r.get_den() == 1;
}

/// Largest integer <= r.
inline Int floor_rat(const Rat& r)
{
   Int q;
   mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
   return q;
}

inline Int ceil_rat(const Rat& r)
{
   Int q;
   mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
   return q;
}

inline std::string to_string(const Rat& r)
{
   return r.get_str();
}

inline std::string to_string(const Int& i)
{
   return i.get_str();
}

/// Sparse inequality  sum_i coeff_i * x_i <= rhs  over node/variable ids.
struct LinIneq
{
   std::vector<std::pair<int, Rat>> terms; // sorted by variable id
   Rat rhs = 0;

   Rat eval(const std::vector<Rat>& x) const
   {
      Rat s = 0;
      for (const auto& [v, c] : terms)
         s += c * x[static_cast<size_t>(v)];
      return s;
   }

   Rat violation(const std::vector<Rat>& x) const
   {
      return eval(x) - rhs;
   }
};

} // namespace sst

#endif
