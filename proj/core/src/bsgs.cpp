// Part of ssttool, a toolkit for symmetry handling in stable set problems.
// Licensed under the Apache License 2.0; see LICENSE.

#include "sst/bsgs.hpp"

#include <algorithm>
#include <stdexcept>

namespace sst
{

const std::vector<Perm>& Bsgs::generators() const
{
   return levels_.empty() ? no_gens_ : levels_.front().gens;
}

bool Bsgs::is_trivial() const
{
   for (const auto& lvl : levels_)
      if (lvl.orbit.size() > 1)
         return false;
   return true;
}

Int Bsgs::order() const
{
   Int o = 1;
   for (const auto& lvl : levels_)
      o *= static_cast<long>(lvl.orbit.size());
   return o;
}

std::optional<Perm> Bsgs::transversal_element(int lvl, int pt) const
{
   const Level& l = levels_[static_cast<size_t>(lvl)];
   if (pt < 0 || pt >= degree_ || l.where[static_cast<size_t>(pt)] < 0)
      return std::nullopt;
   return l.reps[static_cast<size_t>(l.where[static_cast<size_t>(pt)])];
}

bool Bsgs::contains(const Perm& g) const
{
   if (g.degree() != degree_)
      return false;
   Perm h = g;
   for (size_t i = 0; i < levels_.size(); ++i)
   {
      int beta = h(levels_[i].base_point);
      auto u = transversal_element(static_cast<int>(i), beta);
      if (!u)
         return false;
      h = compose(u->inverse(), h);
   }
   return h.is_identity();
}

namespace
{

struct Builder
{
   int n;
   std::vector<int> base;
   std::vector<std::vector<Perm>> S; // per-level generator lists

   struct Tr
   {
      std::vector<int> orbit;
      std::vector<Perm> reps;
      std::vector<int> where;
   };
   std::vector<Tr> tr;

   void ensure_level_for(const Perm& g)
   {
      // g fixes all current base points: extend the base
      int p = g.smallest_moved();
      base.push_back(p);
      S.emplace_back();
      tr.emplace_back();
   }

   void rebuild_transversal(size_t i)
   {
      Tr& t = tr[i];
      t.orbit.clear();
      t.reps.clear();
      t.where.assign(static_cast<size_t>(n), -1);
      t.orbit.push_back(base[i]);
      t.reps.emplace_back(n);
      t.where[static_cast<size_t>(base[i])] = 0;
      for (size_t k = 0; k < t.orbit.size(); ++k)
      {
         for (const Perm& s : S[i])
         {
            int img = s(t.orbit[k]);
            if (t.where[static_cast<size_t>(img)] < 0)
            {
               t.where[static_cast<size_t>(img)] = static_cast<int>(t.orbit.size());
               t.orbit.push_back(img);
               t.reps.push_back(compose(s, t.reps[k]));
            }
         }
      }
   }

   // Sift g through levels >= start; returns residue and the level where it
   // dropped out (== base.size() if it fixes the full base).
   std::pair<Perm, size_t> strip(size_t start, Perm g)
   {
      for (size_t l = start; l < base.size(); ++l)
      {
         int beta = g(base[l]);
         int w = tr[l].where[static_cast<size_t>(beta)];
         if (w < 0)
            return {g, l};
         g = compose(tr[l].reps[static_cast<size_t>(w)].inverse(), g);
      }
      return {g, base.size()};
   }

   void complete(size_t i)
   {
      rebuild_transversal(i);
      // verify all Schreier generators of level i sift to identity
      for (size_t k = 0; k < tr[i].orbit.size(); ++k)
      {
         for (size_t si = 0; si < S[i].size(); ++si)
         {
            const Perm& s = S[i][si];
            int img = s(tr[i].orbit[k]);
            const Perm& u_img = tr[i].reps[static_cast<size_t>(tr[i].where[static_cast<size_t>(img)])];
            Perm h = compose(u_img.inverse(), compose(s, tr[i].reps[k]));
            if (h.is_identity())
               continue;
            auto [res, j] = strip(i + 1, h);
            if (res.is_identity())
               continue;
            if (j == base.size())
               ensure_level_for(res);
            size_t lmax = std::min(j, base.size() - 1);
            for (size_t l = i + 1; l <= lmax; ++l)
               S[l].push_back(res);
            // re-establish the chain property on the touched levels,
            // deepest first
            for (size_t l = lmax + 1; l-- > i + 1;)
               complete(l);
         }
      }
   }
};

} // namespace

Bsgs schreier_sims(const std::vector<Perm>& generators, const std::vector<int>& base_prefix, int degree)
{
   int n = -1;
   std::vector<Perm> gens;
   for (const Perm& g : generators)
   {
      if (n < 0)
         n = g.degree();
      else if (g.degree() != n)
         throw std::invalid_argument("schreier_sims: generator degree mismatch");
      if (!g.is_identity())
         gens.push_back(g);
   }
   if (n >= 0 && degree >= 0 && degree != n)
      throw std::invalid_argument("schreier_sims: degree does not match generators");
   if (n < 0)
      n = std::max(degree,
                   base_prefix.empty() ? 0 : *std::max_element(base_prefix.begin(), base_prefix.end()) + 1);
   for (int p : base_prefix)
      if (p < 0 || p >= n)
         throw std::invalid_argument("schreier_sims: base point out of range");

   Builder b;
   b.n = n;
   for (int p : base_prefix)
   {
      if (std::find(b.base.begin(), b.base.end(), p) == b.base.end())
         b.base.push_back(p);
   }
   // make sure every generator moves some base point
   for (const Perm& g : gens)
   {
      bool moves = false;
      for (int p : b.base)
         if (g(p) != p)
         {
            moves = true;
            break;
         }
      if (!moves)
      {
         Perm h = g;
         // the smallest moved point of g itself
         b.base.push_back(h.smallest_moved());
      }
   }
   b.S.assign(b.base.size(), {});
   b.tr.assign(b.base.size(), {});
   for (const Perm& g : gens)
   {
      // g belongs to every level whose base prefix it fixes
      for (size_t l = 0; l < b.base.size(); ++l)
      {
         bool fixes = true;
         for (size_t k = 0; k < l; ++k)
            if (g(b.base[k]) != b.base[k])
            {
               fixes = false;
               break;
            }
         if (fixes)
            b.S[l].push_back(g);
         else
            break;
      }
   }
   if (!b.base.empty())
      for (size_t i = b.base.size(); i-- > 0;)
         b.complete(i);

   Bsgs result(n);
   result.base_ = b.base;
   for (size_t i = 0; i < b.base.size(); ++i)
   {
      Bsgs::Level lvl;
      lvl.base_point = b.base[i];
      lvl.gens = b.S[i];
      lvl.orbit = b.tr[i].orbit;
      lvl.reps = b.tr[i].reps;
      lvl.where = b.tr[i].where;
      result.levels_.push_back(std::move(lvl));
   }
   return result;
}

std::vector<int> orbit_of(const std::vector<Perm>& gens, int i, int degree)
{
   std::vector<int> orb{i};
   std::vector<char> seen(static_cast<size_t>(degree), 0);
   seen[static_cast<size_t>(i)] = 1;
   for (size_t k = 0; k < orb.size(); ++k)
      for (const Perm& g : gens)
      {
         int img = g(orb[k]);
         if (!seen[static_cast<size_t>(img)])
         {
            seen[static_cast<size_t>(img)] = 1;
            orb.push_back(img);
         }
      }
   std::sort(orb.begin(), orb.end());
   return orb;
}

std::vector<int> orbit(const Bsgs& group, int i)
{
   if (i < 0 || i >= group.degree())
      throw std::invalid_argument("orbit: point out of range");
   return orbit_of(group.generators(), i, group.degree());
}

Bsgs pointwise_stabilizer(const Bsgs& group, const std::vector<int>& pts)
{
   if (pts.empty())
      return group;
   // collect all strong generators, rebuild with pts as base prefix
   std::vector<Perm> all;
   for (const auto& lvl : group.levels())
      for (const Perm& g : lvl.gens)
         if (std::find(all.begin(), all.end(), g) == all.end())
            all.push_back(g);
   Bsgs rebuilt = schreier_sims(all, pts);

   // slice the chain below the prefix
   size_t cut = 0;
   while (cut < rebuilt.base_.size() && cut < pts.size())
   {
      // the prefix is deduplicated inside schreier_sims, so align by value
      if (std::find(pts.begin(), pts.end(), rebuilt.base_[cut]) == pts.end())
         break;
      ++cut;
   }
   Bsgs sub(group.degree());
   sub.base_.assign(rebuilt.base_.begin() + static_cast<long>(cut), rebuilt.base_.end());
   sub.levels_.assign(rebuilt.levels_.begin() + static_cast<long>(cut), rebuilt.levels_.end());
   return sub;
}

} // namespace sst
