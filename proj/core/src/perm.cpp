// Part of ssttool, a toolkit for symmetry handling in stable set problems.
// Licensed under the Apache License 2.0; see LICENSE.

#include "sst/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace sst
{

Perm::Perm(int n)
   : img_(static_cast<size_t>(n))
{
   std::iota(img_.begin(), img_.end(), 0);
}

Perm Perm::from_images(std::vector<int> images)
{
   std::vector<char> seen(images.size(), 0);
   for (int x : images)
   {
      if (x < 0 || x >= static_cast<int>(images.size()) || seen[static_cast<size_t>(x)])
         throw std::invalid_argument("Perm: image table is not a bijection");
      seen[static_cast<size_t>(x)] = 1;
   }
   Perm p;
   p.img_ = std::move(images);
   return p;
}

bool Perm::is_identity() const
{
   for (int i = 0; i < degree(); ++i)
      if (img_[static_cast<size_t>(i)] != i)
         return false;
   return true;
}

Perm Perm::inverse() const
{
   Perm r(degree());
   for (int i = 0; i < degree(); ++i)
      r.img_[static_cast<size_t>(img_[static_cast<size_t>(i)])] = i;
   return r;
}

Perm Perm::then(const Perm& b) const
{
   if (degree() != b.degree())
      throw std::invalid_argument("Perm: degree mismatch");
   Perm r(degree());
   for (int i = 0; i < degree(); ++i)
      r.img_[static_cast<size_t>(i)] = b(img_[static_cast<size_t>(i)]);
   return r;
}

int Perm::smallest_moved() const
{
   for (int i = 0; i < degree(); ++i)
      if (img_[static_cast<size_t>(i)] != i)
         return i;
   return -1;
}

std::string Perm::to_cycles() const
{
   std::ostringstream out;
   std::vector<char> seen(img_.size(), 0);
   bool any = false;
   for (int i = 0; i < degree(); ++i)
   {
      if (seen[static_cast<size_t>(i)] || img_[static_cast<size_t>(i)] == i)
         continue;
      any = true;
      out << '(' << i;
      int j = img_[static_cast<size_t>(i)];
      seen[static_cast<size_t>(i)] = 1;
      while (j != i)
      {
         seen[static_cast<size_t>(j)] = 1;
         out << ' ' << j;
         j = img_[static_cast<size_t>(j)];
      }
      out << ')';
   }
   return any ? out.str() : "()";
}

namespace
{

// Parses "(a b c)(d e)"; returns the moved-point map.
std::vector<std::pair<int, int>> parse_cycle_line(const std::string& line, int lineno)
{
   auto fail = [&](const std::string& what) {
      throw std::runtime_error("generator parse error at line " + std::to_string(lineno) + ": " + what);
   };
   std::vector<std::pair<int, int>> maps;
   std::vector<char> used; // point already appeared
   auto mark = [&](int p) {
      if (p >= static_cast<int>(used.size()))
         used.resize(static_cast<size_t>(p) + 1, 0);
      if (used[static_cast<size_t>(p)])
         fail("repeated point " + std::to_string(p));
      used[static_cast<size_t>(p)] = 1;
   };
   size_t i = 0;
   while (i < line.size())
   {
      if (std::isspace(static_cast<unsigned char>(line[i])))
      {
         ++i;
         continue;
      }
      if (line[i] != '(')
         fail("expected '('");
      ++i;
      std::vector<int> cyc;
      std::string num;
      for (; i < line.size() && line[i] != ')'; ++i)
      {
         char ch = line[i];
         if (std::isdigit(static_cast<unsigned char>(ch)))
            num.push_back(ch);
         else if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',')
         {
            if (!num.empty())
            {
               cyc.push_back(std::stoi(num));
               num.clear();
            }
         }
         else
            fail(std::string("unexpected character '") + ch + "'");
      }
      if (i >= line.size())
         fail("unterminated cycle");
      ++i; // consume ')'
      if (!num.empty())
         cyc.push_back(std::stoi(num));
      if (cyc.empty())
         continue;
      for (int p : cyc)
         mark(p);
      for (size_t k = 0; k < cyc.size(); ++k)
         maps.emplace_back(cyc[k], cyc[(k + 1) % cyc.size()]);
   }
   return maps;
}

} // namespace

std::vector<Perm> read_generators(const std::string& text, int degree)
{
   std::istringstream in(text);
   std::string line;
   int lineno = 0;
   int maxdeg = degree;
   struct Raw
   {
      bool cycles;
      std::vector<std::pair<int, int>> maps; // cycle form
      std::vector<int> images;               // list form
   };
   std::vector<Raw> raws;

   while (std::getline(in, line))
   {
      ++lineno;
      size_t first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#')
         continue;
      if (line[first] == '(')
      {
         Raw r{true, parse_cycle_line(line, lineno), {}};
         for (auto [a, b] : r.maps)
            maxdeg = std::max({maxdeg, a + 1, b + 1});
         raws.push_back(std::move(r));
      }
      else
      {
         std::istringstream ls(line);
         Raw r{false, {}, {}};
         int x;
         while (ls >> x)
            r.images.push_back(x);
         if (!ls.eof())
            throw std::runtime_error("generator parse error at line " + std::to_string(lineno) +
                                     ": expected integers");
         maxdeg = std::max(maxdeg, static_cast<int>(r.images.size()));
         raws.push_back(std::move(r));
      }
   }

   std::vector<Perm> gens;
   for (auto& r : raws)
   {
      std::vector<int> img(static_cast<size_t>(std::max(maxdeg, 0)));
      std::iota(img.begin(), img.end(), 0);
      if (r.cycles)
      {
         for (auto [a, b] : r.maps)
            img[static_cast<size_t>(a)] = b;
      }
      else
      {
         // shorter image lists are padded with fixed points; from_images
         // still validates bijectivity
         for (size_t k = 0; k < r.images.size(); ++k)
            img[k] = r.images[k];
      }
      gens.push_back(Perm::from_images(std::move(img)));
   }
   return gens;
}

} // namespace sst
