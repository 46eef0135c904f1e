// Part of ssttool, a toolkit for symmetry handling in stable set problems.
// Licensed under the Apache License 2.0; see LICENSE.

#ifndef SST_PERM_HPP
#define SST_PERM_HPP

#include <string>
#include <vector>

namespace sst
{

/// Permutation of 0..n-1 stored as an image table.
class Perm
{
public:
   Perm() = default;
   /// Identity on n points.
   explicit Perm(int n);
   /// Validates that `images` is a bijection.
   static Perm from_images(std::vector<int> images);

   int degree() const { return static_cast<int>(img_.size()); }
   int operator()(int i) const { return img_[static_cast<size_t>(i)]; }
   const std::vector<int>& images() const { return img_; }

   bool is_identity() const;
   Perm inverse() const;
   /// Composition acting left-to-right on points: (a.then(b))(x) = b(a(x)).
   Perm then(const Perm& b) const;
   /// Classic composition: (compose(a,b))(x) = a(b(x)).
   friend Perm compose(const Perm& a, const Perm& b) { return b.then(a); }

   /// Smallest point i with p(i) != i, or -1 for the identity.
   int smallest_moved() const;

   bool operator==(const Perm& o) const { return img_ == o.img_; }

   /// Cycle notation, e.g. "(0 1)(2 4 3)"; "()" for the identity.
   std::string to_cycles() const;

private:
   std::vector<int> img_;
};

/// Parses one permutation per line, either cycle notation `(a b c)(d e)` or
/// an image list `a b c ...`, 0-based.  All results are padded to a common
/// degree (at least `degree` if given).  Throws std::runtime_error on
/// malformed cycles or repeated points.
std::vector<Perm> read_generators(const std::string& text, int degree = -1);

} // namespace sst

#endif
