#ifndef COXINV_INVOLUTIONS_HPP
#define COXINV_INVOLUTIONS_HPP

#include "coxgroup.hpp"

namespace coxinv {

struct EigenDecomposition {
  std::vector<Vec> basis_plus;   // V_1
  std::vector<Vec> basis_minus;  // V_{-1}
  std::vector<int> phi_plus;     // root indices fixed by w
  std::vector<int> phi_minus;    // root indices negated by w
  int dim_plus() const { return static_cast<int>(basis_plus.size()); }
  int dim_minus() const { return static_cast<int>(basis_minus.size()); }
};

bool is_involution(const Perm& w);

EigenDecomposition eigenspaces(const RootSystem& rs, const Perm& w);

// (v + eps * w(v)) / 2, the projection onto the eps-eigenspace.
Vec project(const RootSystem& rs, const Perm& w, const Vec& v, int eps);

// Every root has a projection onto V_1 or V_{-1} proportional to a root
// lying in that eigenspace.
bool is_special(const RootSystem& rs, const Perm& w);

struct InvolutionClass {
  SubsetMask j = 0;  // lexicographically least subset in its class
  Perm w;
  std::vector<CoxeterType> components;
  EigenDecomposition eig;
  bool special = false;
  bool even = false;  // det w = +1, i.e. dim V_{-1} even
};

// One representative per subset class with central longest element (the
// Richardson classification of involution conjugacy classes). Within the
// oracle threshold the list is checked to be exhaustive and irredundant by
// direct enumeration of all involutions.
std::vector<InvolutionClass> involution_classes(const GroupContext& ctx);

// The special ones (always including the identity class).
std::vector<InvolutionClass> special_class_reps(const GroupContext& ctx);

}  // namespace coxinv

#endif
