#include "involutions.hpp"

#include <algorithm>

namespace coxinv {

bool is_involution(const Perm& w) {
  for (size_t i = 0; i < w.size(); ++i)
    if (w[w[i]] != i) return false;
  return true;
}

EigenDecomposition eigenspaces(const RootSystem& rs, const Perm& w) {
  if (!is_involution(w))
    throw invalid_operand_error("eigenspaces requires an involution");
  EigenDecomposition e;
  Mat m = matrix_of(rs, w);
  Mat id = Mat::identity(rs.rank, rs.field);
  e.basis_plus = kernel(mat_sub(m, id));
  e.basis_minus = kernel(mat_add(m, id));
  if (e.dim_plus() + e.dim_minus() != rs.rank)
    throw std::logic_error("eigenspaces do not fill the reflection representation");
  for (int i = 0; i < rs.size(); ++i) {
    if (w[i] == i) e.phi_plus.push_back(i);
    if (w[i] == rs.neg_index[i]) e.phi_minus.push_back(i);
  }
  return e;
}

Vec project(const RootSystem& rs, const Perm& w, const Vec& v, int eps) {
  if (!is_involution(w))
    throw invalid_operand_error("project requires an involution");
  Mat m = matrix_of(rs, w);
  Vec wv = mat_apply(m, v);
  Vec r(rs.rank, Scalar::zero(rs.field));
  Scalar half = Scalar::one(rs.field) / Scalar(2);
  for (int i = 0; i < rs.rank; ++i)
    r[i] = (eps > 0 ? (v[i] + wv[i]) : (v[i] - wv[i])) * half;
  return r;
}

bool is_special(const RootSystem& rs, const Perm& w) {
  if (!is_involution(w))
    throw invalid_operand_error("is_special requires an involution");
  std::vector<int> phi_plus, phi_minus;
  for (int i = 0; i < rs.size(); ++i) {
    if (w[i] == i) phi_plus.push_back(i);
    if (w[i] == rs.neg_index[i]) phi_minus.push_back(i);
  }
  Scalar half = Scalar::one(rs.field) / Scalar(2);
  for (int i = 0; i < rs.size(); ++i) {
    // Roots inside an eigenspace project to themselves there.
    if (w[i] == i || w[i] == rs.neg_index[i]) continue;
    const Vec& v = rs.roots[i];
    const Vec& wv = rs.roots[w[i]];
    bool ok = false;
    for (int eps = 1; eps >= -1 && !ok; eps -= 2) {
      Vec proj(rs.rank, Scalar::zero(rs.field));
      for (int k = 0; k < rs.rank; ++k)
        proj[k] = (eps > 0 ? (v[k] + wv[k]) : (v[k] - wv[k])) * half;
      const auto& phi = (eps > 0) ? phi_plus : phi_minus;
      for (int b : phi) {
        if (proportional(proj, rs.roots[b])) {
          ok = true;
          break;
        }
      }
    }
    if (!ok) return false;
  }
  return true;
}

std::vector<InvolutionClass> involution_classes(const GroupContext& ctx) {
  const RootSystem& rs = ctx.rs();
  const SubsetClasses& sc = ctx.subset_classes();
  std::vector<InvolutionClass> out;
  for (const auto& cls : sc.classes) {
    SubsetMask rep = cls[0];
    const SubsetInfo& info = ctx.subset(rep);
    // Centrality is a class invariant; guard against move-graph defects.
    for (SubsetMask other : cls)
      if (ctx.subset(other).central != info.central)
        throw std::logic_error("centrality broke across a subset class");
    if (!info.central) continue;
    InvolutionClass ic;
    ic.j = rep;
    ic.w = info.longest;
    ic.components = info.components;
    ic.eig = eigenspaces(rs, ic.w);
    if (ic.eig.dim_minus() != __builtin_popcount(rep))
      throw std::logic_error("central longest element is not -1 on its span");
    ic.special = is_special(rs, ic.w);
    ic.even = ic.eig.dim_minus() % 2 == 0;
    out.push_back(std::move(ic));
  }

  if (ctx.within_oracle()) {
    // The representatives must be pairwise non-conjugate and jointly cover
    // every involution in the group.
    const auto& els = ctx.elements();
    std::vector<char> covered(els.size(), 0);
    size_t total_involutions = 0;
    for (size_t i = 0; i < els.size(); ++i)
      if (is_involution(els[i])) ++total_involutions;

    std::vector<Perm> gens;
    for (int s = 0; s < rs.rank; ++s) gens.push_back(simple_reflection(rs, s));

    size_t covered_count = 0;
    for (const auto& ic : out) {
      int start = ctx.element_index(ic.w);
      if (start < 0) throw std::logic_error("class representative not enumerated");
      if (covered[start])
        throw std::logic_error("involution class representatives are conjugate");
      std::vector<int> orbit{start};
      covered[start] = 1;
      ++covered_count;
      for (size_t head = 0; head < orbit.size(); ++head) {
        const Perm& cur = els[orbit[head]];
        for (const Perm& g : gens) {
          Perm conj = perm_compose(perm_compose(g, cur), g);
          int idx = ctx.element_index(conj);
          if (idx < 0) throw std::logic_error("conjugate escaped the group");
          if (!covered[idx]) {
            covered[idx] = 1;
            ++covered_count;
            orbit.push_back(idx);
          }
        }
      }
    }
    if (covered_count != total_involutions)
      throw std::logic_error("involution classes do not cover all involutions");
  }
  return out;
}

std::vector<InvolutionClass> special_class_reps(const GroupContext& ctx) {
  std::vector<InvolutionClass> all = involution_classes(ctx);
  std::vector<InvolutionClass> out;
  for (auto& ic : all)
    if (ic.special) out.push_back(std::move(ic));
  return out;
}

}  // namespace coxinv
