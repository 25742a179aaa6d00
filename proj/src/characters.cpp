#include "characters.hpp"

namespace coxinv {

ClassData conjugacy_classes(const GroupContext& ctx) {
  ctx.require_oracle("conjugacy_classes");
  const RootSystem& rs = ctx.rs();
  const auto& els = ctx.elements();
  std::vector<Perm> gens;
  for (int s = 0; s < rs.rank; ++s) gens.push_back(simple_reflection(rs, s));

  ClassData cd;
  cd.order = els.size();
  cd.class_of.assign(els.size(), -1);
  for (size_t start = 0; start < els.size(); ++start) {
    if (cd.class_of[start] >= 0) continue;
    int cls = static_cast<int>(cd.reps.size());
    cd.reps.push_back(static_cast<int>(start));
    cd.class_of[start] = cls;
    uint64_t size = 1;
    std::vector<int> orbit{static_cast<int>(start)};
    for (size_t head = 0; head < orbit.size(); ++head) {
      const Perm& cur = els[orbit[head]];
      for (const Perm& g : gens) {
        Perm conj = perm_compose(perm_compose(g, cur), g);
        int idx = ctx.element_index(conj);
        if (idx < 0) throw std::logic_error("conjugate escaped the group");
        if (cd.class_of[idx] < 0) {
          cd.class_of[idx] = cls;
          ++size;
          orbit.push_back(idx);
        }
      }
    }
    cd.sizes.push_back(size);
  }
  uint64_t total = 0;
  for (uint64_t s : cd.sizes) total += s;
  if (total != cd.order) throw std::logic_error("class sizes do not add up");
  return cd;
}

CharacterValues induced_trivial(const GroupContext& ctx, const ClassData& cd,
                                const Perm& sigma) {
  if (!is_involution(sigma))
    throw invalid_operand_error("induced_trivial requires an involution");
  const auto& els = ctx.elements();
  bool sigma_trivial = perm_is_identity(sigma);
  uint64_t h = sigma_trivial ? 1 : 2;
  const int nroots = static_cast<int>(sigma.size());

  CharacterValues values(cd.reps.size());
  for (size_t c = 0; c < cd.reps.size(); ++c) {
    const Perm& w = els[cd.reps[c]];
    uint64_t count = 0;
    for (const Perm& x : els) {
      // x^-1 w x == h iff w x == x h, checked pointwise with early exit.
      bool cand_id = true, cand_sigma = !sigma_trivial;
      for (int r = 0; r < nroots; ++r) {
        uint16_t lhs = w[x[r]];
        if (cand_id && lhs != x[r]) cand_id = false;
        if (cand_sigma && lhs != x[sigma[r]]) cand_sigma = false;
        if (!cand_id && !cand_sigma) break;
      }
      if (cand_id || cand_sigma) ++count;
    }
    if (count % h != 0)
      throw std::logic_error("induced character value is not integral");
    values[c] = mpz_class(static_cast<unsigned long>(count / h));
  }
  return values;
}

CharacterValues special_involution_character(const GroupContext& ctx,
                                             const ClassData& cd, bool twisted) {
  ctx.require_oracle("special_involution_character");
  CharacterValues regular =
      induced_trivial(ctx, cd, perm_identity(static_cast<int>(ctx.rs().size())));
  CharacterValues chi(cd.reps.size(), 0);
  for (const InvolutionClass& ic : special_class_reps(ctx)) {
    if (twisted && !ic.even) continue;
    CharacterValues ind = induced_trivial(ctx, cd, ic.w);
    for (size_t c = 0; c < chi.size(); ++c)
      chi[c] += 2 * ind[c] - regular[c];
  }
  return chi;
}

Rational inner_product(const ClassData& cd, const CharacterValues& a,
                       const CharacterValues& b) {
  if (a.size() != cd.reps.size() || b.size() != cd.reps.size())
    throw invalid_operand_error("class function length mismatch");
  mpz_class sum = 0;
  for (size_t c = 0; c < a.size(); ++c)
    sum += mpz_class(static_cast<unsigned long>(cd.sizes[c])) * a[c] * b[c];
  Rational r(sum, mpz_class(static_cast<unsigned long>(cd.order)));
  r.canonicalize();
  return r;
}

}  // namespace coxinv
