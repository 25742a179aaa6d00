#ifndef COXINV_NORMALIZERS_HPP
#define COXINV_NORMALIZERS_HPP

#include "involutions.hpp"

namespace coxinv {

struct BulkyWitness {
  SubsetMask l = 0;
  SubsetMask k = 0;
  int t = -1;           // simple index in L moved by the failing generator
  bool pair_rule = false;  // found via the |K \ L| = 2 component table
};

struct NormalizerReport {
  SubsetMask j = 0;
  bool bulky = false;
  std::optional<BulkyWitness> witness;
  std::string method;  // "fast" or "brute"
};

// Minimal length double coset representatives of W_J in W:
// l(sx) > l(x) and l(xs) > l(x) for all s in J. Oracle band only.
std::vector<Perm> coset_reps_min_double(const GroupContext& ctx, SubsetMask j);

// Decides N_W(W_J) = W_J x N_J by enumerating N_J = {x in D_J : J^x = J}
// and testing that every member fixes each s in J. Oracle band only.
NormalizerReport bulky_brute(const GroupContext& ctx, SubsetMask j);

// Scalable test through the normalizer generators w_L w_K over all simple-
// system conjugates L of J (|K \ L| = 1, L^{w_K} = L), plus the finite
// component-pair rule for the |K \ L| = 2 situations that contribute
// normalizer elements not visible among those generators.
NormalizerReport bulky_fast(const GroupContext& ctx, SubsetMask j);

struct CentralizerNormalizerRow {
  SubsetMask j = 0;
  uint64_t centralizer_size = 0;
  uint64_t normalizer_size = 0;
  bool equal = false;
};

// C_W(w_J) = N_W(W_J) for every class with central w_J. Oracle band only.
std::vector<CentralizerNormalizerRow> verify_centralizer_normalizer(
    const GroupContext& ctx);

struct EquivalenceRow {
  InvolutionClass cls;
  NormalizerReport fast;
  std::optional<bool> brute_bulky;  // set within the oracle band
  bool agree = false;
};

// Per involution class: special(w_J) must equal bulky(W_J); the brute answer
// is cross-checked whenever the group fits the oracle threshold.
std::vector<EquivalenceRow> verify_special_bulky(const GroupContext& ctx);

struct BulkyClassRow {
  SubsetMask j = 0;
  std::vector<CoxeterType> components;
  bool central = false;
  bool bulky = false;
  std::optional<BulkyWitness> witness;
};

// bulky_fast over every subset class, central or not.
std::vector<BulkyClassRow> classify_bulky_all(const GroupContext& ctx);

}  // namespace coxinv

#endif
