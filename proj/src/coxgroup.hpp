#ifndef COXINV_COXGROUP_HPP
#define COXINV_COXGROUP_HPP

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include "rootsystem.hpp"

namespace coxinv {

// A group element is its permutation of the indexed root set.
using Perm = std::vector<uint16_t>;

class size_exceeded_error : public std::runtime_error {
 public:
  size_exceeded_error(const std::string& msg, uint64_t limit)
      : std::runtime_error(msg), limit(limit) {}
  uint64_t limit;
};

struct PermHash {
  size_t operator()(const Perm& p) const {
    // FNV-1a over the index words.
    size_t h = 1469598103934665603ull;
    for (uint16_t v : p) {
      h ^= v;
      h *= 1099511628211ull;
    }
    return h;
  }
};

Perm perm_identity(int n);
bool perm_is_identity(const Perm& p);
// (a * b)(i) = a[b[i]]; the product acts by b first.
Perm perm_compose(const Perm& a, const Perm& b);
Perm perm_inverse(const Perm& a);

Perm simple_reflection(const RootSystem& rs, int s);
Perm from_word(const RootSystem& rs, const std::vector<int>& word);
int length(const RootSystem& rs, const Perm& w);
std::vector<int> reduced_word(const RootSystem& rs, Perm w);

// Longest element of the standard parabolic W_J, by greedy descent.
Perm longest_element(const RootSystem& rs, SubsetMask j);

// w_J(alpha_s) = -alpha_s for every s in J.
bool is_central_longest(const RootSystem& rs, SubsetMask j);

// K with w J w^-1 = K read off the root permutation, if w maps the simple
// roots of J to signed simple roots.
std::optional<SubsetMask> conjugate_subset(const RootSystem& rs, SubsetMask j,
                                           const Perm& w);

// Greedy J-descent test for membership in W_J.
bool in_parabolic(const RootSystem& rs, Perm w, SubsetMask j);

// Matrix of w on the reflection representation, simple-root basis.
Mat matrix_of(const RootSystem& rs, const Perm& w);

// Breadth-first closure of the simple reflections. Throws size_exceeded_error
// if the group order is above the limit.
std::vector<Perm> enumerate_group(const RootSystem& rs, uint64_t limit);

struct SubsetInfo {
  SubsetMask mask = 0;
  Perm longest;
  bool central = false;
  std::vector<CoxeterType> components;
};

struct SubsetClasses {
  // Conjugacy classes of subsets of S; each class sorted, classes ordered by
  // their least member (index-sequence order).
  std::vector<std::vector<SubsetMask>> classes;
  std::vector<int> class_of;  // indexed by mask
};

// Shared per-group state: the root system plus lazily built caches. All
// caches are write-once behind a lock; reads after construction are pure.
class GroupContext {
 public:
  explicit GroupContext(const CoxeterType& t, uint64_t oracle_threshold = 60000);

  const RootSystem& rs() const { return rs_; }
  const mpz_class& order() const { return order_; }
  uint64_t oracle_threshold() const { return threshold_; }
  bool within_oracle() const {
    return mpz_cmp_ui(order_.get_mpz_t(), threshold_) <= 0;
  }
  void require_oracle(const char* what) const;

  const SubsetInfo& subset(SubsetMask j) const;

  // Classes of the elementary-move graph J -> J^{w_{J+s}}; cross-checked
  // against the all-element conjugation orbits whenever the group fits the
  // oracle threshold.
  const SubsetClasses& subset_classes() const;

  const std::vector<Perm>& elements() const;
  const std::vector<Perm>& inverses() const;
  int element_index(const Perm& p) const;

 private:
  RootSystem rs_;
  mpz_class order_;
  uint64_t threshold_;

  mutable std::recursive_mutex mu_;
  mutable std::vector<std::unique_ptr<SubsetInfo>> subsets_;
  mutable std::optional<SubsetClasses> classes_;
  mutable std::optional<std::vector<Perm>> elements_;
  mutable std::optional<std::vector<Perm>> inverses_;
  mutable std::unordered_map<Perm, int, PermHash> index_;

  void build_classes_locked() const;
};

}  // namespace coxinv

#endif
