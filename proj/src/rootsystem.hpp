#ifndef COXINV_ROOTSYSTEM_HPP
#define COXINV_ROOTSYSTEM_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "linalg.hpp"

namespace coxinv {

enum class Family { A, B, C, D, E, F, H, I2 };

struct CoxeterType {
  Family family;
  int rank = 0;
  int m = 0;  // bond label, I2 only

  std::string to_string() const;
  friend bool operator==(const CoxeterType&, const CoxeterType&) = default;
  friend auto operator<=>(const CoxeterType&, const CoxeterType&) = default;
};

class invalid_type_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// "A5", "b4", "I2(7)"; family letter case-insensitive.
CoxeterType parse_type(const std::string& s);
bool is_admissible(const CoxeterType& t);
mpz_class group_order(const CoxeterType& t);
mpz_class group_order(const std::vector<CoxeterType>& components);

// Subsets of simple roots as bitmasks (rank <= 16).
using SubsetMask = uint32_t;
std::vector<int> mask_to_indices(SubsetMask j);
SubsetMask indices_to_mask(const std::vector<int>& idx);

struct RootSystem {
  CoxeterType type;
  const Field* field = nullptr;
  int rank = 0;

  // Root coordinates in the basis of simple roots; roots[s] = alpha_s for
  // s < rank. Positive roots are exactly those with all coordinates >= 0.
  std::vector<Vec> roots;
  std::vector<int> neg_index;
  std::vector<bool> positive;
  int positive_count = 0;

  Mat gram;                              // W-invariant form on simple roots
  std::vector<std::vector<int>> cox_m;   // Coxeter matrix of the diagram
  std::vector<std::vector<int>> simple_perm;  // s_i as a permutation of roots

  // Bourbaki epsilon-coordinates of the simple roots (crystallographic only).
  std::vector<std::vector<Rational>> ambient_simple;
  int ambient_dim = 0;

  int size() const { return static_cast<int>(roots.size()); }
  int root_index(const Vec& v) const;  // -1 if absent
  Vec reflect_vec(const Vec& v, int root_idx) const;
  Scalar form(const Vec& u, const Vec& v) const;

  // If roots[idx] == ±alpha_s, reports s and the sign; otherwise false.
  bool as_signed_simple(int idx, int* s, int* sign) const;

  // Roots lying in the span of {alpha_s : s in J}.
  std::vector<int> parabolic_roots(SubsetMask j) const;

  bool has_ambient() const { return !ambient_simple.empty(); }
  std::vector<Rational> ambient_of(const Vec& v) const;

  struct VecLexLess {
    bool operator()(const Vec& a, const Vec& b) const;
  };

 private:
  std::map<Vec, int, VecLexLess> index_;
  friend RootSystem build_root_system(const CoxeterType&);
};

RootSystem build_root_system(const CoxeterType& t);

// Connected components of the sub-diagram on J, each classified against the
// admissible catalog. Sorted canonically.
std::vector<CoxeterType> classify_components(const RootSystem& rs, SubsetMask j);

std::string components_to_string(const std::vector<CoxeterType>& comps);

// The longest element of a finite Coxeter group is central exactly when no
// component has type A_n (n >= 2), D_odd, E6, or I2(odd); predicate on the
// classified component list.
bool central_by_component_types(const std::vector<CoxeterType>& comps);

}  // namespace coxinv

#endif
