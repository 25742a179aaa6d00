#ifndef COXINV_CHARACTERS_HPP
#define COXINV_CHARACTERS_HPP

#include "involutions.hpp"

namespace coxinv {

struct ClassData {
  std::vector<int> reps;          // element indices, least in enumeration order
  std::vector<uint64_t> sizes;
  std::vector<int> class_of;      // per element
  uint64_t order = 0;
};

// Conjugation orbits of the whole group. Oracle band only.
ClassData conjugacy_classes(const GroupContext& ctx);

// Exact integer class-function values, parallel to ClassData::reps.
using CharacterValues = std::vector<mpz_class>;

// Character of the permutation module on the cosets of <sigma>, sigma an
// involution (or the identity, which yields the regular character).
CharacterValues induced_trivial(const GroupContext& ctx, const ClassData& cd,
                                const Perm& sigma);

// Sum over the special involution classes of (2 * induced - regular);
// with `twisted`, only the even classes contribute.
CharacterValues special_involution_character(const GroupContext& ctx,
                                             const ClassData& cd, bool twisted);

Rational inner_product(const ClassData& cd, const CharacterValues& a,
                       const CharacterValues& b);

}  // namespace coxinv

#endif
