#ifndef COXINV_REPORTS_HPP
#define COXINV_REPORTS_HPP

#include <json.hpp>

#include "characters.hpp"
#include "normalizers.hpp"

namespace coxinv {

// Insertion-ordered so identical inputs give byte-identical output.
using Json = nlohmann::ordered_json;

Json roots_report(const GroupContext& ctx);

// One row per involution conjugacy class, with the special/bulky verdicts.
Json involutions_report(const GroupContext& ctx);

// Full verification: the special<->bulky equivalence on every involution
// class, the oracle band cross-checks, and the bulky classification with its
// centrality assertions. `samples` random conjugates per class (seeded) check
// that the special property is constant on classes; 0 disables sampling.
Json verify_report(const GroupContext& ctx, uint64_t seed, int samples);

Json character_report(const GroupContext& ctx, bool twisted);

std::string dump_json(const Json& j);

}  // namespace coxinv

#endif
