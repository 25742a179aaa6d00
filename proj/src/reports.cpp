#include "reports.hpp"

#include <algorithm>
#include <random>

namespace coxinv {

namespace {

Json scalar_json(const Scalar& s) {
  Json a = Json::array();
  for (const Rational& c : s.coeffs()) a.push_back(c.get_str());
  return a;
}

Json field_json(const Field* f) {
  Json j;
  switch (f->kind()) {
    case FieldKind::rational: j["kind"] = "rational"; break;
    case FieldKind::quadratic_sqrt5: j["kind"] = "quadratic-sqrt5"; break;
    case FieldKind::cos_extension: j["kind"] = "cos-extension"; break;
  }
  if (f->kind() != FieldKind::rational) j["m"] = f->cos_m();
  j["degree"] = f->degree();
  Json mp = Json::array();
  for (const Rational& c : f->minpoly()) mp.push_back(c.get_str());
  j["minpoly"] = mp;
  j["description"] = f->description();
  return j;
}

Json indices_json(SubsetMask mask) {
  Json a = Json::array();
  for (int i : mask_to_indices(mask)) a.push_back(i + 1);
  return a;
}

Json witness_json(const BulkyWitness& w) {
  Json j;
  j["L"] = indices_json(w.l);
  j["K"] = indices_json(w.k);
  j["t"] = w.t + 1;
  j["rule"] = w.pair_rule ? "component_pair" : "mover";
  return j;
}

Json class_row(const GroupContext& ctx, const EquivalenceRow& row) {
  Json j;
  j["J"] = indices_json(row.cls.j);
  j["components"] = components_to_string(row.cls.components);
  j["order_WJ"] = group_order(row.cls.components).get_str();
  j["central"] = true;
  j["special"] = row.cls.special;
  j["bulky"] = row.fast.bulky;
  if (row.brute_bulky) j["bulky_brute"] = *row.brute_bulky;
  j["even"] = row.cls.even;
  j["dim_v_plus"] = row.cls.eig.dim_plus();
  j["dim_v_minus"] = row.cls.eig.dim_minus();
  j["phi_plus_count"] = row.cls.eig.phi_plus.size();
  j["phi_minus_count"] = row.cls.eig.phi_minus.size();
  if (row.fast.witness) j["witness"] = witness_json(*row.fast.witness);
  j["agree"] = row.agree;
  (void)ctx;
  return j;
}

Json header(const GroupContext& ctx) {
  Json j;
  j["type"] = ctx.rs().type.to_string();
  j["field"] = field_json(ctx.rs().field);
  return j;
}

}  // namespace

Json roots_report(const GroupContext& ctx) {
  const RootSystem& rs = ctx.rs();
  Json j = header(ctx);
  j["classes"] = Json::array();
  j["rank"] = rs.rank;
  j["order"] = ctx.order().get_str();
  j["root_count"] = rs.size();
  j["positive_count"] = rs.positive_count;
  Json simple = Json::array();
  for (int s = 0; s < rs.rank; ++s) {
    Json row;
    row["index"] = s + 1;
    Json g = Json::array();
    for (int t = 0; t < rs.rank; ++t) g.push_back(scalar_json(rs.gram.at(s, t)));
    row["gram_row"] = g;
    if (rs.has_ambient()) {
      Json amb = Json::array();
      for (const Rational& c : rs.ambient_simple[s]) amb.push_back(c.get_str());
      row["ambient"] = amb;
    }
    simple.push_back(row);
  }
  j["simple_roots"] = simple;
  j["verdicts"] = Json::object();
  return j;
}

Json involutions_report(const GroupContext& ctx) {
  Json j = header(ctx);
  auto rows = verify_special_bulky(ctx);
  Json classes = Json::array();
  int failures = 0;
  for (const auto& row : rows) {
    classes.push_back(class_row(ctx, row));
    if (!row.agree) ++failures;
  }
  j["classes"] = classes;
  Json verdicts;
  verdicts["special_equals_bulky"] = failures == 0;
  verdicts["failures"] = failures;
  verdicts["class_count"] = rows.size();
  int specials = 0, evens = 0;
  for (const auto& row : rows)
    if (row.cls.special) {
      ++specials;
      if (row.cls.even) ++evens;
    }
  verdicts["special_count"] = specials;
  verdicts["special_even_count"] = evens;
  j["verdicts"] = verdicts;
  return j;
}

Json verify_report(const GroupContext& ctx, uint64_t seed, int samples) {
  const RootSystem& rs = ctx.rs();
  Json j = header(ctx);
  int failures = 0;

  auto rows = verify_special_bulky(ctx);
  Json classes = Json::array();
  for (const auto& row : rows) {
    classes.push_back(class_row(ctx, row));
    if (!row.agree) ++failures;
  }
  j["classes"] = classes;

  Json verdicts;
  verdicts["special_equals_bulky"] =
      std::all_of(rows.begin(), rows.end(),
                  [](const EquivalenceRow& r) { return r.agree; });

  bool oracle = ctx.within_oracle();
  verdicts["oracle_checked"] = oracle;
  if (oracle) {
    // Centraliser of w_J against normaliser of W_J, every central class.
    bool prop_ok = true;
    Json prop_rows = Json::array();
    for (const auto& row : verify_centralizer_normalizer(ctx)) {
      Json pr;
      pr["J"] = indices_json(row.j);
      pr["centralizer"] = row.centralizer_size;
      pr["normalizer"] = row.normalizer_size;
      pr["equal"] = row.equal;
      prop_rows.push_back(pr);
      if (!row.equal) prop_ok = false;
    }
    verdicts["centralizer_equals_normalizer"] = prop_ok;
    verdicts["centralizer_rows"] = prop_rows;
    if (!prop_ok) ++failures;

    // Fast path against the brute normalizer computation, every subset class.
    bool fb_ok = true;
    for (const auto& cls : ctx.subset_classes().classes) {
      NormalizerReport fast = bulky_fast(ctx, cls[0]);
      NormalizerReport brute = bulky_brute(ctx, cls[0]);
      if (fast.bulky != brute.bulky) fb_ok = false;
    }
    verdicts["fast_brute_agreement"] = fb_ok;
    if (!fb_ok) ++failures;

    if (samples > 0) {
      // The special property must be a class function.
      std::mt19937_64 rng(seed);
      const auto& els = ctx.elements();
      bool cf_ok = true;
      for (const auto& row : rows) {
        for (int i = 0; i < samples; ++i) {
          const Perm& x = els[rng() % els.size()];
          Perm conj = perm_compose(perm_compose(x, row.cls.w), perm_inverse(x));
          if (is_special(rs, conj) != row.cls.special) cf_ok = false;
        }
      }
      verdicts["class_function_ok"] = cf_ok;
      verdicts["class_function_samples"] = samples;
      if (!cf_ok) ++failures;
    }
  }

  // Centrality of w_J by action against the component-type rule, every subset.
  bool dual_ok = true;
  for (SubsetMask m = 0; m < (1u << rs.rank); ++m) {
    const SubsetInfo& info = ctx.subset(m);
    if (info.central != central_by_component_types(info.components))
      dual_ok = false;
  }
  verdicts["centrality_dual_path"] = dual_ok;
  if (!dual_ok) ++failures;

  // Bulky classification over all subset classes, with the centrality rule:
  // central longest element in W forces central w_J on bulky classes;
  // otherwise some bulky class must have non-central w_J.
  auto bulky_rows = classify_bulky_all(ctx);
  bool ws_central = ctx.subset((1u << rs.rank) - 1).central;
  bool remark_ok;
  if (ws_central) {
    remark_ok = std::all_of(bulky_rows.begin(), bulky_rows.end(),
                            [](const BulkyClassRow& r) { return !r.bulky || r.central; });
  } else {
    remark_ok = std::any_of(bulky_rows.begin(), bulky_rows.end(),
                            [](const BulkyClassRow& r) { return r.bulky && !r.central; });
  }
  Json bc = Json::array();
  for (const auto& r : bulky_rows) {
    Json br;
    br["J"] = indices_json(r.j);
    br["components"] = components_to_string(r.components);
    br["central"] = r.central;
    br["bulky"] = r.bulky;
    if (r.witness) br["witness"] = witness_json(*r.witness);
    bc.push_back(br);
  }
  verdicts["longest_element_central"] = ws_central;
  verdicts["bulky_centrality_ok"] = remark_ok;
  if (!remark_ok) ++failures;
  j["bulky_classes"] = bc;

  verdicts["failures"] = failures;
  j["verdicts"] = verdicts;
  return j;
}

Json character_report(const GroupContext& ctx, bool twisted) {
  const RootSystem& rs = ctx.rs();
  Json j = header(ctx);
  ClassData cd = conjugacy_classes(ctx);
  CharacterValues chi = special_involution_character(ctx, cd, twisted);

  const auto& els = ctx.elements();
  Json classes = Json::array();
  for (size_t c = 0; c < cd.reps.size(); ++c) {
    Json row;
    row["size"] = cd.sizes[c];
    const Perm& rep = els[cd.reps[c]];
    row["length"] = length(rs, rep);
    Json word = Json::array();
    for (int s : reduced_word(rs, rep)) word.push_back(s + 1);
    row["rep_word"] = word;
    row["value"] = chi[c].get_str();
    classes.push_back(row);
  }
  j["classes"] = classes;

  int specials = 0, evens = 0;
  for (const auto& ic : special_class_reps(ctx)) {
    ++specials;
    if (ic.even) evens += 1;
  }
  CharacterValues trivial(cd.reps.size(), 1);
  Rational ip = inner_product(cd, chi, trivial);

  Json verdicts;
  verdicts["twisted"] = twisted;
  verdicts["degree"] = chi[cd.class_of[0]].get_str();
  verdicts["degree_ok"] = chi[cd.class_of[0]] == ctx.order();
  verdicts["inner_with_trivial"] = ip.get_str();
  verdicts["special_count"] = specials;
  verdicts["special_even_count"] = evens;
  verdicts["inner_ok"] = (ip == Rational(twisted ? evens : specials));
  verdicts["failures"] =
      (verdicts["degree_ok"].get<bool>() && verdicts["inner_ok"].get<bool>()) ? 0 : 1;
  j["verdicts"] = verdicts;
  return j;
}

std::string dump_json(const Json& j) { return j.dump(2); }

}  // namespace coxinv
