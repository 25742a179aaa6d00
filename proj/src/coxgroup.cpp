#include "coxgroup.hpp"

#include <algorithm>
#include <cassert>

namespace coxinv {

Perm perm_identity(int n) {
  Perm p(n);
  for (int i = 0; i < n; ++i) p[i] = static_cast<uint16_t>(i);
  return p;
}

bool perm_is_identity(const Perm& p) {
  for (size_t i = 0; i < p.size(); ++i)
    if (p[i] != i) return false;
  return true;
}

Perm perm_compose(const Perm& a, const Perm& b) {
  Perm r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
  return r;
}

Perm perm_inverse(const Perm& a) {
  Perm r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[a[i]] = static_cast<uint16_t>(i);
  return r;
}

Perm simple_reflection(const RootSystem& rs, int s) {
  if (s < 0 || s >= rs.rank) throw invalid_operand_error("bad simple index");
  Perm p(rs.size());
  for (int i = 0; i < rs.size(); ++i)
    p[i] = static_cast<uint16_t>(rs.simple_perm[s][i]);
  return p;
}

Perm from_word(const RootSystem& rs, const std::vector<int>& word) {
  Perm w = perm_identity(rs.size());
  for (int s : word) w = perm_compose(w, simple_reflection(rs, s));
  return w;
}

int length(const RootSystem& rs, const Perm& w) {
  int l = 0;
  for (int i = 0; i < rs.size(); ++i)
    if (rs.positive[i] && !rs.positive[w[i]]) ++l;
  return l;
}

std::vector<int> reduced_word(const RootSystem& rs, Perm w) {
  std::vector<int> word;
  while (!perm_is_identity(w)) {
    int s = -1;
    for (int t = 0; t < rs.rank; ++t)
      if (!rs.positive[w[t]]) {
        s = t;
        break;
      }
    if (s < 0) throw std::logic_error("non-identity element with no descent");
    // w(alpha_s) < 0 means l(ws) = l(w) - 1; strip letters off the right.
    word.push_back(s);
    w = perm_compose(w, simple_reflection(rs, s));
  }
  std::reverse(word.begin(), word.end());
  return word;
}

Perm longest_element(const RootSystem& rs, SubsetMask j) {
  Perm w = perm_identity(rs.size());
  Perm winv = w;
  std::vector<int> idx = mask_to_indices(j);
  while (true) {
    int pick = -1;
    for (int s : idx)
      if (rs.positive[winv[s]]) {
        pick = s;
        break;
      }
    if (pick < 0) break;
    const Perm srefl = simple_reflection(rs, pick);
    w = perm_compose(srefl, w);
    winv = perm_compose(winv, srefl);
  }
  return w;
}

bool is_central_longest(const RootSystem& rs, SubsetMask j) {
  Perm w = longest_element(rs, j);
  for (int s : mask_to_indices(j))
    if (w[s] != rs.neg_index[s]) return false;
  return true;
}

std::optional<SubsetMask> conjugate_subset(const RootSystem& rs, SubsetMask j,
                                           const Perm& w) {
  SubsetMask k = 0;
  for (int s : mask_to_indices(j)) {
    int t, sign;
    if (!rs.as_signed_simple(w[s], &t, &sign)) return std::nullopt;
    k |= (1u << t);
  }
  return k;
}

bool in_parabolic(const RootSystem& rs, Perm w, SubsetMask j) {
  std::vector<int> idx = mask_to_indices(j);
  while (!perm_is_identity(w)) {
    int pick = -1;
    for (int s : idx)
      if (!rs.positive[w[s]]) {
        pick = s;
        break;
      }
    if (pick < 0) return false;
    w = perm_compose(w, simple_reflection(rs, pick));
  }
  return true;
}

Mat matrix_of(const RootSystem& rs, const Perm& w) {
  Mat m(rs.rank, rs.rank, Scalar::zero(rs.field));
  for (int j = 0; j < rs.rank; ++j) {
    const Vec& img = rs.roots[w[j]];
    for (int i = 0; i < rs.rank; ++i) m.at(i, j) = img[i];
  }
  return m;
}

std::vector<Perm> enumerate_group(const RootSystem& rs, uint64_t limit) {
  mpz_class order = group_order(rs.type);
  if (mpz_cmp_ui(order.get_mpz_t(), limit) > 0)
    throw size_exceeded_error("group order " + order.get_str() +
                                  " exceeds the enumeration limit " +
                                  std::to_string(limit),
                              limit);
  std::vector<Perm> gens;
  for (int s = 0; s < rs.rank; ++s) gens.push_back(simple_reflection(rs, s));

  std::vector<Perm> elements{perm_identity(rs.size())};
  std::unordered_map<Perm, int, PermHash> seen;
  seen.emplace(elements[0], 0);
  for (size_t head = 0; head < elements.size(); ++head) {
    Perm cur = elements[head];  // copy: the vector may reallocate
    for (const Perm& g : gens) {
      Perm next = perm_compose(cur, g);
      if (seen.emplace(next, static_cast<int>(elements.size())).second)
        elements.push_back(std::move(next));
    }
  }
  if (order != mpz_class(static_cast<unsigned long>(elements.size())))
    throw std::logic_error("enumeration disagrees with the order formula");
  return elements;
}

// ---------------------------------------------------------------------------
// GroupContext

GroupContext::GroupContext(const CoxeterType& t, uint64_t oracle_threshold)
    : rs_(build_root_system(t)),
      order_(group_order(t)),
      threshold_(oracle_threshold) {
  subsets_.resize(size_t(1) << rs_.rank);
}

void GroupContext::require_oracle(const char* what) const {
  if (!within_oracle())
    throw size_exceeded_error(std::string(what) + ": group order " +
                                  order_.get_str() + " exceeds the oracle threshold " +
                                  std::to_string(threshold_),
                              threshold_);
}

const SubsetInfo& GroupContext::subset(SubsetMask j) const {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  auto& slot = subsets_.at(j);
  if (!slot) {
    auto info = std::make_unique<SubsetInfo>();
    info->mask = j;
    info->longest = longest_element(rs_, j);
    info->central = true;
    for (int s : mask_to_indices(j))
      if (info->longest[s] != rs_.neg_index[s]) info->central = false;
    info->components = classify_components(rs_, j);
    // The greedy construction must land on the longest element of W_J.
    int expect = static_cast<int>(rs_.parabolic_roots(j).size()) / 2;
    if (length(rs_, info->longest) != expect)
      throw std::logic_error("longest element has wrong length");
    slot = std::move(info);
  }
  return *slot;
}

void GroupContext::build_classes_locked() const {
  const int n = rs_.rank;
  const size_t total = size_t(1) << n;
  std::vector<int> parent(total);
  for (size_t i = 0; i < total; ++i) parent[i] = static_cast<int>(i);
  auto find = [&parent](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };

  // Elementary moves J -> J^{w_K} for K = J + {s}.
  for (SubsetMask j = 0; j < total; ++j) {
    for (int s = 0; s < n; ++s) {
      if (j & (1u << s)) continue;
      SubsetMask k = j | (1u << s);
      auto img = conjugate_subset(rs_, j, subset(k).longest);
      if (!img) throw std::logic_error("w_K does not permute the simple roots of K");
      unite(static_cast<int>(j), static_cast<int>(*img));
    }
  }

  auto canonical_order = [](SubsetMask a, SubsetMask b) {
    return mask_to_indices(a) < mask_to_indices(b);
  };

  std::unordered_map<int, std::vector<SubsetMask>> groups;
  for (SubsetMask j = 0; j < total; ++j) groups[find(static_cast<int>(j))].push_back(j);

  SubsetClasses sc;
  sc.class_of.assign(total, -1);
  std::vector<std::vector<SubsetMask>> classes;
  for (auto& [root, members] : groups) {
    std::sort(members.begin(), members.end(), canonical_order);
    classes.push_back(std::move(members));
  }
  std::sort(classes.begin(), classes.end(),
            [&](const auto& a, const auto& b) { return canonical_order(a[0], b[0]); });
  for (size_t c = 0; c < classes.size(); ++c)
    for (SubsetMask m : classes[c]) sc.class_of[m] = static_cast<int>(c);
  sc.classes = std::move(classes);

  // Oracle validation: the move graph must reproduce the orbits of subsets
  // under conjugation by every group element.
  if (within_oracle()) {
    const auto& els = elements();
    std::vector<int> bparent(total);
    for (size_t i = 0; i < total; ++i) bparent[i] = static_cast<int>(i);
    auto bfind = [&bparent](int x) {
      while (bparent[x] != x) {
        bparent[x] = bparent[bparent[x]];
        x = bparent[x];
      }
      return x;
    };
    for (SubsetMask j = 0; j < total; ++j)
      for (const Perm& w : els) {
        auto img = conjugate_subset(rs_, j, w);
        if (img && *img != j)
          bparent[bfind(static_cast<int>(j))] = bfind(static_cast<int>(*img));
      }
    for (SubsetMask a = 0; a < total; ++a)
      for (SubsetMask b = a + 1; b < total; ++b) {
        bool fast_same = sc.class_of[a] == sc.class_of[b];
        bool brute_same =
            bfind(static_cast<int>(a)) == bfind(static_cast<int>(b));
        if (fast_same != brute_same)
          throw std::logic_error("subset classes disagree with the brute orbits");
      }
  }

  classes_ = std::move(sc);
}

const SubsetClasses& GroupContext::subset_classes() const {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  if (!classes_) build_classes_locked();
  return *classes_;
}

const std::vector<Perm>& GroupContext::elements() const {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  if (!elements_) {
    elements_ = enumerate_group(rs_, threshold_);
    for (size_t i = 0; i < elements_->size(); ++i)
      index_.emplace((*elements_)[i], static_cast<int>(i));
  }
  return *elements_;
}

const std::vector<Perm>& GroupContext::inverses() const {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  if (!inverses_) {
    const auto& els = elements();
    std::vector<Perm> inv(els.size());
    for (size_t i = 0; i < els.size(); ++i) inv[i] = perm_inverse(els[i]);
    inverses_ = std::move(inv);
  }
  return *inverses_;
}

int GroupContext::element_index(const Perm& p) const {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  elements();
  auto it = index_.find(p);
  return it == index_.end() ? -1 : it->second;
}

}  // namespace coxinv
