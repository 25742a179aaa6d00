#include "rootsystem.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <sstream>

namespace coxinv {

std::string CoxeterType::to_string() const {
  switch (family) {
    case Family::A: return "A" + std::to_string(rank);
    case Family::B: return "B" + std::to_string(rank);
    case Family::C: return "C" + std::to_string(rank);
    case Family::D: return "D" + std::to_string(rank);
    case Family::E: return "E" + std::to_string(rank);
    case Family::F: return "F" + std::to_string(rank);
    case Family::H: return "H" + std::to_string(rank);
    case Family::I2: return "I2(" + std::to_string(m) + ")";
  }
  return "?";
}

bool is_admissible(const CoxeterType& t) {
  switch (t.family) {
    case Family::A: return t.rank >= 1;
    case Family::B: return t.rank >= 2;
    case Family::C: return t.rank >= 2;
    case Family::D: return t.rank >= 4;
    case Family::E: return t.rank >= 6 && t.rank <= 8;
    case Family::F: return t.rank == 4;
    case Family::H: return t.rank == 3 || t.rank == 4;
    case Family::I2: return t.rank == 2 && t.m >= 3;
  }
  return false;
}

CoxeterType parse_type(const std::string& s) {
  if (s.empty()) throw invalid_type_error("empty type string");
  char fam = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  CoxeterType t{};
  if (fam == 'I') {
    // Expect I2(m).
    size_t open = s.find('(');
    size_t close = s.find(')');
    if (s.size() < 5 || s[1] != '2' || open != 2 || close != s.size() - 1)
      throw invalid_type_error("bad dihedral type '" + s + "', expected I2(m)");
    int m = 0;
    for (size_t i = open + 1; i < close; ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i])))
        throw invalid_type_error("bad dihedral type '" + s + "'");
      m = m * 10 + (s[i] - '0');
      if (m > 1000) throw invalid_type_error("dihedral bond label too large");
    }
    t = CoxeterType{Family::I2, 2, m};
  } else {
    Family f;
    switch (fam) {
      case 'A': f = Family::A; break;
      case 'B': f = Family::B; break;
      case 'C': f = Family::C; break;
      case 'D': f = Family::D; break;
      case 'E': f = Family::E; break;
      case 'F': f = Family::F; break;
      case 'H': f = Family::H; break;
      default:
        throw invalid_type_error("unknown family in type '" + s + "'");
    }
    int n = 0;
    if (s.size() < 2) throw invalid_type_error("missing rank in type '" + s + "'");
    for (size_t i = 1; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i])))
        throw invalid_type_error("bad rank in type '" + s + "'");
      n = n * 10 + (s[i] - '0');
      if (n > 100) throw invalid_type_error("rank too large in type '" + s + "'");
    }
    t = CoxeterType{f, n, 0};
  }
  if (!is_admissible(t))
    throw invalid_type_error("inadmissible type '" + s + "'");
  if (t.rank > 16)
    throw invalid_type_error("rank above the supported limit of 16");
  return t;
}

mpz_class group_order(const CoxeterType& t) {
  auto fact = [](int n) {
    mpz_class r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
  };
  mpz_class two = 2;
  switch (t.family) {
    case Family::A: return fact(t.rank + 1);
    case Family::B:
    case Family::C: {
      mpz_class p;
      mpz_pow_ui(p.get_mpz_t(), two.get_mpz_t(), t.rank);
      return p * fact(t.rank);
    }
    case Family::D: {
      mpz_class p;
      mpz_pow_ui(p.get_mpz_t(), two.get_mpz_t(), t.rank - 1);
      return p * fact(t.rank);
    }
    case Family::E:
      if (t.rank == 6) return 51840;
      if (t.rank == 7) return 2903040;
      return 696729600;
    case Family::F: return 1152;
    case Family::H: return t.rank == 3 ? 120 : 14400;
    case Family::I2: return 2 * t.m;
  }
  return 0;
}

mpz_class group_order(const std::vector<CoxeterType>& components) {
  mpz_class r = 1;
  for (const auto& c : components) r *= group_order(c);
  return r;
}

std::vector<int> mask_to_indices(SubsetMask j) {
  std::vector<int> out;
  for (int i = 0; i < 32; ++i)
    if (j & (1u << i)) out.push_back(i);
  return out;
}

SubsetMask indices_to_mask(const std::vector<int>& idx) {
  SubsetMask m = 0;
  for (int i : idx) m |= (1u << i);
  return m;
}

bool RootSystem::VecLexLess::operator()(const Vec& a, const Vec& b) const {
  for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] != b[i]) return Scalar::lex_less(a[i], b[i]);
  }
  return a.size() < b.size();
}

int RootSystem::root_index(const Vec& v) const {
  auto it = index_.find(v);
  return it == index_.end() ? -1 : it->second;
}

Scalar RootSystem::form(const Vec& u, const Vec& v) const {
  Scalar acc = Scalar::zero(field);
  for (int i = 0; i < rank; ++i) {
    if (u[i].is_zero()) continue;
    for (int j = 0; j < rank; ++j) {
      if (v[j].is_zero()) continue;
      acc += u[i] * gram.at(i, j) * v[j];
    }
  }
  return acc;
}

Vec RootSystem::reflect_vec(const Vec& v, int root_idx) const {
  const Vec& alpha = roots.at(root_idx);
  Scalar c = (form(v, alpha) * Scalar(2)) / form(alpha, alpha);
  Vec r = v;
  for (int i = 0; i < rank; ++i) r[i] -= c * alpha[i];
  return r;
}

bool RootSystem::as_signed_simple(int idx, int* s, int* sign) const {
  if (idx < rank) {
    *s = idx;
    *sign = 1;
    return true;
  }
  for (int t = 0; t < rank; ++t) {
    if (neg_index[t] == idx) {
      *s = t;
      *sign = -1;
      return true;
    }
  }
  return false;
}

std::vector<int> RootSystem::parabolic_roots(SubsetMask j) const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i) {
    bool inside = true;
    for (int s = 0; s < rank && inside; ++s)
      if (!(j & (1u << s)) && !roots[i][s].is_zero()) inside = false;
    if (inside) out.push_back(i);
  }
  return out;
}

std::vector<Rational> RootSystem::ambient_of(const Vec& v) const {
  if (!has_ambient())
    throw invalid_operand_error("no ambient realization for this type");
  std::vector<Rational> out(ambient_dim, Rational(0));
  for (int i = 0; i < rank; ++i) {
    Rational c = v[i].rational_value();
    for (int k = 0; k < ambient_dim; ++k) out[k] += c * ambient_simple[i][k];
  }
  return out;
}

namespace {

// Bourbaki epsilon-coordinates of the simple roots, crystallographic types.
std::vector<std::vector<Rational>> bourbaki_simple(const CoxeterType& t,
                                                   int* ambient_dim) {
  int n = t.rank;
  std::vector<std::vector<Rational>> simple;
  auto unit = [](int dim, int i) {
    std::vector<Rational> v(dim, Rational(0));
    v[i] = 1;
    return v;
  };
  switch (t.family) {
    case Family::A: {
      *ambient_dim = n + 1;
      for (int i = 0; i < n; ++i) {
        auto v = unit(n + 1, i);
        v[i + 1] = -1;
        simple.push_back(v);
      }
      break;
    }
    case Family::B:
    case Family::C:
    case Family::D: {
      *ambient_dim = n;
      for (int i = 0; i + 1 < n; ++i) {
        auto v = unit(n, i);
        v[i + 1] = -1;
        simple.push_back(v);
      }
      if (t.family == Family::B) simple.push_back(unit(n, n - 1));
      if (t.family == Family::C) {
        auto v = unit(n, n - 1);
        v[n - 1] = 2;
        simple.push_back(v);
      }
      if (t.family == Family::D) {
        auto v = unit(n, n - 2);
        v[n - 1] = 1;
        simple.push_back(v);
      }
      break;
    }
    case Family::E: {
      *ambient_dim = 8;
      std::vector<Rational> a1(8, Rational(-1, 2));
      a1[0] = Rational(1, 2);
      a1[7] = Rational(1, 2);
      simple.push_back(a1);
      auto a2 = unit(8, 0);
      a2[1] = 1;
      simple.push_back(a2);
      auto a3 = unit(8, 1);
      a3[0] = -1;
      simple.push_back(a3);
      for (int i = 4; i <= n; ++i) {
        auto v = unit(8, i - 2);
        v[i - 3] = -1;
        simple.push_back(v);
      }
      break;
    }
    case Family::F: {
      *ambient_dim = 4;
      auto a1 = unit(4, 1);
      a1[2] = -1;
      auto a2 = unit(4, 2);
      a2[3] = -1;
      auto a3 = unit(4, 3);
      std::vector<Rational> a4{Rational(1, 2), Rational(-1, 2), Rational(-1, 2),
                               Rational(-1, 2)};
      simple = {a1, a2, a3, a4};
      break;
    }
    default:
      throw std::logic_error("no ambient realization");
  }
  return simple;
}

std::vector<std::vector<int>> coxeter_matrix(const CoxeterType& t) {
  int n = t.rank;
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 2));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  auto bond = [&m](int i, int j, int v) { m[i][j] = m[j][i] = v; };
  switch (t.family) {
    case Family::A:
      for (int i = 0; i + 1 < n; ++i) bond(i, i + 1, 3);
      break;
    case Family::B:
    case Family::C:
      for (int i = 0; i + 2 < n; ++i) bond(i, i + 1, 3);
      bond(n - 2, n - 1, 4);
      break;
    case Family::D:
      for (int i = 0; i + 2 < n; ++i) bond(i, i + 1, 3);
      bond(n - 3, n - 1, 3);
      break;
    case Family::E:
      // Bourbaki: chain 1-3-4-5-...-n with 2 attached to 4.
      bond(0, 2, 3);
      bond(1, 3, 3);
      for (int i = 2; i + 1 < n; ++i) bond(i, i + 1, 3);
      break;
    case Family::F:
      bond(0, 1, 3);
      bond(1, 2, 4);
      bond(2, 3, 3);
      break;
    case Family::H:
      bond(0, 1, 5);
      for (int i = 1; i + 1 < n; ++i) bond(i, i + 1, 3);
      break;
    case Family::I2:
      bond(0, 1, t.m);
      break;
  }
  return m;
}

}  // namespace

RootSystem build_root_system(const CoxeterType& t) {
  if (!is_admissible(t)) throw invalid_type_error("inadmissible type");
  RootSystem rs;
  rs.type = t;
  rs.rank = t.rank;
  rs.cox_m = coxeter_matrix(t);

  bool crystallographic = t.family == Family::A || t.family == Family::B ||
                          t.family == Family::C || t.family == Family::D ||
                          t.family == Family::E || t.family == Family::F;
  if (crystallographic) {
    rs.field = Field::rationals();
    rs.ambient_simple = bourbaki_simple(t, &rs.ambient_dim);
    rs.gram = Mat(rs.rank, rs.rank, Scalar::zero(rs.field));
    for (int i = 0; i < rs.rank; ++i)
      for (int j = 0; j < rs.rank; ++j) {
        Rational dot(0);
        for (int k = 0; k < rs.ambient_dim; ++k)
          dot += rs.ambient_simple[i][k] * rs.ambient_simple[j][k];
        rs.gram.at(i, j) = Scalar(rs.field, {dot});
      }
  } else {
    int field_m = (t.family == Family::H) ? 5 : t.m;
    rs.field = Field::cos_extension(field_m);
    rs.gram = Mat(rs.rank, rs.rank, Scalar::zero(rs.field));
    for (int i = 0; i < rs.rank; ++i) rs.gram.at(i, i) = Scalar(rs.field, {Rational(2)});
    for (int i = 0; i < rs.rank; ++i)
      for (int j = i + 1; j < rs.rank; ++j) {
        int mij = rs.cox_m[i][j];
        Scalar v = Scalar::zero(rs.field);
        if (mij == 3) v = Scalar(rs.field, {Rational(-1)});
        if (mij == 5 || mij == t.m) {
          if (mij == field_m)
            v = -Scalar::generator(rs.field);
          else
            throw std::logic_error("bond label outside the field");
        }
        if (mij >= 3) rs.gram.at(i, j) = rs.gram.at(j, i) = v;
      }
  }

  // Closure of the simple roots under the simple reflections, breadth first,
  // each new layer sorted for a reproducible index order.
  RootSystem::VecLexLess less;
  for (int s = 0; s < rs.rank; ++s) {
    Vec v(rs.rank, Scalar::zero(rs.field));
    v[s] = Scalar::one(rs.field);
    rs.index_.emplace(v, s);
    rs.roots.push_back(std::move(v));
  }
  // Reflection in alpha_s only changes coordinate s.
  auto simple_reflect = [&rs](const Vec& v, int s) {
    Scalar num = Scalar::zero(rs.field);
    for (int j = 0; j < rs.rank; ++j)
      if (!v[j].is_zero()) num += v[j] * rs.gram.at(j, s);
    Scalar c = (num * Scalar(2)) / rs.gram.at(s, s);
    Vec r = v;
    r[s] -= c;
    return r;
  };
  std::vector<int> frontier(rs.rank);
  for (int s = 0; s < rs.rank; ++s) frontier[s] = s;
  while (!frontier.empty()) {
    std::vector<Vec> fresh;
    for (int idx : frontier) {
      for (int s = 0; s < rs.rank; ++s) {
        Vec img = simple_reflect(rs.roots[idx], s);
        if (rs.index_.count(img) == 0) {
          bool seen = false;
          for (const Vec& f : fresh)
            if (!less(f, img) && !less(img, f)) {
              seen = true;
              break;
            }
          if (!seen) fresh.push_back(std::move(img));
        }
      }
    }
    std::sort(fresh.begin(), fresh.end(), less);
    frontier.clear();
    for (Vec& v : fresh) {
      int id = rs.size();
      rs.index_.emplace(v, id);
      rs.roots.push_back(std::move(v));
      frontier.push_back(id);
    }
    if (rs.size() > 65000) throw std::logic_error("root closure runaway");
  }

  // Sign split and negatives.
  rs.positive.resize(rs.size());
  rs.neg_index.resize(rs.size());
  for (int i = 0; i < rs.size(); ++i) {
    int pos = 0, neg = 0;
    for (int k = 0; k < rs.rank; ++k) {
      int s = rs.roots[i][k].sign();
      if (s > 0) ++pos;
      if (s < 0) ++neg;
    }
    if (pos && neg) throw std::logic_error("root with mixed coordinate signs");
    rs.positive[i] = pos > 0;
    if (rs.positive[i]) ++rs.positive_count;
    Vec m = rs.roots[i];
    for (auto& c : m) c = -c;
    int ni = rs.root_index(m);
    if (ni < 0) throw std::logic_error("root set is not symmetric");
    rs.neg_index[i] = ni;
  }

  // Simple reflections as permutations of the indexed roots.
  rs.simple_perm.assign(rs.rank, std::vector<int>(rs.size()));
  for (int s = 0; s < rs.rank; ++s)
    for (int i = 0; i < rs.size(); ++i) {
      int img = rs.root_index(simple_reflect(rs.roots[i], s));
      if (img < 0) throw std::logic_error("reflection left the root set");
      rs.simple_perm[s][i] = img;
    }

  // The Gram matrix must reproduce the Coxeter diagram: derive each bond
  // order from 4 B(a,b)^2 / (B(a,a) B(b,b)) = 4 cos^2(pi/m) and compare.
  for (int i = 0; i < rs.rank; ++i)
    for (int j = i + 1; j < rs.rank; ++j) {
      Scalar q = rs.gram.at(i, j) * rs.gram.at(i, j) * Scalar(4) /
                 (rs.gram.at(i, i) * rs.gram.at(j, j));
      int derived = -1;
      if (q.is_zero()) derived = 2;
      else if (q == Scalar(1)) derived = 3;
      else if (q == Scalar(2)) derived = 4;
      else if (q == Scalar(3)) derived = 6;
      else if (rs.field->kind() != FieldKind::rational) {
        Scalar g = Scalar::generator(rs.field);
        if (q == g * g) derived = rs.field->cos_m();
      }
      if (derived != rs.cox_m[i][j])
        throw std::logic_error("Gram matrix disagrees with the diagram");
    }

  return rs;
}

std::vector<CoxeterType> classify_components(const RootSystem& rs, SubsetMask j) {
  std::vector<int> nodes = mask_to_indices(j);
  std::vector<CoxeterType> out;
  std::vector<bool> used(nodes.size(), false);

  auto bond = [&rs](int a, int b) { return rs.cox_m[a][b]; };

  for (size_t start = 0; start < nodes.size(); ++start) {
    if (used[start]) continue;
    // Collect the connected component.
    std::vector<int> comp;
    std::vector<size_t> stack{start};
    used[start] = true;
    while (!stack.empty()) {
      size_t cur = stack.back();
      stack.pop_back();
      comp.push_back(nodes[cur]);
      for (size_t k = 0; k < nodes.size(); ++k)
        if (!used[k] && bond(nodes[cur], nodes[k]) >= 3) {
          used[k] = true;
          stack.push_back(k);
        }
    }
    std::sort(comp.begin(), comp.end());
    int r = static_cast<int>(comp.size());

    if (r == 1) {
      out.push_back({Family::A, 1, 0});
      continue;
    }
    if (r == 2) {
      int b = bond(comp[0], comp[1]);
      if (b == 3) out.push_back({Family::A, 2, 0});
      else if (b == 4) out.push_back({Family::C, 2, 0});
      else if (b == 6) out.push_back({Family::I2, 2, 6});
      else out.push_back({Family::I2, 2, b});
      continue;
    }

    // Degrees inside the component.
    std::vector<int> deg(r, 0);
    int edges = 0, max_bond = 0, bond4_edges = 0, bond5_edges = 0;
    std::pair<int, int> special_edge{-1, -1};
    for (int a = 0; a < r; ++a)
      for (int b = a + 1; b < r; ++b) {
        int mb = bond(comp[a], comp[b]);
        if (mb >= 3) {
          ++deg[a];
          ++deg[b];
          ++edges;
          max_bond = std::max(max_bond, mb);
          if (mb == 4) {
            ++bond4_edges;
            special_edge = {a, b};
          }
          if (mb == 5) {
            ++bond5_edges;
            special_edge = {a, b};
          }
          if (mb >= 6)
            throw std::logic_error("unclassifiable component: bond too large");
        }
      }
    if (edges != r - 1) throw std::logic_error("unclassifiable component: cycle");

    int deg3 = 0, branch_node = -1;
    for (int a = 0; a < r; ++a) {
      if (deg[a] > 3) throw std::logic_error("unclassifiable component: degree > 3");
      if (deg[a] == 3) {
        ++deg3;
        branch_node = a;
      }
    }

    if (max_bond == 3) {
      if (deg3 == 0) {
        out.push_back({Family::A, r, 0});
        continue;
      }
      if (deg3 != 1) throw std::logic_error("unclassifiable component: branches");
      // Branch lengths from the unique degree-3 node.
      std::vector<int> lens;
      for (int a = 0; a < r; ++a) {
        if (a == branch_node || bond(comp[branch_node], comp[a]) < 3) continue;
        int len = 1, prev = branch_node, cur = a;
        while (true) {
          int next = -1;
          for (int b = 0; b < r; ++b)
            if (b != prev && b != cur && bond(comp[cur], comp[b]) >= 3) next = b;
          if (next < 0) break;
          prev = cur;
          cur = next;
          ++len;
        }
        lens.push_back(len);
      }
      std::sort(lens.begin(), lens.end());
      if (lens.size() != 3) throw std::logic_error("unclassifiable branch pattern");
      if (lens[0] == 1 && lens[1] == 1) {
        out.push_back({Family::D, r, 0});
        continue;
      }
      if (lens[0] == 1 && lens[1] == 2 && r >= 6 && r <= 8 && lens[2] == r - 4) {
        out.push_back({Family::E, r, 0});
        continue;
      }
      throw std::logic_error("unclassifiable branch pattern");
    }

    // One marked bond; component must be a path.
    if (deg3 != 0) throw std::logic_error("unclassifiable component: marked branch");
    if (max_bond == 4) {
      if (bond4_edges != 1) throw std::logic_error("two marked bonds");
      auto [a, b] = special_edge;
      bool a_end = deg[a] == 1, b_end = deg[b] == 1;
      if (!a_end && !b_end) {
        if (r == 4) {
          out.push_back({Family::F, 4, 0});
          continue;
        }
        throw std::logic_error("interior marked bond outside F4");
      }
      // Path with the 4-bond at an end: B if the terminal root is the short
      // one, C if it is the long one.
      int term = a_end ? a : b;
      int other = a_end ? b : a;
      const Vec& rt = rs.roots[comp[term]];
      const Vec& ru = rs.roots[comp[other]];
      Scalar lt = rs.form(rt, rt), lu = rs.form(ru, ru);
      Scalar diff = lt - lu;
      int s = diff.sign();
      if (s < 0) out.push_back({Family::B, r, 0});
      else if (s > 0) out.push_back({Family::C, r, 0});
      else throw std::logic_error("marked bond with equal lengths at rank > 2");
      continue;
    }
    if (max_bond == 5) {
      if (bond5_edges != 1) throw std::logic_error("two marked bonds");
      auto [a, b] = special_edge;
      if (deg[a] != 1 && deg[b] != 1)
        throw std::logic_error("interior 5-bond");
      if (r == 3) {
        out.push_back({Family::H, 3, 0});
        continue;
      }
      if (r == 4) {
        out.push_back({Family::H, 4, 0});
        continue;
      }
      throw std::logic_error("5-bond chain of unsupported rank");
    }
    throw std::logic_error("unclassifiable component");
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string components_to_string(const std::vector<CoxeterType>& comps) {
  if (comps.empty()) return "-";
  std::ostringstream os;
  for (size_t i = 0; i < comps.size(); ++i) {
    if (i) os << "+";
    os << comps[i].to_string();
  }
  return os.str();
}

bool central_by_component_types(const std::vector<CoxeterType>& comps) {
  for (const auto& c : comps) {
    if (c.family == Family::A && c.rank >= 2) return false;
    if (c.family == Family::D && c.rank % 2 == 1) return false;
    if (c.family == Family::E && c.rank == 6) return false;
    if (c.family == Family::I2 && c.m % 2 == 1) return false;
  }
  return true;
}

}  // namespace coxinv
