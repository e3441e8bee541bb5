#include "wperp/types.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

namespace wperp {

std::string to_string(TypeTag tag) {
  switch (tag) {
    case TypeTag::A: return "A";
    case TypeTag::B: return "B";
    case TypeTag::D: return "D";
    case TypeTag::E6: return "E6";
    case TypeTag::E7: return "E7";
    case TypeTag::E8: return "E8";
    case TypeTag::F4: return "F4";
    case TypeTag::H3: return "H3";
    case TypeTag::H4: return "H4";
    case TypeTag::I2: return "I2";
    case TypeTag::P: return "P";
    case TypeTag::NotFiniteType: return "NotFiniteType";
  }
  return "?";
}

std::string IrreducibleType::name() const {
  switch (tag) {
    case TypeTag::A: return "A" + std::to_string(rank);
    case TypeTag::B: return "B" + std::to_string(rank);
    case TypeTag::D: return "D" + std::to_string(rank);
    case TypeTag::I2: return "I2(" + m.to_string() + ")";
    case TypeTag::P: return "P(" + m.to_string() + ")";
    case TypeTag::NotFiniteType: return "-";
    default: return to_string(tag);
  }
}

namespace {

// Expected label between tuple positions i < j (0-based) for a pattern of
// rank n; nullopt marks an inadmissible (tag, n, m) combination.
std::optional<Label> pattern_label(TypeTag tag, int n, Label m, int i, int j) {
  const Label two = Label::finite(2), three = Label::finite(3);
  switch (tag) {
    case TypeTag::A:
      if (n < 1) return std::nullopt;
      return j == i + 1 ? three : two;
    case TypeTag::B:
      if (n < 2) return std::nullopt;
      if (i == n - 2 && j == n - 1) return Label::finite(4);
      return j == i + 1 ? three : two;
    case TypeTag::D:
      // backbone 0..n-2, fork vertex n-1 attached at n-3
      if (n < 4) return std::nullopt;
      if (i == n - 3 && j == n - 1) return three;
      if (j == i + 1 && j <= n - 2) return three;
      return two;
    case TypeTag::E6:
    case TypeTag::E7:
    case TypeTag::E8: {
      int want = tag == TypeTag::E6 ? 6 : tag == TypeTag::E7 ? 7 : 8;
      if (n != want) return std::nullopt;
      // chain 2..n-1, plus 0-2 and 1-3
      if (i == 0 && j == 2) return three;
      if (i == 1 && j == 3) return three;
      if (j == i + 1 && i >= 2) return three;
      return two;
    }
    case TypeTag::F4:
      if (n != 4) return std::nullopt;
      if (i == 1 && j == 2) return Label::finite(4);
      return j == i + 1 ? three : two;
    case TypeTag::H3:
      if (n != 3) return std::nullopt;
      if (i == 1 && j == 2) return Label::finite(5);
      return j == i + 1 ? three : two;
    case TypeTag::H4:
      if (n != 4) return std::nullopt;
      if (i == 2 && j == 3) return Label::finite(5);
      return j == i + 1 ? three : two;
    case TypeTag::I2:
      if (n != 2 || !m.is_finite() || m.finite_value() < 3)
        return std::nullopt;
      return m;
    case TypeTag::P:
      // path labels m,3,3 plus the infinite 0-2 chord
      if (n != 4 || !m.is_odd() || m.finite_value() < 3)
        return std::nullopt;
      if (i == 0 && j == 1) return m;
      if (i == 0 && j == 2) return Label::infinity();
      if (j == i + 1) return three;
      return two;
    case TypeTag::NotFiniteType:
      return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

bool detect_sequence(const CoxeterGraph& g, const std::vector<VertexId>& seq,
                     TypeTag tag, Label param_m) {
  int n = static_cast<int>(seq.size());
  std::set<VertexId> distinct(seq.begin(), seq.end());
  if (static_cast<int>(distinct.size()) != n || n == 0) return false;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      std::optional<Label> want = pattern_label(tag, n, param_m, i, j);
      if (!want) return false;
      if (g.label(seq[i], seq[j]) != *want) return false;
    }
  // rank-1 A pattern has no pairs; still require admissibility
  if (n == 1) return tag == TypeTag::A;
  return true;
}

namespace {

IrreducibleType make(TypeTag tag, Label m, std::vector<VertexId> witness) {
  IrreducibleType t;
  t.tag = tag;
  t.rank = static_cast<int>(witness.size());
  t.m = m;
  t.witness = std::move(witness);
  return t;
}

IrreducibleType not_finite() { return IrreducibleType{}; }

// Pick the lexicographically least of the candidate witnesses that actually
// realizes the pattern; NotFiniteType if none does.
IrreducibleType best_witness(const CoxeterGraph& g, TypeTag tag, Label m,
                             std::vector<std::vector<VertexId>> candidates) {
  std::sort(candidates.begin(), candidates.end());
  for (const auto& w : candidates)
    if (detect_sequence(g, w, tag, m)) return make(tag, m, w);
  return not_finite();
}

}  // namespace

IrreducibleType classify_irreducible(const CoxeterGraph& g,
                                     const std::vector<VertexId>& component) {
  const int n = static_cast<int>(component.size());
  if (n == 0) return not_finite();
  std::vector<VertexId> comp = component;
  std::sort(comp.begin(), comp.end());

  if (n == 1) return make(TypeTag::A, Label(), comp);

  // collect the drawn edges inside the component
  std::set<VertexId> inside(comp.begin(), comp.end());
  bool has_inf = false;
  int edge_count = 0;
  std::map<VertexId, int> degree;
  for (const auto& v : comp) degree[v] = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Label l = g.label(comp[i], comp[j]);
      if (l == 2) continue;
      ++edge_count;
      ++degree[comp[i]];
      ++degree[comp[j]];
      if (l.is_infinite()) has_inf = true;
    }

  if (has_inf) {
    // only P(m) admits an infinite label; its graph has 4 vertices
    if (n != 4) return not_finite();
    std::vector<VertexId> perm = comp;
    do {
      Label m = g.label(perm[0], perm[1]);
      if (m.is_odd() && detect_sequence(g, perm, TypeTag::P, m))
        return make(TypeTag::P, m, perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return not_finite();
  }

  if (n == 2) {
    Label m = g.label(comp[0], comp[1]);
    if (m == 2) return not_finite();  // not connected
    if (m == 3) return make(TypeTag::A, Label(), comp);
    if (m == 4) return make(TypeTag::B, Label(), comp);
    return make(TypeTag::I2, m, comp);
  }

  // every finite type of rank >= 3 is a tree
  if (edge_count != n - 1) return not_finite();

  int max_deg = 0, tri_count = 0;
  VertexId center;
  for (const auto& [v, d] : degree) {
    max_deg = std::max(max_deg, d);
    if (d == 3) { tri_count++; center = v; }
  }
  if (max_deg > 3 || tri_count > 1) return not_finite();

  if (tri_count == 1) {
    // D or E shapes: all labels must be 3
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        Label l = g.label(comp[i], comp[j]);
        if (l != 2 && l != 3) return not_finite();
      }
    // walk the three branches hanging off the center
    std::vector<std::vector<VertexId>> branches;  // center excluded
    for (const auto& start : g.neighbors(center)) {
      if (!inside.count(start)) continue;
      std::vector<VertexId> br{start};
      VertexId prev = center, cur = start;
      while (true) {
        VertexId next;
        bool found = false;
        for (const auto& w : g.neighbors(cur))
          if (inside.count(w) && w != prev) { next = w; found = true; break; }
        if (!found) break;
        br.push_back(next);
        prev = cur;
        cur = next;
      }
      branches.push_back(br);
    }
    if (branches.size() != 3) return not_finite();
    std::sort(branches.begin(), branches.end(),
              [](const auto& a, const auto& b) { return a.size() < b.size(); });
    size_t l1 = branches[0].size(), l2 = branches[1].size(),
           l3 = branches[2].size();

    auto reversed = [](std::vector<VertexId> v) {
      std::reverse(v.begin(), v.end());
      return v;
    };

    if (l1 == 1 && l2 == 1) {
      // D_n: long branch (far end first), center, two leaves
      std::vector<std::vector<VertexId>> cands;
      if (l3 == 1) {
        // D4 star: any leaf may start the backbone
        std::vector<VertexId> leaves{branches[0][0], branches[1][0],
                                     branches[2][0]};
        std::sort(leaves.begin(), leaves.end());
        do {
          cands.push_back({leaves[0], center, leaves[1], leaves[2]});
        } while (std::next_permutation(leaves.begin(), leaves.end()));
      } else {
        for (int swap = 0; swap < 2; ++swap) {
          std::vector<VertexId> w = reversed(branches[2]);
          w.push_back(center);
          w.push_back(branches[swap].front());
          w.push_back(branches[1 - swap].front());
          cands.push_back(w);
        }
      }
      return best_witness(g, TypeTag::D, Label(), cands);
    }
    if (l1 == 1 && l2 == 2 && (l3 >= 2 && l3 <= 4)) {
      // E6/E7/E8: witness = (far2, near2? ...) per the fixed slot layout:
      // slots 0,2 take one length-2 branch (far end in slot 0), slot 1 the
      // leaf, slots 3.. the remaining branch walking outward from slot 3.
      TypeTag tag = l3 == 2 ? TypeTag::E6 : l3 == 3 ? TypeTag::E7 : TypeTag::E8;
      std::vector<std::vector<VertexId>> cands;
      for (int pick = 1; pick <= 2; ++pick) {
        const auto& two_leg = branches[pick];
        if (two_leg.size() != 2) continue;
        const auto& rest = branches[pick == 1 ? 2 : 1];
        std::vector<VertexId> w{two_leg[1], branches[0][0], two_leg[0],
                                center};
        for (const auto& v : rest) w.push_back(v);
        cands.push_back(w);
      }
      return best_witness(g, tag, Label(), cands);
    }
    return not_finite();
  }

  // path shapes: locate the two endpoints
  std::vector<VertexId> ends;
  for (const auto& [v, d] : degree)
    if (d == 1) ends.push_back(v);
  if (ends.size() != 2) return not_finite();

  std::vector<std::vector<VertexId>> walks;
  for (const auto& start : ends) {
    std::vector<VertexId> w{start};
    VertexId prev, cur = start;
    while (static_cast<int>(w.size()) < n) {
      bool advanced = false;
      for (const auto& nb : g.neighbors(cur))
        if (inside.count(nb) && nb != prev) {
          w.push_back(nb);
          prev = cur;
          cur = nb;
          advanced = true;
          break;
        }
      if (!advanced) break;  // disconnected despite the edge count
    }
    if (static_cast<int>(w.size()) == n) walks.push_back(w);
  }
  if (walks.empty()) return not_finite();

  for (TypeTag tag : {TypeTag::A, TypeTag::B, TypeTag::F4, TypeTag::H3,
                      TypeTag::H4}) {
    auto t = best_witness(g, tag, Label(), walks);
    if (t.tag != TypeTag::NotFiniteType) {
      // D3 = A3 is already normalized (a 3-path classifies as A);
      // nothing else to do
      return t;
    }
  }
  return not_finite();
}

bool is_finite_group(const CoxeterGraph& g) {
  for (const auto& comp : g.components())
    if (!classify_irreducible(g, comp).is_finite()) return false;
  return true;
}

long long finite_group_order(const IrreducibleType& t) {
  auto checked_mul = [](long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r))
      throw Error("group order exceeds the representable range");
    return r;
  };
  auto factorial = [&](int k) {
    long long r = 1;
    for (int i = 2; i <= k; ++i) r = checked_mul(r, i);
    return r;
  };
  switch (t.tag) {
    case TypeTag::A: return factorial(t.rank + 1);
    case TypeTag::B: {
      long long r = factorial(t.rank);
      for (int i = 0; i < t.rank; ++i) r = checked_mul(r, 2);
      return r;
    }
    case TypeTag::D: {
      long long r = factorial(t.rank);
      for (int i = 0; i < t.rank - 1; ++i) r = checked_mul(r, 2);
      return r;
    }
    case TypeTag::E6: return 51840;
    case TypeTag::E7: return 2903040;
    case TypeTag::E8: return 696729600;
    case TypeTag::F4: return 1152;
    case TypeTag::H3: return 120;
    case TypeTag::H4: return 14400;
    case TypeTag::I2:
      if (t.m.is_finite()) return 2LL * t.m.finite_value();
      break;
    default: break;
  }
  throw Error("no finite order for type " + t.name());
}

}  // namespace wperp
