#include "wperp/oracle.hpp"

#include <cmath>
#include <deque>
#include <set>

namespace wperp {

namespace {

std::vector<long long> grid_key(const RootVector& v) {
  std::vector<long long> key(v.size());
  for (int i = 0; i < v.size(); ++i)
    key[i] = std::llround(v[i] / kGridStep);
  return key;
}

// Roots have coordinates of one uniform sign in the simple-root basis, so
// the coordinate sum decides the half of the root system.
bool is_positive(const RootVector& v) { return v.sum() > 0; }

double form(const FormMatrix& B, const RootVector& a, const RootVector& b) {
  return a.dot(B * b);
}

}  // namespace

FormMatrix geometric_form(const CoxeterGraph& g) {
  const int n = g.size();
  const auto& vs = g.vertices();
  FormMatrix B = FormMatrix::Identity(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Label m = g.label(vs[i], vs[j]);
      double v;
      if (m.is_infinite())
        v = -1.0;
      else if (m == 2)
        v = 0.0;
      else
        v = -std::cos(M_PI / m.finite_value());
      B(i, j) = B(j, i) = v;
    }
  return B;
}

RootVector simple_root(int n, int i) {
  RootVector v = RootVector::Zero(n);
  v[i] = 1.0;
  return v;
}

RootVector apply_simple_reflection(const FormMatrix& B, int i,
                                   const RootVector& v) {
  RootVector w = v;
  w[i] -= 2.0 * B.row(i).dot(v);
  return w;
}

RootVector apply_word(const FormMatrix& B, const std::vector<int>& word,
                      RootVector v) {
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    v = apply_simple_reflection(B, *it, v);
  return v;
}

std::optional<std::pair<int, int>> RootSystem::locate(
    const RootVector& v) const {
  auto hit = index_.find(grid_key(v));
  if (hit != index_.end()) return std::make_pair(hit->second, +1);
  hit = index_.find(grid_key(RootVector(-v)));
  if (hit != index_.end()) return std::make_pair(hit->second, -1);
  return std::nullopt;
}

RootSystem enumerate_roots(const FormMatrix& B, int cap) {
  const int n = static_cast<int>(B.rows());
  RootSystem rs;
  rs.complete = true;
  std::deque<int> queue;
  auto push = [&](const RootVector& v) {
    RootVector pos = is_positive(v) ? v : RootVector(-v);
    auto key = grid_key(pos);
    if (rs.index_.count(key)) return;
    rs.index_[key] = rs.count();
    rs.positives.push_back(pos);
    queue.push_back(rs.count() - 1);
  };
  for (int i = 0; i < n; ++i) push(simple_root(n, i));
  while (!queue.empty()) {
    if (rs.count() > cap) {
      rs.complete = false;
      break;
    }
    int j = queue.front();
    queue.pop_front();
    for (int i = 0; i < n; ++i)
      push(apply_simple_reflection(B, i, rs.positives[j]));
  }
  return rs;
}

SignedPerm identity_perm(int n_roots) {
  SignedPerm p;
  p.act.resize(n_roots);
  for (int j = 0; j < n_roots; ++j) p.act[j] = j + 1;
  return p;
}

SignedPerm compose(const SignedPerm& a, const SignedPerm& b) {
  SignedPerm r;
  r.act.resize(b.act.size());
  for (size_t j = 0; j < b.act.size(); ++j) {
    int32_t bj = b.act[j];
    int32_t aj = a.act[std::abs(bj) - 1];
    r.act[j] = bj > 0 ? aj : -aj;
  }
  r.word = a.word;
  r.word.insert(r.word.end(), b.word.begin(), b.word.end());
  return r;
}

int FiniteGroup::find(const SignedPerm& p) const {
  auto hit = index_.find(p.act);
  return hit == index_.end() ? -1 : hit->second;
}

namespace {

// Action of one simple generator on the full positive-root list.
SignedPerm simple_perm(const FormMatrix& B, const RootSystem& rs, int i) {
  SignedPerm p;
  p.act.resize(rs.count());
  p.word = {i};
  for (int j = 0; j < rs.count(); ++j) {
    RootVector img = apply_simple_reflection(B, i, rs.positives[j]);
    auto hit = rs.locate(img);
    if (!hit)
      throw Error("reflection image of a root is not a known root; "
                  "the root closure must be incomplete");
    p.act[j] = hit->second * (hit->first + 1);
  }
  return p;
}

}  // namespace

FiniteGroup enumerate_group(const CoxeterGraph& g, int root_cap,
                            int group_cap) {
  FiniteGroup G;
  FormMatrix B = geometric_form(g);
  G.roots = enumerate_roots(B, root_cap);
  if (!G.roots.complete)
    throw CapExceeded("root system exceeds " + std::to_string(root_cap) +
                      " positive roots");
  for (int i = 0; i < g.size(); ++i)
    G.simple_refl.push_back(simple_perm(B, G.roots, i));

  std::deque<int> queue;
  auto push = [&](SignedPerm&& p) {
    if (G.index_.count(p.act)) return;
    G.index_[p.act] = static_cast<int>(G.elements.size());
    G.elements.push_back(std::move(p));
    queue.push_back(static_cast<int>(G.elements.size()) - 1);
  };
  push(identity_perm(G.roots.count()));
  while (!queue.empty()) {
    if (G.order() > group_cap)
      throw CapExceeded("group closure exceeds " + std::to_string(group_cap) +
                        " elements");
    int j = queue.front();
    queue.pop_front();
    for (const auto& s : G.simple_refl)
      push(compose(G.elements[j], s));
  }
  return G;
}

SignedPerm root_reflection(const FormMatrix& B, const RootSystem& rs, int j) {
  const RootVector& beta = rs.positives[j];
  SignedPerm p;
  p.act.resize(rs.count());
  for (int k = 0; k < rs.count(); ++k) {
    RootVector img =
        rs.positives[k] - 2.0 * form(B, beta, rs.positives[k]) * beta;
    auto hit = rs.locate(img);
    if (!hit)
      throw Error("root reflection leaves the known root system");
    p.act[k] = hit->second * (hit->first + 1);
  }
  return p;
}

std::vector<int> perp_positive_roots(const FormMatrix& B,
                                     const RootSystem& rs, int x_index) {
  std::vector<int> out;
  const RootVector alpha = simple_root(static_cast<int>(B.rows()), x_index);
  for (int j = 0; j < rs.count(); ++j)
    if (std::abs(form(B, alpha, rs.positives[j])) < kZeroTol)
      out.push_back(j);
  return out;
}

std::vector<int> canonical_perp_simples(const FormMatrix& B,
                                        const RootSystem& rs,
                                        const std::vector<int>& perp) {
  std::vector<int> simples;
  for (int j : perp) {
    const RootVector& beta = rs.positives[j];
    bool keeps_positive = true;
    for (int k : perp) {
      if (k == j) continue;
      RootVector img =
          rs.positives[k] - 2.0 * form(B, beta, rs.positives[k]) * beta;
      if (!is_positive(img)) {
        keeps_positive = false;
        break;
      }
    }
    if (keeps_positive) simples.push_back(j);
  }
  return simples;
}

std::vector<int> two_summand_nonsimples(const FormMatrix& B,
                                        const RootSystem& rs,
                                        const std::vector<int>& perp) {
  (void)B;
  std::vector<int> out;
  for (int j : perp) {
    bool decomposes = false;
    for (size_t a = 0; a < perp.size() && !decomposes; ++a) {
      if (perp[a] == j) continue;
      for (size_t b = a + 1; b < perp.size() && !decomposes; ++b) {
        if (perp[b] == j) continue;
        // beta_j = c1 beta_a + c2 beta_b with c1, c2 > 0?
        const RootVector &u = rs.positives[perp[a]], &v = rs.positives[perp[b]];
        Eigen::MatrixXd M(u.size(), 2);
        M.col(0) = u;
        M.col(1) = v;
        Eigen::Vector2d c =
            M.colPivHouseholderQr().solve(rs.positives[j]);
        if ((M * c - rs.positives[j]).norm() < kZeroTol && c[0] > kZeroTol &&
            c[1] > kZeroTol)
          decomposes = true;
      }
    }
    if (decomposes) out.push_back(j);
  }
  return out;
}

Label order_from_inner_product(double ip) {
  for (int m = 2; m <= 360; ++m)
    if (std::abs(ip + std::cos(M_PI / m)) < kZeroTol) return Label::finite(m);
  if (ip <= -1.0 + kZeroTol) return Label::infinity();
  throw NumericAmbiguity("inner product " + std::to_string(ip) +
                         " matches no product order");
}

std::vector<std::vector<Label>> pairwise_orders(
    const FormMatrix& B, const std::vector<RootVector>& roots) {
  const size_t n = roots.size();
  std::vector<std::vector<Label>> M(n, std::vector<Label>(n, Label()));
  for (size_t i = 0; i < n; ++i) {
    M[i][i] = Label::finite(1);
    for (size_t j = i + 1; j < n; ++j)
      M[i][j] = M[j][i] = order_from_inner_product(form(B, roots[i], roots[j]));
  }
  return M;
}

long long subgroup_order(int n_roots, const std::vector<SignedPerm>& gens,
                         int cap) {
  std::map<std::vector<int32_t>, int> seen;
  std::deque<int> queue;
  std::vector<SignedPerm> elements;
  auto push = [&](SignedPerm&& p) {
    if (seen.count(p.act)) return;
    seen[p.act] = static_cast<int>(elements.size());
    elements.push_back(std::move(p));
    queue.push_back(static_cast<int>(elements.size()) - 1);
  };
  push(identity_perm(n_roots));
  while (!queue.empty()) {
    if (static_cast<int>(elements.size()) > cap)
      throw CapExceeded("subgroup closure exceeds " + std::to_string(cap) +
                        " elements");
    int j = queue.front();
    queue.pop_front();
    for (const auto& s : gens)
      push(compose(elements[j], s));
  }
  return static_cast<long long>(elements.size());
}

long long centralizer_order_of_generator(const FiniteGroup& G, int x_index) {
  // alpha_x is one of the seed simple roots, hence positive root x_index
  long long count = 0;
  for (const auto& w : G.elements)
    if (std::abs(w.act[x_index]) == x_index + 1) ++count;
  return count;
}

bool reflection_count_matches(const FormMatrix& B, const FiniteGroup& G) {
  std::set<int> seen;
  for (int j = 0; j < G.roots.count(); ++j) {
    SignedPerm r = root_reflection(B, G.roots, j);
    int idx = G.find(r);
    if (idx < 0) return false;          // not a group element
    if (!seen.insert(idx).second) return false;  // collision
  }
  return static_cast<int>(seen.size()) == G.roots.count();
}

}  // namespace wperp
