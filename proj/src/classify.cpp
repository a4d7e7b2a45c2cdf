#include "alcove/classify.hpp"

#include "alcove/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace alcove {

namespace {

[[noreturn]] void reject(const std::string& why) { throw InputError("not a finite-type Cartan matrix: " + why); }

using Adjacency = std::vector<std::vector<int>>;

// Nodes of the path starting at `start`, following the unique unvisited
// neighbour (valid only inside a path-shaped component or one arm of a tree).
std::vector<int> walk(const Adjacency& adj, int start, int avoid) {
  std::vector<int> out{start};
  int prev = avoid, cur = start;
  while (true) {
    int next = -1;
    for (int v : adj[cur])
      if (v != prev) next = v;
    if (next < 0 || adj[cur].size() > 2) break;
    out.push_back(next);
    prev = cur;
    cur = next;
    if (adj[cur].size() != 2) break;
  }
  return out;
}

CartanComponent recognize(const IntMatrix& m, const Adjacency& adj, std::vector<int> comp) {
  std::sort(comp.begin(), comp.end());
  const int r = static_cast<int>(comp.size());
  if (r == 1) return {{Family::A, 1}, comp};

  int edges = 0, doubles = 0, triples = 0, branch = -1;
  for (int v : comp) {
    if (adj[v].size() > 3) reject("node of degree > 3");
    if (adj[v].size() == 3) {
      if (branch >= 0) reject("more than one branch node");
      branch = v;
    }
    for (int u : adj[v]) {
      if (u < v) continue;
      ++edges;
      long long p = m[v][u] * m[u][v];
      if (p == 2) ++doubles;
      if (p == 3) ++triples;
    }
  }
  if (edges != r - 1) reject("Dynkin graph contains a cycle");
  auto short_node = [&](int a, int b) { return std::abs(m[a][b]) > 1 ? b : a; };  // of a multiple bond a-b

  if (triples) {
    if (r != 2) reject("triple bond outside G2");
    int s = short_node(comp[0], comp[1]);
    return {{Family::G, 2}, {s, s == comp[0] ? comp[1] : comp[0]}};
  }
  if (branch < 0) {
    int end = -1;
    for (int v : comp)
      if (adj[v].size() == 1) {
        end = v;
        break;
      }
    std::vector<int> path = walk(adj, end, -1);
    if (doubles == 0) return {{Family::A, r}, path};
    if (doubles > 1) reject("more than one multiple bond");
    int pos = 0;
    while (m[path[pos]][path[pos + 1]] * m[path[pos + 1]][path[pos]] != 2) ++pos;
    if (r == 4 && pos == 1) {
      // F4: a_2 => a_3, a_3 short.
      if (short_node(path[1], path[2]) != path[2]) std::reverse(path.begin(), path.end());
      return {{Family::F, 4}, path};
    }
    if (pos != 0 && pos != r - 2) reject("double bond in the interior of a path");
    if (pos == 0) std::reverse(path.begin(), path.end());
    bool last_short = short_node(path[r - 2], path[r - 1]) == path[r - 1];
    if (r == 2 && !last_short) {
      std::reverse(path.begin(), path.end());
      last_short = true;
    }
    return {{last_short ? Family::B : Family::C, r}, path};
  }

  if (doubles) reject("multiple bond in a branched diagram");
  std::vector<std::vector<int>> arms;
  for (int v : adj[branch]) arms.push_back(walk(adj, v, branch));
  std::sort(arms.begin(), arms.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a.front() < b.front();
  });
  std::size_t a0 = arms[0].size(), a1 = arms[1].size(), a2 = arms[2].size();
  if (a0 == 1 && a1 == 1) {
    // D_r: long arm (far end first), branch, then the two leaves.
    std::vector<int> order(arms[2].rbegin(), arms[2].rend());
    order.push_back(branch);
    order.push_back(arms[0][0]);
    order.push_back(arms[1][0]);
    return {{Family::D, r}, order};
  }
  if (a0 == 1 && a1 == 2 && a2 >= 2 && a2 <= 4) {
    // E_r: 1-3-4-5-..., 2 attached to 4.
    std::vector<int> order{arms[1][1], arms[0][0], arms[1][0], branch};
    order.insert(order.end(), arms[2].begin(), arms[2].end());
    return {{Family::E, r}, order};
  }
  reject("branched diagram is not of type D or E");
}

}  // namespace

std::vector<CartanComponent> classify_components(const IntMatrix& m) {
  const int n = static_cast<int>(m.size());
  for (const auto& row : m)
    if (static_cast<int>(row.size()) != n) reject("matrix is not square");
  Adjacency adj(n);
  for (int i = 0; i < n; ++i) {
    if (m[i][i] != 2) reject("diagonal entry is not 2");
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (m[i][j] > 0) reject("positive off-diagonal entry");
      if ((m[i][j] == 0) != (m[j][i] == 0)) reject("asymmetric zero pattern");
      long long p = m[i][j] * m[j][i];
      if (p > 3) reject("bond of multiplicity > 3");
      if (p > 0) adj[i].push_back(j);
    }
  }

  std::vector<int> label(n, -1);
  std::vector<CartanComponent> out;
  for (int s = 0; s < n; ++s) {
    if (label[s] >= 0) continue;
    std::vector<int> comp{s};
    label[s] = s;
    for (std::size_t h = 0; h < comp.size(); ++h)
      for (int v : adj[comp[h]])
        if (label[v] < 0) {
          label[v] = s;
          comp.push_back(v);
        }
    // Positive definiteness via leading principal minors.
    std::sort(comp.begin(), comp.end());
    for (std::size_t k = 1; k <= comp.size(); ++k) {
      RationalMatrix sub(k, RationalVector(k));
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) sub[i][j] = Rational(m[comp[i]][comp[j]]);
      if (determinant(sub).sign() <= 0) reject("not positive definite");
    }
    CartanComponent c = recognize(m, adj, comp);
    if (!is_valid(c.type)) reject("component " + c.type.name() + " exceeds the supported rank");
    IntMatrix expect = cartan_matrix(c.type);
    for (int i = 0; i < c.type.rank; ++i)
      for (int j = 0; j < c.type.rank; ++j)
        if (m[c.nodes[i]][c.nodes[j]] != expect[i][j]) throw std::logic_error("classifier produced a bad node order");
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const CartanComponent& a, const CartanComponent& b) {
    if (a.type != b.type) return a.type < b.type;
    return *std::min_element(a.nodes.begin(), a.nodes.end()) < *std::min_element(b.nodes.begin(), b.nodes.end());
  });
  return out;
}

std::vector<SimpleType> classify_cartan(const IntMatrix& m) {
  std::vector<SimpleType> out;
  for (const auto& c : classify_components(m)) out.push_back(c.type);
  return out;
}

std::string factors_to_string(const std::vector<SimpleType>& factors) {
  if (factors.empty()) return "T";
  std::string out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) out += " x ";
    out += factors[i].name();
  }
  return out;
}

}  // namespace alcove
