#include "alcove/diagram.hpp"

#include "alcove/classify.hpp"
#include "alcove/errors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace alcove {

std::vector<ExtendedDiagram::Edge> ExtendedDiagram::edges() const {
  std::vector<Edge> out;
  for (int a = 0; a < size(); ++a)
    for (int b = a + 1; b < size(); ++b)
      if (cartan[a][b] != 0) out.push_back({a, b, -cartan[a][b], -cartan[b][a]});
  return out;
}

IntMatrix ExtendedDiagram::restrict_to(const std::vector<int>& keep) const {
  IntMatrix m(keep.size(), IntVector(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = 0; j < keep.size(); ++j) m[i][j] = cartan[keep[i]][keep[j]];
  return m;
}

ExtendedDiagram extended_diagram(const RootSystem& rs) {
  const int n = rs.rank();
  ExtendedDiagram ed;
  ed.type = rs.type();
  ed.cartan.assign(n + 1, IntVector(n + 1, 0));
  ed.cartan[0][0] = 2;
  IntVector dv = rs.coroot(rs.highest_root());
  for (int j = 1; j <= n; ++j) {
    long long dj = 0;
    for (int k = 0; k < n; ++k) dj += rs.marks()[k] * rs.cartan()[k][j - 1];
    ed.cartan[0][j] = -dj;          // -d(a_j^vee)
    ed.cartan[j][0] = -dv[j - 1];   // -a_j(d^vee)
    for (int i = 1; i <= n; ++i) ed.cartan[i][j] = rs.cartan()[i - 1][j - 1];
  }
  ed.marks.push_back(1);
  ed.comarks.push_back(1);
  ed.marks.insert(ed.marks.end(), rs.marks().begin(), rs.marks().end());
  ed.comarks.insert(ed.comarks.end(), rs.comarks().begin(), rs.comarks().end());
  return ed;
}

bool DiagramAutomorphism::is_identity() const {
  for (std::size_t i = 0; i < image.size(); ++i)
    if (image[i] != static_cast<int>(i)) return false;
  return true;
}

DiagramAutomorphism DiagramAutomorphism::operator*(const DiagramAutomorphism& rhs) const {
  DiagramAutomorphism out;
  out.image.resize(rhs.image.size());
  for (std::size_t i = 0; i < rhs.image.size(); ++i) out.image[i] = image[rhs.image[i]];
  return out;
}

int DiagramAutomorphism::order() const {
  int ord = 1;
  for (const auto& orbit : orbits()) ord = std::lcm(ord, static_cast<int>(orbit.size()));
  return ord;
}

std::vector<std::vector<int>> DiagramAutomorphism::orbits() const {
  std::vector<bool> seen(image.size(), false);
  std::vector<std::vector<int>> out;
  for (std::size_t s = 0; s < image.size(); ++s) {
    if (seen[s]) continue;
    std::vector<int> orbit;
    for (int v = static_cast<int>(s); !seen[v]; v = image[v]) {
      seen[v] = true;
      orbit.push_back(v);
    }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

bool is_automorphism(const ExtendedDiagram& ed, const std::vector<int>& image) {
  const int n = ed.size();
  if (static_cast<int>(image.size()) != n) return false;
  std::vector<bool> hit(n, false);
  for (int v : image) {
    if (v < 0 || v >= n || hit[v]) return false;
    hit[v] = true;
  }
  for (int i = 0; i < n; ++i) {
    if (ed.marks[i] != ed.marks[image[i]] || ed.comarks[i] != ed.comarks[image[i]]) return false;
    for (int j = 0; j < n; ++j)
      if (ed.cartan[i][j] != ed.cartan[image[i]][image[j]]) return false;
  }
  return true;
}

std::vector<DiagramAutomorphism> automorphism_group(const ExtendedDiagram& ed) {
  const int n = ed.size();
  std::vector<DiagramAutomorphism> out;
  std::vector<int> image(n, -1);
  std::vector<bool> used(n, false);
  std::function<void(int)> extend = [&](int i) {
    if (i == n) {
      out.push_back({image});
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (used[v] || ed.marks[v] != ed.marks[i] || ed.comarks[v] != ed.comarks[i]) continue;
      bool ok = ed.cartan[i][i] == ed.cartan[v][v];
      for (int j = 0; j < i && ok; ++j)
        ok = ed.cartan[i][j] == ed.cartan[v][image[j]] && ed.cartan[j][i] == ed.cartan[image[j]][v];
      if (!ok) continue;
      image[i] = v;
      used[v] = true;
      extend(i + 1);
      used[v] = false;
    }
    image[i] = -1;
  };
  extend(0);
  std::sort(out.begin(), out.end());
  return out;
}

RationalVector AffineMap::apply(const RationalVector& t) const { return multiply(linear, t) + offset; }

std::vector<int> special_nodes(const RootSystem& rs) {
  std::vector<int> out{0};
  for (int i = 1; i <= rs.rank(); ++i)
    if (rs.marks()[i - 1] == 1) out.push_back(i);
  return out;
}

void check_special(const RootSystem& rs, int node) {
  auto sp = special_nodes(rs);
  if (std::find(sp.begin(), sp.end(), node) == sp.end()) {
    std::string list;
    for (int s : sp) list += (list.empty() ? "" : ",") + std::to_string(s);
    throw InputError("center element must be given by a special node of " + rs.type().name() + " {" + list +
                     "}; got " + std::to_string(node));
  }
}

RationalVector alcove_barycenter(const RootSystem& rs) {
  RationalVector b(rs.rank());
  for (int i = 1; i <= rs.rank(); ++i) b[i - 1] = Rational(1, rs.marks()[i - 1] * (rs.rank() + 1));
  return b;
}

namespace {

RationalVector node_coweight(const RootSystem& rs, int node) {
  RationalVector e(rs.rank());
  if (node > 0) e[node - 1] = Rational(1);
  return e;
}

}  // namespace

CenterAction center_action(const RootSystem& rs, int special_node) {
  check_special(rs, special_node);
  CenterAction act;
  act.node = special_node;
  act.coweight = node_coweight(rs, special_node);
  auto [reduced, u] = reduce_to_alcove(rs, alcove_barycenter(rs) + act.coweight);
  act.w_c = u.linear_part();
  act.phi.linear = u.matrix();
  act.phi.offset = u.apply(rs, act.coweight);
  const int n = rs.rank();
  std::vector<RationalVector> vertices;
  for (int i = 0; i <= n; ++i) vertices.push_back(rs.alcove_vertex(i));
  act.permutation.image.assign(n + 1, -1);
  for (int i = 0; i <= n; ++i) {
    RationalVector img = act.phi.apply(vertices[i]);
    auto it = std::find(vertices.begin(), vertices.end(), img);
    if (it == vertices.end()) throw std::logic_error("center action does not permute alcove vertices");
    act.permutation.image[i] = static_cast<int>(it - vertices.begin());
  }
  if (act.permutation.image[0] != special_node) throw std::logic_error("center action does not send ã to its label");
  return act;
}

DiagramAutomorphism center_automorphism(const RootSystem& rs, int special_node) {
  return center_action(rs, special_node).permutation;
}

int center_multiply(const RootSystem& rs, int s1, int s2) {
  check_special(rs, s1);
  check_special(rs, s2);
  RationalVector sum = node_coweight(rs, s1) + node_coweight(rs, s2);
  for (int s : special_nodes(rs))
    if (rs.in_coroot_lattice(sum - node_coweight(rs, s))) return s;
  throw std::logic_error("special coweights do not represent the center");
}

int center_order(const RootSystem& rs, int s) {
  check_special(rs, s);
  int ord = 1;
  for (int cur = s; cur != 0; cur = center_multiply(rs, cur, s)) ++ord;
  return ord;
}

FixedSpace alcove_fixed_space(const RootSystem& rs, const CenterAction& action) {
  FixedSpace fs;
  for (const auto& orbit : action.permutation.orbits()) {
    RationalVector v(rs.rank());
    for (int i : orbit) v = v + rs.alcove_vertex(i);
    v = Rational(1, static_cast<long long>(orbit.size())) * v;
    if (action.phi.apply(v) != v) throw std::logic_error("orbit barycenter is not fixed");
    fs.vertices.push_back(std::move(v));
  }
  fs.dimension = static_cast<int>(fs.vertices.size()) - 1;
  fs.basepoint = RationalVector(rs.rank());
  for (const auto& v : fs.vertices) fs.basepoint = fs.basepoint + v;
  fs.basepoint = Rational(1, static_cast<long long>(fs.vertices.size())) * fs.basepoint;
  for (std::size_t i = 1; i < fs.vertices.size(); ++i) fs.directions.push_back(fs.vertices[i] - fs.vertices[0]);

  // Independent count: the affine fixed locus has dimension nullity(M - I).
  RationalMatrix m = to_rational(action.phi.linear);
  for (int i = 0; i < rs.rank(); ++i) m[i][i] -= Rational(1);
  if (static_cast<int>(nullspace(m).size()) != fs.dimension) {
    throw std::logic_error("fixed-space dimension disagrees with nullity(w_c - 1)");
  }
  return fs;
}

FoldDescriptor fold_cyclic(const RootSystem& rs, int k) {
  if (rs.type().family != Family::A) throw InputError("cyclic folding is defined for type A only");
  const int n = rs.rank();
  if (k < 1 || k > n + 1 || (n + 1) % k != 0) {
    throw InputError("k = " + std::to_string(k) + " must divide n+1 = " + std::to_string(n + 1));
  }
  FoldDescriptor fd;
  fd.type = rs.type();
  fd.k = k;
  fd.l = (n + 1) / k;
  CenterAction act = center_action(rs, fd.l % (n + 1));
  fd.rotation = act.permutation;
  fd.rotation_order = fd.rotation.order();
  for (int v = 0;;) {
    fd.removed_orbit.push_back(v);
    v = fd.rotation.image[v];
    if (v == 0) break;
  }
  std::sort(fd.removed_orbit.begin(), fd.removed_orbit.end());
  std::vector<int> keep;
  for (int v = 0; v <= n; ++v)
    if (!std::binary_search(fd.removed_orbit.begin(), fd.removed_orbit.end(), v)) keep.push_back(v);
  fd.factors = classify_cartan(extended_diagram(rs).restrict_to(keep));
  int sub_rank = 0;
  for (const auto& f : fd.factors) sub_rank += f.rank;
  fd.torus_rank = n - sub_rank;
  fd.fixed = alcove_fixed_space(rs, act);
  return fd;
}

}  // namespace alcove
