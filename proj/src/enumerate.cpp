#include "alcove/enumerate.hpp"

#include "alcove/errors.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>
#include <tuple>

namespace alcove {

namespace {

bool is_prime(long long m) {
  if (m < 2) return false;
  for (long long p = 2; p * p <= m; ++p)
    if (m % p == 0) return false;
  return true;
}

long long height(const Root& r) {
  long long h = 0;
  for (long long x : r) h += x;
  return h;
}

// Positive roots of the subsystem generated by a π-system: its W-orbit.
std::vector<Root> reflection_closure(const RootSystem& rs, const std::vector<Root>& generators) {
  std::set<Root> found(generators.begin(), generators.end());
  std::deque<Root> frontier(generators.begin(), generators.end());
  while (!frontier.empty()) {
    Root a = frontier.front();
    frontier.pop_front();
    for (const auto& b : generators) {
      long long k = rs.pairing(a, b);
      if (k == 0) continue;
      Root c = a;
      for (std::size_t i = 0; i < c.size(); ++i) c[i] -= k * b[i];
      if (found.insert(c).second) frontier.push_back(c);
    }
  }
  std::vector<Root> positive;
  for (const auto& r : found)
    if (height(r) > 0) positive.push_back(r);
  return positive;
}

Root negate(Root r) {
  for (auto& x : r) x = -x;
  return r;
}

// Extended nodes of factor k of a concrete subsystem: node 0 is -θ_k.
std::vector<Root> factor_nodes(const SubsystemDescriptor& sd, std::size_t k) {
  std::vector<Root> nodes{negate(sd.highest[k])};
  std::size_t off = sd.factor_offset(k);
  for (int i = 0; i < sd.factors[k].rank; ++i) nodes.push_back(sd.base[off + static_cast<std::size_t>(i)]);
  return nodes;
}

FiniteAbelianGroup lattice_invariant(const RootSystem& rs, const SubsystemDescriptor& sd) {
  return saturation_quotient(coroot_lattice(rs), coroot_sublattice(rs, sd.base));
}

const RootSystem& cached_system(const SimpleType& t) {
  static std::mutex mutex;
  static std::map<SimpleType, std::unique_ptr<RootSystem>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[t];
  if (!slot) slot = std::make_unique<RootSystem>(t);
  return *slot;
}

std::vector<SimpleType> sorted(std::vector<SimpleType> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// The classifier's name for a type (C2 is reported as B2).
SimpleType canonical_type(const SimpleType& t) { return classify_cartan(cartan_matrix(t)).front(); }

}  // namespace

std::vector<SubsystemDescriptor> bds_maximal(const RootSystem& rs) {
  ExtendedDiagram ed = extended_diagram(rs);
  auto auts = automorphism_group(ed);
  std::vector<SubsystemDescriptor> out;
  for (int i = 1; i <= rs.rank(); ++i) {
    if (!is_prime(ed.marks[i])) continue;
    bool represented = std::any_of(auts.begin(), auts.end(), [&](const DiagramAutomorphism& a) { return a.image[i] < i; });
    if (represented) continue;
    std::vector<int> kept;
    for (int v = 0; v <= rs.rank(); ++v)
      if (v != i) kept.push_back(v);
    out.push_back(node_subsystem(rs, kept));
  }
  if (out.empty()) out.push_back(subsystem_from_positive_roots(rs, rs.positive_roots()));
  return out;
}

std::vector<BdsEntry> bds_all(const RootSystem& rs, const SearchLimits& limits) {
  std::vector<BdsEntry> out;
  // Factor types alone do not separate long from short pieces (G2 has two
  // classes of A1), so the key also records the squared lengths of each
  // factor's simple roots.
  using FactorKey = std::pair<SimpleType, std::vector<long long>>;
  std::set<std::pair<std::vector<FactorKey>, std::vector<long long>>> seen;
  auto consider = [&](SubsystemDescriptor sd, int depth, int parent) {
    FiniteAbelianGroup inv = lattice_invariant(rs, sd);
    std::vector<FactorKey> key;
    for (std::size_t k = 0; k < sd.factors.size(); ++k) {
      std::vector<long long> lengths;
      std::size_t off = sd.factor_offset(k);
      for (int i = 0; i < sd.factors[k].rank; ++i) lengths.push_back(rs.squared_length(sd.base[off + static_cast<std::size_t>(i)]));
      key.emplace_back(sd.factors[k], std::move(lengths));
    }
    std::sort(key.begin(), key.end());
    if (!seen.emplace(std::move(key), inv.invariant_factors()).second) return;
    if (static_cast<long long>(out.size()) >= limits.max_states) {
      throw ResourceError("subsystem enumeration exceeds the state budget " + std::to_string(limits.max_states));
    }
    out.push_back({std::move(sd), std::move(inv), depth, parent});
  };
  consider(subsystem_from_positive_roots(rs, rs.positive_roots()), 0, -1);
  for (std::size_t head = 0; head < out.size(); ++head) {
    const SubsystemDescriptor cur = out[head].subsystem;
    for (std::size_t k = 0; k < cur.factors.size(); ++k) {
      const RootSystem& f = cached_system(cur.factors[k]);
      std::vector<Root> nodes = factor_nodes(cur, k);
      std::vector<Root> others;
      for (std::size_t j = 0; j < cur.factors.size(); ++j) {
        if (j == k) continue;
        std::size_t off = cur.factor_offset(j);
        for (int i = 0; i < cur.factors[j].rank; ++i) others.push_back(cur.base[off + static_cast<std::size_t>(i)]);
      }
      auto emit = [&](std::size_t drop, bool extended) {
        std::vector<Root> gens = others;
        for (std::size_t i = extended ? 0 : 1; i < nodes.size(); ++i)
          if (i != drop) gens.push_back(nodes[i]);
        consider(subsystem_from_positive_roots(rs, reflection_closure(rs, gens)), out[head].depth + 1,
                 static_cast<int>(head));
      };
      for (int i = 1; i <= f.rank(); ++i)
        if (f.marks()[static_cast<std::size_t>(i - 1)] > 1) emit(static_cast<std::size_t>(i), true);
      for (int i = 1; i <= f.rank(); ++i) emit(static_cast<std::size_t>(i), false);
    }
  }
  return out;
}

std::vector<CentralizerType> centralizer_types(const RootSystem& rs, const SearchLimits& limits) {
  const int nodes = rs.rank() + 1;
  std::vector<CentralizerType> out;
  std::set<std::pair<std::vector<SimpleType>, int>> seen;
  for (unsigned mask = 0; mask + 1 < (1u << nodes); ++mask) {
    std::vector<int> walls;
    RationalVector p(rs.rank());
    long long count = 0;
    for (int i = 0; i < nodes; ++i) {
      if (mask & (1u << i)) {
        walls.push_back(i);
      } else {
        p = p + rs.alcove_vertex(i);
        ++count;
      }
    }
    p = Rational(1, count) * p;
    CentralizerDescriptor cd = centralizer_tuple(rs, {p}, limits);
    if (!seen.emplace(cd.subsystem.factors, cd.torus_rank).second) continue;
    out.push_back({std::move(cd), std::move(p), std::move(walls)});
  }
  std::stable_sort(out.begin(), out.end(), [](const CentralizerType& a, const CentralizerType& b) {
    const auto& x = a.descriptor.subsystem;
    const auto& y = b.descriptor.subsystem;
    return std::make_tuple(-x.subsystem_rank, -static_cast<long long>(x.positive_roots.size()), x.label()) <
           std::make_tuple(-y.subsystem_rank, -static_cast<long long>(y.positive_roots.size()), y.label());
  });
  return out;
}

namespace {

enum class FaceKind { Unchanged, Vertex, CentralEdge, Other };

struct FaceOption {
  std::vector<int> walls;  // extended nodes of the factor whose walls contain the face
  std::vector<SimpleType> factors;
  FaceKind kind = FaceKind::Other;
};

// Candidate faces of one simple factor's alcove, one per resulting type
// (and, in vertex mode, per kind). The unchanged option is always first and
// uses the vertex v_0.
const std::vector<FaceOption>& face_options(const SimpleType& t, bool vertex_only) {
  static std::mutex mutex;
  static std::map<std::pair<SimpleType, bool>, std::vector<FaceOption>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find({t, vertex_only});
  if (it != cache.end()) return it->second;

  const RootSystem& rs = cached_system(canonical_type(t));
  ExtendedDiagram ed = extended_diagram(rs);
  const int nodes = rs.rank() + 1;
  std::vector<FaceOption> opts;
  std::vector<int> simple;
  for (int i = 1; i < nodes; ++i) simple.push_back(i);
  opts.push_back({simple, {t}, FaceKind::Unchanged});
  std::set<std::pair<std::vector<SimpleType>, FaceKind>> seen{{{t}, FaceKind::Unchanged}};
  for (unsigned mask = 0; mask + 1 < (1u << nodes); ++mask) {
    std::vector<int> walls, free;
    for (int i = 0; i < nodes; ++i) (mask & (1u << i) ? walls : free).push_back(i);
    std::vector<SimpleType> f = classify_cartan(ed.restrict_to(walls));
    FaceKind kind = FaceKind::Other;
    if (f == std::vector<SimpleType>{t}) {
      kind = FaceKind::Unchanged;
    } else if (free.size() == 1) {
      kind = FaceKind::Vertex;
    } else if (free.size() == 2 && ed.marks[free[0]] == 1 && ed.marks[free[1]] == 1) {
      kind = FaceKind::CentralEdge;
    }
    if (vertex_only && kind == FaceKind::Other) continue;
    if (!vertex_only && kind != FaceKind::Unchanged) kind = FaceKind::Other;
    if (seen.emplace(f, kind).second) opts.push_back({walls, std::move(f), kind});
  }
  return cache.emplace(std::make_pair(t, vertex_only), std::move(opts)).first->second;
}

// Type-level recursion m(D) = 1 + max over proper faces of m(face type).
class ChainSolver {
 public:
  ChainSolver(bool vertex_only, bool reverse) : vertex_only_(vertex_only), reverse_(reverse) {}

  struct Entry {
    int m = 0;
    std::vector<std::size_t> choice;  // option index per factor
  };

  const Entry& solve(const std::vector<SimpleType>& state) {
    auto it = memo_.find(state);
    if (it != memo_.end()) return it->second;
    Entry best;
    if (!state.empty()) {
      std::vector<const std::vector<FaceOption>*> opts;
      for (const auto& f : state) opts.push_back(&face_options(f, vertex_only_));
      std::vector<std::size_t> pick(state.size(), 0);
      bool found = false;
      std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == state.size()) {
          if (!admissible(opts, pick)) return;
          std::vector<SimpleType> next;
          for (std::size_t j = 0; j < state.size(); ++j) {
            const auto& f = (*opts[j])[pick[j]].factors;
            next.insert(next.end(), f.begin(), f.end());
          }
          int m = 1 + solve(sorted(std::move(next))).m;
          if (!found || m > best.m) {
            best.m = m;
            best.choice = pick;
            found = true;
          }
          return;
        }
        const std::size_t count = opts[k]->size();
        for (std::size_t step = 0; step < count; ++step) {
          pick[k] = reverse_ ? count - 1 - step : step;
          rec(k + 1);
        }
      };
      rec(0);
      if (!found) throw std::logic_error("no proper face found for " + factors_to_string(state));
    }
    return memo_.emplace(state, std::move(best)).first->second;
  }

  const FaceOption& option(const SimpleType& t, std::size_t i) const { return face_options(t, vertex_only_)[i]; }

 private:
  bool admissible(const std::vector<const std::vector<FaceOption>*>& opts, const std::vector<std::size_t>& pick) const {
    int changed = 0, edges = 0;
    for (std::size_t j = 0; j < pick.size(); ++j) {
      FaceKind kind = (*opts[j])[pick[j]].kind;
      if (kind != FaceKind::Unchanged) ++changed;
      if (kind == FaceKind::CentralEdge) ++edges;
    }
    if (changed == 0) return false;
    // A central edge is a face only when every other factor sits at a central vertex.
    return !vertex_only_ || edges == 0 || changed == 1;
  }

  bool vertex_only_;
  bool reverse_;
  std::map<std::vector<SimpleType>, Entry> memo_;
};

// Point t in span(Ψ^vee) lying at the barycenter of the chosen face of each
// factor's alcove. walls[k] lists the extended nodes of factor k (Bourbaki
// numbering of that factor) whose walls contain the face.
RationalVector face_point(const RootSystem& rs, const SubsystemDescriptor& sd,
                          const std::vector<std::vector<int>>& walls) {
  const std::size_t r = sd.base.size();
  RationalVector target(r);
  for (std::size_t k = 0; k < sd.factors.size(); ++k) {
    const RootSystem& f = cached_system(sd.factors[k]);
    const int nodes = f.rank() + 1;
    std::vector<int> free;
    for (int i = 0; i < nodes; ++i)
      if (std::find(walls[k].begin(), walls[k].end(), i) == walls[k].end()) free.push_back(i);
    std::size_t off = sd.factor_offset(k);
    for (int i : free) {
      if (i == 0) continue;
      target[off + static_cast<std::size_t>(i - 1)] =
          Rational(1, f.marks()[static_cast<std::size_t>(i - 1)] * static_cast<long long>(free.size()));
    }
  }
  RationalMatrix pairing(r, RationalVector(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) pairing[i][j] = Rational(rs.pairing(sd.base[i], sd.base[j]));
  RationalVector c = r ? *solve(pairing, target) : RationalVector{};
  RationalVector t(rs.rank());
  for (std::size_t j = 0; j < r; ++j) {
    IntVector cv = rs.coroot(sd.base[j]);
    for (int i = 0; i < rs.rank(); ++i)
      if (cv[i] != 0) t[i] += c[j] * Rational(cv[i]);
  }
  return t;
}

std::string face_label(const SubsystemDescriptor& sd, const std::vector<std::vector<int>>& walls) {
  std::string out;
  for (std::size_t k = 0; k < sd.factors.size(); ++k) {
    if (k) out += "; ";
    out += sd.factors[k].name() + " walls {";
    for (std::size_t i = 0; i < walls[k].size(); ++i) out += (i ? "," : "") + std::to_string(walls[k][i]);
    out += "}";
  }
  return out;
}

SubsystemDescriptor restrict_to_point(const RootSystem& rs, const SubsystemDescriptor& sd, const RationalVector& t) {
  std::vector<Root> kept;
  for (const auto& a : sd.positive_roots)
    if (RootSystem::evaluate(a, t).is_integer()) kept.push_back(a);
  return subsystem_from_positive_roots(rs, std::move(kept));
}

// Concrete search over subsystems reachable by face choices, allowing a
// terminal extra element when the last (abelian) stage has a nontrivial
// component group.
class ComponentChainSearch {
 public:
  ComponentChainSearch(const RootSystem& rs, bool reverse, const SearchLimits& limits)
      : rs_(rs), reverse_(reverse), limits_(limits), qv_(coroot_lattice(rs)) {}

  struct Entry {
    int m = 0;
    std::vector<std::vector<int>> walls;  // chosen face per factor
    bool component_step = false;
    IntVector witness;                    // element of S for the extra step
  };

  const Entry& solve(const SubsystemDescriptor& sd) {
    auto it = memo_.find(sd.positive_roots);
    if (it != memo_.end()) return it->second;
    if (static_cast<long long>(memo_.size()) >= limits_.max_states) {
      throw ResourceError("chain search exceeds the state budget " + std::to_string(limits_.max_states));
    }
    Entry best;
    if (!sd.factors.empty()) {
      // Per-factor faces, deduplicated by the roots of the factor they keep.
      std::vector<std::vector<std::vector<int>>> opts(sd.factors.size());
      for (std::size_t k = 0; k < sd.factors.size(); ++k) {
        const int nodes = sd.factors[k].rank + 1;
        std::set<std::vector<Root>> pieces;
        std::vector<int> simple;
        for (int i = 1; i < nodes; ++i) simple.push_back(i);
        opts[k].push_back(simple);  // unchanged (vertex v_0)
        for (unsigned mask = 0; mask + 1 < (1u << nodes); ++mask) {
          std::vector<int> walls;
          for (int i = 0; i < nodes; ++i)
            if (mask & (1u << i)) walls.push_back(i);
          std::vector<Root> gens;
          std::vector<Root> ext = factor_nodes(sd, k);
          for (int w : walls) gens.push_back(ext[static_cast<std::size_t>(w)]);
          std::vector<Root> piece = gens.empty() ? std::vector<Root>{} : reflection_closure(rs_, gens);
          if (piece.size() == static_cast<std::size_t>(cached_system(sd.factors[k]).positive_roots().size())) continue;
          if (pieces.insert(piece).second) opts[k].push_back(walls);
        }
        if (reverse_) std::reverse(opts[k].begin() + 1, opts[k].end());
      }
      std::vector<std::size_t> pick(sd.factors.size(), 0);
      bool found = false;
      std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == sd.factors.size()) {
          if (std::all_of(pick.begin(), pick.end(), [](std::size_t p) { return p == 0; })) return;
          std::vector<std::vector<int>> walls;
          for (std::size_t j = 0; j < pick.size(); ++j) walls.push_back(opts[j][pick[j]]);
          RationalVector t = face_point(rs_, sd, walls);
          SubsystemDescriptor next = restrict_to_point(rs_, sd, t);
          Entry cand;
          cand.walls = walls;
          if (next.factors.empty()) {
            ComponentGroupResult cg = component_group_relative(rs_, sd, next, t, qv_, false, limits_);
            cand.m = 1;
            if (!cg.group.is_trivial()) {
              cand.m = 2;
              cand.component_step = true;
              for (const auto& e : cg.elements)
                if (std::any_of(e.begin(), e.end(), [](long long x) { return x != 0; })) {
                  cand.witness = e;
                  break;
                }
            }
          } else {
            cand.m = 1 + solve(next).m;
          }
          if (!found || cand.m > best.m) {
            best = std::move(cand);
            found = true;
          }
          return;
        }
        for (std::size_t i = 0; i < opts[k].size(); ++i) {
          pick[k] = i;
          rec(k + 1);
        }
      };
      rec(0);
    }
    return memo_.emplace(sd.positive_roots, std::move(best)).first->second;
  }

 private:
  const RootSystem& rs_;
  bool reverse_;
  SearchLimits limits_;
  IntegerLattice qv_;
  std::map<std::vector<Root>, Entry> memo_;
};

}  // namespace

int chain_length(const std::vector<SimpleType>& factors, bool vertex_only) {
  std::vector<SimpleType> state;
  for (const auto& f : factors) {
    validate(f);
    state.push_back(canonical_type(f));
  }
  ChainSolver solver(vertex_only, false);
  return solver.solve(sorted(std::move(state))).m;
}

ChainBound max_chain(const RootSystem& rs, const ChainOptions& options) {
  ChainBound out;
  ChainSolver solver(options.vertex_only, options.reverse_order);
  out.m_connected = solver.solve({canonical_type(rs.type())}).m;

  // Concrete witness following the solver's choices.
  std::vector<RationalVector> tuple;
  SubsystemDescriptor cur = subsystem_from_positive_roots(rs, rs.positive_roots());
  std::vector<ChainNode> connected;
  while (!cur.factors.empty()) {
    const auto& entry = solver.solve(cur.factors);
    std::vector<std::vector<int>> walls;
    std::vector<SimpleType> expect;
    for (std::size_t k = 0; k < cur.factors.size(); ++k) {
      const FaceOption& opt = solver.option(cur.factors[k], entry.choice[k]);
      walls.push_back(opt.kind == FaceKind::Unchanged ? face_options(cur.factors[k], false)[0].walls : opt.walls);
      expect.insert(expect.end(), opt.factors.begin(), opt.factors.end());
    }
    RationalVector t = face_point(rs, cur, walls);
    tuple.push_back(t);
    CentralizerDescriptor cd = centralizer_tuple(rs, tuple, options.limits);
    if (cd.subsystem.factors != sorted(expect)) throw std::logic_error("chain witness does not realize the face type");
    std::string label = face_label(cur, walls);
    cur = cd.subsystem;
    connected.push_back({std::move(cd), std::move(t), static_cast<int>(connected.size()) + 1, std::move(label)});
  }
  if (static_cast<int>(connected.size()) != out.m_connected) throw std::logic_error("witness length differs from m");
  out.m = out.m_connected;
  out.witness = std::move(connected);

  if (options.include_component_steps) {
    ComponentChainSearch search(rs, options.reverse_order, options.limits);
    SubsystemDescriptor full = subsystem_from_positive_roots(rs, rs.positive_roots());
    out.m_with_components = search.solve(full).m;
    if (*out.m_with_components > out.m) {
      std::vector<ChainNode> chain;
      std::vector<RationalVector> tup;
      SubsystemDescriptor s = full;
      while (true) {
        const auto& e = search.solve(s);
        RationalVector t = face_point(rs, s, e.walls);
        tup.push_back(t);
        CentralizerDescriptor cd = centralizer_tuple(rs, tup, options.limits);
        std::string label = face_label(s, e.walls);
        s = cd.subsystem;
        bool extra = e.component_step;
        IntVector lambda = e.witness;
        chain.push_back({cd, std::move(t), static_cast<int>(chain.size()) + 1, std::move(label)});
        if (s.factors.empty()) {
          if (extra) {
            RationalVector l(lambda.begin(), lambda.end());
            chain.push_back({std::move(cd), std::move(l), static_cast<int>(chain.size()) + 1,
                             "component step: lift of a nontrivial element of the component group"});
          }
          break;
        }
      }
      if (static_cast<int>(chain.size()) != *out.m_with_components) {
        throw std::logic_error("component-step witness length differs from m");
      }
      out.m = *out.m_with_components;
      out.witness = std::move(chain);
    }
  }
  return out;
}

}  // namespace alcove
