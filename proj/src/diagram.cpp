#include "kgt/diagram.hpp"

#include <numeric>
#include <sstream>

namespace kgt {

nlohmann::json DiagramStats::to_json() const {
  return nlohmann::json{{"h", h},       {"r", r},         {"v", v},
                        {"diag", diag}, {"fixed", fixed}, {"cycle_type", cycle_type}};
}

DiagramStats diagram_stats(const GridPermutation& g) {
  DiagramStats st;
  st.cycle_type = cycle_type(g.perm);
  for (const auto& cyc : g.perm.cycles()) {
    if (cyc.size() == 1) {
      st.fixed++;
      continue;
    }
    std::vector<char> kind;  // 'H', 'V' or 'D' per edge c -> theta(c)
    for (int c : cyc) {
      int c2 = g.perm.apply(c);
      if (g.row1(c) == g.row1(c2)) kind.push_back('H'), st.h++;
      else if (g.col1(c) == g.col1(c2)) kind.push_back('V'), st.v++;
      else kind.push_back('D'), st.diag++;
    }
    int L = static_cast<int>(kind.size());
    for (int t = 0; t < L; t++) {
      char a = kind[t], b = kind[(t + 1) % L];
      if ((a == 'H' && b == 'V') || (a == 'V' && b == 'H')) st.r++;
    }
  }
  return st;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int k) : parent(k) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

EquationClasses equation_classes(const RelationSet& rel) {
  // ground set: for each pair i<j, the n_i*n_j product cells, laid out in
  // pair order with running offsets
  std::vector<std::pair<int, int>> pairs;
  std::vector<int> offset;
  int total = 0;
  for (int i = 1; i <= rel.rank; i++)
    for (int j = i + 1; j <= rel.rank; j++) {
      pairs.push_back({i, j});
      offset.push_back(total);
      total += rel.mult[i - 1] * rel.mult[j - 1];
    }
  UnionFind uf(total);
  for (size_t t = 0; t < pairs.size(); t++) {
    const Permutation& th = rel.theta(pairs[t].first, pairs[t].second);
    for (int c = 0; c < th.size(); c++) uf.unite(offset[t] + c, offset[t] + th.apply(c));
  }
  EquationClasses out;
  out.ground_size = total;
  out.class_of.assign(total, -1);
  for (int x = 0; x < total; x++) {
    int root = uf.find(x);
    if (out.class_of[root] < 0) out.class_of[root] = out.num_classes++;
    out.class_of[x] = out.class_of[root];
  }
  return out;
}

bool is_minimal_variety(const RelationSet& rel) {
  if (rel.rank != 2) throw Error("UnsupportedRank", "is_minimal_variety requires rank 2");
  auto t = cycle_type(rel.theta(1, 2));
  return t.size() == 1 && t[0] == rel.mult[0] * rel.mult[1];
}

bool variety_membership(const RelationSet& rel, const VarietyPoint& p, double tol) {
  if (static_cast<int>(p.coords.size()) != rel.rank)
    throw Error("DimensionMismatch", "coordinate block count != rank");
  for (int i = 0; i < rel.rank; i++)
    if (static_cast<int>(p.coords[i].size()) != rel.mult[i])
      throw Error("DimensionMismatch", "coordinate block size mismatch");
  for (const auto& [key, th] : rel.rel) {
    auto [i, j] = key;
    int nj = rel.mult[j - 1];
    for (int c = 0; c < th.size(); c++) {
      int c2 = th.apply(c);
      auto lhs = p.coords[i - 1][c / nj] * p.coords[j - 1][c % nj];
      auto rhs = p.coords[i - 1][c2 / nj] * p.coords[j - 1][c2 % nj];
      if (std::abs(lhs - rhs) > tol) return false;
    }
  }
  return true;
}

FixedSpace fixed_space(const Permutation& tau) {
  FixedSpace out;
  out.orbit_blocks = tau.cycles();
  out.dimension = static_cast<int>(out.orbit_blocks.size());
  return out;
}

std::string dot_export(const GridPermutation& g) {
  std::ostringstream os;
  os << "digraph relation {\n  node [shape=point, width=0.12];\n";
  for (int c = 0; c < g.shape.cells(); c++)
    os << "  c" << c + 1 << " [pos=\"" << g.col1(c) << "," << -g.row1(c)
       << "!\", xlabel=\"" << c + 1 << "\"];\n";
  for (int c = 0; c < g.shape.cells(); c++)
    if (g.perm.apply(c) != c) os << "  c" << c + 1 << " -> c" << g.perm.apply(c) + 1 << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace kgt
