#include "kgt/classify.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>

#include <omp.h>

namespace kgt {

int worker_count() {
  if (const char* env = std::getenv("KGT_THREADS")) {
    int k = std::atoi(env);
    if (k >= 1) return k;
  }
  return omp_get_max_threads();
}

namespace {

mpz_class factorial(int k) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), k);
  return f;
}

void check_enumerable(GridShape shape, CatalogScope scope) {
  mpz_class count = factorial(shape.cells());
  if (scope == CatalogScope::CyclicOnly) count /= shape.cells();
  if (count > 10'000'000) throw Error("ShapeTooLarge", "universe exceeds enumeration cap");
}

std::vector<Permutation> universe(GridShape shape, CatalogScope scope) {
  std::vector<Permutation> out;
  for (auto& p : all_permutations(shape.cells())) {
    if (scope == CatalogScope::CyclicOnly) {
      auto t = cycle_type(p);
      if (t.size() != 1) continue;
    }
    out.push_back(std::move(p));
  }
  return out;
}

// conjugates of p by every element of the embedded product subgroup
std::vector<Permutation> conjugates(const GridPermutation& g,
                                    const std::vector<GridPermutation>& H) {
  std::vector<Permutation> out;
  out.reserve(H.size());
  for (const auto& h : H)
    out.push_back(h.perm.compose(g.perm).compose(h.perm.inverse()));
  return out;
}

OrbitCatalog assemble(GridShape shape, CatalogScope scope,
                      std::map<Permutation, long>&& orbit_sizes) {
  OrbitCatalog cat;
  cat.shape = shape;
  cat.scope = scope;
  for (auto& [rep, size] : orbit_sizes) {
    CatalogEntry e;
    e.rep = GridPermutation{shape, rep};
    e.orbit_size = size;
    e.stats = diagram_stats(e.rep);
    e.minimal_variety = is_minimal_variety(RelationSet::rank2(e.rep));
    cat.entries.push_back(std::move(e));
  }
  // inverse pairing: orbit of rep^{-1}
  for (auto& e : cat.entries) {
    GridPermutation inv_rep = canonical_rep(GridPermutation{shape, e.rep.perm.inverse()});
    for (int k = 0; k < static_cast<int>(cat.entries.size()); k++)
      if (cat.entries[k].rep.perm == inv_rep.perm) {
        e.inverse_class = k;
        break;
      }
    if (e.inverse_class < 0) throw Error("InternalError", "inverse orbit not in catalog");
  }
  return cat;
}

}  // namespace

namespace {

Permutation canonical_in(const GridPermutation& g, const std::vector<GridPermutation>& H) {
  Permutation best = g.perm;
  for (const auto& c : conjugates(g, H))
    if (c < best) best = c;
  return best;
}

}  // namespace

GridPermutation canonical_rep(const GridPermutation& g) {
  auto H = product_subgroup(g.shape);
  return GridPermutation{g.shape, canonical_in(g, H)};
}

OrbitCatalog conjugacy_orbits(GridShape shape, CatalogScope scope, int threads) {
  check_enumerable(shape, scope);
  if (threads <= 0) threads = worker_count();
  auto univ = universe(shape, scope);
  auto H = product_subgroup(shape);
  std::vector<Permutation> canon(univ.size());
#pragma omp parallel for schedule(static) num_threads(threads)
  for (long t = 0; t < static_cast<long>(univ.size()); t++) {
    GridPermutation g{shape, univ[t]};
    canon[t] = canonical_in(g, H);
  }
  std::map<Permutation, long> sizes;
  for (const auto& c : canon) sizes[c]++;
  return assemble(shape, scope, std::move(sizes));
}

OrbitCatalog conjugacy_orbits_serial(GridShape shape, CatalogScope scope) {
  check_enumerable(shape, scope);
  auto univ = universe(shape, scope);
  auto H = product_subgroup(shape);
  std::set<Permutation> seen;
  std::map<Permutation, long> sizes;
  for (const auto& p : univ) {
    if (seen.count(p)) continue;
    std::set<Permutation> orbit;
    for (const auto& c : conjugates(GridPermutation{shape, p}, H)) orbit.insert(c);
    seen.insert(orbit.begin(), orbit.end());
    sizes[*orbit.begin()] = static_cast<long>(orbit.size());
  }
  return assemble(shape, scope, std::move(sizes));
}

mpz_class count_semigroup_classes(GridShape shape) {
  if (shape.n != shape.m) return count_conjugacy_orbits(shape);
  auto cat = conjugacy_orbits(shape, CatalogScope::All);
  // flip(i,j) = (j,i) as a cell permutation of the square grid
  int n = shape.n;
  std::vector<int> fimg(n * n);
  for (int c = 0; c < n * n; c++) fimg[c] = (c % n) * n + c / n;
  Permutation flip(fimg);
  std::set<std::pair<int, int>> merged;
  auto class_index = [&](const Permutation& p) {
    auto rep = canonical_rep(GridPermutation{shape, p}).perm;
    for (int k = 0; k < static_cast<int>(cat.entries.size()); k++)
      if (cat.entries[k].rep.perm == rep) return k;
    throw Error("InternalError", "class lookup failed");
  };
  for (int k = 0; k < static_cast<int>(cat.entries.size()); k++) {
    Permutation mate = flip.compose(cat.entries[k].rep.perm.inverse()).compose(flip);
    int k2 = class_index(mate);
    merged.insert({std::min(k, k2), std::max(k, k2)});
  }
  return mpz_class(static_cast<long>(merged.size()));
}

InversePairingSummary inverse_pairing_summary(const OrbitCatalog& catalog) {
  InversePairingSummary s;
  for (int k = 0; k < static_cast<int>(catalog.entries.size()); k++) {
    int ik = catalog.entries[k].inverse_class;
    if (ik == k) s.self_paired++;
    else if (ik > k) s.swapped_pairs++;
  }
  return s;
}

nlohmann::json OrbitCatalog::to_json() const {
  nlohmann::json j;
  j["shape"] = {shape.n, shape.m};
  j["scope"] = scope == CatalogScope::All ? "all" : "cyclic_only";
  j["entries"] = nlohmann::json::array();
  for (const auto& e : entries)
    j["entries"].push_back({{"rep", e.rep.perm.to_cycle_string()},
                            {"orbit_size", e.orbit_size},
                            {"stats", e.stats.to_json()},
                            {"minimal_variety", e.minimal_variety},
                            {"inverse_class", e.inverse_class}});
  return j;
}

OrbitCatalog OrbitCatalog::from_json(const nlohmann::json& j) {
  OrbitCatalog cat;
  cat.shape = GridShape{j.at("shape")[0].get<int>(), j.at("shape")[1].get<int>()};
  cat.scope = j.at("scope").get<std::string>() == "all" ? CatalogScope::All
                                                        : CatalogScope::CyclicOnly;
  for (const auto& je : j.at("entries")) {
    CatalogEntry e;
    e.rep = GridPermutation{cat.shape,
                            Permutation::parse(je.at("rep").get<std::string>(),
                                               cat.shape.cells())};
    e.orbit_size = je.at("orbit_size").get<long>();
    e.stats = diagram_stats(e.rep);
    e.minimal_variety = je.at("minimal_variety").get<bool>();
    e.inverse_class = je.at("inverse_class").get<int>();
    cat.entries.push_back(std::move(e));
  }
  return cat;
}

}  // namespace kgt
