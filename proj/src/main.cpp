#include <chrono>
#include <complex>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "kgt/classify.hpp"
#include "kgt/diagram.hpp"
#include "kgt/equiv.hpp"
#include "kgt/fock.hpp"
#include "kgt/mobius.hpp"
#include "kgt/perm.hpp"
#include "kgt/semigroup.hpp"

namespace {

constexpr const char* kVersion = "1.0.0";

using Clock = std::chrono::steady_clock;

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

void write_manifest(const std::string& out_path, const std::string& command_line,
                    const std::string& inputs, double ms) {
  nlohmann::json m{{"command_line", command_line},
                   {"tool_version", kVersion},
                   {"input_digest", fnv1a(inputs)},
                   {"elapsed_ms", ms},
                   {"outputs", {out_path}}};
  std::ofstream f(out_path + ".manifest.json");
  f << m.dump(2) << "\n";
}

std::string join_args(int argc, char** argv) {
  std::ostringstream os;
  for (int i = 0; i < argc; i++) os << (i ? " " : "") << argv[i];
  return os.str();
}

kgt::GridPermutation parse_grid(int n, int m, const std::string& perm) {
  kgt::GridShape sh{n, m};
  return kgt::GridPermutation{sh, kgt::Permutation::parse(perm, sh.cells())};
}

double parse_number(const std::string& tok) {
  auto slash = tok.find('/');
  if (slash != std::string::npos)
    return std::stod(tok.substr(0, slash)) / std::stod(tok.substr(slash + 1));
  return std::stod(tok);
}

// blocks separated by ';', real coordinates separated by ','
kgt::VarietyPoint parse_alpha(const std::string& text) {
  kgt::VarietyPoint p;
  std::istringstream blocks(text);
  std::string block;
  while (std::getline(blocks, block, ';')) {
    std::vector<std::complex<double>> coords;
    std::istringstream entries(block);
    std::string tok;
    while (std::getline(entries, tok, ',')) coords.emplace_back(parse_number(tok), 0.0);
    p.coords.push_back(std::move(coords));
  }
  return p;
}

int cmd_count(int n, int m, bool semigroup_classes) {
  kgt::GridShape sh{n, m};
  std::cout << (semigroup_classes ? kgt::count_semigroup_classes(sh)
                                  : kgt::count_conjugacy_orbits(sh))
            << "\n";
  return 0;
}

int cmd_classify(int n, int m, bool cyclic_only, const std::string& out,
                 const std::string& cmdline) {
  auto t0 = Clock::now();
  auto scope = cyclic_only ? kgt::CatalogScope::CyclicOnly : kgt::CatalogScope::All;
  kgt::OrbitCatalog cat = kgt::conjugacy_orbits(kgt::GridShape{n, m}, scope);
  std::ofstream f(out);
  f << cat.to_json().dump(2) << "\n";
  f.close();
  double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  std::ostringstream inputs;
  inputs << n << "," << m << "," << cyclic_only;
  write_manifest(out, cmdline, inputs.str(), ms);
  std::cout << "wrote " << out << " with " << cat.entries.size() << " classes\n";
  return 0;
}

int cmd_equiv(int n, int m, const std::string& theta_s, const std::string& tau_s,
              const std::string& mode) {
  auto theta = parse_grid(n, m, theta_s);
  auto tau = parse_grid(n, m, tau_s);
  if (mode == "conjugacy") {
    auto w = kgt::product_conjugate(theta, tau);
    nlohmann::json j{{"status", w ? "equivalent" : "not_equivalent"},
                     {"certificate", {{"filter", "conjugacy"}, {"detail", "exhaustive search"}}}};
    if (w)
      j["witness"] = {{"sigma", w->first.to_cycle_string()},
                      {"rho", w->second.to_cycle_string()}};
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  kgt::EquivalenceVerdict v = kgt::decide_product_unitary_equivalence(theta, tau);
  std::cout << v.to_json().dump(2) << "\n";
  if (v.status == kgt::EquivStatus::Unknown) return 3;
  if (!kgt::verify_verdict(theta, tau, v)) {
    std::cerr << "certificate failed independent verification\n";
    return 1;
  }
  return 0;
}

kgt::RelationSet relation_from_flags(int n, int m, const std::string& perm,
                                     const std::string& spec_path, int certify_len) {
  if (!spec_path.empty()) {
    std::ifstream f(spec_path);
    if (!f) throw kgt::Error("MalformedSyntax", "cannot open " + spec_path);
    nlohmann::json j;
    f >> j;
    kgt::RelationSet rel = kgt::RelationSet::from_json(j);
    if (rel.rank > 2) {
      auto rep = kgt::check_unique_factorization(rel, certify_len);
      if (!rep.holds)
        throw kgt::Error("UncheckedHigherRankRelations",
                         "relation set fails unique factorization");
    }
    return rel;
  }
  return kgt::RelationSet::rank2(parse_grid(n, m, perm));
}

int cmd_fock(int n, int m, const std::string& perm, const std::string& spec_path, int degree,
             bool verify, const std::string& export_prefix, const std::string& cmdline) {
  auto t0 = Clock::now();
  kgt::RelationSet rel = relation_from_flags(n, m, perm, spec_path, 6);
  kgt::TruncatedFock F = kgt::build_fock(rel, degree);
  std::cout << "basis size " << F.dim() << "\n";
  if (!export_prefix.empty()) {
    std::vector<std::string> outs;
    for (int c = 1; c <= rel.rank; c++)
      for (int i = 1; i <= rel.mult[c - 1]; i++) {
        auto g = kgt::generator_matrix(F, kgt::Side::Left, kgt::Letter{c, i});
        std::string path = export_prefix + "_L" + std::to_string(c) + "_" +
                           std::to_string(i) + ".mtx";
        std::ofstream f(path);
        f << kgt::matrix_market(g);
        outs.push_back(path);
      }
    double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    write_manifest(outs.front(), cmdline, rel.to_json().dump() + std::to_string(degree), ms);
    std::cout << "exported " << outs.size() << " shift matrices\n";
  }
  if (verify) {
    kgt::RelationCheckReport rep = kgt::verify_relations(F);
    if (rep.ok) {
      std::cout << "all checks passed\n";
    } else {
      std::cout << rep.violations.dump(2) << "\n";
      return 1;
    }
  }
  return 0;
}

int cmd_omega(int n, int m, const std::string& perm, const std::string& alpha_s, int degree) {
  kgt::RelationSet rel = kgt::RelationSet::rank2(parse_grid(n, m, perm));
  kgt::GelfandPoint a = kgt::gelfand_point(rel, parse_alpha(alpha_s));
  double partial = kgt::omega_norm_partial(rel, a, degree);
  double closed = kgt::omega_norm_closed_form(rel, a);
  nlohmann::json j{{"degree", degree},
                   {"partial_norm_sq", partial},
                   {"closed_form", closed},
                   {"gap", closed - partial}};
  std::cout << j.dump(2) << "\n";
  return 0;
}

int cmd_mobius(int n, const std::string& alpha_s, const std::string& tau_s, bool check,
               unsigned seed) {
  kgt::CVec alpha;
  {
    std::istringstream entries(alpha_s);
    std::string tok;
    while (std::getline(entries, tok, ',')) alpha.emplace_back(parse_number(tok), 0.0);
  }
  if (static_cast<int>(alpha.size()) != n)
    throw kgt::Error("DimensionMismatch", "alpha length vs --n");
  std::optional<kgt::Permutation> tau;
  if (!tau_s.empty()) tau = kgt::Permutation::parse(tau_s, n);
  kgt::MobiusParams p = kgt::mobius_params(alpha, tau);
  nlohmann::json j{{"x0", p.x0}};
  if (!check) {
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  double worst_roundtrip = 0, worst_identity = 0;
  for (int t = 0; t < 100; t++) {
    kgt::CVec lam(n);
    double s = 0;
    for (auto& z : lam) {
      z = {u(rng), u(rng)};
      s += std::norm(z);
    }
    if (s > 1.0)
      for (auto& z : lam) z /= std::sqrt(s) * 1.01;
    kgt::CVec back = kgt::mobius_apply(p, kgt::mobius_inverse_apply(p, lam));
    double r = 0;
    for (int i = 0; i < n; i++) r = std::max(r, std::abs(back[i] - lam[i]));
    worst_roundtrip = std::max(worst_roundtrip, r);
    worst_identity =
        std::max(worst_identity, std::abs(kgt::mobius_norm_identity_residual(p, lam)));
  }
  kgt::CVec at0 = kgt::mobius_apply(p, kgt::CVec(n, 0.0));
  double zero_res = 0;
  for (int i = 0; i < n; i++) zero_res = std::max(zero_res, std::abs(at0[i] - alpha[i]));
  j["maps_zero_to_alpha_residual"] = zero_res;
  j["roundtrip_residual"] = worst_roundtrip;
  j["norm_identity_residual"] = worst_identity;
  std::cout << j.dump(2) << "\n";
  bool ok = zero_res <= 1e-12 && worst_roundtrip <= 1e-12 && worst_identity <= 1e-10;
  return ok ? 0 : 1;
}

int cmd_kgraph_check(const std::string& spec_path, int max_len) {
  std::ifstream f(spec_path);
  if (!f) throw kgt::Error("MalformedSyntax", "cannot open " + spec_path);
  nlohmann::json j;
  f >> j;
  kgt::RelationSet rel = kgt::RelationSet::from_json(j);
  kgt::FactorizationReport rep = kgt::check_unique_factorization(rel, max_len);
  nlohmann::json out{{"unique_factorization", rep.holds}, {"max_len", max_len}};
  if (!rep.holds && rep.witness_word) {
    out["witness_word"] = kgt::word_to_string(*rep.witness_word);
    out["normal_forms"] = {kgt::word_to_string(rep.witness_forms->first),
                           kgt::word_to_string(rep.witness_forms->second)};
  }
  std::cout << out.dump(2) << "\n";
  return rep.holds ? 0 : 1;
}

int cmd_diagram(int n, int m, const std::string& perm, const std::string& dot_out,
                const std::string& cmdline) {
  auto t0 = Clock::now();
  auto g = parse_grid(n, m, perm);
  std::cout << kgt::diagram_stats(g).to_json().dump(2) << "\n";
  if (!dot_out.empty()) {
    std::ofstream f(dot_out);
    f << kgt::dot_export(g);
    f.close();
    double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    write_manifest(dot_out, cmdline, perm, ms);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"computational toolkit for single-vertex higher-rank graph semigroups"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  std::string cmdline = join_args(argc, argv);

  int n = 2, m = 2, degree = 4, max_len = 4;
  unsigned seed = 12345;
  bool semigroup_classes = false, cyclic_only = false, verify = false, check = false;
  std::string theta_s, tau_s, perm, out, alpha_s, spec_path, export_prefix, dot_out;
  std::string mode = "unitary";

  auto* count = app.add_subcommand("count", "count relation classes of an n x m grid");
  count->add_option("--n", n)->required();
  count->add_option("--m", m)->required();
  count->add_flag("--semigroup-classes", semigroup_classes,
                  "merge classes presenting the same semigroup");

  auto* classify = app.add_subcommand("classify", "write the conjugacy-orbit catalog");
  classify->add_option("--n", n)->required();
  classify->add_option("--m", m)->required();
  classify->add_flag("--cyclic-only", cyclic_only);
  classify->add_option("--out", out)->required();

  auto* equiv = app.add_subcommand("equiv", "decide equivalence of two relation permutations");
  equiv->add_option("--n", n)->required();
  equiv->add_option("--m", m)->required();
  equiv->add_option("--theta", theta_s)->required();
  equiv->add_option("--tau", tau_s)->required();
  equiv->add_option("--mode", mode)->check(CLI::IsMember({"conjugacy", "unitary"}));

  auto* fock = app.add_subcommand("fock", "truncated shift representation");
  fock->add_option("--n", n);
  fock->add_option("--m", m);
  fock->add_option("--perm", perm);
  fock->add_option("--spec", spec_path, "relation set JSON (any rank)");
  fock->add_option("--degree", degree)->required();
  fock->add_flag("--verify", verify);
  fock->add_option("--export", export_prefix, "prefix for Matrix Market exports");

  auto* omega = app.add_subcommand("omega", "partial eigenvector norms vs the closed form");
  omega->add_option("--n", n)->required();
  omega->add_option("--m", m)->required();
  omega->add_option("--perm", perm)->required();
  omega->add_option("--alpha", alpha_s)->required();
  omega->add_option("--degree", degree);

  auto* mobius = app.add_subcommand("mobius", "ball automorphism identity suite");
  mobius->add_option("--n", n)->required();
  mobius->add_option("--alpha", alpha_s)->required();
  mobius->add_option("--tau", tau_s);
  mobius->add_flag("--check", check);
  mobius->add_option("--seed", seed);

  auto* kgraph = app.add_subcommand("kgraph", "relation set tooling");
  auto* kcheck = kgraph->add_subcommand("check", "unique factorization check");
  kcheck->add_option("--spec", spec_path)->required();
  kcheck->add_option("--max-len", max_len);

  auto* diagram = app.add_subcommand("diagram", "cycle diagram statistics and DOT export");
  diagram->add_option("--n", n)->required();
  diagram->add_option("--m", m)->required();
  diagram->add_option("--perm", perm)->required();
  diagram->add_option("--dot", dot_out);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*count) return cmd_count(n, m, semigroup_classes);
    if (*classify) return cmd_classify(n, m, cyclic_only, out, cmdline);
    if (*equiv) return cmd_equiv(n, m, theta_s, tau_s, mode);
    if (*fock) return cmd_fock(n, m, perm, spec_path, degree, verify, export_prefix, cmdline);
    if (*omega) return cmd_omega(n, m, perm, alpha_s, degree);
    if (*mobius) return cmd_mobius(n, alpha_s, tau_s, check, seed);
    if (*kgraph) return cmd_kgraph_check(spec_path, max_len);
    if (*diagram) return cmd_diagram(n, m, perm, dot_out, cmdline);
  } catch (const kgt::Error& e) {
    std::cerr << "error [" << e.kind() << "]: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
