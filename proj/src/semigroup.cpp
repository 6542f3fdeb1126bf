#include "kgt/semigroup.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace kgt {

std::vector<int> NormalWord::degree() const {
  std::vector<int> d;
  for (const auto& b : blocks) d.push_back(static_cast<int>(b.size()));
  return d;
}

int NormalWord::total_degree() const {
  int t = 0;
  for (const auto& b : blocks) t += static_cast<int>(b.size());
  return t;
}

Word NormalWord::to_word() const {
  Word w;
  for (int c = 0; c < static_cast<int>(blocks.size()); c++)
    for (int idx : blocks[c]) w.push_back(Letter{c + 1, idx});
  return w;
}

RelationSet RelationSet::rank2(const GridPermutation& g) {
  RelationSet r;
  r.rank = 2;
  r.mult = {g.shape.n, g.shape.m};
  r.rel[{1, 2}] = g.perm;
  r.certified = true;  // rank-2 factorization is always unique
  return r;
}

GridPermutation RelationSet::to_grid() const {
  if (rank != 2) throw Error("UnsupportedRank", "to_grid requires rank 2");
  return GridPermutation{GridShape{mult[0], mult[1]}, theta(1, 2)};
}

RelationSet RelationSet::from_json(const nlohmann::json& j) {
  RelationSet r;
  r.rank = j.at("rank").get<int>();
  r.mult = j.at("multiplicities").get<std::vector<int>>();
  if (static_cast<int>(r.mult.size()) != r.rank)
    throw Error("MalformedSyntax", "multiplicities length != rank");
  for (auto& [key, val] : j.at("relations").items()) {
    auto comma = key.find(',');
    if (comma == std::string::npos) throw Error("MalformedSyntax", "relation key");
    int i = std::stoi(key.substr(0, comma)), jj = std::stoi(key.substr(comma + 1));
    if (i < 1 || jj <= i || jj > r.rank) throw Error("MalformedSyntax", "relation pair");
    r.rel[{i, jj}] = Permutation::parse(val.get<std::string>(), r.mult[i - 1] * r.mult[jj - 1]);
  }
  for (int i = 1; i <= r.rank; i++)
    for (int jj = i + 1; jj <= r.rank; jj++)
      if (!r.rel.count({i, jj})) throw Error("MalformedSyntax", "missing relation pair");
  if (r.rank == 2) r.certified = true;
  return r;
}

nlohmann::json RelationSet::to_json() const {
  nlohmann::json j;
  j["rank"] = rank;
  j["multiplicities"] = mult;
  nlohmann::json rels = nlohmann::json::object();
  for (const auto& [key, p] : rel)
    rels[std::to_string(key.first) + "," + std::to_string(key.second)] = p.to_cycle_string();
  j["relations"] = rels;
  return j;
}

Word parse_word(const RelationSet& rel, const std::string& text) {
  Word w;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    if (tok.size() < 2) throw Error("MalformedSyntax", "bad letter: " + tok);
    int cls = tok[0] - 'e' + 1;
    int idx = std::stoi(tok.substr(1));
    if (cls < 1 || cls > rel.rank) throw Error("IndexOutOfRange", "letter class: " + tok);
    if (idx < 1 || idx > rel.mult[cls - 1]) throw Error("IndexOutOfRange", "letter index: " + tok);
    w.push_back(Letter{cls, idx});
  }
  return w;
}

std::string word_to_string(const Word& w) {
  std::ostringstream os;
  for (size_t t = 0; t < w.size(); t++)
    os << (t ? " " : "") << static_cast<char>('e' + w[t].cls - 1) << w[t].idx;
  return os.str();
}

std::string word_to_string(const NormalWord& w) { return word_to_string(w.to_word()); }

namespace {

// Rewrite the inversion at position t: letters (cls j, b)(cls i, a) with
// j > i become (cls i, c)(cls j, d) where theta_ij(c,d) = (a,b).
void rewrite_at(const RelationSet& rel, Word& w, size_t t) {
  const Letter hi = w[t], lo = w[t + 1];
  int nj = rel.mult[hi.cls - 1];
  const Permutation& th = rel.theta(lo.cls, hi.cls);
  int cell_ab = (lo.idx - 1) * nj + (hi.idx - 1);
  int cell_cd = th.inverse().apply(cell_ab);
  w[t] = Letter{lo.cls, cell_cd / nj + 1};
  w[t + 1] = Letter{hi.cls, cell_cd % nj + 1};
}

bool find_leftmost_inversion(const Word& w, size_t& pos) {
  for (size_t t = 0; t + 1 < w.size(); t++)
    if (w[t].cls > w[t + 1].cls) {
      pos = t;
      return true;
    }
  return false;
}

NormalWord pack(const RelationSet& rel, const Word& w) {
  NormalWord n(rel.rank);
  for (const Letter& l : w) n.blocks[l.cls - 1].push_back(l.idx);
  return n;
}

void require_certified(const RelationSet& rel) {
  if (rel.rank >= 3 && !rel.certified)
    throw Error("UncheckedHigherRankRelations",
                "run check_unique_factorization before normal_form at rank >= 3");
}

}  // namespace

NormalWord normal_form(const RelationSet& rel, const Word& w) {
  require_certified(rel);
  Word cur = w;
  size_t pos;
  while (find_leftmost_inversion(cur, pos)) rewrite_at(rel, cur, pos);
  return pack(rel, cur);
}

NormalWord multiply(const RelationSet& rel, const NormalWord& a, const NormalWord& b) {
  Word w = a.to_word();
  Word wb = b.to_word();
  w.insert(w.end(), wb.begin(), wb.end());
  return normal_form(rel, w);
}

std::vector<NormalWord> reachable_normal_forms(const RelationSet& rel, const Word& w) {
  std::set<Word> seen;
  std::vector<Word> frontier{w};
  std::set<NormalWord> nfs;
  while (!frontier.empty()) {
    Word cur = frontier.back();
    frontier.pop_back();
    if (!seen.insert(cur).second) continue;
    bool terminal = true;
    for (size_t t = 0; t + 1 < cur.size(); t++) {
      if (cur[t].cls > cur[t + 1].cls) {
        terminal = false;
        Word nxt = cur;
        rewrite_at(rel, nxt, t);
        frontier.push_back(std::move(nxt));
      }
    }
    if (terminal) nfs.insert(pack(rel, cur));
  }
  return std::vector<NormalWord>(nfs.begin(), nfs.end());
}

std::vector<Word> all_words(const RelationSet& rel, int length) {
  std::vector<Letter> alphabet;
  for (int c = 1; c <= rel.rank; c++)
    for (int i = 1; i <= rel.mult[c - 1]; i++) alphabet.push_back(Letter{c, i});
  std::vector<Word> out{Word{}};
  for (int l = 0; l < length; l++) {
    std::vector<Word> nxt;
    for (const auto& w : out)
      for (const Letter& a : alphabet) {
        Word w2 = w;
        w2.push_back(a);
        nxt.push_back(std::move(w2));
      }
    out = std::move(nxt);
  }
  return out;
}

FactorizationReport check_unique_factorization(RelationSet& rel, int max_len) {
  FactorizationReport rep;
  if (rel.rank == 2) {
    rel.certified = true;
    return rep;
  }
  auto fail = [&](const Word& w, std::vector<NormalWord> nfs) {
    rep.holds = false;
    rep.witness_word = w;
    rep.witness_forms = {nfs[0], nfs[1]};
  };
  // local confluence on one-letter-per-class triples, all class triples
  for (int i = 1; i <= rel.rank && rep.holds; i++)
    for (int j = i + 1; j <= rel.rank && rep.holds; j++)
      for (int k = j + 1; k <= rel.rank && rep.holds; k++)
        for (int a = 1; a <= rel.mult[i - 1] && rep.holds; a++)
          for (int b = 1; b <= rel.mult[j - 1] && rep.holds; b++)
            for (int c = 1; c <= rel.mult[k - 1] && rep.holds; c++) {
              Word w{Letter{k, c}, Letter{j, b}, Letter{i, a}};
              auto nfs = reachable_normal_forms(rel, w);
              if (nfs.size() != 1) fail(w, nfs);
            }
  // bounded exhaustive sweep
  for (int l = 2; l <= max_len && rep.holds; l++)
    for (const auto& w : all_words(rel, l)) {
      auto nfs = reachable_normal_forms(rel, w);
      if (nfs.size() != 1) {
        fail(w, nfs);
        break;
      }
    }
  if (rep.holds) rel.certified = true;
  return rep;
}

RelationSet opposite(const RelationSet& rel) {
  RelationSet out = rel;
  for (auto& [key, p] : out.rel) p = p.inverse();
  return out;
}

}  // namespace kgt
