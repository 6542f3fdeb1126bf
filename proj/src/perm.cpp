#include "kgt/perm.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

namespace kgt {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (int v : images_) {
    if (v < 0 || v >= size()) throw Error("IndexOutOfRange", "image out of range");
    if (seen[v]) throw Error("RepeatedIndex", "image list is not a bijection");
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int k) {
  std::vector<int> img(k);
  std::iota(img.begin(), img.end(), 0);
  return Permutation(std::move(img));
}

namespace {

std::vector<int> tokenize_cycle(const std::string& body, int size) {
  std::vector<std::string> toks;
  std::string cur;
  for (char ch : body) {
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      cur += ch;
    } else if (ch == ' ' || ch == ',' || ch == '\t') {
      if (!cur.empty()) toks.push_back(cur), cur.clear();
    } else {
      throw Error("MalformedSyntax", "unexpected character in cycle");
    }
  }
  if (!cur.empty()) toks.push_back(cur);
  std::vector<int> out;
  if (toks.size() == 1 && toks[0].size() > 1 && size <= 9) {
    // compact digit run like "(124653)": one single-digit index per character
    for (char ch : toks[0]) out.push_back(ch - '0');
  } else {
    for (const auto& t : toks) out.push_back(std::stoi(t));
  }
  for (int v : out)
    if (v < 1 || v > size) throw Error("IndexOutOfRange", "cycle entry out of range");
  return out;
}

}  // namespace

Permutation Permutation::parse(const std::string& text, int size) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch)) || ch == ' ') s += ch;

  std::vector<int> img(size);
  std::iota(img.begin(), img.end(), 0);

  if (!s.empty() && s.front() == '[') {
    if (s.back() != ']') throw Error("MalformedSyntax", "unterminated image list");
    auto vals = tokenize_cycle(s.substr(1, s.size() - 2), size);
    if (static_cast<int>(vals.size()) != size)
      throw Error("MalformedSyntax", "image list has wrong length");
    for (int i = 0; i < size; i++) img[i] = vals[i] - 1;
    return Permutation(std::move(img));
  }

  std::vector<char> used(size, 0);
  size_t pos = 0;
  bool any = false;
  while (pos < s.size()) {
    if (s[pos] == ' ') { pos++; continue; }
    if (s[pos] != '(') throw Error("MalformedSyntax", "expected '('");
    auto close = s.find(')', pos);
    if (close == std::string::npos) throw Error("MalformedSyntax", "unterminated cycle");
    auto entries = tokenize_cycle(s.substr(pos + 1, close - pos - 1), size);
    for (int v : entries) {
      if (used[v - 1]) throw Error("RepeatedIndex", "index appears in two cycles");
      used[v - 1] = 1;
    }
    for (size_t t = 0; t < entries.size(); t++)
      img[entries[t] - 1] = entries[(t + 1) % entries.size()] - 1;
    pos = close + 1;
    any = true;
  }
  if (!any) throw Error("MalformedSyntax", "empty permutation text");
  return Permutation(std::move(img));
}

Permutation Permutation::compose(const Permutation& other) const {
  std::vector<int> img(size());
  for (int x = 0; x < size(); x++) img[x] = images_[other.images_[x]];
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<int> img(size());
  for (int x = 0; x < size(); x++) img[images_[x]] = x;
  return Permutation(std::move(img));
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<char> seen(size(), 0);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < size(); s++) {
    if (seen[s]) continue;
    std::vector<int> c;
    for (int x = s; !seen[x]; x = images_[x]) {
      seen[x] = 1;
      c.push_back(x);
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::string Permutation::to_cycle_string() const {
  std::ostringstream os;
  bool any = false;
  for (const auto& c : cycles()) {
    if (c.size() == 1) continue;
    os << '(';
    for (size_t t = 0; t < c.size(); t++) os << (t ? " " : "") << c[t] + 1;
    os << ')';
    any = true;
  }
  if (!any) return "()";
  return os.str();
}

CycleType cycle_type(const Permutation& p) {
  CycleType t;
  for (const auto& c : p.cycles()) t.push_back(static_cast<int>(c.size()));
  std::sort(t.begin(), t.end(), std::greater<int>());
  return t;
}

mpz_class centralizer_order(const CycleType& t) {
  std::map<int, int> mult;
  for (int a : t) mult[a]++;
  mpz_class out = 1;
  for (auto [a, n] : mult) {
    for (int i = 0; i < n; i++) out *= a;
    mpz_class fact;
    mpz_fac_ui(fact.get_mpz_t(), n);
    out *= fact;
  }
  return out;
}

GridPermutation embed_product(const Permutation& sigma, const Permutation& tau) {
  GridShape shape{sigma.size(), tau.size()};
  std::vector<int> img(shape.cells());
  for (int c = 0; c < shape.cells(); c++)
    img[c] = sigma.apply(c / shape.m) * shape.m + tau.apply(c % shape.m);
  return GridPermutation{shape, Permutation(std::move(img))};
}

std::vector<Permutation> all_permutations(int k) {
  std::vector<int> img(k);
  std::iota(img.begin(), img.end(), 0);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation(img));
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

std::vector<GridPermutation> product_subgroup(GridShape shape) {
  std::vector<GridPermutation> out;
  for (const auto& s : all_permutations(shape.n))
    for (const auto& t : all_permutations(shape.m)) out.push_back(embed_product(s, t));
  return out;
}

mpz_class count_conjugacy_orbits(GridShape shape) {
  mpz_class group_order = 1;
  {
    mpz_class fn, fm;
    mpz_fac_ui(fn.get_mpz_t(), shape.n);
    mpz_fac_ui(fm.get_mpz_t(), shape.m);
    group_order = fn * fm;
  }
  if (group_order > 10'000'000) throw Error("ShapeTooLarge", "n!*m! exceeds cap");

  auto H = product_subgroup(shape);
  mpz_class sum = 0;
  for (const auto& h : H) sum += centralizer_order(cycle_type(h.perm));
  mpz_class q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), sum.get_mpz_t(), group_order.get_mpz_t());
  if (r != 0) throw Error("InternalError", "class equation division not exact");
  return q;
}

}  // namespace kgt
