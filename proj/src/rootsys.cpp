#include "parabraid/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <set>

namespace parabraid {

Root Root::operator-() const {
  Root r = *this;
  for (int& c : r.coeffs) c = -c;
  return r;
}

std::string Root::str() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    int c = coeffs[i];
    if (c == 0) continue;
    if (c < 0) out += "-";
    else if (!out.empty()) out += "+";
    if (c != 1 && c != -1) out += std::to_string(c < 0 ? -c : c);
    out += "e" + std::to_string(i + 1);
  }
  return out.empty() ? "0" : out;
}

WeylElem WeylElem::identity(int n) {
  if (n < 1 || n > kMaxDim) throw RootSystemError("dimension out of range");
  WeylElem w;
  w.n = static_cast<std::uint8_t>(n);
  for (int i = 0; i < n; ++i) w.img[i] = static_cast<std::int8_t>(i + 1);
  return w;
}

bool WeylElem::is_identity() const {
  for (int i = 0; i < n; ++i)
    if (img[i] != i + 1) return false;
  return true;
}

int WeylElem::negative_count() const {
  int c = 0;
  for (int i = 0; i < n; ++i) c += img[i] < 0;
  return c;
}

std::uint64_t WeylElem::hash() const {
  std::uint64_t h = 1469598103934665603ull;
  for (int i = 0; i < n; ++i) {
    h ^= static_cast<std::uint8_t>(img[i]);
    h *= 1099511628211ull;
  }
  return h;
}

std::string WeylElem::str() const {
  std::string s = "[";
  for (int i = 0; i < n; ++i) s += (i ? "," : "") + std::to_string(img[i]);
  return s + "]";
}

// ---------------------------------------------------------------------------

namespace {

// Linear functional positive exactly on the positive roots.
int height_weight(Family f, int n, int i) { return f == Family::A ? n - i : i + 1; }

int functional(Family f, int n, const Root& r) {
  int s = 0;
  for (int i = 0; i < n; ++i) s += r.coeffs[i] * height_weight(f, n, i);
  return s;
}

Root basis_root(int n, int i, int si, int j, int sj) {
  Root r{std::vector<int>(n, 0)};
  r.coeffs[i] = si;
  r.coeffs[j] = sj;
  return r;
}

}  // namespace

RootSystem::RootSystem(Family family, int n) : family_(family), n_(n) {
  if (family == Family::A && n < 2) throw RootSystemError("type A needs n >= 2 strands");
  if (family == Family::D && n < 3) throw RootSystemError("type D needs n >= 3");
  if (n > kMaxDim) throw RootSystemError("rank too large");
  auto d = std::make_shared<Data>();
  if (family == Family::A) {
    for (int i = 0; i + 1 < n; ++i) d->simple.push_back(basis_root(n, i, 1, i + 1, -1));
  } else {
    d->simple.push_back(basis_root(n, 0, -1, 1, 1));  // 2
    d->simple.push_back(basis_root(n, 0, 1, 1, 1));   // 2'
    for (int k = 3; k <= n; ++k) d->simple.push_back(basis_root(n, k - 2, -1, k - 1, 1));
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      std::vector<Root> cands;
      if (family == Family::A) {
        cands = {basis_root(n, i, 1, j, -1), basis_root(n, i, -1, j, 1)};
      } else {
        cands = {basis_root(n, i, 1, j, 1), basis_root(n, i, 1, j, -1), basis_root(n, i, -1, j, 1),
                 basis_root(n, i, -1, j, -1)};
      }
      for (auto& r : cands)
        if (functional(family, n, r) > 0) d->positive.push_back(r);
    }
  std::sort(d->positive.begin(), d->positive.end(), [&](const Root& a, const Root& b) {
    int fa = functional(family, n, a), fb = functional(family, n, b);
    return fa != fb ? fa < fb : b < a;
  });
  for (const Root& a : d->simple) {
    // Reflection in a root of the form s_i e_i + s_j e_j swaps the two
    // coordinates with sign -s_i s_j.
    WeylElem w = WeylElem::identity(n);
    int i = -1, j = -1;
    for (int t = 0; t < n; ++t)
      if (a.coeffs[t]) (i < 0 ? i : j) = t;
    int sg = -a.coeffs[i] * a.coeffs[j];
    w.img[i] = static_cast<std::int8_t>(sg * (j + 1));
    w.img[j] = static_cast<std::int8_t>(sg * (i + 1));
    d->reflections.push_back(w);
  }
  data_ = d;
  // Longest element: keep multiplying by a simple reflection that is not a
  // right descent.
  WeylElem w = WeylElem::identity(n);
  for (bool grew = true; grew;) {
    grew = false;
    for (int t = 0; t < rank(); ++t)
      if (!right_descent(*this, w, t)) {
        w = weyl_mul(w, d->reflections[t]);
        grew = true;
        break;
      }
  }
  d->longest = w;
}

int RootSystem::rank() const { return family_ == Family::A ? n_ - 1 : n_; }

std::string RootSystem::name() const { return (family_ == Family::A ? "A" : "D") + std::to_string(rank()); }

std::string RootSystem::label(int pos) const {
  if (family_ == Family::A) return std::to_string(pos + 1);
  if (pos == 0) return "2";
  if (pos == 1) return "2'";
  return std::to_string(pos + 1);
}

std::string RootSystem::token(int pos) const {
  std::string l = label(pos);
  if (!l.empty() && l.back() == '\'') l.back() = 'p';
  return l;
}

int RootSystem::parse_token(std::string_view tok) const {
  for (int p = 0; p < rank(); ++p)
    if (token(p) == tok || label(p) == tok) return p;
  return -1;
}

// ---------------------------------------------------------------------------

std::vector<Root> simple_roots(const RootSystem& rs) { return rs.simple_roots(); }

std::vector<Root> all_roots(const RootSystem& rs) {
  std::vector<Root> out = rs.positive_roots();
  for (const Root& r : rs.positive_roots()) out.push_back(-r);
  return out;
}

bool is_root(const RootSystem& rs, const Root& r) {
  if (static_cast<int>(r.coeffs.size()) != rs.n()) return false;
  int nz = 0, sum = 0;
  for (int c : r.coeffs) {
    if (c < -1 || c > 1) return false;
    nz += c != 0;
    sum += c;
  }
  if (nz != 2) return false;
  return rs.family() == Family::D || sum == 0;
}

bool is_positive(const RootSystem& rs, const Root& r) { return functional(rs.family(), rs.n(), r) > 0; }

int simple_index_of(const RootSystem& rs, const Root& r) {
  const auto& s = rs.simple_roots();
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i] == r) return static_cast<int>(i);
  return -1;
}

int root_inner(const Root& a, const Root& b) {
  int s = 0;
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) s += a.coeffs[i] * b.coeffs[i];
  return s;
}

int coxeter_m(const RootSystem& rs, int alpha, int beta) {
  if (alpha == beta) return 1;
  int ip = root_inner(rs.simple_roots().at(alpha), rs.simple_roots().at(beta));
  return ip == 0 ? 2 : 3;
}

Root weyl_act(const WeylElem& w, const Root& r) {
  Root out{std::vector<int>(r.coeffs.size(), 0)};
  for (int i = 0; i < w.n; ++i)
    if (r.coeffs[i]) out.coeffs[w.image_index(i)] += w.image_sign(i) * r.coeffs[i];
  return out;
}

WeylElem weyl_mul(const WeylElem& u, const WeylElem& v) {
  WeylElem w;
  w.n = v.n;
  for (int i = 0; i < v.n; ++i) {
    int j = v.image_index(i);
    w.img[i] = static_cast<std::int8_t>(v.image_sign(i) * u.img[j]);
  }
  return w;
}

WeylElem weyl_inverse(const WeylElem& w) {
  WeylElem r;
  r.n = w.n;
  for (int i = 0; i < w.n; ++i) r.img[w.image_index(i)] = static_cast<std::int8_t>(w.image_sign(i) * (i + 1));
  return r;
}

WeylElem weyl_from_word(const RootSystem& rs, const std::vector<int>& positions) {
  WeylElem w = WeylElem::identity(rs.n());
  for (int p : positions) w = weyl_mul(w, rs.reflection(p));
  return w;
}

int weyl_length(const RootSystem& rs, const WeylElem& w) {
  int l = 0;
  for (const Root& r : rs.positive_roots()) l += !is_positive(rs, weyl_act(w, r));
  return l;
}

bool right_descent(const RootSystem& rs, const WeylElem& w, int t) {
  const Root& a = rs.simple_roots()[t];
  int s = 0;
  for (int i = 0; i < w.n; ++i)
    if (a.coeffs[i]) s += a.coeffs[i] * w.image_sign(i) * height_weight(rs.family(), rs.n(), w.image_index(i));
  return s < 0;
}

bool left_descent(const RootSystem& rs, const WeylElem& w, int t) {
  return right_descent(rs, weyl_inverse(w), t);
}

std::vector<int> reduced_word(const RootSystem& rs, const WeylElem& w) {
  std::vector<int> word;
  WeylElem cur = w;
  while (!cur.is_identity()) {
    for (int t = 0; t < rs.rank(); ++t)
      if (left_descent(rs, cur, t)) {
        word.push_back(t);
        cur = weyl_mul(rs.reflection(t), cur);
        break;
      }
  }
  return word;
}

bool in_weyl_group(const RootSystem& rs, const WeylElem& w) {
  if (w.n != rs.n()) return false;
  std::vector<bool> seen(rs.n(), false);
  for (int i = 0; i < w.n; ++i) {
    int j = w.image_index(i);
    if (j < 0 || j >= w.n || seen[j]) return false;
    seen[j] = true;
  }
  if (rs.family() == Family::A) return w.negative_count() == 0;
  return w.negative_count() % 2 == 0;
}

// ---------------------------------------------------------------------------

namespace {

// Distances from alpha to every root in the graph whose edges are simple
// reflections.
std::map<Root, int> reflection_distances(const RootSystem& rs, const Root& alpha) {
  std::map<Root, int> dist{{alpha, 0}};
  std::deque<Root> q{alpha};
  while (!q.empty()) {
    Root r = q.front();
    q.pop_front();
    for (int t = 0; t < rs.rank(); ++t) {
      Root s = weyl_act(rs.reflection(t), r);
      if (dist.emplace(s, dist[r] + 1).second) q.push_back(s);
    }
  }
  return dist;
}

// Words (s_1..s_m) in lexicographic order with s_m o ... o s_1 (beta) = alpha,
// built by walking from beta back to alpha.
void enumerate_words(const RootSystem& rs, const std::map<Root, int>& dist, const Root& cur, int remaining,
                     std::vector<int>& word, std::vector<std::vector<int>>& out, std::size_t limit) {
  if (out.size() >= limit) return;
  auto it = dist.find(cur);
  if (it == dist.end() || it->second > remaining || (remaining - it->second) % 2) return;
  if (remaining == 0) {
    out.push_back(word);
    return;
  }
  for (int t = 0; t < rs.rank(); ++t) {
    word.push_back(t);
    enumerate_words(rs, dist, weyl_act(rs.reflection(t), cur), remaining - 1, word, out, limit);
    word.pop_back();
  }
}

}  // namespace

std::vector<SimpleReduction> weyl_to_simple_candidates(const RootSystem& rs, const Root& alpha, int extra,
                                                       std::size_t limit) {
  if (!is_root(rs, alpha)) throw RootSystemError("not a root: " + alpha.str());
  auto dist = reflection_distances(rs, alpha);
  int best = 1 << 30;
  for (const Root& s : rs.simple_roots()) best = std::min(best, dist.at(s));
  std::vector<SimpleReduction> out;
  for (int len = best; len <= best + extra && out.size() < limit; ++len) {
    for (int b = 0; b < rs.rank() && out.size() < limit; ++b) {
      std::vector<std::vector<int>> words;
      std::vector<int> scratch;
      enumerate_words(rs, dist, rs.simple_roots()[b], len, scratch, words, limit - out.size());
      for (auto& wd : words) {
        SimpleReduction red;
        red.word = wd;
        red.element = weyl_from_word(rs, wd);
        red.target = b;
        out.push_back(std::move(red));
      }
    }
  }
  return out;
}

SimpleReduction weyl_to_simple(const RootSystem& rs, const Root& alpha) {
  return weyl_to_simple_candidates(rs, alpha, 0, 1).front();
}

Root parse_root(const RootSystem& rs, std::string_view text) {
  Root r{std::vector<int>(rs.n(), 0)};
  std::size_t i = 0;
  bool any = false;
  while (i < text.size()) {
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
    } else if (any) {
      throw RootSystemError("malformed root '" + std::string(text) + "'");
    }
    if (i < text.size() && text[i] == 'e') ++i;
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (start == i) throw RootSystemError("malformed root '" + std::string(text) + "'");
    int idx = std::stoi(std::string(text.substr(start, i - start)));
    if (idx < 1 || idx > rs.n()) throw RootSystemError("basis index out of range in root '" + std::string(text) + "'");
    r.coeffs[idx - 1] += sign;
    any = true;
  }
  if (!is_root(rs, r)) throw RootSystemError("not a root of " + rs.name() + ": '" + std::string(text) + "'");
  return r;
}

}  // namespace parabraid
