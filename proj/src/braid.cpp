#include "parabraid/braid.hpp"

#include <cctype>
#include <stdexcept>

#include "parabraid/ring.hpp"

namespace parabraid {

BraidWord braid_from_positions(const std::vector<int>& positions) {
  BraidWord w;
  for (int p : positions) w.push_back({p, 1});
  return w;
}

BraidWord braid_inverse(const BraidWord& w) {
  BraidWord r(w.rbegin(), w.rend());
  for (auto& l : r) l.exp = -l.exp;
  return r;
}

BraidWord free_reduce(const BraidWord& w) {
  BraidWord out;
  for (const auto& l : w) {
    if (!out.empty() && out.back().gen == l.gen && out.back().exp == -l.exp) out.pop_back();
    else out.push_back(l);
  }
  return out;
}

BraidWord concat(const BraidWord& a, const BraidWord& b) {
  BraidWord r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

std::string braid_str(const RootSystem& rs, const BraidWord& w) {
  std::string s;
  for (const auto& l : w) {
    if (!s.empty()) s += ' ';
    s += "y" + rs.token(l.gen);
    if (l.exp < 0) s += "^-1";
  }
  return s;
}

BraidWord parse_braid_word(const RootSystem& rs, std::string_view text) {
  BraidWord w;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  for (skip(); i < text.size(); skip()) {
    if (text[i] != 'y') throw ParseError(i, "'y'", "expected a generator");
    std::size_t start = ++i;
    while (i < text.size() && (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == 'p')) ++i;
    int gen = rs.parse_token(text.substr(start, i - start));
    if (gen < 0) throw ParseError(start, "a generator index of " + rs.name(), "unknown generator");
    int exp = 1;
    if (text.substr(i, 3) == "^-1") {
      exp = -1;
      i += 3;
    }
    w.push_back({gen, exp});
  }
  return w;
}

std::string reflection_form(const RootSystem& rs, const BraidWord& w) {
  static const char* const kSup[] = {"", "", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
  std::string s;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    std::size_t run = j - i;
    if (!s.empty()) s += ' ';
    s += rs.label(w[i].gen);
    if (w[i].exp < 0) s += "^-1";
    if (run > 1) s += run < 10 ? kSup[run] : "^" + std::to_string(run);
    i = j;
  }
  return s;
}

WeylElem weyl_image(const RootSystem& rs, const BraidWord& w) {
  WeylElem e = WeylElem::identity(rs.n());
  for (const auto& l : w) e = weyl_mul(e, rs.reflection(l.gen));
  return e;
}

bool is_pure(const RootSystem& rs, const BraidWord& w) { return weyl_image(rs, w).is_identity(); }

// ---------------------------------------------------------------------------

namespace {

// y_j y_{j-1} ... y_i y_i ... y_j, with the chain given by positions.
BraidWord palindrome(const std::vector<int>& chain_down, int middle) {
  BraidWord w = braid_from_positions(chain_down);
  w.push_back({middle, 1});
  w.push_back({middle, 1});
  for (auto it = chain_down.rbegin(); it != chain_down.rend(); ++it) w.push_back({*it, 1});
  return w;
}

}  // namespace

std::vector<NamedBraid> pure_braid_gens(const RootSystem& rs) {
  std::vector<NamedBraid> out;
  if (rs.family() == Family::A) {
    int top = rs.n() - 1;
    for (int j = 1; j <= top; ++j)
      for (int i = j; i >= 1; --i) {
        std::vector<int> chain;
        for (int k = j; k > i; --k) chain.push_back(k - 1);
        out.push_back({"a_{" + std::to_string(j) + "," + std::to_string(i) + "}", palindrome(chain, i - 1)});
      }
    return out;
  }
  // Type D, positions: 0 -> 2, 1 -> 2', p >= 2 -> p + 1.
  auto pos = [](int label) { return label - 1; };
  out.push_back({"a_{2,2}", palindrome({}, 0)});
  out.push_back({"a_{2',2'}", palindrome({}, 1)});
  for (int j = 3; j <= rs.n(); ++j) {
    std::string J = std::to_string(j);
    for (int i = j; i >= 3; --i) {
      std::vector<int> chain;
      for (int k = j; k > i; --k) chain.push_back(pos(k));
      out.push_back({"a_{" + J + "," + std::to_string(i) + "}", palindrome(chain, pos(i))});
    }
    std::vector<int> down;  // j ... 3
    for (int k = j; k >= 3; --k) down.push_back(pos(k));
    out.push_back({"a_{" + J + ",2}", palindrome(down, 0)});
    out.push_back({"a_{" + J + ",2'}", palindrome(down, 1)});
    for (int i = 3; i <= j; ++i) {
      std::vector<int> chain = down;  // j ... 3 2 2' 3 ... (i-1)
      chain.push_back(0);
      chain.push_back(1);
      for (int k = 3; k < i; ++k) chain.push_back(pos(k));
      out.push_back({"b_{" + J + "," + std::to_string(i) + "}", palindrome(chain, pos(i))});
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Garside normal form. Simples are Weyl elements; the positive lift of u times
// the lift of v is the lift of u o v whenever lengths add.

namespace {

WeylElem tau(const RootSystem& rs, const WeylElem& x) {
  const WeylElem& w0 = rs.longest();
  return weyl_mul(weyl_mul(w0, x), w0);
}

WeylElem tau_pow(const RootSystem& rs, const WeylElem& x, int k) { return (k % 2) ? tau(rs, x) : x; }

// Makes (a, b) left-weighted; returns whether anything moved.
bool left_weight(const RootSystem& rs, WeylElem& a, WeylElem& b) {
  bool moved = false;
  for (bool again = true; again;) {
    again = false;
    WeylElem binv = weyl_inverse(b);
    for (int t = 0; t < rs.rank(); ++t) {
      if (right_descent(rs, binv, t) && !right_descent(rs, a, t)) {
        a = weyl_mul(a, rs.reflection(t));
        b = weyl_mul(rs.reflection(t), b);
        moved = again = true;
        break;
      }
    }
  }
  return moved;
}

void cleanup(const RootSystem& rs, GarsideNF& nf) {
  std::size_t lead = 0;
  while (lead < nf.factors.size() && nf.factors[lead] == rs.longest()) ++lead;
  if (lead) {
    nf.inf += static_cast<int>(lead);
    nf.factors.erase(nf.factors.begin(), nf.factors.begin() + static_cast<long>(lead));
  }
  while (!nf.factors.empty() && nf.factors.back().is_identity()) nf.factors.pop_back();
}

void normalize(const RootSystem& rs, GarsideNF& nf) {
  auto& f = nf.factors;
  for (std::size_t i = f.size(); i-- > 1;) left_weight(rs, f[i - 1], f[i]);
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i + 1 < f.size(); ++i) changed |= left_weight(rs, f[i], f[i + 1]);
  }
  // Identities sink to the end and Delta factors rise to the front, but an
  // identity can sit before another identity only; drop them all.
  std::vector<WeylElem> kept;
  for (auto& x : f)
    if (!x.is_identity()) kept.push_back(x);
  f = std::move(kept);
  cleanup(rs, nf);
}

void append_simple(const RootSystem& rs, GarsideNF& nf, const WeylElem& s) {
  if (s.is_identity()) return;
  nf.factors.push_back(s);
  normalize(rs, nf);
}

void prepend_simple(const RootSystem& rs, GarsideNF& nf, const WeylElem& s) {
  if (s.is_identity()) return;
  nf.factors.insert(nf.factors.begin(), s);
  normalize(rs, nf);
}

}  // namespace

void nf_mul_right(const RootSystem& rs, GarsideNF& nf, BraidLetter l) {
  const WeylElem& r = rs.reflection(l.gen);
  if (l.exp > 0) {
    append_simple(rs, nf, r);
    return;
  }
  // y^-1 = Delta^-1 * lift(w0 s); moving Delta^-1 left twists the factors.
  nf.inf -= 1;
  for (auto& f : nf.factors) f = tau(rs, f);
  append_simple(rs, nf, weyl_mul(rs.longest(), r));
}

void nf_mul_left(const RootSystem& rs, GarsideNF& nf, BraidLetter l) {
  const WeylElem& r = rs.reflection(l.gen);
  if (l.exp > 0) {
    prepend_simple(rs, nf, tau_pow(rs, r, nf.inf));
    return;
  }
  // y^-1 = lift(s w0) * Delta^-1.
  nf.inf -= 1;
  prepend_simple(rs, nf, tau_pow(rs, weyl_mul(r, rs.longest()), nf.inf));
}

GarsideNF garside_nf(const RootSystem& rs, const BraidWord& w) {
  GarsideNF nf;
  for (const auto& l : w) nf_mul_right(rs, nf, l);
  return nf;
}

bool braid_equal(const RootSystem& rs, const BraidWord& u, const BraidWord& v) {
  return garside_nf(rs, u) == garside_nf(rs, v);
}

GarsideNF nf_mul(const RootSystem& rs, const GarsideNF& a, const GarsideNF& b) {
  // a * Delta^k * F = Delta^k * tau^k(a) * F.
  GarsideNF r;
  r.inf = a.inf + b.inf;
  for (const auto& f : a.factors) r.factors.push_back(tau_pow(rs, f, b.inf < 0 ? -b.inf : b.inf));
  for (const auto& f : b.factors) r.factors.push_back(f);
  normalize(rs, r);
  return r;
}

GarsideNF nf_inverse(const RootSystem& rs, const GarsideNF& a) {
  GarsideNF r;
  BraidWord w = braid_inverse(nf_word(rs, a));
  for (const auto& l : w) nf_mul_right(rs, r, l);
  return r;
}

int nf_length(const RootSystem& rs, const GarsideNF& nf) {
  int big = rs.num_positive();
  int len = 0;
  if (nf.inf >= 0) {
    len = nf.inf * big;
    for (const auto& f : nf.factors) len += weyl_length(rs, f);
    return len;
  }
  int m = -nf.inf, r = static_cast<int>(nf.factors.size());
  for (int i = 0; i < r; ++i) {
    int l = weyl_length(rs, nf.factors[i]);
    len += i < m ? big - l : l;
  }
  if (m > r) len += (m - r) * big;
  return len;
}

BraidWord nf_word(const RootSystem& rs, const GarsideNF& nf) {
  BraidWord out;
  auto positive = [&](const WeylElem& x) { return braid_from_positions(reduced_word(rs, x)); };
  BraidWord delta = positive(rs.longest());
  if (nf.inf >= 0) {
    for (int k = 0; k < nf.inf; ++k) out = concat(out, delta);
    for (const auto& f : nf.factors) out = concat(out, positive(f));
    return out;
  }
  int m = -nf.inf, r = static_cast<int>(nf.factors.size());
  // Delta^-m f_1 ... f_r = tau^{m-1}(df_1)^-1 ... (df_m)^-1 f_{m+1} ... f_r,
  // where df = f^-1 w0 is the right complement.
  for (int i = 0; i < std::min(m, r); ++i) {
    WeylElem comp = weyl_mul(weyl_inverse(nf.factors[i]), rs.longest());
    out = concat(out, braid_inverse(positive(tau_pow(rs, comp, m - 1 - i))));
  }
  for (int k = r; k < m; ++k) out = concat(out, braid_inverse(delta));
  for (int i = m; i < r; ++i) out = concat(out, positive(nf.factors[i]));
  return out;
}

std::uint64_t nf_hash(const GarsideNF& nf) {
  std::uint64_t h = static_cast<std::uint64_t>(nf.inf) * 0x9e3779b97f4a7c15ull;
  for (const auto& f : nf.factors) h = (h ^ f.hash()) * 0x100000001b3ull + 0x7f4a7c15;
  return h;
}

std::string GarsideNF::str(const RootSystem& rs) const {
  std::string s = "D^" + std::to_string(inf);
  for (const auto& f : factors) {
    s += " (";
    auto wd = reduced_word(rs, f);
    for (std::size_t i = 0; i < wd.size(); ++i) s += (i ? " " : "") + rs.label(wd[i]);
    s += ")";
  }
  return s;
}

}  // namespace parabraid
