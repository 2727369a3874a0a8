#include "parabraid/steinberg.hpp"

#include <cctype>

namespace parabraid {

GroupMatrix GroupMatrix::zero(const Ring& ring, int dim) {
  GroupMatrix m;
  m.ring = ring;
  m.dim = dim;
  m.entries.assign(static_cast<std::size_t>(dim * dim), RingElem::zero(ring));
  return m;
}

GroupMatrix GroupMatrix::identity(const Ring& ring, int dim) {
  GroupMatrix m = zero(ring, dim);
  for (int i = 0; i < dim; ++i) m.at(i, i) = RingElem::ambient_one(ring);
  return m;
}

GroupMatrix GroupMatrix::operator*(const GroupMatrix& o) const {
  if (dim != o.dim) throw SteinbergError("matrix dimension mismatch");
  GroupMatrix r = zero(ring, dim);
  for (int i = 0; i < dim; ++i)
    for (int k = 0; k < dim; ++k) {
      const RingElem& x = at(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < dim; ++j) {
        const RingElem& y = o.at(k, j);
        if (!y.is_zero()) r.at(i, j) += x * y;
      }
    }
  return r;
}

bool GroupMatrix::operator==(const GroupMatrix& o) const { return dim == o.dim && entries == o.entries; }

GroupMatrix GroupMatrix::transpose() const {
  GroupMatrix r = zero(ring, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) r.at(j, i) = at(i, j);
  return r;
}

std::vector<RingElem> GroupMatrix::apply(const std::vector<RingElem>& v) const {
  std::vector<RingElem> out(static_cast<std::size_t>(dim), RingElem::zero(ring));
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      if (!at(i, j).is_zero()) out[i] += at(i, j) * v[j];
  return out;
}

std::string GroupMatrix::str() const {
  std::string s = "[";
  for (int i = 0; i < dim; ++i) {
    if (i) s += "; ";
    for (int j = 0; j < dim; ++j) s += (j ? ", " : "") + at(i, j).str();
  }
  return s + "]";
}

int matrix_dim(const RootSystem& rs) { return rs.family() == Family::A ? rs.n() : 2 * rs.n(); }

namespace {

// Unsigned root matrix X_r of the D model (plus/minus one entries).
void add_d_root_matrix(int n, const Root& r, const RingElem& a, GroupMatrix& m) {
  int i = -1, j = -1;
  for (int t = 0; t < n; ++t)
    if (r.coeffs[t]) (i < 0 ? i : j) = t;
  int si = r.coeffs[i], sj = r.coeffs[j];
  if (si != sj) {
    // e_p - e_q: E_{pq} - E_{n+q, n+p}
    int p = si > 0 ? i : j, q = si > 0 ? j : i;
    m.at(p, q) += a;
    m.at(n + q, n + p) += -a;
  } else if (si > 0) {
    m.at(i, n + j) += a;
    m.at(j, n + i) += -a;
  } else {
    m.at(n + j, i) += a;
    m.at(n + i, j) += -a;
  }
}

}  // namespace

GroupMatrix st_matrix(const RootSystem& rs, const Ring& ring, const Root& alpha, const RingElem& a) {
  if (!is_root(rs, alpha)) throw SteinbergError("not a root of " + rs.name() + ": " + alpha.str());
  GroupMatrix m = GroupMatrix::identity(ring, matrix_dim(rs));
  if (rs.family() == Family::A) {
    int i = -1, j = -1;
    for (int t = 0; t < rs.n(); ++t) {
      if (alpha.coeffs[t] > 0) i = t;
      if (alpha.coeffs[t] < 0) j = t;
    }
    m.at(i, j) += a;
    return m;
  }
  if (!ring->commutative) throw SteinbergError("type D needs a commutative ring");
  add_d_root_matrix(rs.n(), alpha, d_root_sign(rs, alpha) < 0 ? -a : a, m);
  return m;
}

GroupMatrix st_eval(const RootSystem& rs, const Ring& ring, const SteinbergWord& w) {
  GroupMatrix m = GroupMatrix::identity(ring, matrix_dim(rs));
  for (const auto& l : w) m = m * st_matrix(rs, ring, l.root, l.param);
  return m;
}

SteinbergWord weyl_act_st(const WeylElem& sigma, const SteinbergWord& w) {
  SteinbergWord out;
  out.reserve(w.size());
  for (const auto& l : w) out.push_back({weyl_act(sigma, l.root), l.param});
  return out;
}

SteinbergWord st_inverse(const SteinbergWord& w) {
  SteinbergWord out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({it->root, -it->param});
  return out;
}

SteinbergWord st_fold(const SteinbergWord& w) {
  SteinbergWord out;
  for (const auto& l : w) {
    if (l.param.is_zero()) continue;
    if (!out.empty() && out.back().root == l.root) {
      out.back().param += l.param;
      if (out.back().param.is_zero()) out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

std::string root_token(const RootSystem& rs, const Root& r) {
  std::vector<int> idx;
  for (int t = 0; t < rs.n(); ++t)
    if (r.coeffs[t]) idx.push_back(t);
  if (rs.family() == Family::A) {
    int i = r.coeffs[idx[0]] > 0 ? idx[0] : idx[1], j = r.coeffs[idx[0]] > 0 ? idx[1] : idx[0];
    return "{" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "}";
  }
  std::string s = "{";
  for (int t : idx) s += (r.coeffs[t] > 0 ? "+" : "-") + std::to_string(t + 1);
  return s + "}";
}

std::string st_str(const RootSystem& rs, const SteinbergWord& w) {
  std::string s;
  for (const auto& l : w) {
    if (!s.empty()) s += ' ';
    s += "x" + root_token(rs, l.root) + "[" + l.param.str() + "]";
  }
  return s;
}

SteinbergWord parse_st_word(const RootSystem& rs, const Ring& ring, std::string_view text) {
  SteinbergWord w;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  for (skip(); i < text.size(); skip()) {
    if (text.substr(i, 2) != "x{") throw ParseError(i, "'x{'", "expected a Steinberg letter");
    std::size_t open = i + 2, close = text.find('}', open);
    if (close == std::string_view::npos) throw ParseError(text.size(), "'}'", "unterminated root");
    std::string_view body = text.substr(open, close - open);
    Root r{std::vector<int>(rs.n(), 0)};
    try {
      auto comma = body.find(',');
      if (comma != std::string_view::npos) {
        int a = std::stoi(std::string(body.substr(0, comma))), b = std::stoi(std::string(body.substr(comma + 1)));
        if (a < 1 || b < 1 || a > rs.n() || b > rs.n() || a == b) throw RootSystemError("index");
        r.coeffs[a - 1] += 1;
        r.coeffs[b - 1] -= 1;
        if (!is_root(rs, r)) throw RootSystemError("index");
      } else {
        r = parse_root(rs, body);
      }
    } catch (const std::exception&) {
      throw ParseError(open, "a root of " + rs.name(), "bad root '" + std::string(body) + "'");
    }
    i = close + 1;
    RingElem param = RingElem::zero(ring);
    if (i < text.size() && text[i] == '[') {
      std::size_t end = text.find(']', i);
      if (end == std::string_view::npos) throw ParseError(text.size(), "']'", "unterminated parameter");
      try {
        param = parse_ring_expr(ring, text.substr(i + 1, end - i - 1));
      } catch (const ParseError& e) {
        throw ParseError(i + 1 + e.offset, e.expected, "bad parameter");
      }
      i = end + 1;
    }
    w.push_back({r, param});
  }
  return w;
}

GroupMatrix reflection_lift(const RootSystem& rs, const Ring& ring, int pos) {
  const WeylElem& s = rs.reflection(pos);
  int n = rs.n();
  GroupMatrix m = GroupMatrix::zero(ring, matrix_dim(rs));
  RingElem one = RingElem::ambient_one(ring);
  if (rs.family() == Family::A) {
    for (int i = 0; i < n; ++i) m.at(s.image_index(i), i) = one;
    return m;
  }
  const DSignTable& t = d_sign_table(n);
  auto twist = [&](int c) { return t.twists[static_cast<std::size_t>(pos * 2 * n + c)] == '1' ? -one : one; };
  for (int i = 0; i < n; ++i) {
    int j = s.image_index(i);
    bool flip = s.image_sign(i) < 0;
    m.at(flip ? n + j : j, i) = twist(i);
    m.at(flip ? j : n + j, n + i) = twist(n + i);
  }
  return m;
}

GroupMatrix reflection_lift_inverse(const RootSystem& rs, const Ring& ring, int pos) {
  // Monomial with +-1 entries: the inverse is the transpose.
  return reflection_lift(rs, ring, pos).transpose();
}

GroupMatrix weyl_matrix(const RootSystem& rs, const Ring& ring, const WeylElem& w) {
  GroupMatrix m = GroupMatrix::identity(ring, matrix_dim(rs));
  for (int p : reduced_word(rs, w)) m = m * reflection_lift(rs, ring, p);
  return m;
}

SemidirectElem sd_mul(const RootSystem& rs, const SemidirectElem& p, const SemidirectElem& q) {
  SemidirectElem r;
  r.st = p.st;
  auto twisted = weyl_act_st(weyl_image(rs, p.br), q.st);
  r.st.insert(r.st.end(), twisted.begin(), twisted.end());
  r.br = concat(p.br, q.br);
  return r;
}

bool sd_equal(const RootSystem& rs, const Ring& ring, const SemidirectElem& p, const SemidirectElem& q) {
  return braid_equal(rs, p.br, q.br) && st_eval(rs, ring, p.st) == st_eval(rs, ring, q.st);
}

}  // namespace parabraid
