// Sign calibration for the 2n-dimensional model of type D.
//
// Unknown bits: one sign per root (x_r(a) = I + c_r a X_r) and one twist per
// (simple reflection, coordinate) (lift = P_s D_s, D_s diagonal). Every requirement
// is linear over GF(2); constraints are added in priority order and kept only
// if consistent with what is already accepted. Free bits are set to 0.

#include <bitset>
#include <map>
#include <mutex>

#include "parabraid/steinberg.hpp"

namespace parabraid {

namespace {

constexpr int kMaxBits = 256;
using Bits = std::bitset<kMaxBits>;

struct Equation {
  Bits vars;
  bool rhs = false;
};

class Gf2System {
 public:
  // Returns false (and leaves the system unchanged) if inconsistent.
  bool add(Equation e) {
    for (const auto& [p, row] : rows_)
      if (e.vars[p]) {
        e.vars ^= row.vars;
        e.rhs ^= row.rhs;
      }
    if (e.vars.none()) return !e.rhs;
    int p = 0;
    while (!e.vars[p]) ++p;
    for (auto& [q, row] : rows_)
      if (row.vars[p]) {
        row.vars ^= e.vars;
        row.rhs ^= e.rhs;
      }
    rows_.emplace(p, e);
    return true;
  }
  bool value(int var) const {
    auto it = rows_.find(var);
    return it != rows_.end() && it->second.rhs;
  }

 private:
  std::map<int, Equation> rows_;
};

using IntMat = std::vector<int>;

struct Model {
  explicit Model(int n_) : n(n_), rs(Family::D, n_), roots(all_roots(rs)) {
    for (std::size_t i = 0; i < roots.size(); ++i) index.emplace(roots[i], static_cast<int>(i));
  }
  int dim() const { return 2 * n; }
  int root_var(const Root& r) const { return index.at(r); }
  int twist_var(int pos, int coord) const { return static_cast<int>(roots.size()) + pos * 2 * n + coord; }

  IntMat mul(const IntMat& a, const IntMat& b) const {
    int d = dim();
    IntMat r(static_cast<std::size_t>(d * d), 0);
    for (int i = 0; i < d; ++i)
      for (int k = 0; k < d; ++k)
        if (a[i * d + k])
          for (int j = 0; j < d; ++j) r[i * d + j] += a[i * d + k] * b[k * d + j];
    return r;
  }

  IntMat root_matrix(const Root& r) const {
    int i = -1, j = -1;
    for (int t = 0; t < n; ++t)
      if (r.coeffs[t]) (i < 0 ? i : j) = t;
    IntMat m(static_cast<std::size_t>(dim() * dim()), 0);
    auto set = [&](int p, int q, int v) { m[p * dim() + q] += v; };
    int si = r.coeffs[i], sj = r.coeffs[j];
    if (si != sj) {
      int p = si > 0 ? i : j, q = si > 0 ? j : i;
      set(p, q, 1);
      set(n + q, n + p, -1);
    } else if (si > 0) {
      set(i, n + j, 1);
      set(j, n + i, -1);
    } else {
      set(n + j, i, 1);
      set(n + i, j, -1);
    }
    return m;
  }

  // Untwisted 0/1 lift of a simple reflection: column -> row.
  std::vector<int> lift_perm(int pos) const {
    const WeylElem& s = rs.reflection(pos);
    std::vector<int> perm(static_cast<std::size_t>(dim()));
    for (int i = 0; i < n; ++i) {
      int j = s.image_index(i);
      bool flip = s.image_sign(i) < 0;
      perm[i] = flip ? n + j : j;
      perm[n + i] = flip ? j : n + j;
    }
    return perm;
  }

  IntMat perm_matrix(const std::vector<int>& perm) const {
    IntMat m(static_cast<std::size_t>(dim() * dim()), 0);
    for (int c = 0; c < dim(); ++c) m[perm[c] * dim() + c] = 1;
    return m;
  }

  int n;
  RootSystem rs;
  std::vector<Root> roots;
  std::map<Root, int> index;
};

// Monomial matrix whose column signs are affine functions of the unknowns.
struct MonoMat {
  std::vector<int> perm;
  std::vector<Bits> vars;
  std::vector<bool> sign;
};

MonoMat lift_mono(const Model& m, int pos) {
  MonoMat r;
  r.perm = m.lift_perm(pos);
  r.vars.assign(r.perm.size(), Bits{});
  r.sign.assign(r.perm.size(), false);
  for (int c = 0; c < m.dim(); ++c) r.vars[c].set(static_cast<std::size_t>(m.twist_var(pos, c)));
  return r;
}

MonoMat mono_mul(const MonoMat& a, const MonoMat& b) {
  MonoMat r = b;
  for (std::size_t c = 0; c < b.perm.size(); ++c) {
    int mid = b.perm[c];
    r.perm[c] = a.perm[mid];
    r.vars[c] ^= a.vars[mid];
    r.sign[c] = r.sign[c] != a.sign[mid];
  }
  return r;
}

MonoMat mono_identity(int dim) {
  MonoMat r;
  for (int c = 0; c < dim; ++c) r.perm.push_back(c);
  r.vars.assign(static_cast<std::size_t>(dim), Bits{});
  r.sign.assign(static_cast<std::size_t>(dim), false);
  return r;
}

std::vector<Equation> mono_equal(const MonoMat& a, const MonoMat& b) {
  std::vector<Equation> out;
  for (std::size_t c = 0; c < a.perm.size(); ++c) {
    if (a.perm[c] != b.perm[c]) throw SteinbergError("calibration: lifts do not satisfy the Weyl relations");
    out.push_back({a.vars[c] ^ b.vars[c], a.sign[c] != b.sign[c]});
  }
  return out;
}

// sign with lhs == sign * rhs, 0 if neither.
int proportional(const IntMat& lhs, const IntMat& rhs) {
  bool plus = true, minus = true;
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    plus &= lhs[i] == rhs[i];
    minus &= lhs[i] == -rhs[i];
  }
  return plus ? 1 : minus ? -1 : 0;
}

// One equation per nonzero entry (p, q) of X_r: conjugation by the twisted
// lift scales it by d_p d_q.
std::vector<Equation> compat_equations(const Model& m, int pos, const Root& r) {
  auto perm = m.lift_perm(pos);
  Root sr = weyl_act(m.rs.reflection(pos), r);
  IntMat x = m.root_matrix(r), y = m.root_matrix(sr);
  std::vector<Equation> out;
  int d = m.dim();
  for (int p = 0; p < d; ++p)
    for (int q = 0; q < d; ++q) {
      int v = x[p * d + q];
      if (!v) continue;
      int w = y[perm[p] * d + perm[q]];
      if (!w) throw SteinbergError("calibration: conjugated root matrix is not a root matrix");
      Equation e;
      e.vars.flip(static_cast<std::size_t>(m.root_var(r)));
      e.vars.flip(static_cast<std::size_t>(m.root_var(sr)));
      e.vars.flip(static_cast<std::size_t>(m.twist_var(pos, p)));
      e.vars.flip(static_cast<std::size_t>(m.twist_var(pos, q)));
      e.rhs = v != w;
      out.push_back(e);
    }
  return out;
}

Equation st2_equation(const Model& m, const Root& a, const Root& b) {
  Root s = a;
  for (std::size_t t = 0; t < s.coeffs.size(); ++t) s.coeffs[t] += b.coeffs[t];
  IntMat xa = m.root_matrix(a), xb = m.root_matrix(b);
  IntMat ab = m.mul(xa, xb), ba = m.mul(xb, xa);
  for (std::size_t i = 0; i < ab.size(); ++i) ab[i] -= ba[i];
  int kappa = proportional(ab, m.root_matrix(s));
  if (!kappa) throw SteinbergError("calibration: commutator is not a root matrix");
  Equation e;
  e.vars.flip(static_cast<std::size_t>(m.root_var(a)));
  e.vars.flip(static_cast<std::size_t>(m.root_var(b)));
  e.vars.flip(static_cast<std::size_t>(m.root_var(s)));
  e.rhs = kappa < 0;
  return e;
}

Root sum(const Root& a, const Root& b) {
  Root s = a;
  for (std::size_t t = 0; t < s.coeffs.size(); ++t) s.coeffs[t] += b.coeffs[t];
  return s;
}

int height(const Root& r) {
  int h = 0;
  for (std::size_t t = 0; t < r.coeffs.size(); ++t) h += r.coeffs[t] * static_cast<int>(t + 1);
  return h;
}

}  // namespace

int CalibrationReport::count(std::string_view kind, bool satisfied) const {
  int c = 0;
  for (const auto& k : constraints) c += k.kind == kind && k.satisfied == satisfied;
  return c;
}

CalibrationReport calibrate_d(int n) {
  Model m(n);
  const RootSystem& rs = m.rs;
  if (static_cast<int>(m.roots.size()) + rs.rank() * 2 * n > kMaxBits) throw SteinbergError("calibration: rank too large");
  Gf2System sys;
  CalibrationReport rep;
  auto offer = [&](const std::string& kind, const std::string& desc, const std::vector<Equation>& eqs) {
    // All-or-nothing for a multi-equation requirement.
    Gf2System trial = sys;
    bool ok = true;
    for (const auto& e : eqs) ok = ok && trial.add(e);
    if (ok) sys = trial;
    rep.constraints.push_back({kind, desc, ok});
  };
  auto name = [&](int p) { return rs.label(p); };

  for (int s = 0; s < rs.rank(); ++s) {
    MonoMat l = lift_mono(m, s);
    offer("lift-involution", "s" + name(s) + "^2 = 1", mono_equal(mono_mul(l, l), mono_identity(m.dim())));
  }
  for (int s = 0; s < rs.rank(); ++s) {
    // P D preserves the split form iff d_k = d_{n+k}
    std::vector<Equation> eqs;
    for (int k = 0; k < n; ++k) {
      Equation e;
      e.vars.set(static_cast<std::size_t>(m.twist_var(s, k)));
      e.vars.flip(static_cast<std::size_t>(m.twist_var(s, n + k)));
      eqs.push_back(e);
    }
    offer("lift-form", "s" + name(s) + " preserves the form", eqs);
  }
  for (int s = 0; s < rs.rank(); ++s)
    for (int t = s + 1; t < rs.rank(); ++t) {
      MonoMat a = lift_mono(m, s), b = lift_mono(m, t);
      MonoMat lhs = coxeter_m(rs, s, t) == 2 ? mono_mul(a, b) : mono_mul(mono_mul(a, b), a);
      MonoMat rhs = coxeter_m(rs, s, t) == 2 ? mono_mul(b, a) : mono_mul(mono_mul(b, a), b);
      offer("lift-braid", "s" + name(s) + " s" + name(t), mono_equal(lhs, rhs));
    }
  const auto& simple = rs.simple_roots();
  for (int s = 0; s < rs.rank(); ++s)
    for (int t = s + 1; t < rs.rank(); ++t)
      if (coxeter_m(rs, s, t) == 3)
        offer("st2-simple", "[x" + name(s) + ", x" + name(t) + "]", {st2_equation(m, simple[s], simple[t])});
  {
    // reference commutation x_{e1-e2}(a) x_{e2+e3}(b) = x_{e2+e3}(b) x_{e1+e3}(ab) x_{e1-e2}(a)
    Root a = parse_root(rs, "e1-e2"), b = parse_root(rs, "e2+e3");
    offer("st2-reference", "[x" + a.str() + ", x" + b.str() + "]", {st2_equation(m, a, b)});
  }
  for (int s = 0; s < rs.rank(); ++s)
    for (int t = 0; t < rs.rank(); ++t) {
      if (s == t) continue;
      // exactly what the painted (A1xA1)/(A2) relations use
      std::vector<Root> span{simple[t]};
      if (coxeter_m(rs, s, t) == 3) span.push_back(sum(simple[s], simple[t]));
      for (const Root& r : span)
        offer("compat-rank2", "s" + name(s) + " on " + r.str(), compat_equations(m, s, r));
    }
  for (int s = 0; s < rs.rank(); ++s)
    for (const Root& r : m.roots) offer("compat", "s" + name(s) + " on " + r.str(), compat_equations(m, s, r));
  for (const Root& a : m.roots)
    for (const Root& b : m.roots) {
      Root s = sum(a, b);
      if (!is_root(rs, s)) continue;
      int ha = height(a), hb = height(b);
      if (ha > hb || (ha == hb && !(m.root_var(a) < m.root_var(b)))) continue;
      offer("st2", "[x" + a.str() + ", x" + b.str() + "]", {st2_equation(m, a, b)});
    }

  rep.table.n = n;
  for (std::size_t i = 0; i < m.roots.size(); ++i) rep.table.root_signs += sys.value(static_cast<int>(i)) ? '1' : '0';
  for (int s = 0; s < rs.rank(); ++s)
    for (int c = 0; c < 2 * n; ++c) rep.table.twists += sys.value(m.twist_var(s, c)) ? '1' : '0';
  return rep;
}

const DSignTable& d_sign_table(int n) {
  for (const auto& t : committed_d_sign_tables())
    if (t.n == n) return t;
  static std::mutex mu;
  static std::map<int, DSignTable> extra;
  std::lock_guard<std::mutex> lock(mu);
  auto it = extra.find(n);
  if (it == extra.end()) it = extra.emplace(n, calibrate_d(n).table).first;
  return it->second;
}

int d_root_sign(const RootSystem& rs, const Root& r) {
  const DSignTable& t = d_sign_table(rs.n());
  // all_roots order: positive roots (as sorted in RootSystem) then negatives
  const auto& pos = rs.positive_roots();
  for (std::size_t i = 0; i < pos.size(); ++i) {
    if (pos[i] == r) return t.root_signs[i] == '1' ? -1 : 1;
    if (-pos[i] == r) return t.root_signs[pos.size() + i] == '1' ? -1 : 1;
  }
  throw SteinbergError("not a root: " + r.str());
}

int structure_sign(const RootSystem& rs, const Root& alpha, const Root& beta) {
  Root s = sum(alpha, beta);
  if (!is_root(rs, s)) return 0;
  if (rs.family() == Family::A) {
    // [E_ij, E_jk] = E_ik
    int i = -1;
    for (int t = 0; t < rs.n(); ++t)
      if (alpha.coeffs[t] > 0) i = t;
    return s.coeffs[i] > 0 ? 1 : -1;
  }
  Model m(rs.n());
  Equation e = st2_equation(m, alpha, beta);
  int sign = e.rhs ? -1 : 1;
  return sign * d_root_sign(rs, alpha) * d_root_sign(rs, beta) * d_root_sign(rs, s);
}

bool weyl_compatible(const RootSystem& rs, int pos, const Root& r) {
  if (rs.family() == Family::A) return true;
  Model m(rs.n());
  const DSignTable& t = d_sign_table(rs.n());
  for (const Equation& e : compat_equations(m, pos, r)) {
    bool acc = false;
    for (std::size_t v = 0; v < m.roots.size(); ++v)
      if (e.vars[v]) acc ^= t.root_signs[v] == '1';
    for (std::size_t v = 0; v < t.twists.size(); ++v)
      if (e.vars[m.roots.size() + v]) acc ^= t.twists[v] == '1';
    if (acc != e.rhs) return false;
  }
  return true;
}

}  // namespace parabraid
