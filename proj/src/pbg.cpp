#include "parabraid/pbg.hpp"

#include <cctype>

namespace parabraid {

std::string param_word_str(const RootSystem& rs, const ParamBraidWord& w) {
  std::string s;
  for (const auto& l : w) {
    if (!s.empty()) s += ' ';
    s += 'y' + rs.token(l.gen);
    if (!l.param.is_zero()) s += '[' + l.param.str() + ']';
    if (l.exp < 0) s += "^-1";
  }
  return s;
}

ParamBraidWord parse_param_word(const RootSystem& rs, const Ring& ring, std::string_view text) {
  ParamBraidWord w;
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
    RingElem param = RingElem::zero(ring);
    if (i < text.size() && text[i] == '[') {
      std::size_t depth = 0, end = i;
      for (; end < text.size(); ++end) {
        if (text[end] == '[') ++depth;
        if (text[end] == ']' && --depth == 0) break;
      }
      if (end >= text.size()) throw ParseError(text.size(), "']'", "unterminated parameter");
      try {
        param = parse_ring_expr(ring, text.substr(i + 1, end - i - 1));
      } catch (const ParseError& e) {
        throw ParseError(i + 1 + e.offset, e.expected, e.what());
      }
      if (!param.in_parameter_ring())
        throw ParseError(i + 1, "an element of " + ring->spec(), "parameter outside the parameter ring");
      i = end + 1;
    }
    int exp = 1;
    if (text.substr(i, 3) == "^-1") {
      exp = -1;
      i += 3;
    } else if (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) {
      throw ParseError(i, "'[', '^-1' or whitespace", "unexpected character");
    }
    w.push_back({gen, param, exp});
  }
  return w;
}

ParamBraidWord param_inverse(const ParamBraidWord& w) {
  ParamBraidWord out(w.rbegin(), w.rend());
  for (auto& l : out) l.exp = -l.exp;
  return out;
}

ParamBraidWord param_concat(const ParamBraidWord& a, const ParamBraidWord& b) {
  ParamBraidWord out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

ParamBraidWord lift_braid(const Ring& ring, const BraidWord& w) {
  ParamBraidWord out;
  for (const auto& l : w) out.push_back({l.gen, RingElem::zero(ring), l.exp});
  return out;
}

ParamBraidWord expand_inverses(const ParamBraidWord& w) {
  ParamBraidWord out;
  for (const auto& l : w) {
    if (l.exp > 0 || l.param.is_zero()) {
      out.push_back(l);
      continue;
    }
    RingElem zero = RingElem::zero(l.param.ring());
    out.push_back({l.gen, zero, -1});
    out.push_back({l.gen, -l.param, 1});
    out.push_back({l.gen, zero, -1});
  }
  return out;
}

RelationInstance relation_instance(const RootSystem& rs, const std::string& name, int alpha, int beta,
                                   const RingElem& a, const RingElem& b, const RingElem& c) {
  RelationInstance r;
  r.name = name;
  r.alpha = alpha;
  r.beta = beta;
  RingElem zero = RingElem::zero(a.ring());
  if (name == "A1") {
    if (alpha != beta) throw PbgError("A1 needs a single generator");
    r.lhs = {{alpha, a, 1}, {alpha, zero, 1}, {alpha, b, 1}};
    r.rhs = {{alpha, zero, 1}, {alpha, zero, 1}, {alpha, a + b, 1}};
    r.bindings = {{"a", a}, {"b", b}};
  } else if (name == "A1xA1") {
    if (coxeter_m(rs, alpha, beta) != 2) throw PbgError("A1xA1 needs commuting generators");
    r.lhs = {{alpha, a, 1}, {beta, b, 1}};
    r.rhs = {{beta, b, 1}, {alpha, a, 1}};
    r.bindings = {{"a", a}, {"b", b}};
  } else if (name == "A2") {
    if (coxeter_m(rs, alpha, beta) != 3 || alpha > beta) throw PbgError("A2 needs adjacent generators alpha < beta");
    r.lhs = {{alpha, a, 1}, {beta, b, 1}, {alpha, c, 1}};
    r.rhs = {{beta, c, 1}, {alpha, b + a * c, 1}, {beta, a, 1}};
    r.bindings = {{"a", a}, {"b", b}, {"c", c}};
  } else {
    throw PbgError("unknown relation " + name);
  }
  return r;
}

std::vector<RelationInstance> relation_instances(const RootSystem& rs, const Ring& ring) {
  if (ring->kind != RingDescriptor::Kind::Poly) throw PbgError("relation instances need a polynomial ring");
  if (rs.family() == Family::D && !ring->commutative) throw PbgError("type D needs a commutative ring");
  for (const char* s : {"a", "b", "c"})
    if (ring->symbol_index(s) < 0) throw PbgError(std::string("ring lacks symbol ") + s);
  RingElem a = RingElem::symbol(ring, "a"), b = RingElem::symbol(ring, "b"), c = RingElem::symbol(ring, "c");
  std::vector<RelationInstance> out;
  for (int p = 0; p < rs.rank(); ++p) out.push_back(relation_instance(rs, "A1", p, p, a, b, c));
  for (int p = 0; p < rs.rank(); ++p)
    for (int q = p + 1; q < rs.rank(); ++q)
      if (coxeter_m(rs, p, q) == 2) out.push_back(relation_instance(rs, "A1xA1", p, q, a, b, c));
  for (int p = 0; p < rs.rank(); ++p)
    for (int q = p + 1; q < rs.rank(); ++q)
      if (coxeter_m(rs, p, q) == 3) out.push_back(relation_instance(rs, "A2", p, q, a, b, c));
  return out;
}

BraidWord pi(const ParamBraidWord& w) {
  BraidWord out;
  for (const auto& l : w) out.push_back({l.gen, l.exp});
  return out;
}

SemidirectElem phi(const RootSystem& rs, const ParamBraidWord& w) {
  SemidirectElem acc;
  WeylElem image = WeylElem::identity(rs.n());
  for (const auto& l : w) {
    const Root& alpha = rs.simple_roots()[l.gen];
    // y^a -> (x_alpha(a), y); its inverse is (x_{-alpha}(-a), y^{-1}).
    StLetter x = l.exp > 0 ? StLetter{alpha, l.param} : StLetter{-alpha, -l.param};
    if (!l.param.is_zero()) acc.st.push_back({weyl_act(image, x.root), x.param});
    image = weyl_mul(image, rs.reflection(l.gen));
    acc.br.push_back({l.gen, l.exp});
  }
  return acc;
}

SemidirectElem normalize(const RootSystem& rs, const ParamBraidWord& w) {
  SemidirectElem e = phi(rs, w);
  e.st = st_fold(e.st);
  return e;
}

ParamBraidWord psi_simple(const Ring& ring, int pos, const RingElem& a) {
  return {{pos, a, 1}, {pos, RingElem::zero(ring), -1}};
}

ParamBraidWord psi_with(const Ring& ring, const SimpleReduction& red, const RingElem& a) {
  // word lists w = s_{word[0]} o ...; w^{-1} lifts to the reversed word.
  BraidWord omega;
  for (auto it = red.word.rbegin(); it != red.word.rend(); ++it) omega.push_back({*it, 1});
  ParamBraidWord om = lift_braid(ring, omega);
  return param_concat(param_concat(om, psi_simple(ring, red.target, a)), param_inverse(om));
}

ParamBraidWord psi_general(const RootSystem& rs, const Root& alpha, const RingElem& a) {
  return psi_with(a.ring(), weyl_to_simple(rs, alpha), a);
}

ParamBraidWord psi_word(const RootSystem& rs, const Ring& ring, const SteinbergWord& w) {
  ParamBraidWord out;
  for (const auto& l : w) {
    RingElem p = l.param.ring() ? l.param : RingElem::zero(ring);
    out = param_concat(out, psi_general(rs, l.root, p));
  }
  return out;
}

ParamBraidWord psi_sd(const RootSystem& rs, const Ring& ring, const SemidirectElem& e) {
  return param_concat(psi_word(rs, ring, e.st), lift_braid(ring, e.br));
}

}  // namespace parabraid
