#include "parabraid/prover.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <cstdlib>
#include <deque>
#include <functional>
#include <unordered_map>

namespace parabraid {

namespace {

constexpr int kVars = 4;
const char* const kVarNames[kVars] = {"a", "b", "c", "p"};

int var_index(const std::string& name) {
  for (int i = 0; i < kVars; ++i)
    if (name == kVarNames[i]) return i;
  return -1;
}

RingElem pv(const char* name) { return RingElem::symbol(pattern_ring(), name); }
RingElem pzero() { return RingElem::zero(pattern_ring()); }

using Values = std::array<std::optional<RingElem>, kVars>;

// Every variable of the expression is bound.
bool bound(const RingElem& e, const Values& v) {
  for (const auto& [mono, c] : e.terms())
    for (auto s : mono)
      if (!v[s]) return false;
  return true;
}

RingElem eval(const RingElem& e, const Values& v, const Ring& target) {
  RingElem out = RingElem::zero(target);
  for (const auto& [mono, c] : e.terms()) {
    RingElem t = RingElem::integer(target, c);
    for (auto s : mono) t = t * *v[s];
    out = out + t;
  }
  return out;
}

// Solves e = t for its one unbound variable when it occurs as a lone +-x term.
bool solve_one(const RingElem& e, const RingElem& t, Values& v, const Ring& target) {
  int unbound = -1;
  for (const auto& [mono, c] : e.terms())
    for (auto s : mono)
      if (!v[s]) {
        if (unbound >= 0 && unbound != s) return false;
        unbound = s;
      }
  if (unbound < 0) return false;
  RingElem rest = RingElem::zero(e.ring());
  Int coef = 0;
  for (const auto& [mono, c] : e.terms()) {
    if (mono == Monomial{static_cast<std::uint16_t>(unbound)}) {
      coef = c;
      continue;
    }
    for (auto s : mono)
      if (static_cast<int>(s) == unbound) return false;
    RingElem term = RingElem::integer(e.ring(), c);
    for (auto s : mono) term = term * RingElem::symbol(e.ring(), kVarNames[s]);
    rest = rest + term;
  }
  if (coef != 1 && coef != -1) return false;
  RingElem x = t - eval(rest, v, target);
  v[unbound] = coef == 1 ? x : -x;
  return true;
}

std::vector<int> vars_of(const std::vector<PatternLetter>& side) {
  std::vector<int> out;
  for (const auto& l : side)
    for (const auto& [mono, c] : l.param.terms())
      for (auto s : mono)
        if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PatternLetter> pattern_inverse(const std::vector<PatternLetter>& side) {
  std::vector<PatternLetter> out(side.rbegin(), side.rend());
  for (auto& l : out) l.exp = -l.exp;
  return out;
}

std::vector<PatternLetter> from_relation(const ParamBraidWord& w) {
  std::vector<PatternLetter> out;
  for (const auto& l : w) out.push_back({l.gen, l.exp, l.param});
  return out;
}

std::vector<PatternLetter> plain_pattern(const BraidWord& w) {
  std::vector<PatternLetter> out;
  for (const auto& l : w) out.push_back({l.gen, l.exp, pzero()});
  return out;
}

BraidWord plain_of(const std::vector<PatternLetter>& side, std::size_t from, std::size_t to) {
  BraidWord out;
  for (std::size_t i = from; i < to; ++i) out.push_back({side[i].gen, side[i].exp});
  return out;
}

std::uint64_t mix(std::uint64_t h, std::uint64_t x) { return (h ^ x) * 0x100000001b3ull + 0x9e3779b97f4a7c15ull; }

// Evaluated side of a rule: which letters carry a parameter and the plain runs around them.
struct Layout {
  std::vector<std::size_t> param_idx;
  std::vector<RingElem> params;
  std::vector<BraidWord> runs;  // params.size() + 1 runs
};

Layout layout(const std::vector<PatternLetter>& side, const Values& v, const Ring& target) {
  Layout out;
  std::size_t prev = 0;
  for (std::size_t i = 0; i < side.size(); ++i) {
    RingElem x = eval(side[i].param, v, target);
    if (x.is_zero()) continue;
    out.runs.push_back(plain_of(side, prev, i));
    out.param_idx.push_back(i);
    out.params.push_back(x);
    prev = i + 1;
  }
  out.runs.push_back(plain_of(side, prev, side.size()));
  return out;
}

const RewriteRule* find_rule(const std::vector<RewriteRule>& rules, const std::string& name) {
  for (const auto& r : rules)
    if (r.name == name) return &r;
  return nullptr;
}

Values values_of(const std::map<std::string, RingElem>& bindings) {
  Values v;
  for (const auto& [k, x] : bindings) {
    int i = var_index(k);
    if (i < 0) throw ProverError("unknown pattern variable " + k);
    v[i] = x;
  }
  return v;
}

std::map<std::string, RingElem> bindings_of(const Values& v, const std::vector<int>& vars) {
  std::map<std::string, RingElem> out;
  for (int i : vars) out.emplace(kVarNames[i], *v[i]);
  return out;
}

// Applies a fully bound rule side-to-side rewrite. `left` and `right` are the
// segments that stay outside the rewritten span.
ProofState splice(const RootSystem& rs, const ProofState& s, int pos, int matched, const GarsideNF& left,
                  const GarsideNF& right, const Layout& out, const std::vector<PatternLetter>& out_side) {
  ProofState t;
  t.segs.assign(s.segs.begin(), s.segs.begin() + pos);
  t.letters.assign(s.letters.begin(), s.letters.begin() + pos);
  if (out.params.empty()) {
    t.segs.push_back(nf_mul(rs, nf_mul(rs, left, garside_nf(rs, out.runs[0])), right));
  } else {
    t.segs.push_back(nf_mul(rs, left, garside_nf(rs, out.runs[0])));
    for (std::size_t j = 0; j < out.params.size(); ++j) {
      const auto& pl = out_side[out.param_idx[j]];
      t.letters.push_back({pl.gen, out.params[j], pl.exp});
      if (j + 1 < out.params.size()) t.segs.push_back(garside_nf(rs, out.runs[j + 1]));
    }
    t.segs.push_back(nf_mul(rs, garside_nf(rs, out.runs.back()), right));
  }
  t.segs.insert(t.segs.end(), s.segs.begin() + pos + matched + 1, s.segs.end());
  t.letters.insert(t.letters.end(), s.letters.begin() + pos + matched, s.letters.end());
  return t;
}

struct Applied {
  ProofState state;
  GarsideNF left;  // what stays left of the rewritten span, for reversing
  bool output_plain = false;
};

std::optional<Applied> apply_bound(const RootSystem& rs, const Ring& ring, const RewriteRule& rule, bool forward,
                                   const ProofState& s, int pos, const Values& v,
                                   const std::optional<BraidWord>& anchor) {
  const auto& m_side = forward ? rule.lhs : rule.rhs;
  const auto& o_side = forward ? rule.rhs : rule.lhs;
  for (const auto& l : m_side)
    if (!bound(l.param, v)) return std::nullopt;
  for (const auto& l : o_side)
    if (!bound(l.param, v)) return std::nullopt;
  Layout in = layout(m_side, v, ring);
  Layout out = layout(o_side, v, ring);
  int m = static_cast<int>(in.params.size());
  if (pos < 0 || pos + m > static_cast<int>(s.letters.size())) return std::nullopt;
  GarsideNF left, right;
  if (m > 0) {
    for (int j = 0; j < m; ++j) {
      const auto& pl = m_side[in.param_idx[j]];
      const auto& sl = s.letters[pos + j];
      if (sl.gen != pl.gen || sl.exp != pl.exp || sl.param != in.params[j]) return std::nullopt;
      if (j > 0 && s.segs[pos + j] != garside_nf(rs, in.runs[j])) return std::nullopt;
    }
    left = nf_mul(rs, s.segs[pos], garside_nf(rs, braid_inverse(in.runs[0])));
    right = nf_mul(rs, garside_nf(rs, braid_inverse(in.runs.back())), s.segs[pos + m]);
  } else {
    if (!anchor) return std::nullopt;
    left = garside_nf(rs, *anchor);
    right = nf_mul(rs, garside_nf(rs, braid_inverse(concat(*anchor, in.runs[0]))), s.segs[pos]);
  }
  Applied a;
  a.left = left;
  a.output_plain = out.params.empty();
  a.state = splice(rs, s, pos, m, left, right, out, o_side);
  return a;
}

std::vector<RewriteRule> build_rules(const RootSystem& rs, RuleOptions opt) {
  std::vector<RewriteRule> out;
  RingElem a = pv("a"), b = pv("b"), c = pv("c"), p = pv("p"), z = pzero();
  auto add_pair = [&](std::string name, RuleKind kind, std::vector<PatternLetter> lhs, std::vector<PatternLetter> rhs) {
    RewriteRule r{name, kind, lhs, rhs};
    RewriteRule inv{name + "^-1", kind, pattern_inverse(lhs), pattern_inverse(rhs)};
    out.push_back(std::move(r));
    out.push_back(std::move(inv));
  };
  std::vector<std::pair<int, int>> commuting, adjacent;
  for (int x = 0; x < rs.rank(); ++x)
    for (int y = x + 1; y < rs.rank(); ++y) {
      if (coxeter_m(rs, x, y) == 2) commuting.push_back({x, y});
      if (coxeter_m(rs, x, y) == 3) adjacent.push_back({x, y});
    }
  for (int g = 0; g < rs.rank(); ++g) {
    auto r = relation_instance(rs, "A1", g, g, a, b, c);
    add_pair("A1(" + rs.token(g) + ")", RuleKind::Base, from_relation(r.lhs), from_relation(r.rhs));
  }
  for (auto [x, y] : commuting) {
    auto r = relation_instance(rs, "A1xA1", x, y, a, b, c);
    add_pair("A1xA1(" + rs.token(x) + "," + rs.token(y) + ")", RuleKind::Base, from_relation(r.lhs),
             from_relation(r.rhs));
  }
  for (auto [x, y] : adjacent) {
    auto r = relation_instance(rs, "A2", x, y, a, b, c);
    add_pair("A2(" + rs.token(x) + "," + rs.token(y) + ")", RuleKind::Base, from_relation(r.lhs),
             from_relation(r.rhs));
  }
  for (int g = 0; g < rs.rank(); ++g) {
    std::string t = "(" + rs.token(g) + ")";
    out.push_back({"cancel" + t, RuleKind::Base, {{g, 1, p}, {g, -1, p}}, {}});
    out.push_back({"cancel-inverse" + t, RuleKind::Base, {{g, -1, p}, {g, 1, p}}, {}});
  }
  if (opt.derived) {
    for (int g = 0; g < rs.rank(); ++g) {
      std::string t = "(" + rs.token(g) + ")";
      add_pair("commute-square" + t, RuleKind::Derived, {{g, 1, z}, {g, 1, z}, {g, 1, a}},
               {{g, 1, a}, {g, 1, z}, {g, 1, z}});
      add_pair("merge-through-inverse" + t, RuleKind::Derived, {{g, 1, a}, {g, -1, z}, {g, 1, b}}, {{g, 1, a + b}});
      add_pair("negate" + t, RuleKind::Derived, {{g, 1, -a}}, {{g, 1, z}, {g, -1, a}, {g, 1, z}});
    }
  }
  if (opt.shortcuts) {
    for (const auto& sc : shortcut_specs(rs)) {
      std::vector<PatternLetter> lhs{{sc.from, 1, a}};
      for (const auto& l : plain_pattern(sc.after_from)) lhs.push_back(l);
      std::vector<PatternLetter> rhs = plain_pattern(sc.before_letter);
      rhs.push_back({sc.to, 1, a});
      for (const auto& l : plain_pattern(sc.after_to)) rhs.push_back(l);
      add_pair(sc.name, RuleKind::Shortcut, lhs, rhs);
    }
  }
  return out;
}

struct Node {
  ProofState state;
  std::uint64_t hash = 0;
  int parent = -1;
  DerivationStep step;
};

struct Side {
  std::vector<Node> nodes;
  std::unordered_multimap<std::uint64_t, int> index;
  std::size_t head = 0;

  int find(const ProofState& s, std::uint64_t h) const {
    auto [lo, hi] = index.equal_range(h);
    for (auto it = lo; it != hi; ++it)
      if (nodes[static_cast<std::size_t>(it->second)].state == s) return it->second;
    return -1;
  }
  int add(ProofState s, std::uint64_t h, int parent, DerivationStep step) {
    int id = static_cast<int>(nodes.size());
    nodes.push_back({std::move(s), h, parent, std::move(step)});
    index.emplace(h, id);
    return id;
  }
};

class Search {
 public:
  Search(const RootSystem& rs, const Ring& ring, const std::vector<RewriteRule>& rules, int max_len)
      : rs_(rs), ring_(ring), rules_(rules), max_len_(max_len) {}

  std::vector<RingElem> pool;
  bool phase2 = false;

  // Every successor of s with the step that produced it.
  void expand(const ProofState& s, const std::function<bool(ProofState, DerivationStep)>& emit) {
    int letters = static_cast<int>(s.letters.size());
    for (const auto& rule : rules_)
      for (bool forward : {true, false}) {
        const auto& m_side = forward ? rule.lhs : rule.rhs;
        const auto& o_side = forward ? rule.rhs : rule.lhs;
        std::vector<int> vars = vars_of(m_side), ovars = vars_of(o_side);
        for (int x : ovars)
          if (std::find(vars.begin(), vars.end(), x) == vars.end()) vars.push_back(x);
        std::size_t k = m_side.size();
        for (unsigned mask = 0; mask < (1u << k); ++mask) {
          // bit set: the letter is plain
          bool ok = true;
          int m = 0;
          for (std::size_t i = 0; i < k; ++i) {
            bool plain = mask >> i & 1u;
            if (!plain && m_side[i].param.is_zero()) ok = false;
            m += !plain;
          }
          if (!ok) continue;
          if (m == 0 && !phase2) continue;
          if (m == 0) {
            for (int pos = 0; pos <= letters; ++pos) {
              // inserts go next to a parametrized letter or a word end
              BraidWord seg = nf_word(rs_, s.segs[static_cast<std::size_t>(pos)]);
              for (std::size_t cut : {std::size_t{0}, seg.size()}) {
                BraidWord anchor(seg.begin(), seg.begin() + static_cast<std::ptrdiff_t>(cut));
                if (try_bind(s, rule, forward, m_side, mask, pos, vars, anchor, emit)) return;
                if (seg.empty()) break;
              }
            }
            continue;
          }
          for (int pos = 0; pos + m <= letters; ++pos)
            if (try_bind(s, rule, forward, m_side, mask, pos, vars, std::nullopt, emit)) return;
        }
      }
  }

 private:
  bool try_bind(const ProofState& s, const RewriteRule& rule, bool forward, const std::vector<PatternLetter>& m_side,
                unsigned mask, int pos, const std::vector<int>& vars, const std::optional<BraidWord>& anchor,
                const std::function<bool(ProofState, DerivationStep)>& emit) {
    std::vector<RingElem> target;
    int j = pos;
    for (std::size_t i = 0; i < m_side.size(); ++i) {
      if (mask >> i & 1u) {
        target.push_back(RingElem::zero(ring_));
        continue;
      }
      const auto& sl = s.letters[static_cast<std::size_t>(j++)];
      if (sl.gen != m_side[i].gen || sl.exp != m_side[i].exp) return false;
      target.push_back(sl.param);
    }
    Values v;
    return bind_rest(s, rule, forward, m_side, target, pos, vars, anchor, v, emit);
  }

  bool bind_rest(const ProofState& s, const RewriteRule& rule, bool forward, const std::vector<PatternLetter>& m_side,
                 const std::vector<RingElem>& target, int pos, const std::vector<int>& vars,
                 const std::optional<BraidWord>& anchor, Values v,
                 const std::function<bool(ProofState, DerivationStep)>& emit) {
    for (bool progress = true; progress;) {
      progress = false;
      for (std::size_t i = 0; i < m_side.size(); ++i)
        if (!bound(m_side[i].param, v) && solve_one(m_side[i].param, target[i], v, ring_)) progress = true;
    }
    for (std::size_t i = 0; i < m_side.size(); ++i)
      if (bound(m_side[i].param, v) && eval(m_side[i].param, v, ring_) != target[i]) return false;
    for (int x : vars)
      if (!v[x]) {
        if (!phase2) return false;
        for (const auto& val : pool) {
          Values w = v;
          w[x] = val;
          if (bind_rest(s, rule, forward, m_side, target, pos, vars, anchor, w, emit)) return true;
        }
        return false;
      }
    auto applied = apply_bound(rs_, ring_, rule, forward, s, pos, v, anchor);
    if (!applied || applied->state == s) return false;
    if (state_length(rs_, applied->state) > max_len_) return false;
    DerivationStep step{rule.name, forward, pos, bindings_of(v, vars), anchor};
    return emit(std::move(applied->state), std::move(step));
  }

  const RootSystem& rs_;
  const Ring& ring_;
  const std::vector<RewriteRule>& rules_;
  int max_len_;
};

// Step that undoes `step` when applied to the state it produced from `before`.
DerivationStep reverse_step(const RootSystem& rs, const Ring& ring, const std::vector<RewriteRule>& rules,
                            const ProofState& before, const DerivationStep& step) {
  const RewriteRule* rule = find_rule(rules, step.rule);
  auto applied = apply_bound(rs, ring, *rule, step.forward, before, step.position, values_of(step.bindings), step.anchor);
  DerivationStep r = step;
  r.forward = !step.forward;
  r.anchor.reset();
  if (applied->output_plain) r.anchor = nf_word(rs, applied->left);
  return r;
}

void check_inputs(const RootSystem& rs, const Ring& ring, const ParamBraidWord& w) {
  if (rs.family() == Family::D && !ring->commutative) throw ProverError("type D needs a commutative ring");
  for (const auto& l : w) {
    if (l.gen < 0 || l.gen >= rs.rank() || (l.exp != 1 && l.exp != -1)) throw ProverError("malformed word");
    if (!l.param.is_zero() && !same_ring(l.param.ring(), ring)) throw ProverError("parameter from another ring");
  }
}

}  // namespace

const Ring& pattern_ring() {
  static const Ring r = parse_ring("poly:a,b,c,p,noncomm");
  return r;
}

std::vector<ShortcutSpec> shortcut_specs(const RootSystem& rs) {
  std::vector<ShortcutSpec> out;
  auto spec = [&](std::string name, int from, int to, BraidWord after_from, BraidWord after_to) {
    BraidWord w = concat(concat(BraidWord{{from, 1}}, after_from), braid_inverse(concat({{to, 1}}, after_to)));
    out.push_back({std::move(name), from, to, nf_word(rs, garside_nf(rs, w)), after_from, after_to});
  };
  for (int g = 0; g < rs.rank(); ++g) spec("absorb-square(" + rs.token(g) + ")", g, g, {{g, 1}, {g, 1}}, {});
  for (int x = 0; x < rs.rank(); ++x)
    for (int y = 0; y < rs.rank(); ++y) {
      if (x == y || coxeter_m(rs, x, y) != 3) continue;
      std::string t = "(" + rs.token(x) + "," + rs.token(y) + ")";
      spec("slide" + t, x, y, {{y, 1}, {x, 1}}, {});
      spec("slide-back" + t, x, y, {{y, 1}, {x, -1}}, {});
      spec("slide-inverse" + t, x, y, {{y, -1}, {x, -1}}, {});
      spec("slide-square" + t, x, y, {{x, 1}, {y, 1}}, {{y, 1}, {x, -1}});
    }
  return out;
}

std::vector<RewriteRule> rule_set(const RootSystem& rs, RuleOptions opt) { return build_rules(rs, opt); }

std::uint64_t ProofState::hash() const {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (const auto& s : segs) h = mix(h, nf_hash(s));
  for (const auto& l : letters) {
    h = mix(h, static_cast<std::uint64_t>(l.gen * 2 + (l.exp < 0)));
    h = mix(h, std::hash<std::string>{}(l.param.str()));
  }
  return h;
}

ProofState to_state(const RootSystem& rs, const ParamBraidWord& w) {
  ProofState s;
  BraidWord run;
  for (const auto& l : w) {
    if (l.param.is_zero()) {
      run.push_back({l.gen, l.exp});
      continue;
    }
    s.segs.push_back(garside_nf(rs, run));
    run.clear();
    s.letters.push_back({l.gen, l.param, l.exp});
  }
  s.segs.push_back(garside_nf(rs, run));
  return s;
}

ParamBraidWord state_word(const RootSystem& rs, const Ring& ring, const ProofState& s) {
  ParamBraidWord out;
  for (std::size_t i = 0; i < s.segs.size(); ++i) {
    for (const auto& l : lift_braid(ring, nf_word(rs, s.segs[i]))) out.push_back(l);
    if (i < s.letters.size()) out.push_back({s.letters[i].gen, s.letters[i].param, s.letters[i].exp});
  }
  return out;
}

int state_length(const RootSystem& rs, const ProofState& s) {
  int n = static_cast<int>(s.letters.size());
  for (const auto& seg : s.segs) n += nf_length(rs, seg);
  return n;
}

std::optional<ProofState> apply_step(const RootSystem& rs, const Ring& ring, const std::vector<RewriteRule>& rules,
                                     const ProofState& s, const DerivationStep& step) {
  const RewriteRule* rule = find_rule(rules, step.rule);
  if (!rule) return std::nullopt;
  auto a = apply_bound(rs, ring, *rule, step.forward, s, step.position, values_of(step.bindings), step.anchor);
  if (!a) return std::nullopt;
  return std::move(a->state);
}

ProverBounds ProverBounds::from_env() {
  ProverBounds b;
  if (const char* s = std::getenv("PARABRAID_MAX_STEPS")) b.max_steps = std::atol(s);
  if (const char* s = std::getenv("PARABRAID_MAX_LEN")) b.max_len = std::atoi(s);
  if (const char* s = std::getenv("PARABRAID_MAX_STATES")) b.max_states = std::atol(s);
  return b;
}

ProofResult prove_equal(const RootSystem& rs, const Ring& ring, const ParamBraidWord& u, const ParamBraidWord& v,
                        const ProverBounds& bounds) {
  check_inputs(rs, ring, u);
  check_inputs(rs, ring, v);
  ProofResult result;
  std::vector<RewriteRule> rules = rule_set(rs, bounds.rules);
  ProofState su = to_state(rs, u), sv = to_state(rs, v);
  if (su == sv) {
    result.derivation = Derivation{u, v, {}};
    return result;
  }
  // phi is a homomorphism, so different images settle the question without a search
  if (!sd_equal(rs, ring, phi(rs, u), phi(rs, v))) {
    result.refuted = true;
    return result;
  }
  int max_len = bounds.max_len >= 0 ? bounds.max_len : std::max(state_length(rs, su), state_length(rs, sv)) + 8;

  std::vector<RingElem> pool;
  for (const auto* w : {&u, &v})
    for (const auto& l : *w)
      for (const RingElem& x : {l.param, -l.param})
        if (!x.is_zero() && std::find(pool.begin(), pool.end(), x) == pool.end()) pool.push_back(x);

  long budget = bounds.max_steps;
  for (int phase = 1; phase <= (bounds.allow_pool ? 2 : 1); ++phase) {
    Search search(rs, ring, rules, max_len);
    search.phase2 = phase == 2;
    search.pool = pool;
    Side sides[2];
    sides[0].add(su, su.hash(), -1, {});
    sides[1].add(sv, sv.hash(), -1, {});
    std::optional<std::pair<int, int>> meet;  // node ids on side 0 and side 1
    while (!meet && budget > 0) {
      std::size_t open0 = sides[0].nodes.size() - sides[0].head, open1 = sides[1].nodes.size() - sides[1].head;
      if (open0 == 0 && open1 == 0) break;
      if (static_cast<long>(sides[0].nodes.size() + sides[1].nodes.size()) > bounds.max_states) {
        budget = 0;
        break;
      }
      int d = (open0 == 0 || (open1 > 0 && open1 < open0)) ? 1 : 0;
      Side& me = sides[d];
      Side& other = sides[1 - d];
      int cur = static_cast<int>(me.head++);
      --budget;
      ++result.expanded;
      ProofState from = me.nodes[static_cast<std::size_t>(cur)].state;
      search.expand(from, [&](ProofState next, DerivationStep step) {
        std::uint64_t h = next.hash();
        if (me.find(next, h) >= 0) return false;
        int id = me.add(std::move(next), h, cur, std::move(step));
        int hit = other.find(me.nodes[static_cast<std::size_t>(id)].state, h);
        if (hit < 0) return false;
        meet = d == 0 ? std::make_pair(id, hit) : std::make_pair(hit, id);
        return true;
      });
    }
    if (!meet) continue;

    Derivation der{u, v, {}};
    std::vector<DerivationStep> head;
    for (int id = meet->first; sides[0].nodes[static_cast<std::size_t>(id)].parent >= 0;
         id = sides[0].nodes[static_cast<std::size_t>(id)].parent)
      head.push_back(sides[0].nodes[static_cast<std::size_t>(id)].step);
    der.steps.assign(head.rbegin(), head.rend());
    for (int id = meet->second; sides[1].nodes[static_cast<std::size_t>(id)].parent >= 0;
         id = sides[1].nodes[static_cast<std::size_t>(id)].parent) {
      const Node& n = sides[1].nodes[static_cast<std::size_t>(id)];
      der.steps.push_back(
          reverse_step(rs, ring, rules, sides[1].nodes[static_cast<std::size_t>(n.parent)].state, n.step));
    }
    std::string why;
    if (!replay(rs, ring, der, &why, bounds.rules)) throw std::logic_error("prover produced a bad derivation: " + why);
    result.derivation = std::move(der);
    result.phase = phase;
    return result;
  }
  return result;
}

ProofResult certify_commutation(const RootSystem& rs, const Ring& ring, int k, const BraidWord& omega,
                                const ProverBounds& bounds) {
  if (ring->kind != RingDescriptor::Kind::Poly || ring->symbol_index("a") < 0)
    throw ProverError("certify_commutation needs a polynomial ring with symbol a");
  ParamBraidWord conj = psi_simple(ring, k, RingElem::symbol(ring, "a"));
  ParamBraidWord om = lift_braid(ring, omega);
  return prove_equal(rs, ring, param_concat(conj, om), param_concat(om, conj), bounds);
}

bool replay(const RootSystem& rs, const Ring& ring, const Derivation& d, std::string* why, RuleOptions opt) {
  auto fail = [&](std::string msg) {
    if (why) *why = std::move(msg);
    return false;
  };
  std::vector<RewriteRule> rules = rule_set(rs, opt);
  ProofState s = to_state(rs, d.start);
  SemidirectElem image = phi(rs, d.start);
  for (std::size_t i = 0; i < d.steps.size(); ++i) {
    if (!find_rule(rules, d.steps[i].rule)) return fail("step " + std::to_string(i) + ": unknown rule " + d.steps[i].rule);
    auto next = apply_step(rs, ring, rules, s, d.steps[i]);
    if (!next) return fail("step " + std::to_string(i) + " (" + d.steps[i].rule + ") does not apply");
    s = std::move(*next);
    if (!sd_equal(rs, ring, image, phi(rs, state_word(rs, ring, s))))
      return fail("step " + std::to_string(i) + " changes the phi image");
  }
  if (!(s == to_state(rs, d.end))) return fail("replay does not end at the stated word");
  return true;
}

std::string derivation_to_json(const RootSystem& rs, const Ring& ring, const Derivation& d) {
  nlohmann::json j;
  j["system"] = rs.name();
  j["ring"] = ring->spec();
  j["start"] = param_word_str(rs, d.start);
  j["end"] = param_word_str(rs, d.end);
  j["steps"] = nlohmann::json::array();
  for (const auto& s : d.steps) {
    nlohmann::json step{{"rule", s.rule}, {"direction", s.forward ? "forward" : "backward"}, {"position", s.position}};
    nlohmann::json b = nlohmann::json::object();
    for (const auto& [k, x] : s.bindings) b[k] = x.str();
    step["bindings"] = b;
    if (s.anchor) step["anchor"] = braid_str(rs, *s.anchor);
    j["steps"].push_back(step);
  }
  return j.dump(1);
}

Derivation derivation_from_json(const RootSystem& rs, const Ring& ring, const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, "derivation JSON", e.what());
  }
  try {
    if (j.contains("system") && j["system"].get<std::string>() != rs.name())
      throw ProverError("derivation is for " + j["system"].get<std::string>() + ", not " + rs.name());
    Derivation d;
    d.start = parse_param_word(rs, ring, j.at("start").get<std::string>());
    d.end = parse_param_word(rs, ring, j.at("end").get<std::string>());
    for (const auto& s : j.at("steps")) {
      DerivationStep st;
      st.rule = s.at("rule").get<std::string>();
      st.forward = s.value("direction", "forward") == "forward";
      st.position = s.at("position").get<int>();
      for (const auto& [k, x] : s.at("bindings").items()) st.bindings.emplace(k, parse_ring_expr(ring, x.get<std::string>()));
      if (s.contains("anchor")) st.anchor = parse_braid_word(rs, s["anchor"].get<std::string>());
      d.steps.push_back(std::move(st));
    }
    return d;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, "derivation fields", e.what());
  }
}

std::pair<ParamBraidWord, ParamBraidWord> rule_words(const RewriteRule& r, const Ring& ring) {
  Values v;
  for (int i = 0; i < kVars; ++i)
    if (ring->symbol_index(kVarNames[i]) >= 0) v[i] = RingElem::symbol(ring, kVarNames[i]);
  auto conv = [&](const std::vector<PatternLetter>& side) {
    ParamBraidWord w;
    for (const auto& l : side) {
      if (!bound(l.param, v)) throw ProverError("ring lacks the variables of rule " + r.name);
      w.push_back({l.gen, eval(l.param, v, ring), l.exp});
    }
    return w;
  };
  return {conv(r.lhs), conv(r.rhs)};
}

}  // namespace parabraid
