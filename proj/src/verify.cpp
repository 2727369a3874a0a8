#include "parabraid/verify.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <chrono>
#include <random>
#include <sstream>

namespace parabraid {

namespace {

using Clock = std::chrono::steady_clock;

class ReportBuilder {
 public:
  ReportBuilder(std::string suite, const RootSystem& rs, const Ring& ring) : start_(Clock::now()) {
    rep_.suite = std::move(suite);
    rep_.family = rs.family() == Family::A ? "A" : "D";
    rep_.rank = rs.rank();
    rep_.ring = ring ? ring->spec() : "";
  }
  void add(std::string id, CheckStatus s, std::string witness = {}) {
    rep_.checks.push_back({std::move(id), s, std::move(witness)});
  }
  void check(std::string id, bool ok, std::string witness = {}) {
    add(std::move(id), ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(witness));
  }
  CheckReport finish() {
    std::stable_sort(rep_.checks.begin(), rep_.checks.end(),
                     [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });
    rep_.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start_).count();
    return std::move(rep_);
  }

 private:
  CheckReport rep_;
  Clock::time_point start_;
};

std::string pair_id(const RootSystem& rs, int a, int b) { return rs.token(a) + "," + rs.token(b); }

void require_symbol_a(const Ring& ring) {
  if (ring->kind != RingDescriptor::Kind::Poly || ring->symbol_index("a") < 0)
    throw VerifyError("this suite needs a polynomial ring with symbol a");
}

void require_commutative_for_d(const RootSystem& rs, const Ring& ring) {
  if (rs.family() == Family::D && !ring->commutative) throw VerifyError("type D needs a commutative ring");
}

CheckStatus prover_status(const ProofResult& r) {
  return r.derivation ? CheckStatus::Pass : r.refuted ? CheckStatus::Fail : CheckStatus::Unproven;
}

std::string prover_witness(const ProofResult& r) {
  if (r.refuted) return "refuted: phi images differ";
  if (!r.derivation) return "not found after " + std::to_string(r.expanded) + " expansions";
  return std::to_string(r.derivation->steps.size()) + " steps, phase " + std::to_string(r.phase);
}

// Position of a diagram label ("2", "2'", "5") in type D.
int d_pos(int label, bool prime = false) {
  if (label == 2) return prime ? 1 : 0;
  return label - 1;
}

BraidWord positives(const std::vector<int>& positions) { return braid_from_positions(positions); }

ParamBraidWord conj_word(const Ring& ring, const BraidWord& b, int k, const RingElem& a) {
  ParamBraidWord lb = lift_braid(ring, b);
  return param_concat(param_concat(lb, psi_simple(ring, k, a)), param_inverse(lb));
}

}  // namespace

std::string status_str(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
    case CheckStatus::Unproven: return "unproven";
  }
  return "?";
}

bool CheckReport::ok() const { return count(CheckStatus::Fail) == 0; }

int CheckReport::count(CheckStatus s) const {
  return static_cast<int>(std::count_if(checks.begin(), checks.end(), [&](const CheckResult& c) { return c.status == s; }));
}

std::string CheckReport::to_json(bool with_timing) const {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  j["family"] = family;
  j["rank"] = rank;
  j["ring"] = ring;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json e{{"id", c.id}, {"status", status_str(c.status)}};
    if (!c.witness.empty()) e["witness"] = c.witness;
    j["checks"].push_back(e);
  }
  if (with_timing) j["elapsed_ms"] = elapsed_ms;
  return j.dump(2);
}

std::string CheckReport::to_text() const {
  std::ostringstream out;
  out << suite << " " << family << rank;
  if (!ring.empty()) out << " over " << ring;
  out << ": " << count(CheckStatus::Pass) << " pass, " << count(CheckStatus::Fail) << " fail, "
      << count(CheckStatus::Unproven) << " unproven, " << count(CheckStatus::Skipped) << " skipped ("
      << static_cast<long>(elapsed_ms) << " ms)\n";
  for (const auto& c : checks) {
    out << "  " << status_str(c.status) << "  " << c.id;
    if (!c.witness.empty()) out << "  [" << c.witness << "]";
    out << "\n";
  }
  return out.str();
}

CheckReport check_phi_well_defined(const RootSystem& rs, const Ring& ring) {
  require_commutative_for_d(rs, ring);
  ReportBuilder rb("phi", rs, ring);
  for (const auto& inst : relation_instances(rs, ring)) {
    std::string id = "phi/" + inst.name + "/" +
                     (inst.name == "A1" ? rs.token(inst.alpha) : pair_id(rs, inst.alpha, inst.beta));
    SemidirectElem l = normalize(rs, inst.lhs), r = normalize(rs, inst.rhs);
    bool ok = sd_equal(rs, ring, l, r);
    rb.check(id, ok, ok ? "" : st_str(rs, l.st) + " vs " + st_str(rs, r.st));
  }
  return rb.finish();
}

CheckReport check_pure_braid_lemma(const RootSystem& rs, const Ring& ring, const SuiteOptions& opt) {
  require_symbol_a(ring);
  require_commutative_for_d(rs, ring);
  ReportBuilder rb("pure-braid", rs, ring);
  RingElem a = RingElem::symbol(ring, "a");
  for (const auto& g : pure_braid_gens(rs))
    for (int k = 0; k < rs.rank(); ++k) {
      std::string id = "pure-braid-lemma/" + g.name + "/k=" + rs.token(k);
      ParamBraidWord conj = psi_simple(ring, k, a), om = lift_braid(ring, g.word);
      bool ok = paint_word(rs, ring, param_concat(conj, om)) == paint_word(rs, ring, param_concat(om, conj));
      rb.check(id + "/matrix", ok, reflection_form(rs, g.word));
      if (!opt.prove) {
        rb.add(id + "/prover", CheckStatus::Skipped);
        continue;
      }
      ProofResult pr = certify_commutation(rs, ring, k, g.word, opt.bounds);
      rb.add(id + "/prover", prover_status(pr), prover_witness(pr));
    }
  return rb.finish();
}

CheckReport check_psi_independence(const RootSystem& rs, const Ring& ring) {
  require_symbol_a(ring);
  require_commutative_for_d(rs, ring);
  ReportBuilder rb("psi", rs, ring);
  RingElem a = RingElem::symbol(ring, "a");
  for (const Root& alpha : all_roots(rs)) {
    std::string id = "psi/" + alpha.str();
    SemidirectElem want{{{alpha, a}}, {}};
    rb.check(id + "/phi-image", sd_equal(rs, ring, phi(rs, psi_general(rs, alpha, a)), want));
    auto cands = weyl_to_simple_candidates(rs, alpha, 2, 8);
    if (simple_index_of(rs, alpha) >= 0) {
      rb.check(id + "/simple", psi_general(rs, alpha, a) == psi_simple(ring, simple_index_of(rs, alpha), a));
      continue;
    }
    bool enough = cands.size() >= 2;
    bool same = true;
    for (const auto& c : cands) same = same && sd_equal(rs, ring, phi(rs, psi_with(ring, c, a)), want);
    rb.check(id + "/choices", enough && same, std::to_string(cands.size()) + " reductions");
    // another lift of the same Weyl element: append the pure braid y_j y_j
    const auto& red = cands.front();
    BraidWord omega;
    for (auto it = red.word.rbegin(); it != red.word.rend(); ++it) omega.push_back({*it, 1});
    BraidWord other = concat(omega, positives({red.target, red.target}));
    rb.check(id + "/lift", sd_equal(rs, ring, phi(rs, conj_word(ring, other, red.target, a)), want));
  }
  for (int k = 0; k < rs.rank(); ++k) {
    ParamBraidWord y{{k, a, 1}};
    SemidirectElem img = phi(rs, y);
    rb.check("psi/round-trip/" + rs.token(k), sd_equal(rs, ring, phi(rs, psi_sd(rs, ring, img)), img));
  }
  // conjugating psi_simple(k) by a braid that carries alpha_k to alpha_j gives psi_simple(j)
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> gen(0, rs.rank() - 1), len(0, 6);
  for (int k = 0; k < rs.rank(); ++k) {
    int found = 0;
    for (int t = 0; t < 400 && found < 12; ++t) {
      BraidWord b;
      for (int i = len(rng); i > 0; --i) b.push_back({gen(rng), 1});
      int j = simple_index_of(rs, weyl_act(weyl_image(rs, b), rs.simple_roots()[k]));
      if (j < 0) continue;
      ++found;
      rb.check("psi/conjugation/" + rs.token(k) + "/" + std::to_string(found),
               sd_equal(rs, ring, phi(rs, conj_word(ring, b, k, a)), phi(rs, psi_simple(ring, j, a))),
               braid_str(rs, b));
    }
    // generators disconnected from k fix alpha_k
    BraidWord far;
    for (int g = 0; g < rs.rank(); ++g)
      if (coxeter_m(rs, g, k) == 2) far.push_back({g, 1});
    if (!far.empty())
      rb.check("psi/conjugation/" + rs.token(k) + "/disjoint",
               sd_equal(rs, ring, phi(rs, conj_word(ring, far, k, a)), phi(rs, psi_simple(ring, k, a))),
               braid_str(rs, far));
  }
  return rb.finish();
}

CheckReport check_kassel_reutenauer(const RootSystem& rs, const Ring& ring) {
  if (rs.family() != Family::A) throw VerifyError("the quotient presentation suite is for type A");
  if (ring->kind != RingDescriptor::Kind::Poly)
    throw VerifyError("the quotient presentation suite needs a polynomial ring with a, b, c");
  ReportBuilder rb("kassel-reutenauer", rs, ring);
  RingElem a = RingElem::symbol(ring, "a"), b = RingElem::symbol(ring, "b"), c = RingElem::symbol(ring, "c");
  RingElem z = RingElem::zero(ring);
  auto q = [&](const ParamBraidWord& w) { return quotient_image(rs, ring, w); };
  QuotientElem one = q({});
  for (int i = 0; i < rs.rank(); ++i) {
    rb.check("quotient/square/" + rs.token(i), q({{i, z, 1}, {i, z, 1}}) == one);
    rb.check("quotient/merge/" + rs.token(i), q({{i, a, 1}, {i, z, -1}, {i, b, 1}}) == q({{i, a + b, 1}}));
  }
  for (int i = 0; i < rs.rank(); ++i)
    for (int j = i + 1; j < rs.rank(); ++j) {
      if (coxeter_m(rs, i, j) == 2)
        rb.check("quotient/commute/" + pair_id(rs, i, j), q({{i, a, 1}, {j, b, 1}}) == q({{j, b, 1}, {i, a, 1}}));
      if (coxeter_m(rs, i, j) == 3)
        rb.check("quotient/braid/" + pair_id(rs, i, j),
                 q({{i, a, 1}, {j, b, 1}, {i, c, 1}}) == q({{j, c, 1}, {i, b + a * c, 1}, {j, a, 1}}));
    }
  return rb.finish();
}

std::pair<ParamBraidWord, ParamBraidWord> twin_words(const RootSystem& rs, const Ring& ring) {
  if (rs.family() != Family::D || rs.rank() < 4) throw VerifyError("twin needs type D of rank at least 4");
  int n = rs.rank();
  RingElem a = RingElem::symbol(ring, "a");
  // n^a (n-1) ... 3 2 2'  against  w' 2^a 3 2' 4 ... n
  BraidWord from, to;
  for (int l = n - 1; l >= 3; --l) from.push_back({d_pos(l), 1});
  from.push_back({d_pos(2), 1});
  from.push_back({d_pos(2, true), 1});
  to.push_back({d_pos(3), 1});
  to.push_back({d_pos(2, true), 1});
  for (int l = 4; l <= n; ++l) to.push_back({d_pos(l), 1});
  int top = d_pos(n);
  BraidWord before =
      nf_word(rs, garside_nf(rs, concat(concat({{top, 1}}, from), braid_inverse(concat({{d_pos(2), 1}}, to)))));
  ParamBraidWord u{{top, a, 1}};
  for (const auto& l : lift_braid(ring, from)) u.push_back(l);
  ParamBraidWord v = lift_braid(ring, before);
  v.push_back({d_pos(2), a, 1});
  for (const auto& l : lift_braid(ring, to)) v.push_back(l);
  return {u, v};
}

std::pair<BraidWord, BraidWord> twine_words(const RootSystem& rs) {
  if (rs.family() != Family::D || rs.rank() < 4) throw VerifyError("twine needs type D of rank at least 4");
  int n = rs.rank();
  // 3 2' 4 3 5 4 ... (n-1)(n-2) n n  =  3 4 ... (n-1) n n 2' 3 4 ... (n-2)
  std::vector<int> lhs{d_pos(3), d_pos(2, true)};
  for (int l = 4; l <= n - 1; ++l) {
    lhs.push_back(d_pos(l));
    lhs.push_back(d_pos(l - 1));
  }
  lhs.push_back(d_pos(n));
  lhs.push_back(d_pos(n));
  std::vector<int> rhs;
  for (int l = 3; l <= n; ++l) rhs.push_back(d_pos(l));
  rhs.push_back(d_pos(n));
  rhs.push_back(d_pos(2, true));
  for (int l = 3; l <= n - 2; ++l) rhs.push_back(d_pos(l));
  return {positives(lhs), positives(rhs)};
}

CheckReport check_twin_twine(const RootSystem& rs, const Ring& ring, const SuiteOptions& opt) {
  if (rs.family() != Family::D || rs.rank() < 4 || rs.rank() > 5) throw VerifyError("twin-twine needs D_4 or D_5");
  require_symbol_a(ring);
  require_commutative_for_d(rs, ring);
  ReportBuilder rb("twin-twine", rs, ring);
  auto [tl, tr] = twine_words(rs);
  rb.check("twine/braid-equal", braid_equal(rs, tl, tr), reflection_form(rs, tl) + " = " + reflection_form(rs, tr));
  auto [u, v] = twin_words(rs, ring);
  rb.check("twin/matrix", quotient_image(rs, ring, u) == quotient_image(rs, ring, v),
           param_word_str(rs, u) + " = " + param_word_str(rs, v));
  rb.check("twin/zero-parameter", braid_equal(rs, pi(u), pi(v)));
  if (opt.prove) {
    ProofResult pr = prove_equal(rs, ring, u, v, opt.bounds);
    rb.add("twin/prover", prover_status(pr), prover_witness(pr));
  } else {
    rb.add("twin/prover", CheckStatus::Skipped);
  }
  return rb.finish();
}

CheckReport check_calibration(const RootSystem& rs) {
  if (rs.family() != Family::D) throw VerifyError("sign calibration exists for type D only");
  ReportBuilder rb("calibration", rs, nullptr);
  CalibrationReport rep = calibrate_d(rs.n());
  rb.check("calibration/idempotent", rep.table == d_sign_table(rs.n()));
  for (const char* kind :
       {"lift-involution", "lift-form", "lift-braid", "st2-simple", "st2-reference", "compat-rank2", "compat", "st2"}) {
    int good = rep.count(kind, true), bad = rep.count(kind, false);
    std::string witness = std::to_string(good) + "/" + std::to_string(good + bad);
    for (const auto& c : rep.constraints)
      if (c.kind == kind && !c.satisfied) {
        witness += "; first unmet: " + c.description;
        break;
      }
    if (std::string(kind) == "st2") {
      // sign +1 for every ordered pair contradicts antisymmetry; only a preference
      rb.add("calibration/st2-plus-preference", CheckStatus::Skipped, "preference only, +1 on " + witness);
      continue;
    }
    rb.check(std::string("calibration/") + kind, bad == 0, witness);
  }

  // the relations themselves, with the calibrated structure signs
  Ring ring = parse_ring("poly:a,b");
  RingElem a = RingElem::symbol(ring, "a"), b = RingElem::symbol(ring, "b");
  auto roots = all_roots(rs);
  int additive = 0, commute = 0, chevalley = 0;
  std::string bad_pair;
  for (const Root& al : roots) {
    if (st_matrix(rs, ring, al, a) * st_matrix(rs, ring, al, b) == st_matrix(rs, ring, al, a + b))
      ++additive;
    else if (bad_pair.empty())
      bad_pair = "x" + al.str() + " additivity";
    for (const Root& be : roots) {
      if (be == al || be == -al) continue;
      GroupMatrix c = st_matrix(rs, ring, al, a) * st_matrix(rs, ring, be, b) * st_matrix(rs, ring, al, -a) *
                      st_matrix(rs, ring, be, -b);
      Root sum = al;
      for (std::size_t i = 0; i < sum.coeffs.size(); ++i) sum.coeffs[i] += be.coeffs[i];
      int sign = structure_sign(rs, al, be);
      bool ok = is_root(rs, sum) ? (sign == 1 || sign == -1) &&
                                       c == st_matrix(rs, ring, sum, RingElem::integer(ring, sign) * a * b)
                                 : c == GroupMatrix::identity(ring, matrix_dim(rs));
      (is_root(rs, sum) ? chevalley : commute) += ok;
      if (!ok && bad_pair.empty()) bad_pair = "[x" + al.str() + ", x" + be.str() + "]";
    }
  }
  int pairs = 0, root_pairs = 0;
  for (const Root& al : roots)
    for (const Root& be : roots) {
      if (be == al || be == -al) continue;
      ++pairs;
      Root sum = al;
      for (std::size_t i = 0; i < sum.coeffs.size(); ++i) sum.coeffs[i] += be.coeffs[i];
      root_pairs += is_root(rs, sum);
    }
  std::string counts = std::to_string(additive) + "/" + std::to_string(roots.size()) + " additive, " +
                       std::to_string(commute) + "/" + std::to_string(pairs - root_pairs) + " commuting, " +
                       std::to_string(chevalley) + "/" + std::to_string(root_pairs) + " commutator";
  rb.check("calibration/steinberg-relations", bad_pair.empty(), bad_pair.empty() ? counts : counts + "; " + bad_pair);
  return rb.finish();
}

std::vector<Certificate> standard_certificates() {
  std::vector<Certificate> out;
  Ring nc = parse_ring("poly:a,b,c,noncomm"), comm = parse_ring("poly:a,b,c");
  RootSystem a2(Family::A, 3), a3(Family::A, 4);
  auto words = [](const RootSystem& rs, const Ring& r, const char* l, const char* rr) {
    return std::make_pair(parse_param_word(rs, r, l), parse_param_word(rs, r, rr));
  };
  auto add = [&](std::string id, const RootSystem& rs, const Ring& r, std::pair<ParamBraidWord, ParamBraidWord> w,
                 bool base) { out.push_back({std::move(id), rs, r, std::move(w.first), std::move(w.second), base}); };
  add("inverse-identities/commute-square", a2, nc, words(a2, nc, "y1 y1 y1[a]", "y1[a] y1 y1"), true);
  add("inverse-identities/merge", a2, nc, words(a2, nc, "y1[a] y1^-1 y1[b]", "y1[a+b]"), true);
  add("inverse-identities/negate", a2, nc, words(a2, nc, "y1[-a]", "y1 y1[a]^-1 y1"), true);
  auto comm_cert = [&](std::string id, const RootSystem& rs, const Ring& r, int k, const char* omega) {
    ParamBraidWord conj = psi_simple(r, k, RingElem::symbol(r, "a"));
    ParamBraidWord om = lift_braid(r, parse_braid_word(rs, omega));
    add(std::move(id), rs, r, {param_concat(conj, om), param_concat(om, conj)}, false);
  };
  // the generator below k, k itself, and the three shapes above k
  comm_cert("pure-braid-base/below/A2", a2, nc, 1, "y1 y1");
  comm_cert("pure-braid-base/same/A2", a2, nc, 1, "y2 y2");
  comm_cert("pure-braid-base/below/A3", a3, nc, 1, "y1 y1");
  comm_cert("pure-braid-base/same/A3", a3, nc, 1, "y2 y2");
  comm_cert("pure-braid-base/above/A3", a3, nc, 1, "y3 y3");
  comm_cert("pure-braid-base/above-around/A3", a3, nc, 1, "y3 y2 y2 y3");
  comm_cert("pure-braid-base/above-wide/A3", a3, nc, 1, "y3 y2 y1 y1 y2 y3");
  for (const auto& g : pure_braid_gens(a3))
    for (int k = 0; k < a3.rank(); ++k) {
      ParamBraidWord conj = psi_simple(nc, k, RingElem::symbol(nc, "a"));
      ParamBraidWord om = lift_braid(nc, g.word);
      add("pure-braid-A3/" + g.name + "/k=" + a3.token(k), a3, nc, {param_concat(conj, om), param_concat(om, conj)},
          false);
    }
  for (int n : {4, 5}) {
    RootSystem d(Family::D, n);
    add("twin/" + d.name(), d, comm, twin_words(d, comm), false);
  }
  return out;
}

CheckReport check_certificates(const SuiteOptions& opt) {
  ReportBuilder rb("certificates", RootSystem(Family::A, 4), parse_ring("poly:a,b,c,noncomm"));
  for (const auto& c : standard_certificates()) {
    if (!opt.prove) {
      rb.add("certificate/" + c.id, CheckStatus::Skipped);
      continue;
    }
    ProverBounds b = opt.bounds;
    if (c.base_rules_only) b.rules = {false, false};
    ProofResult pr = prove_equal(c.rs, c.ring, c.lhs, c.rhs, b);
    rb.add("certificate/" + c.id, prover_status(pr), prover_witness(pr));
  }
  return rb.finish();
}

std::string file_stem(const std::string& id) {
  std::string out;
  for (char ch : id) out += std::isalnum(static_cast<unsigned char>(ch)) || ch == '-' ? ch : '_';
  return out;
}

std::string system_tag(const RootSystem& rs) {
  return (rs.family() == Family::A ? "A" : "D") + std::to_string(rs.rank());
}

Ring rule_ring(const RootSystem& rs) {
  return parse_ring(rs.family() == Family::A ? "poly:a,b,c,p,noncomm" : "poly:a,b,c,p");
}

std::vector<std::string> suite_names() {
  return {"phi", "pure-braid", "psi", "kassel-reutenauer", "twin-twine", "calibration", "certificates"};
}

CheckReport run_suite(const std::string& suite, const RootSystem& rs, const Ring& ring, const SuiteOptions& opt) {
  if (suite == "phi") return check_phi_well_defined(rs, ring);
  if (suite == "pure-braid") return check_pure_braid_lemma(rs, ring, opt);
  if (suite == "psi") return check_psi_independence(rs, ring);
  if (suite == "kassel-reutenauer") return check_kassel_reutenauer(rs, ring);
  if (suite == "twin-twine") return check_twin_twine(rs, ring, opt);
  if (suite == "calibration") return check_calibration(rs);
  if (suite == "certificates") return check_certificates(opt);
  throw VerifyError("unknown suite " + suite);
}

const std::vector<CoverageItem>& coverage_manifest() {
  static const std::vector<CoverageItem> items = {
      {"relation A1", "phi", "phi/A1/"},
      {"relation A1xA1", "phi", "phi/A1xA1/"},
      {"relation A2", "phi", "phi/A2/"},
      {"phi is a homomorphism", "phi", "phi/"},
      {"identities for formal inverses", "certificates", "certificate/inverse-identities/"},
      {"pure braid lemma, base cases", "certificates", "certificate/pure-braid-base/"},
      {"pure braid lemma, matrix shadow", "pure-braid", "pure-braid-lemma/"},
      {"pure braid lemma, group level", "pure-braid", "pure-braid-lemma/"},
      {"pure braid generators", "pure-braid", "pure-braid-lemma/"},
      {"psi inverts phi on generators", "psi", "psi/round-trip/"},
      {"psi independent of choices", "psi", "psi/"},
      {"conjugation of psi by braids", "psi", "psi/conjugation/"},
      {"quotient presentation", "kassel-reutenauer", "quotient/"},
      {"twin", "twin-twine", "twin/"},
      {"twine", "twin-twine", "twine/"},
      {"type D sign calibration", "calibration", "calibration/"},
  };
  return items;
}

}  // namespace parabraid
