#pragma once
// Bounded equality prover for Br(Phi, A).
//
// A word is held as plain braid segments (Garside normal forms) separated by
// letters with nonzero parameter, so braid relations among zero-parameter
// letters cost nothing. A rule instance is a pair of letter patterns whose
// parameters are polynomials in pattern variables; when a pattern letter's
// parameter evaluates to zero it is plain and merges into the neighbouring
// segment. Plain letters at the ends of a matched pattern are always
// available (S = (S p^{-1}) p), which is what makes single-letter moves such as
// k^a (k-1) k = (k-1) k (k-1)^a apply anywhere.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "parabraid/pbg.hpp"

namespace parabraid {

struct PatternLetter {
  int gen = 0;
  int exp = 1;
  RingElem param;  // over the pattern ring; zero for plain letters
};

enum class RuleKind { Base, Derived, Shortcut };

struct RewriteRule {
  std::string name;  // unique within a rule set, e.g. "A2(1,2)", "A1(2)^-1"
  RuleKind kind = RuleKind::Base;
  std::vector<PatternLetter> lhs, rhs;
};

// Noncommutative ring of pattern variables a, b, c, p.
const Ring& pattern_ring();

struct RuleOptions {
  bool derived = true;    // consequences of A1 for formal inverses
  bool shortcuts = true;  // compiled single-letter slides
};
std::vector<RewriteRule> rule_set(const RootSystem& rs, RuleOptions opt = {});

struct ProofLetter {
  int gen = 0;
  RingElem param;
  int exp = 1;
  bool operator==(const ProofLetter& o) const { return gen == o.gen && exp == o.exp && param == o.param; }
};

struct ProofState {
  std::vector<GarsideNF> segs;  // letters.size() + 1 segments
  std::vector<ProofLetter> letters;
  bool operator==(const ProofState& o) const { return letters == o.letters && segs == o.segs; }
  std::uint64_t hash() const;
};

ProofState to_state(const RootSystem& rs, const ParamBraidWord& w);
ParamBraidWord state_word(const RootSystem& rs, const Ring& ring, const ProofState& s);
int state_length(const RootSystem& rs, const ProofState& s);

struct DerivationStep {
  std::string rule;
  bool forward = true;  // lhs -> rhs
  int position = 0;     // number of parametrized letters before the match
  std::map<std::string, RingElem> bindings;
  std::optional<BraidWord> anchor;  // split point when the matched side is entirely plain
};

struct Derivation {
  ParamBraidWord start, end;
  std::vector<DerivationStep> steps;
};

std::optional<ProofState> apply_step(const RootSystem& rs, const Ring& ring, const std::vector<RewriteRule>& rules,
                                     const ProofState& s, const DerivationStep& step);

struct ProverBounds {
  int max_len = -1;  // -1: longest input + 8
  long max_steps = 2000000;
  long max_states = 500000;  // stored states over both search sides; caps memory
  bool allow_pool = true;  // second phase with inserted letters and split parameters
  RuleOptions rules;
  // Reads PARABRAID_MAX_STEPS, PARABRAID_MAX_LEN and PARABRAID_MAX_STATES when set.
  static ProverBounds from_env();
};

struct ProofResult {
  std::optional<Derivation> derivation;
  long expanded = 0;
  int phase = 0;
  bool refuted = false;  // the phi images differ, so the words are not equal
};

class ProverError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

ProofResult prove_equal(const RootSystem& rs, const Ring& ring, const ParamBraidWord& u, const ParamBraidWord& v,
                        const ProverBounds& bounds = {});
// y_k^a (y_k^0)^{-1} omega against omega y_k^a (y_k^0)^{-1}; the ring must have symbol a.
ProofResult certify_commutation(const RootSystem& rs, const Ring& ring, int k, const BraidWord& omega,
                                const ProverBounds& bounds = {});
// Replays every step; also checks that the phi images of consecutive words agree.
bool replay(const RootSystem& rs, const Ring& ring, const Derivation& d, std::string* why = nullptr,
            RuleOptions opt = {});

std::string derivation_to_json(const RootSystem& rs, const Ring& ring, const Derivation& d);
Derivation derivation_from_json(const RootSystem& rs, const Ring& ring, const std::string& text);

// Exact forms of the compiled slides: k^a w = w' j^a w'' with w' read off at a = 0.
struct ShortcutSpec {
  std::string name;
  int from = 0, to = 0;
  BraidWord before_letter;  // w'
  BraidWord after_from;     // w
  BraidWord after_to;       // w''
};
std::vector<ShortcutSpec> shortcut_specs(const RootSystem& rs);
// lhs and rhs words of a rule with the variables replaced by symbols of `ring`.
std::pair<ParamBraidWord, ParamBraidWord> rule_words(const RewriteRule& r, const Ring& ring);

}  // namespace parabraid
