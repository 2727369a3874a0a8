#pragma once
// The parametrized braid group Br(Phi, A): words over y_alpha^a, the defining
// relations, the map phi into St(Phi, A) x| Br(Phi), its inverse psi and the
// projection pi.

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "parabraid/steinberg.hpp"

namespace parabraid {

struct ParamLetter {
  int gen = 0;
  RingElem param;
  int exp = 1;  // -1 marks the formal inverse (y^a)^{-1}
  bool operator==(const ParamLetter& o) const { return gen == o.gen && exp == o.exp && param == o.param; }
  bool operator!=(const ParamLetter& o) const { return !(*this == o); }
};
using ParamBraidWord = std::vector<ParamLetter>;

// "y1[a] y2p y3[b+a*c]^-1"; zero parameters are omitted.
std::string param_word_str(const RootSystem& rs, const ParamBraidWord& w);
ParamBraidWord parse_param_word(const RootSystem& rs, const Ring& ring, std::string_view text);
ParamBraidWord param_inverse(const ParamBraidWord& w);
ParamBraidWord param_concat(const ParamBraidWord& a, const ParamBraidWord& b);
// Every letter with parameter zero.
ParamBraidWord lift_braid(const Ring& ring, const BraidWord& w);
// Rewrites (y^a)^{-1} as (y^0)^{-1} y^{-a} (y^0)^{-1} for a != 0.
ParamBraidWord expand_inverses(const ParamBraidWord& w);

struct RelationInstance {
  std::string name;  // "A1", "A1xA1", "A2"
  int alpha = 0;
  int beta = 0;  // equals alpha for A1
  ParamBraidWord lhs, rhs;
  std::map<std::string, RingElem> bindings;
};

// Instance of one relation schema at the given parameters. For A2 the lower
// simple root must come first.
RelationInstance relation_instance(const RootSystem& rs, const std::string& name, int alpha, int beta,
                                   const RingElem& a, const RingElem& b, const RingElem& c);
// One symbolic instance per schema and applicable pair; the ring must be a
// polynomial ring containing a, b and c (commutative for type D).
std::vector<RelationInstance> relation_instances(const RootSystem& rs, const Ring& ring);

class PbgError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

BraidWord pi(const ParamBraidWord& w);
SemidirectElem phi(const RootSystem& rs, const ParamBraidWord& w);
// phi with the Steinberg part folded.
SemidirectElem normalize(const RootSystem& rs, const ParamBraidWord& w);

ParamBraidWord psi_simple(const Ring& ring, int pos, const RingElem& a);
// omega y_beta^a (y_beta^0)^{-1} omega^{-1} for a reduction w(alpha) = beta,
// omega the positive lift of w^{-1}.
ParamBraidWord psi_with(const Ring& ring, const SimpleReduction& red, const RingElem& a);
ParamBraidWord psi_general(const RootSystem& rs, const Root& alpha, const RingElem& a);
ParamBraidWord psi_word(const RootSystem& rs, const Ring& ring, const SteinbergWord& w);
// psi(s) followed by the zero-parameter lift of b.
ParamBraidWord psi_sd(const RootSystem& rs, const Ring& ring, const SemidirectElem& e);

}  // namespace parabraid
