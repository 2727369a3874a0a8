#pragma once
// Painted braids: strands carry colours in A, a crossing y_k^a spills a times
// the colour of strand k onto strand k+1. A word acts on column colour
// vectors; the first letter is the leftmost matrix factor, so the last letter
// touches the colours first (this is what gives b + a*c in the A2 picture).

#include <string>
#include <vector>

#include "parabraid/pbg.hpp"

namespace parabraid {

struct PaintAction {
  GroupMatrix matrix;
  WeylElem perm;
  bool operator==(const PaintAction& o) const { return matrix == o.matrix && perm == o.perm; }
  bool operator!=(const PaintAction& o) const { return !(*this == o); }
};

PaintAction paint_identity(const RootSystem& rs, const Ring& ring);
// x_{alpha_k}(a) times the lift of s_k; exp = -1 gives the inverse.
PaintAction paint_letter(const RootSystem& rs, const Ring& ring, int pos, const RingElem& a, int exp = 1);
PaintAction paint_compose(const PaintAction& first, const PaintAction& second);
PaintAction paint_word(const RootSystem& rs, const Ring& ring, const ParamBraidWord& w);
bool paint_vs_phi(const RootSystem& rs, const Ring& ring, const ParamBraidWord& w);
// Final colours of the strands (type A) or of the 2n coordinates (type D).
std::vector<RingElem> paint_colors(const PaintAction& act, const std::vector<RingElem>& colors);

// The quotient St_n(A) x| S_n in which (y_i^0)^2 = 1: pairs (matrix of the
// Steinberg part, Weyl image) with the permutation twisting the left factor.
struct QuotientElem {
  GroupMatrix st;
  WeylElem perm;
  bool operator==(const QuotientElem& o) const { return st == o.st && perm == o.perm; }
};
QuotientElem quotient_image(const RootSystem& rs, const Ring& ring, const ParamBraidWord& w);

}  // namespace parabraid
