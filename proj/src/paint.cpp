#include "parabraid/paint.hpp"

namespace parabraid {

PaintAction paint_identity(const RootSystem& rs, const Ring& ring) {
  return {GroupMatrix::identity(ring, matrix_dim(rs)), WeylElem::identity(rs.n())};
}

PaintAction paint_letter(const RootSystem& rs, const Ring& ring, int pos, const RingElem& a, int exp) {
  const Root& alpha = rs.simple_roots()[pos];
  if (exp > 0) return {st_matrix(rs, ring, alpha, a) * reflection_lift(rs, ring, pos), rs.reflection(pos)};
  return {reflection_lift_inverse(rs, ring, pos) * st_matrix(rs, ring, alpha, -a), rs.reflection(pos)};
}

PaintAction paint_compose(const PaintAction& first, const PaintAction& second) {
  return {first.matrix * second.matrix, weyl_mul(first.perm, second.perm)};
}

PaintAction paint_word(const RootSystem& rs, const Ring& ring, const ParamBraidWord& w) {
  PaintAction acc = paint_identity(rs, ring);
  for (const auto& l : w) acc = paint_compose(acc, paint_letter(rs, ring, l.gen, l.param, l.exp));
  return acc;
}

bool paint_vs_phi(const RootSystem& rs, const Ring& ring, const ParamBraidWord& w) {
  PaintAction act = paint_word(rs, ring, w);
  WeylElem image = weyl_image(rs, pi(w));
  return act.perm == image && act.matrix == st_eval(rs, ring, phi(rs, w).st) * weyl_matrix(rs, ring, image);
}

std::vector<RingElem> paint_colors(const PaintAction& act, const std::vector<RingElem>& colors) {
  return act.matrix.apply(colors);
}

QuotientElem quotient_image(const RootSystem& rs, const Ring& ring, const ParamBraidWord& w) {
  SemidirectElem e = phi(rs, w);
  return {st_eval(rs, ring, e.st), weyl_image(rs, e.br)};
}

}  // namespace parabraid
