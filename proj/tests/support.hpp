#pragma once
#include <random>
#include <string>

#include "parabraid/ring.hpp"

namespace testsupport {

// Small random element: up to three terms of degree <= 2 with coefficients in [-3, 3].
inline parabraid::RingElem random_elem(const parabraid::Ring& r, std::mt19937& rng) {
  using parabraid::RingElem;
  std::uniform_int_distribution<int> coef(-3, 3), nterms(0, 3), deg(0, 2);
  RingElem out = RingElem::zero(r);
  if (r->kind != parabraid::RingDescriptor::Kind::Poly) {
    return RingElem::integer(r, coef(rng) * 7 + coef(rng));
  }
  std::uniform_int_distribution<std::size_t> sym(0, r->symbols.size() - 1);
  for (int t = nterms(rng); t > 0; --t) {
    RingElem term = RingElem::integer(r, coef(rng));
    for (int d = deg(rng); d > 0; --d) term = term * RingElem::symbol(r, r->symbols[sym(rng)]);
    out = out + term;
  }
  return out;
}

}  // namespace testsupport
