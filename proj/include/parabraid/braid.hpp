#pragma once
// Plain braid groups Br(Phi): words, Weyl images, pure braid generators and a
// Garside normal form that decides equality.

#include "parabraid/errors.hpp"
#include "parabraid/rootsys.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace parabraid {

struct BraidLetter {
  int gen = 0;  // simple root position
  int exp = 1;  // +1 or -1
  bool operator==(const BraidLetter& o) const { return gen == o.gen && exp == o.exp; }
  bool operator!=(const BraidLetter& o) const { return !(*this == o); }
  bool operator<(const BraidLetter& o) const { return gen != o.gen ? gen < o.gen : exp < o.exp; }
};

using BraidWord = std::vector<BraidLetter>;

BraidWord braid_from_positions(const std::vector<int>& positions);  // all exponents +1
BraidWord braid_inverse(const BraidWord& w);
BraidWord free_reduce(const BraidWord& w);
BraidWord concat(const BraidWord& a, const BraidWord& b);
std::string braid_str(const RootSystem& rs, const BraidWord& w);  // "y1 y2^-1", "" for empty
BraidWord parse_braid_word(const RootSystem& rs, std::string_view text);
// Space-separated labels with repeated letters folded into a superscript,
// e.g. "4 3 2 2' 3 4² 3 2' 2 3 4". Positive words only.
std::string reflection_form(const RootSystem& rs, const BraidWord& w);

WeylElem weyl_image(const RootSystem& rs, const BraidWord& w);
bool is_pure(const RootSystem& rs, const BraidWord& w);

struct NamedBraid {
  std::string name;  // "a_{3,1}", "b_{4,3}"
  BraidWord word;
};
std::vector<NamedBraid> pure_braid_gens(const RootSystem& rs);

// Delta^inf * factors[0] * ... with factors left-greedy, none trivial or Delta.
struct GarsideNF {
  int inf = 0;
  std::vector<WeylElem> factors;
  bool operator==(const GarsideNF& o) const { return inf == o.inf && factors == o.factors; }
  bool operator!=(const GarsideNF& o) const { return !(*this == o); }
  std::string str(const RootSystem& rs) const;
};

GarsideNF garside_nf(const RootSystem& rs, const BraidWord& w);
bool braid_equal(const RootSystem& rs, const BraidWord& u, const BraidWord& v);

void nf_mul_right(const RootSystem& rs, GarsideNF& nf, BraidLetter l);
void nf_mul_left(const RootSystem& rs, GarsideNF& nf, BraidLetter l);
GarsideNF nf_mul(const RootSystem& rs, const GarsideNF& a, const GarsideNF& b);
GarsideNF nf_inverse(const RootSystem& rs, const GarsideNF& a);
// Length of the word produced by nf_word.
int nf_length(const RootSystem& rs, const GarsideNF& nf);
// A representative word: negative part first (complements of the leading
// factors), then the remaining positive factors. For inf >= 0 it is Delta^inf
// followed by the factors.
BraidWord nf_word(const RootSystem& rs, const GarsideNF& nf);
std::uint64_t nf_hash(const GarsideNF& nf);

}  // namespace parabraid
