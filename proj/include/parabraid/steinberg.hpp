#pragma once
// Steinberg words x_alpha(a), their matrix model, the Weyl action on them and
// the semidirect product St(Phi, A) x| Br(Phi).

#include <string>
#include <string_view>
#include <vector>

#include "parabraid/braid.hpp"
#include "parabraid/ring.hpp"

namespace parabraid {

struct GroupMatrix {
  Ring ring;
  int dim = 0;
  std::vector<RingElem> entries;  // row-major

  static GroupMatrix identity(const Ring& ring, int dim);
  static GroupMatrix zero(const Ring& ring, int dim);
  RingElem& at(int i, int j) { return entries[static_cast<std::size_t>(i * dim + j)]; }
  const RingElem& at(int i, int j) const { return entries[static_cast<std::size_t>(i * dim + j)]; }
  GroupMatrix operator*(const GroupMatrix& o) const;
  bool operator==(const GroupMatrix& o) const;
  bool operator!=(const GroupMatrix& o) const { return !(*this == o); }
  GroupMatrix transpose() const;
  // Column vector image.
  std::vector<RingElem> apply(const std::vector<RingElem>& v) const;
  std::string str() const;  // "[a, 1; 1, 0]"
};

int matrix_dim(const RootSystem& rs);

struct StLetter {
  Root root;
  RingElem param;
  bool operator==(const StLetter& o) const { return root == o.root && param == o.param; }
};
using SteinbergWord = std::vector<StLetter>;

class SteinbergError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

GroupMatrix st_matrix(const RootSystem& rs, const Ring& ring, const Root& alpha, const RingElem& a);
GroupMatrix st_eval(const RootSystem& rs, const Ring& ring, const SteinbergWord& w);
// Letterwise (alpha, a) -> (sigma(alpha), a).
SteinbergWord weyl_act_st(const WeylElem& sigma, const SteinbergWord& w);
SteinbergWord st_inverse(const SteinbergWord& w);
// Merges adjacent letters on the same root and drops zero parameters.
SteinbergWord st_fold(const SteinbergWord& w);
std::string root_token(const RootSystem& rs, const Root& r);  // "{1,2}" or "{+1-2}"
std::string st_str(const RootSystem& rs, const SteinbergWord& w);
SteinbergWord parse_st_word(const RootSystem& rs, const Ring& ring, std::string_view text);

// Matrix of a Weyl element: a permutation matrix for A, a product of the
// calibrated signed lifts of simple reflections (along the reduced word) for D.
GroupMatrix weyl_matrix(const RootSystem& rs, const Ring& ring, const WeylElem& w);
GroupMatrix reflection_lift(const RootSystem& rs, const Ring& ring, int pos);
GroupMatrix reflection_lift_inverse(const RootSystem& rs, const Ring& ring, int pos);

struct SemidirectElem {
  SteinbergWord st;
  BraidWord br;
};

SemidirectElem sd_mul(const RootSystem& rs, const SemidirectElem& p, const SemidirectElem& q);
bool sd_equal(const RootSystem& rs, const Ring& ring, const SemidirectElem& p, const SemidirectElem& q);

// ---------------------------------------------------------------------------
// Sign data of the 2n-dimensional model of type D. A root r acts as
// I + root_sign(r) * a * X_r and the simple reflection s lifts to P_s * D_s
// with D_s diagonal, its signs given by the twist bits of s.

struct DSignTable {
  int n = 0;
  std::string root_signs;  // one '0'/'1' per root in all_roots order; '1' means -1
  std::string twists;      // rank * 2n bits, reflection-major
  bool operator==(const DSignTable& o) const {
    return n == o.n && root_signs == o.root_signs && twists == o.twists;
  }
};

struct CalibrationConstraint {
  std::string kind;  // "lift-involution", "lift-form", "lift-braid", "st2-simple", "st2-reference", "compat-rank2", "compat", "st2"
  std::string description;
  bool satisfied = false;
};

struct CalibrationReport {
  DSignTable table;
  std::vector<CalibrationConstraint> constraints;
  int count(std::string_view kind, bool satisfied) const;
};

CalibrationReport calibrate_d(int n);
// The committed table for 3 <= n <= 6, otherwise calibrated on first use.
const DSignTable& d_sign_table(int n);
const std::vector<DSignTable>& committed_d_sign_tables();
int d_root_sign(const RootSystem& rs, const Root& r);
// N with [x_alpha(a), x_beta(b)] = x_{alpha+beta}(N ab) in the matrix model;
// 0 if alpha + beta is not a root.
int structure_sign(const RootSystem& rs, const Root& alpha, const Root& beta);

// Whether conjugating x_r(a) by the lift of s gives x_{s(r)}(a).
bool weyl_compatible(const RootSystem& rs, int pos, const Root& r);

}  // namespace parabraid
