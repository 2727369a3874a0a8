#pragma once
// Root systems A_{n-1} and D_n in the epsilon basis, and their Weyl groups as
// signed permutations.
//
// Simple roots are addressed by position 0..rank-1 in the canonical order
// (A: 1..n-1; D: 2, 2', 3, ..., n). Labels are the human names ("2'"), tokens
// the shell-friendly spelling ("2p").

#include <array>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace parabraid {

enum class Family { A, D };

inline constexpr int kMaxDim = 12;

struct Root {
  std::vector<int> coeffs;  // over e_1..e_n

  Root operator-() const;
  bool operator==(const Root& o) const { return coeffs == o.coeffs; }
  bool operator!=(const Root& o) const { return coeffs != o.coeffs; }
  bool operator<(const Root& o) const { return coeffs < o.coeffs; }
  std::string str() const;  // e.g. "e1-e2", "-e2+e3"
};

// w(e_i) = sign(img[i]) * e_{|img[i]|}, 1-based images.
struct WeylElem {
  std::uint8_t n = 0;
  std::array<std::int8_t, kMaxDim> img{};

  static WeylElem identity(int n);
  int image_index(int i) const { return (img[i] < 0 ? -img[i] : img[i]) - 1; }
  int image_sign(int i) const { return img[i] < 0 ? -1 : 1; }
  bool is_identity() const;
  int negative_count() const;
  std::uint64_t hash() const;
  std::string str() const;  // one-line signed permutation, e.g. "[2,-1,3]"

  bool operator==(const WeylElem& o) const { return n == o.n && img == o.img; }
  bool operator!=(const WeylElem& o) const { return !(*this == o); }
  bool operator<(const WeylElem& o) const { return n != o.n ? n < o.n : img < o.img; }
};

class RootSystemError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class RootSystem {
 public:
  RootSystem(Family family, int n);

  Family family() const { return family_; }
  int n() const { return n_; }
  int rank() const;
  int dim() const { return n_; }  // size of the epsilon basis
  std::string name() const;       // "A3", "D4"
  std::string label(int pos) const;
  std::string token(int pos) const;
  int parse_token(std::string_view tok) const;  // -1 if not a generator

  const std::vector<Root>& simple_roots() const { return data_->simple; }
  const std::vector<Root>& positive_roots() const { return data_->positive; }
  const WeylElem& reflection(int pos) const { return data_->reflections[pos]; }
  const WeylElem& longest() const { return data_->longest; }
  int num_positive() const { return static_cast<int>(data_->positive.size()); }

  bool operator==(const RootSystem& o) const { return family_ == o.family_ && n_ == o.n_; }
  bool operator!=(const RootSystem& o) const { return !(*this == o); }

 private:
  struct Data {
    std::vector<Root> simple;
    std::vector<Root> positive;
    std::vector<WeylElem> reflections;
    WeylElem longest;
  };
  Family family_;
  int n_;
  std::shared_ptr<const Data> data_;
};

std::vector<Root> simple_roots(const RootSystem& rs);
std::vector<Root> all_roots(const RootSystem& rs);
bool is_root(const RootSystem& rs, const Root& r);
bool is_positive(const RootSystem& rs, const Root& r);
int simple_index_of(const RootSystem& rs, const Root& r);  // -1 if not simple
int coxeter_m(const RootSystem& rs, int alpha, int beta);
int root_inner(const Root& a, const Root& b);

Root weyl_act(const WeylElem& w, const Root& r);
// Composition u o v: v is applied first.
WeylElem weyl_mul(const WeylElem& u, const WeylElem& v);
WeylElem weyl_inverse(const WeylElem& w);
// Product s_{i1} o ... o s_{im} of simple reflections.
WeylElem weyl_from_word(const RootSystem& rs, const std::vector<int>& positions);

int weyl_length(const RootSystem& rs, const WeylElem& w);
bool right_descent(const RootSystem& rs, const WeylElem& w, int t);  // l(w s_t) < l(w)
bool left_descent(const RootSystem& rs, const WeylElem& w, int t);   // l(s_t w) < l(w)
// Lexicographically first reduced word (w = s_{i1} o ... o s_{im}).
std::vector<int> reduced_word(const RootSystem& rs, const WeylElem& w);
bool in_weyl_group(const RootSystem& rs, const WeylElem& w);

struct SimpleReduction {
  WeylElem element;          // w with weyl_act(w, alpha) simple
  std::vector<int> word;     // w = s_{word[0]} o s_{word[1]} o ...
  int target = -1;           // position of w(alpha) among the simple roots
};

// Deterministic choice: shortest word, then smallest target position, then
// lexicographically smallest word.
SimpleReduction weyl_to_simple(const RootSystem& rs, const Root& alpha);
// All words of minimal length + `extra` (and up to `limit` results) in the same
// order as weyl_to_simple; the first entry equals weyl_to_simple.
std::vector<SimpleReduction> weyl_to_simple_candidates(const RootSystem& rs, const Root& alpha,
                                                       int extra, std::size_t limit);

// Root text: "e1-e2", "-e2+e3", also used in x{...} letters.
Root parse_root(const RootSystem& rs, std::string_view text);

}  // namespace parabraid
