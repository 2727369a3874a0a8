#pragma once
// Parameter rings: integers, Z/m (optionally a non-unital ideal of it), and
// polynomials over Z in named symbols, commutative or free.

#include <boost/multiprecision/cpp_int.hpp>

#include "parabraid/errors.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace parabraid {

using Int = boost::multiprecision::cpp_int;

class RingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RingDescriptor {
  enum class Kind { Integers, Modular, Poly };
  Kind kind = Kind::Integers;
  Int modulus = 0;
  // Modular only: parameters are restricted to ideal_gen * Z/m. A value other
  // than 1 gives a ring without unit.
  Int ideal_gen = 1;
  std::vector<std::string> symbols;
  bool commutative = true;

  static RingDescriptor integers();
  static RingDescriptor modular(const Int& m, const Int& ideal_gen = 1);
  static RingDescriptor poly(std::vector<std::string> symbols, bool commutative);
  // Accepts "int", "mod:<m>", "mod:<m>/<g>" and "poly:<s1>,<s2>...[,noncomm]".
  static RingDescriptor parse(std::string_view text);

  bool unital() const { return kind != Kind::Modular || ideal_gen == 1; }
  int symbol_index(std::string_view name) const;  // -1 if absent
  std::string spec() const;
  bool operator==(const RingDescriptor& o) const;
};

using Ring = std::shared_ptr<const RingDescriptor>;
Ring make_ring(RingDescriptor d);
Ring parse_ring(std::string_view text);
bool same_ring(const Ring& a, const Ring& b);

// A monomial is a word over symbol indices; sorted when the ring is commutative.
using Monomial = std::vector<std::uint16_t>;

struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

class RingElem {
 public:
  using Terms = std::map<Monomial, Int, MonomialLess>;

  RingElem() = default;  // detached zero; adopts the ring of the other operand
  explicit RingElem(Ring r) : ring_(std::move(r)) {}

  static RingElem zero(const Ring& r) { return RingElem(r); }
  static RingElem integer(const Ring& r, const Int& v);
  static RingElem symbol(const Ring& r, std::string_view name);
  // The multiplicative unit of the ambient ring (exists even for the
  // non-unital ideal, where it is not a valid parameter).
  static RingElem ambient_one(const Ring& r) { return integer(r, 1); }

  const Ring& ring() const { return ring_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Int constant_term() const;
  // Whether this value may be used as a parameter (ideal membership).
  bool in_parameter_ring() const;

  std::string str() const;

  RingElem operator+(const RingElem& o) const;
  RingElem operator-(const RingElem& o) const;
  RingElem operator*(const RingElem& o) const;
  RingElem operator-() const;
  RingElem& operator+=(const RingElem& o) { return *this = *this + o; }
  RingElem& operator*=(const RingElem& o) { return *this = *this * o; }
  bool operator==(const RingElem& o) const;
  bool operator!=(const RingElem& o) const { return !(*this == o); }
  // Total order on canonical payloads, for use as map keys.
  bool operator<(const RingElem& o) const;

  // Additive decomposition into single-term elements, in canonical order.
  std::vector<RingElem> split_terms() const;

 private:
  void add_term(const Monomial& m, const Int& c);
  Int reduce(const Int& c) const;
  Ring ring_;
  Terms terms_;
};

RingElem ring_add(const RingElem& x, const RingElem& y);
RingElem ring_mul(const RingElem& x, const RingElem& y);
RingElem ring_neg(const RingElem& x);

// Grammar: expr := term (('+'|'-') term)* ; term := ['-'] factor ('*' factor)*
//          factor := integer | symbol | '(' expr ')'
RingElem parse_ring_expr(const Ring& ring, std::string_view text);

// Symbols occurring in an expression, in order of first appearance.
std::vector<std::string> scan_symbols(std::string_view text);

}  // namespace parabraid
