#include "parabraid/ring.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace parabraid {

ParseError::ParseError(std::size_t off, std::string exp, std::string message)
    : std::runtime_error(message + " at offset " + std::to_string(off) +
                         (exp.empty() ? "" : " (expected " + exp + ")")),
      offset(off),
      expected(std::move(exp)) {}

namespace {

bool valid_symbol(std::string_view s) {
  if (s.empty() || !std::islower(static_cast<unsigned char>(s[0]))) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::islower(static_cast<unsigned char>(c)) ||
           std::isdigit(static_cast<unsigned char>(c)) || c == '_';
  });
}

Int parse_int(std::string_view s) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw RingError("bad integer '" + std::string(s) + "'");
  return Int(std::string(s));
}

}  // namespace

RingDescriptor RingDescriptor::integers() { return {}; }

RingDescriptor RingDescriptor::modular(const Int& m, const Int& g) {
  if (m < 2) throw RingError("modulus must be at least 2");
  if (g < 1 || m % g != 0) throw RingError("ideal generator must divide the modulus");
  RingDescriptor d;
  d.kind = Kind::Modular;
  d.modulus = m;
  d.ideal_gen = g;
  return d;
}

RingDescriptor RingDescriptor::poly(std::vector<std::string> symbols, bool commutative) {
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    if (!valid_symbol(symbols[i])) throw RingError("invalid symbol name '" + symbols[i] + "'");
    for (std::size_t j = 0; j < i; ++j)
      if (symbols[i] == symbols[j]) throw RingError("duplicate symbol '" + symbols[i] + "'");
  }
  RingDescriptor d;
  d.kind = Kind::Poly;
  d.symbols = std::move(symbols);
  d.commutative = commutative;
  return d;
}

RingDescriptor RingDescriptor::parse(std::string_view text) {
  if (text == "int") return integers();
  if (text.rfind("mod:", 0) == 0) {
    auto body = text.substr(4);
    auto slash = body.find('/');
    if (slash == std::string_view::npos) return modular(parse_int(body));
    return modular(parse_int(body.substr(0, slash)), parse_int(body.substr(slash + 1)));
  }
  if (text.rfind("poly:", 0) == 0) {
    std::vector<std::string> syms;
    bool comm = true;
    std::string body(text.substr(5));
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item == "noncomm") comm = false;
      else if (item == "comm") comm = true;
      else syms.push_back(item);
    }
    return poly(std::move(syms), comm);
  }
  throw RingError("unknown ring '" + std::string(text) + "' (use int, mod:<m>, poly:<syms>[,noncomm])");
}

int RingDescriptor::symbol_index(std::string_view name) const {
  for (std::size_t i = 0; i < symbols.size(); ++i)
    if (symbols[i] == name) return static_cast<int>(i);
  return -1;
}

std::string RingDescriptor::spec() const {
  switch (kind) {
    case Kind::Integers: return "int";
    case Kind::Modular:
      return "mod:" + modulus.str() + (ideal_gen == 1 ? "" : "/" + ideal_gen.str());
    case Kind::Poly: {
      std::string s = "poly:";
      for (std::size_t i = 0; i < symbols.size(); ++i) s += (i ? "," : "") + symbols[i];
      if (!commutative) s += ",noncomm";
      return s;
    }
  }
  return {};
}

bool RingDescriptor::operator==(const RingDescriptor& o) const {
  return kind == o.kind && modulus == o.modulus && ideal_gen == o.ideal_gen &&
         symbols == o.symbols && commutative == o.commutative;
}

Ring make_ring(RingDescriptor d) { return std::make_shared<const RingDescriptor>(std::move(d)); }
Ring parse_ring(std::string_view text) { return make_ring(RingDescriptor::parse(text)); }

bool same_ring(const Ring& a, const Ring& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

// ---------------------------------------------------------------------------

Int RingElem::reduce(const Int& c) const {
  if (!ring_ || ring_->kind != RingDescriptor::Kind::Modular) return c;
  Int r = c % ring_->modulus;
  if (r < 0) r += ring_->modulus;
  return r;
}

void RingElem::add_term(const Monomial& m, const Int& c) {
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    Int r = reduce(c);
    if (r != 0) terms_.emplace(m, std::move(r));
    return;
  }
  it->second = reduce(it->second + c);
  if (it->second == 0) terms_.erase(it);
}

RingElem RingElem::integer(const Ring& r, const Int& v) {
  RingElem e(r);
  e.add_term({}, v);
  return e;
}

RingElem RingElem::symbol(const Ring& r, std::string_view name) {
  int idx = r ? r->symbol_index(name) : -1;
  if (idx < 0) throw RingError("unknown symbol '" + std::string(name) + "'");
  RingElem e(r);
  e.add_term({static_cast<std::uint16_t>(idx)}, 1);
  return e;
}

bool RingElem::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Int RingElem::constant_term() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? Int(0) : it->second;
}

bool RingElem::in_parameter_ring() const {
  if (!ring_ || ring_->kind != RingDescriptor::Kind::Modular) return true;
  return constant_term() % ring_->ideal_gen == 0;
}

static const Ring& pick_ring(const RingElem& x, const RingElem& y) {
  if (x.ring() && y.ring() && !same_ring(x.ring(), y.ring())) throw RingError("ring mismatch");
  return x.ring() ? x.ring() : y.ring();
}

RingElem RingElem::operator+(const RingElem& o) const {
  RingElem r(pick_ring(*this, o));
  r.terms_ = terms_;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

RingElem RingElem::operator-() const {
  RingElem r(ring_);
  for (const auto& [m, c] : terms_) r.add_term(m, -c);
  return r;
}

RingElem RingElem::operator-(const RingElem& o) const { return *this + (-o); }

RingElem RingElem::operator*(const RingElem& o) const {
  RingElem r(pick_ring(*this, o));
  bool comm = !r.ring_ || r.ring_->commutative;
  for (const auto& [m1, c1] : terms_) {
    for (const auto& [m2, c2] : o.terms_) {
      Monomial m = m1;
      m.insert(m.end(), m2.begin(), m2.end());
      if (comm) std::sort(m.begin(), m.end());
      r.add_term(m, c1 * c2);
    }
  }
  return r;
}

bool RingElem::operator==(const RingElem& o) const {
  if (ring_ && o.ring_ && !same_ring(ring_, o.ring_)) throw RingError("ring mismatch");
  return terms_ == o.terms_;
}

bool RingElem::operator<(const RingElem& o) const {
  return std::lexicographical_compare(
      terms_.begin(), terms_.end(), o.terms_.begin(), o.terms_.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return MonomialLess{}(a.first, b.first);
        return a.second < b.second;
      });
}

std::vector<RingElem> RingElem::split_terms() const {
  std::vector<RingElem> out;
  for (const auto& [m, c] : terms_) {
    RingElem t(ring_);
    t.terms_.emplace(m, c);
    out.push_back(std::move(t));
  }
  return out;
}

std::string RingElem::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Int mag = c < 0 ? Int(-c) : c;
    if (!first) out += c < 0 ? "-" : "+";
    else if (c < 0) out += "-";
    first = false;
    if (m.empty()) {
      out += mag.str();
      continue;
    }
    if (mag != 1) out += mag.str() + "*";
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i) out += "*";
      out += ring_->symbols[m[i]];
    }
  }
  return out;
}

RingElem ring_add(const RingElem& x, const RingElem& y) { return x + y; }
RingElem ring_mul(const RingElem& x, const RingElem& y) { return x * y; }
RingElem ring_neg(const RingElem& x) { return -x; }

// ---------------------------------------------------------------------------

namespace {

class ExprParser {
 public:
  ExprParser(const Ring& ring, std::string_view text) : ring_(ring), text_(text) {}

  RingElem parse() {
    RingElem v = expr();
    skip();
    if (pos_ != text_.size()) throw ParseError(pos_, "'+', '-', '*' or end of input", "unexpected character");
    return v;
  }

 private:
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RingElem expr() {
    RingElem v = term();
    for (;;) {
      if (eat('+')) v = v + term();
      else if (eat('-')) v = v - unsigned_term();
      else return v;
    }
  }
  RingElem term() {
    bool neg = eat('-');
    RingElem v = unsigned_term();
    return neg ? -v : v;
  }
  RingElem unsigned_term() {
    RingElem v = factor();
    while (eat('*')) v = v * factor();
    return v;
  }
  RingElem factor() {
    skip();
    if (pos_ >= text_.size()) throw ParseError(pos_, "integer, symbol or '('", "unexpected end of expression");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      RingElem v = expr();
      if (!eat(')')) throw ParseError(pos_, "')'", "unbalanced parenthesis");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return RingElem::integer(ring_, Int(std::string(text_.substr(start, pos_ - start))));
    }
    if (std::islower(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && (std::islower(static_cast<unsigned char>(text_[pos_])) ||
                                     std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      auto name = text_.substr(start, pos_ - start);
      if (!ring_ || ring_->symbol_index(name) < 0)
        throw ParseError(start, "a symbol of " + (ring_ ? ring_->spec() : std::string("the ring")),
                         "unknown symbol '" + std::string(name) + "'");
      return RingElem::symbol(ring_, name);
    }
    throw ParseError(pos_, "integer, symbol or '('", std::string("unexpected character '") + c + "'");
  }

  const Ring& ring_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

RingElem parse_ring_expr(const Ring& ring, std::string_view text) { return ExprParser(ring, text).parse(); }

std::vector<std::string> scan_symbols(std::string_view text) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < text.size();) {
    if (std::islower(static_cast<unsigned char>(text[i]))) {
      std::size_t j = i;
      while (j < text.size() && (std::islower(static_cast<unsigned char>(text[j])) ||
                                 std::isdigit(static_cast<unsigned char>(text[j])) || text[j] == '_'))
        ++j;
      std::string s(text.substr(i, j - i));
      if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
      i = j;
    } else {
      ++i;
    }
  }
  return out;
}

}  // namespace parabraid
