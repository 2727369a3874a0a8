#include <doctest.h>

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "parabraid/rootsys.hpp"

using namespace parabraid;

namespace {

Root R(const RootSystem& rs, const char* s) { return parse_root(rs, s); }

// Independent oracle: Euclidean reflection r - (r, a) a for roots of norm 2.
Root reflect(const Root& r, const Root& a) {
  Root out = r;
  int ip = root_inner(r, a);
  for (std::size_t i = 0; i < r.coeffs.size(); ++i) out.coeffs[i] -= ip * a.coeffs[i];
  return out;
}

// Whole Weyl group by closure, with the length of a shortest word.
std::map<WeylElem, int> weyl_group(const RootSystem& rs) {
  std::map<WeylElem, int> seen{{WeylElem::identity(rs.n()), 0}};
  std::deque<WeylElem> q{WeylElem::identity(rs.n())};
  while (!q.empty()) {
    WeylElem w = q.front();
    q.pop_front();
    for (int t = 0; t < rs.rank(); ++t) {
      WeylElem v = weyl_mul(w, rs.reflection(t));
      if (seen.emplace(v, seen[w] + 1).second) q.push_back(v);
    }
  }
  return seen;
}

}  // namespace

TEST_CASE("rootsys: simple roots and counts") {
  RootSystem d3(Family::D, 3);
  auto s = simple_roots(d3);
  REQUIRE(s.size() == 3);
  CHECK(s[0].str() == "-e1+e2");
  CHECK(s[1].str() == "e1+e2");
  CHECK(s[2].str() == "-e2+e3");
  CHECK(d3.label(1) == "2'");
  CHECK(d3.token(1) == "2p");
  CHECK(d3.parse_token("2p") == 1);

  RootSystem a2(Family::A, 3);
  CHECK(a2.rank() == 2);
  CHECK(simple_roots(a2)[0].str() == "e1-e2");
  CHECK(all_roots(a2).size() == 6);
  CHECK(all_roots(RootSystem(Family::D, 4)).size() == 24);
  for (int n = 3; n <= 6; ++n) {
    CHECK(all_roots(RootSystem(Family::A, n)).size() == static_cast<std::size_t>(n * (n - 1)));
    CHECK(all_roots(RootSystem(Family::D, n)).size() == static_cast<std::size_t>(2 * n * (n - 1)));
  }
  CHECK_THROWS_AS(RootSystem(Family::D, 2), RootSystemError);
  CHECK_THROWS_AS(RootSystem(Family::A, 1), RootSystemError);
}

TEST_CASE("rootsys: roots are closed under negation and match the closed form") {
  for (auto rs : {RootSystem(Family::A, 4), RootSystem(Family::D, 4), RootSystem(Family::D, 5)}) {
    auto roots = all_roots(rs);
    std::set<Root> set(roots.begin(), roots.end());
    CHECK(set.size() == roots.size());
    for (const Root& r : roots) {
      CHECK(set.count(-r) == 1);
      CHECK(is_root(rs, r));
    }
    // every integer vector with entries in {-1,0,1} that is_root accepts is listed
    int n = rs.n(), total = 1;
    for (int i = 0; i < n; ++i) total *= 3;
    for (int code = 0; code < total; ++code) {
      Root r{std::vector<int>(n)};
      int c = code;
      for (int i = 0; i < n; ++i, c /= 3) r.coeffs[i] = c % 3 - 1;
      CHECK(is_root(rs, r) == (set.count(r) == 1));
    }
  }
}

TEST_CASE("rootsys: Coxeter values") {
  RootSystem d4(Family::D, 4);
  CHECK(coxeter_m(d4, 0, 1) == 2);  // 2 and 2'
  CHECK(coxeter_m(d4, 0, 2) == 3);
  CHECK(coxeter_m(d4, 1, 2) == 3);
  CHECK(coxeter_m(d4, 2, 3) == 3);
  CHECK(coxeter_m(d4, 0, 3) == 2);
  int three_with_alpha3 = 0;
  for (int p = 0; p < 4; ++p) three_with_alpha3 += coxeter_m(d4, p, 2) == 3;
  CHECK(three_with_alpha3 == 3);
  RootSystem a4(Family::A, 5);
  CHECK(coxeter_m(a4, 0, 1) == 3);
  CHECK(coxeter_m(a4, 0, 2) == 2);
  for (int p = 0; p < 4; ++p) CHECK(coxeter_m(a4, p, p) == 1);
}

TEST_CASE("rootsys: Weyl action agrees with the reflection formula") {
  RootSystem d3(Family::D, 3);
  CHECK(weyl_act(d3.reflection(1), R(d3, "e1+e2")).str() == "-e1-e2");
  CHECK(weyl_act(d3.reflection(1), R(d3, "e1-e2")).str() == "e1-e2");
  CHECK(weyl_act(WeylElem::identity(3), R(d3, "e1-e3")) == R(d3, "e1-e3"));
  for (auto rs : {RootSystem(Family::A, 5), RootSystem(Family::D, 3), RootSystem(Family::D, 5)}) {
    for (int t = 0; t < rs.rank(); ++t)
      for (const Root& r : all_roots(rs)) CHECK(weyl_act(rs.reflection(t), r) == reflect(r, rs.simple_roots()[t]));
  }
}

TEST_CASE("rootsys: Coxeter relations and group structure") {
  for (auto rs : {RootSystem(Family::A, 3), RootSystem(Family::A, 5), RootSystem(Family::D, 4), RootSystem(Family::D, 5)}) {
    for (int a = 0; a < rs.rank(); ++a)
      for (int b = 0; b < rs.rank(); ++b) {
        WeylElem p = weyl_mul(rs.reflection(a), rs.reflection(b)), acc = WeylElem::identity(rs.n());
        int m = coxeter_m(rs, a, b);
        for (int k = 1; k <= m; ++k) {
          acc = weyl_mul(acc, p);
          CHECK(acc.is_identity() == (k == m));
        }
      }
    auto group = weyl_group(rs);
    for (const auto& [w, len] : group) {
      CHECK(in_weyl_group(rs, w));
      CHECK(weyl_length(rs, w) == len);
      CHECK(static_cast<int>(reduced_word(rs, w).size()) == len);
      CHECK(weyl_from_word(rs, reduced_word(rs, w)) == w);
      CHECK(weyl_mul(w, weyl_inverse(w)).is_identity());
    }
    CHECK(weyl_length(rs, rs.longest()) == rs.num_positive());
  }
  CHECK(weyl_group(RootSystem(Family::A, 4)).size() == 24);
  CHECK(weyl_group(RootSystem(Family::D, 4)).size() == 192);
}

TEST_CASE("rootsys: Weyl elements permute the roots") {
  for (int n = 2; n <= 5; ++n)
    for (auto rs : {RootSystem(Family::A, n), RootSystem(Family::D, std::max(3, n))}) {
      auto roots = all_roots(rs);
      std::set<Root> set(roots.begin(), roots.end());
      for (const auto& [w, len] : weyl_group(rs)) {
        std::set<Root> image;
        for (const Root& r : roots) image.insert(weyl_act(w, r));
        CHECK(image == set);
      }
    }
}

TEST_CASE("rootsys: D sign parity is preserved") {
  RootSystem d4(Family::D, 4);
  auto group = weyl_group(d4);
  for (const auto& [u, lu] : group) CHECK(u.negative_count() % 2 == 0);
  WeylElem u = weyl_from_word(d4, {1, 2, 3}), v = weyl_from_word(d4, {1, 0, 2, 1});
  CHECK(weyl_mul(u, v).negative_count() % 2 == 0);
}

TEST_CASE("rootsys: weyl_to_simple is minimal and deterministic") {
  RootSystem a2(Family::A, 3);
  auto hi = weyl_to_simple(a2, R(a2, "e1-e3"));
  CHECK(hi.word.size() == 1);
  CHECK(weyl_act(hi.element, R(a2, "e1-e3")) == a2.simple_roots()[hi.target]);
  CHECK(hi.target == 0);  // the ordering prefers the lowest target position
  auto simple = weyl_to_simple(a2, R(a2, "e2-e3"));
  CHECK(simple.word.empty());
  CHECK(simple.target == 1);
  CHECK_THROWS_AS(weyl_to_simple(a2, Root{{1, 1, 0}}), RootSystemError);

  for (auto rs : {RootSystem(Family::A, 4), RootSystem(Family::D, 3), RootSystem(Family::D, 4)}) {
    auto group = weyl_group(rs);
    for (const Root& a : all_roots(rs)) {
      auto red = weyl_to_simple(rs, a);
      auto again = weyl_to_simple(rs, a);
      CHECK(red.word == again.word);
      CHECK(red.element == weyl_from_word(rs, red.word));
      CHECK(simple_index_of(rs, weyl_act(red.element, a)) == red.target);
      // brute force: no shorter group element maps a into the simple roots
      int best = 1 << 20;
      for (const auto& [w, len] : group)
        if (simple_index_of(rs, weyl_act(w, a)) >= 0) best = std::min(best, len);
      CHECK(static_cast<int>(red.word.size()) == best);
    }
  }
  RootSystem d3(Family::D, 3);
  auto r = weyl_to_simple(d3, R(d3, "e2+e3"));
  CHECK(simple_index_of(d3, weyl_act(r.element, R(d3, "e2+e3"))) >= 0);
}

TEST_CASE("rootsys: candidate list is ordered and starts with the chosen reduction") {
  RootSystem a3(Family::A, 4);
  for (const Root& a : all_roots(a3)) {
    auto c = weyl_to_simple_candidates(a3, a, 2, 50);
    REQUIRE(!c.empty());
    CHECK(c.front().word == weyl_to_simple(a3, a).word);
    for (std::size_t i = 1; i < c.size(); ++i) {
      auto key = [](const SimpleReduction& s) { return std::make_tuple(s.word.size(), s.target, s.word); };
      CHECK(key(c[i - 1]) < key(c[i]));
    }
    for (const auto& s : c) CHECK(weyl_act(s.element, a) == a3.simple_roots()[s.target]);
  }
}
