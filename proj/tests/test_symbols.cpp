#include <random>
#include <map>
#include <set>

#include "doctest.h"
#include "hpd/symbols.hpp"

using namespace hpd;

namespace {

LefschetzProfile generic(int i, int N) { return make_profile("g", N, std::vector<long long>(i, 1)); }

// Hom(Amb(a,s), Amb(b,t)) = 0 is derivable from twisted T1 copies plus
// lifting iff some T1(w) holds a container Amb(k,s), k <= a, strictly right of
// a container Amb(k',t), k' <= b. Enumerated without the closed form.
bool r1_by_search(int i, int a, int s, int b, int t, int lo, int hi) {
  for (int w = lo; w <= hi; ++w)
    for (int k = 0; k <= std::min(a, i - 1); ++k)
      for (int k2 = 0; k2 < k && k2 <= b; ++k2)
        if (w + k == s && w + k2 == t) return true;
  return false;
}

bool r1_closed(int a, int s, int t) { return 1 <= s - t && s - t <= a; }

}  // namespace

TEST_CASE("containment examples") {
  const auto p = generic(6, 10);
  CHECK(contains(amb(Side::X, 3, 2), amb(Side::X, 1, 2)));
  CHECK(contains(dual_block(Side::X, 2, 0), dual_block(Side::X, 5, 0)));
  CHECK_FALSE(contains(amb(Side::X, 1, 2), amb(Side::X, 1, 3)));
  CHECK(contains(prim(Side::X, 3, 1), amb(Side::X, 2, 1)));
  CHECK_FALSE(contains(prim(Side::X, 1, 1), amb(Side::X, 2, 1)));
  CHECK(contains(amb(Side::X, 2, 5), full(Side::X)));
  CHECK_THROWS_AS(contains(amb(Side::X, 1, 0), amb(Side::S, 1, 0)), SymbolError);
  // B^k = A_0 once k reaches the length
  CHECK(contains(amb(Side::X, 0, 0), dual_block(Side::X, 6, 0), p));
  CHECK_FALSE(contains(amb(Side::X, 0, 0), dual_block(Side::X, 5, 0), p));
}

TEST_CASE("containers are closed under containment") {
  const auto p = generic(5, 9);
  const std::vector<FactorSymbol> probes = {amb(Side::X, 2, 1), prim(Side::X, 3, 0), dual_block(Side::X, 2, 0),
                                            left_perp_amb(Side::X, 2, 1), right_perp_dual(Side::X, 3, 0)};
  for (const auto& f : probes) {
    const auto cs = containers(f, p);
    const std::set<FactorSymbol> once(cs.begin(), cs.end());
    CHECK(once.count(f) == 1);
    for (const auto& c : cs) {
      CHECK(contains(f, c, p));
      for (const auto& c2 : containers(c, p)) CHECK(once.count(c2) == 1);
    }
  }
}

TEST_CASE("symbol range checks") {
  const auto p = generic(4, 8);
  CHECK_NOTHROW(check_symbol(amb(Side::X, 3, 0), p));
  CHECK_THROWS_AS(check_symbol(amb(Side::X, 4, 0), p), SymbolError);
  CHECK_THROWS_AS(check_symbol(prim(Side::X, -1, 0), p), SymbolError);
  CHECK_THROWS_AS(hom_vanishes_factor(amb(Side::X, 9, 0), amb(Side::X, 1, 0), p), SymbolError);
}

TEST_CASE("hom oracle examples") {
  const auto p = generic(6, 12);
  auto v = hom_vanishes_factor(amb(Side::X, 3, 3), amb(Side::X, 1, 1), p);
  CHECK(v.vanishes());
  CHECK(v.rule.find("R1") != std::string::npos);
  CHECK_FALSE(hom_vanishes_factor(amb(Side::X, 2, 0), amb(Side::X, 2, 0), p).vanishes());
  v = hom_vanishes_factor(prim(Side::X, 3, 4), dual_block(Side::X, 2, 0), p);
  CHECK(v.vanishes());
  CHECK(v.rule.find("R2") != std::string::npos);
  CHECK(hom_vanishes_factor(prim(Side::X, 3, 0), prim(Side::X, 1, 0), p).vanishes());
  CHECK_FALSE(hom_vanishes_factor(prim(Side::X, 1, 0), prim(Side::X, 3, 0), p).vanishes());
  CHECK(hom_vanishes_factor(left_perp_amb(Side::X, 2, 1), amb(Side::X, 4, 1), p).vanishes());
  CHECK(hom_vanishes_factor(prim_star(Side::X, 1, 0), right_perp_dual(Side::X, 3, 0), p).vanishes());
  // a zero category against anything
  const auto z = make_profile("z", 12, {0, 0, 1});
  v = hom_vanishes_factor(prim(Side::X, 1, 0), amb(Side::X, 0, 0), z);
  CHECK(v.vanishes());
  CHECK(v.rule == "zero");
}

TEST_CASE("unknown never means nonzero: self queries stay unknown") {
  for (int i = 1; i <= 6; ++i) {
    const auto p = make_profile("m", 12, i == 1 ? std::vector<long long>{2} : std::vector<long long>(i, 1));
    std::vector<FactorSymbol> syms = {full(Side::X)};
    for (int a = 0; a < i; ++a)
      for (int t = -3; t <= 3; ++t) {
        syms.push_back(amb(Side::X, a, t));
        syms.push_back(prim(Side::X, a, t));
        syms.push_back(prim_star(Side::X, a, t));
        syms.push_back(left_perp_amb(Side::X, a, t));
      }
    for (int k = 1; k <= 11; ++k) {
      syms.push_back(dual_block(Side::X, k, 0));
      if (k < i) syms.push_back(right_perp_dual(Side::X, k, 0));
    }
    for (const auto& f : syms) {
      if (denotes_zero(f, p)) continue;
      CHECK_MESSAGE(!hom_vanishes_factor(f, f, p).vanishes(), to_string(f));
      CHECK(!hom_vanishes_base(f, f, p).vanishes());
    }
  }
}

TEST_CASE("twist equivariance") {
  const auto p = make_profile("q", 11, {1, 0, 2, 1, 3});
  std::vector<FactorSymbol> syms;
  for (int a = 0; a < 5; ++a)
    for (int t = -2; t <= 2; ++t) {
      syms.push_back(amb(Side::X, a, t));
      syms.push_back(prim(Side::X, a, t));
      syms.push_back(left_perp_amb(Side::X, a, t));
      if (a >= 1) {
        syms.push_back(dual_block(Side::X, a, t));
        syms.push_back(right_perp_dual(Side::X, a, t));
      }
    }
  for (const auto& f : syms)
    for (const auto& g : syms)
      for (int m : {-7, -1, 3, 11}) {
        const auto a = hom_vanishes_factor(f, g, p), b = hom_vanishes_factor(f.twisted(m), g.twisted(m), p);
        REQUIRE(a.vanishes() == b.vanishes());
      }
}

TEST_CASE("R1 closed form agrees with template search (small window)") {
  for (int i = 1; i <= 5; ++i)
    for (int N : {i + 1, 9}) {
      const auto p = generic(i, N);
      for (int a = 0; a < i; ++a)
        for (int b = 0; b < i; ++b)
          for (int s = -N; s <= N; ++s)
            for (int t = -N; t <= N; ++t) {
              const bool brute = r1_by_search(i, a, s, b, t, -3 * N, 3 * N);
              REQUIRE(brute == r1_closed(a, s, t));
              REQUIRE(hom_vanishes_factor(amb(Side::X, a, s), amb(Side::X, b, t), p).vanishes() == brute);
            }
    }
}

TEST_CASE("base rules agree with the cached oracle") {
  const auto p = make_profile("q", 9, {1, 0, 2, 1});
  std::vector<FactorSymbol> syms;
  for (int a = 0; a < 4; ++a)
    for (int t = -1; t <= 2; ++t) {
      syms.push_back(amb(Side::X, a, t));
      syms.push_back(prim(Side::X, a, t));
    }
  clear_factor_cache();
  for (const auto& f : syms)
    for (const auto& g : syms) {
      const auto cached = hom_vanishes_factor(f, g, p);
      // the cached path can only know more, never contradict
      if (hom_vanishes_base(f, g, p).vanishes()) CHECK(cached.vanishes());
      CHECK(hom_vanishes_factor(f, g, p).rule == cached.rule);
    }
  CHECK(factor_cache_size() > 0);
}

TEST_CASE("template enumeration") {
  const auto p2 = generic(2, 5);
  const auto ts = enumerate_templates(p2, 0, 0);
  bool found = false;
  for (const auto& t : ts)
    if (t.id == "T1" && t.components == std::vector<FactorSymbol>{amb(Side::X, 0, 0), amb(Side::X, 1, 1)})
      found = true;
  CHECK(found);

  const auto p1 = generic(1, 4);
  // for i = 1, A_0 = a_0: the two templates agree up to that identification
  const auto t1 = template_T1(Side::X, p1, 0).components, t2 = template_T2(Side::X, p1, 0).components;
  REQUIRE(t1.size() == 1);
  REQUIRE(t2.size() == 1);
  CHECK(t2[0] == prim(Side::X, 0, 0));
  CHECK(contains(t1[0], t2[0], p1));
  CHECK(contains(t2[0], t1[0], p1));

  LefschetzProfile s3 = generic(3, 7);
  for (auto& b : s3.blocks) b.label = "c" + b.label.substr(1);
  const auto all = enumerate_templates(s3, -1, 1, Side::S);
  std::map<std::string, int> count;
  for (const auto& t : all) ++count[t.id.substr(0, 2)];
  CHECK(count["T1"] == 3);
  CHECK(count["T2"] == 3);
  CHECK(count["T3"] == 3);
  CHECK(count["T4"] == 6);  // k = 1..2, three twists each
  CHECK(all.size() == 15);
}
