#include <catch_amalgamated.hpp>

#include <set>

#include "lef/error.hpp"
#include "lef/lwf.hpp"

using namespace lef;

namespace {

  std::set<Word> as_set(std::vector<Word> const& v) {
    return {v.begin(), v.end()};
  }

  BfsBounds with_images() {
    return {0, 1000000, 4};
  }

}  // namespace

TEST_CASE("H_1 membership") {
  MembershipOracle h(PresetId::parse("t"), 1);
  REQUIRE(h.representatives().size() == 6);
  REQUIRE(h.member("a") == Verdict::equal);
  REQUIRE(h.member("xa") == Verdict::distinct);
  MembershipOracle h2(PresetId::parse("t"), 2, with_images());
  REQUIRE(h2.member("xcd") == Verdict::equal);
  REQUIRE(h2.short_words().size() == 42);
}

TEST_CASE("L_1(T) is the generators") {
  auto L = enumerate_preaccurate(PresetId::parse("t"), 1, 8);
  REQUIRE(as_set(L.words()) == std::set<Word>{"a", "c", "d", "e", "b", "x"});
  REQUIRE_FALSE(L.truncated);
  REQUIRE(L.indeterminate.empty());
}

TEST_CASE("layered recursion matches the definition on T") {
  for (long n : {1, 2}) {
    MembershipOracle o(PresetId::parse("t"), n, with_images());
    auto L = enumerate_preaccurate(PresetId::parse("t"), n, 8, Execution::parallel, with_images());
    REQUIRE(L.indeterminate.empty());
    for (auto const& w : o.alphabet().words_up_to(4)) {
      REQUIRE(L.contains(w) == is_preaccurate_naive(o, w));
    }
  }
}

TEST_CASE("L_2(T)") {
  auto L = enumerate_preaccurate(PresetId::parse("t"), 2, 8, Execution::serial, with_images());
  REQUIRE(L.words().size() == 46);
  REQUIRE_FALSE(L.truncated);
  REQUIRE(L.max_length() == 3);
  REQUIRE(L.contains("xcd"));
  auto P = enumerate_preaccurate(PresetId::parse("t"), 2, 8, Execution::parallel, with_images());
  REQUIRE(as_set(P.words()) == as_set(L.words()));
}

TEST_CASE("L_2(S) on S_3 normal forms") {
  auto L = enumerate_preaccurate_sm(PresetId::parse("s"), 2, 3, 8, Execution::parallel, with_images());
  REQUIRE(L.modulus == 3);
  REQUIRE(L.words().size() == 40);
  REQUIRE(L.max_grade() == 3);
  REQUIRE(L.indeterminate.empty());
  REQUIRE_FALSE(L.truncated);
  for (auto w : {"aeex", "eaeex", "eeax", "xac", "xca"}) {
    REQUIRE(L.contains(w));
  }
  // membership is by S_3 normal form
  REQUIRE(L.contains("aeeeex"));
  REQUIRE(L.grade("eeax") == 2);
}

TEST_CASE("wrappings for T and S at n = 1") {
  WordHost t{PresetId::parse("t"), with_images()};
  MembershipOracle h1(PresetId::parse("t"), 1);
  auto Ht = make_subset(t, h1.representatives());
  auto rt = build_lwf_wrapping(PresetId::parse("t"), Ht, 1);
  REQUIRE(rt.m == 3);
  REQUIRE(rt.wrap.table.order() == 259);
  REQUIRE(check_lwf_wrapping(t, Ht, rt.wrap).valid);

  WordHost s{PresetId::parse("s"), with_images()};
  auto     Hs = make_subset(s, {"a"});
  auto     rs = build_lwf_wrapping(PresetId::parse("s"), Hs, 1);
  REQUIRE(rs.m == 3);
  REQUIRE(rs.ideal_bound == 3);
  REQUIRE(rs.wrap.table.order() == 5655);
  REQUIRE(rs.fallback == "aaa");
  REQUIRE(check_lwf_wrapping(s, Hs, rs.wrap).valid);
  auto bad = rs.wrap;
  for (auto& w : bad.d) {
    if (w == "a") {
      w = "c";
    }
  }
  REQUIRE_FALSE(check_lwf_wrapping(s, Hs, bad).valid);
}

TEST_CASE("wrapping preconditions") {
  WordHost t{PresetId::parse("t"), {}};
  auto     H = make_subset(t, {"xa"});
  REQUIRE_THROWS_AS(build_lwf_wrapping(PresetId::parse("t"), H, 1), Error);
  REQUIRE_THROWS_AS(build_lwf_wrapping(PresetId::parse("q"), make_subset(t, {"a"}), 1), Error);
  LwfOptions o;
  o.closed_form_bound = true;
  REQUIRE_THROWS_WITH(build_lwf_wrapping(PresetId::parse("t"), make_subset(t, {"a"}), 1, o),
                      Catch::Matchers::ContainsSubstring("too large"));
}
