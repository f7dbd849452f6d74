#include <catch_amalgamated.hpp>

#include <set>

#include "lef/error.hpp"
#include "lef/systems.hpp"
#include "lef/words.hpp"

using namespace lef;

namespace {

  // x's plus b-runs that do not follow an x
  std::size_t blocks_by_scan(std::string const& w) {
    std::size_t n = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i] == 'x') {
        ++n;
      } else if (w[i] == 'b' && (i == 0 || (w[i - 1] != 'b' && w[i - 1] != 'x'))) {
        ++n;
      }
    }
    return n;
  }

}  // namespace

TEST_CASE("acebx order") {
  auto const& A = acebx();
  REQUIRE(A.letters() == "acebx");
  REQUIRE(A.shortlex_less("x", "aa"));
  REQUIRE(A.shortlex_less("ab", "ax"));
  REQUIRE(A.shortlex_less("ce", "ca") == false);
  REQUIRE(A.lex_less("aa", "x"));
  REQUIRE(A.lex_less("b", "e") == false);
  REQUIRE(A.rank('e') < A.rank('b'));
}

TEST_CASE("words_up_to is shortlex and complete") {
  auto const& A = acebx();
  auto        W = A.words_up_to(4);
  REQUIRE(W.size() == 5 + 25 + 125 + 625);
  for (std::size_t i = 1; i < W.size(); ++i) {
    REQUIRE(A.shortlex_less(W[i - 1], W[i]));
  }
  REQUIRE(A.words_of_length(3).size() == 125);
  REQUIRE(A.words_up_to(5).size() == 3905);
}

TEST_CASE("validate names the foreign letter") {
  auto const& A = acebx();
  REQUIRE(A.is_word("xacb"));
  REQUIRE_FALSE(A.is_word("xyz"));
  REQUIRE_THROWS_WITH(A.validate("axd"), Catch::Matchers::ContainsSubstring("d"));
}

TEST_CASE("expand_word") {
  REQUIRE(expand_word("x a^2 (cb)^2") == "xaacbcb");
  REQUIRE(expand_word("e^0 x") == "x");
  REQUIRE(expand_word("(a(ce)^2)^2") == "aceceacece");
  REQUIRE(power("ab", 3) == "ababab");
  REQUIRE_THROWS_AS(expand_word("(ab"), Error);
}

TEST_CASE("block count against a scan") {
  for (auto const& w : acebx().words_up_to(5)) {
    REQUIRE(block_count_s(w) == blocks_by_scan(w));
  }
  REQUIRE(block_count_s("xbbaxcbb") == 3);
  REQUIRE(e_reduced_length("eaex") == 2);
}

TEST_CASE("letter counts") {
  auto c = letter_counts("xaxb", acebx());
  REQUIRE(c.size() == 5);
  REQUIRE(c['x'] == 2);
  REQUIRE(c['e'] == 0);
  REQUIRE(letter_counts("aab").size() == 2);
}

TEST_CASE("preset ids") {
  REQUIRE(PresetId::parse("T").kind == PresetKind::t);
  auto sm = PresetId::parse("sm:4");
  REQUIRE(sm.kind == PresetKind::sm);
  REQUIRE(sm.parameter == 4);
  REQUIRE(PresetId::parse("fn:2").name() == "fn:2");
  REQUIRE_THROWS_AS(PresetId::parse("z"), Error);
  REQUIRE_THROWS_AS(PresetId::parse("fn:0"), Error);
  REQUIRE(has_conserved_registry(PresetId::parse("q")));
  REQUIRE_FALSE(has_conserved_registry(PresetId::parse("fn:1")));
}

TEST_CASE("conserved vectors") {
  auto q  = PresetId::parse("q");
  auto t  = PresetId::parse("t");
  auto s  = PresetId::parse("s");
  REQUIRE(conserved_vector("xax", q).first_difference(conserved_vector("xex", q)).has_value());
  REQUIRE_FALSE(conserved_vector("xaxb", s).first_difference(conserved_vector("bxax", s)));
  REQUIRE(conserved_vector("xax", t).first_difference(conserved_vector("xex", t))
          == std::optional<std::string>("diff_ad_minus_bc"));
  REQUIRE_THROWS_AS(conserved_vector("a", PresetId::parse("sm:3")), Error);
  std::set<ConservedVector> seen;
  for (auto const& w : acebx().words_up_to(2)) {
    seen.insert(conserved_vector(w, q));
  }
  REQUIRE(seen.size() > 1);
}
