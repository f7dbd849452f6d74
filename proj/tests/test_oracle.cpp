#include <catch_amalgamated.hpp>

#include <algorithm>

#include "lef/constructors.hpp"
#include "lef/error.hpp"
#include "lef/oracle.hpp"
#include "lef/search.hpp"
#include "lef/systems.hpp"

using namespace lef;

TEST_CASE("normal-form oracle") {
  auto r = word_equal_nf(PresetId::parse("q"), "xca", "xe");
  REQUIRE(r.status == Verdict::equal);
  REQUIRE(r.evidence == "normal-form");
  REQUIRE(word_equal_nf(PresetId::parse("q"), "xax", "xex").status == Verdict::distinct);
  REQUIRE(word_equal_nf(PresetId::parse("fn:5"), "a", "aaaaaaaaaaa").status == Verdict::equal);
  REQUIRE_THROWS_AS(word_equal_nf(PresetId::parse("t"), "a", "a"), Error);
}

TEST_CASE("BFS examples") {
  auto t = preset_presentation(PresetId::parse("t"));
  auto r = word_equal_bfs(t, "xcd", "xe");
  REQUIRE(r.status == Verdict::equal);
  REQUIRE(r.path.front() == "xcd");
  REQUIRE(r.path.back() == "xe");
  REQUIRE(replay_path(t, r.path));
  auto d = word_equal_bfs(PresetId::parse("t"), "xax", "xex");
  REQUIRE(d.status == Verdict::distinct);
  REQUIRE(d.evidence == "invariant");
  REQUIRE(d.detail == "diff_ad_minus_bc");
  auto s = word_equal_bfs(PresetId::parse("s"), "xaxb", "xex");
  REQUIRE(s.status == Verdict::equal);
  REQUIRE(s.path == std::vector<Word>{"xaxb", "xacx", "xcax", "xex"});
  REQUIRE_FALSE(invariant_separates(PresetId::parse("s"), "xaxb", "bxax"));
  REQUIRE(invariant_separates(PresetId::parse("q"), "xax", "xex"));
}

TEST_CASE("replay rejects broken paths") {
  auto s = preset_presentation(PresetId::parse("s"));
  REQUIRE(replay_path(s, {"xaxb", "xacx"}));
  REQUIRE_FALSE(replay_path(s, {"xaxb", "xex"}));
  REQUIRE_FALSE(replay_path(s, {}));
}

TEST_CASE("relation graph is symmetric") {
  for (auto name : {"q", "s", "t", "c"}) {
    auto p = preset_presentation(PresetId::parse(name));
    for (auto const& u : p.generators.words_up_to(3)) {
      bool tr = false;
      for (auto const& v : relation_neighbours(p, u, 8, tr)) {
        bool tr2 = false;
        auto back = relation_neighbours(p, v, 8, tr2);
        REQUIRE(std::find(back.begin(), back.end(), u) != back.end());
      }
    }
  }
}

TEST_CASE("conserved quantities are invariant under the relations") {
  for (auto name : {"q", "s", "t", "c"}) {
    auto id = PresetId::parse(name);
    auto p  = preset_presentation(id);
    for (auto const& u : p.generators.words_up_to(4)) {
      bool tr = false;
      auto cu = conserved_vector(u, id);
      for (auto const& v : relation_neighbours(p, u, 10, tr)) {
        REQUIRE(conserved_vector(v, id) == cu);
      }
    }
  }
}

TEST_CASE("closures") {
  auto q = preset_presentation(PresetId::parse("q"));
  auto c = closure(q, "xca", 4, 1000);
  REQUIRE(c.root == "xca");
  REQUIRE(c.words.front() == "xca");
  REQUIRE(std::find(c.words.begin(), c.words.end(), "xe") != c.words.end());
  REQUIRE(std::find(c.words.begin(), c.words.end(), "xac") != c.words.end());
  auto cs = closures(q, {"xca", "ab"}, 4, 1000, Execution::serial);
  REQUIRE(cs.size() == 2);
  REQUIRE(cs[0].words == c.words);
  REQUIRE(cs[1].complete);
}

TEST_CASE("S_m: BFS paths match normal forms") {
  auto id = PresetId::parse("sm:3");
  auto p  = preset_presentation(id);
  auto W  = Alphabet("aex").words_up_to(4);
  for (std::size_t i = 0; i < W.size(); ++i) {
    for (std::size_t j = i + 1; j < W.size(); ++j) {
      bool same = sm_normal_form(W[i], 3) == sm_normal_form(W[j], 3);
      auto r    = word_equal_bfs(p, W[i], W[j], {0, 20000, 0});
      if (same) {
        REQUIRE(r.status == Verdict::equal);
      } else {
        REQUIRE(r.status != Verdict::equal);
      }
    }
  }
}

TEST_CASE("image separation is sound") {
  auto q = preset_presentation(PresetId::parse("q"));
  REQUIRE(image_separates(q, "xax", "xex", 2));
  REQUIRE_FALSE(image_separates(q, "xca", "xe", 4));
  auto c = preset_presentation(PresetId::parse("c"));
  REQUIRE_FALSE(image_separates(c, "ax", "by", 3));
  // every homomorphism respects the relations
  std::string vars(q.generators.letters());
  for (auto const& t : enumerate_semigroups(3)) {
    for_each_relational_assignment(t, q.relations, {}, vars, [&](Assignment const& a) {
      REQUIRE(evaluate(t, vars, a.values, "xca") == evaluate(t, vars, a.values, "xe"));
    });
  }
  REQUIRE_THROWS_AS(image_separates(q, "a", "b", 6), Error);
}

TEST_CASE("preset BFS with images") {
  BfsBounds b;
  b.image_order = 3;
  auto r = word_equal_bfs(PresetId::parse("s"), "xaxb", "bxax", b);
  REQUIRE(r.status != Verdict::equal);
}

TEST_CASE("Q agreement on short words") {
  BfsBounds b;
  b.image_order = 4;
  auto r = q_oracle_agreement(4, b);
  REQUIRE(r.words == 780);
  REQUIRE(r.pairs == 303810);
  REQUIRE(r.contradictions == 0);
  REQUIRE(r.unknown == 0);
  REQUIRE(r.agree == r.pairs);
  REQUIRE(r.by_path == 778);
  auto s = q_oracle_agreement(3, b, Execution::serial);
  REQUIRE(s.agree == 11935);
  REQUIRE(s.unknown == 0);
}
