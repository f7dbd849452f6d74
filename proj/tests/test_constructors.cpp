#include <catch_amalgamated.hpp>

#include <map>
#include <queue>
#include <random>
#include <set>

#include "lef/constructors.hpp"
#include "lef/error.hpp"
#include "lef/partial.hpp"

using namespace lef;

namespace {

  MulTable cyclic(std::size_t m) {
    std::vector<elem> d(m * m);
    for (std::size_t x = 0; x < m; ++x) {
      for (std::size_t y = 0; y < m; ++y) {
        d[x * m + y] = static_cast<elem>((x + y) % m);
      }
    }
    return MulTable(m, d);
  }

  // classes of words of length <= k under length-preserving relations
  std::size_t classes_by_bfs(Alphabet const& A, std::size_t k, Presentation const& p) {
    std::set<Word> seen;
    std::size_t    n = 0;
    for (auto const& w : A.words_up_to(k)) {
      if (seen.count(w)) {
        continue;
      }
      ++n;
      std::queue<Word> q;
      q.push(w);
      seen.insert(w);
      while (!q.empty()) {
        auto u = q.front();
        q.pop();
        for (auto const& [l, r] : p.relations) {
          for (auto [from, to] : {std::pair{l, r}, std::pair{r, l}}) {
            for (auto pos = u.find(from); pos != Word::npos; pos = u.find(from, pos + 1)) {
              auto v = u.substr(0, pos) + to + u.substr(pos + from.size());
              if (seen.insert(v).second) {
                q.push(v);
              }
            }
          }
        }
      }
    }
    return n;
  }

  // S_m normal forms with k non-e letters: 4^k choices, m run lengths per gap
  std::size_t sm_count(long m, std::size_t bound) {
    std::size_t total = 1;  // zero
    for (std::size_t k = 0; k <= bound; ++k) {
      std::size_t c = 1;
      for (std::size_t i = 0; i < k; ++i) {
        c *= 4;
      }
      for (std::size_t i = 0; i <= k; ++i) {
        c *= static_cast<std::size_t>(m);
      }
      total += c - (k == 0);
    }
    return total;
  }

}  // namespace

TEST_CASE("Rees matrix semigroups") {
  ReesSpec spec{cyclic(2), 2, 3, {{0, 1}, {1, 1}, {0, 0}}};
  auto     t = rees_matrix(spec);
  REQUIRE(t.order() == 12);
  REQUIRE(check_associative(t));
  REQUIRE(is_completely_simple(t));
  REQUIRE(idempotents(t).size() == 6);
  REQUIRE(rees_index(spec, 1, 1, 2) == (1 * 2 + 1) * 3 + 2);
  ReesSpec bad{cyclic(2), 2, 1, {{0}}};
  REQUIRE_THROWS_AS(rees_matrix(bad), Error);
}

TEST_CASE("strong semilattices of groups") {
  MulTable        chain(2, {0, 0, 0, 1});  // 0 < 1
  SemilatticeSpec spec{chain, {cyclic(1), cyclic(2)}, {{{1, 0}, {0, 0}}}};
  auto            t = semilattice_semigroup(spec);
  REQUIRE(t.order() == 3);
  REQUIRE(is_clifford(t));
  REQUIRE(semilattice_offsets(spec) == std::vector<std::size_t>{0, 1, 3});
  REQUIRE(semilattice_leq(chain, 0, 1));
  REQUIRE_FALSE(semilattice_leq(chain, 1, 0));
  SemilatticeSpec notahom{chain, {cyclic(2), cyclic(2)}, {{{1, 0}, {1, 1}}}};
  REQUIRE_THROWS_AS(validate_semilattice_spec(notahom), Error);
}

TEST_CASE("length-ideal quotient of the Malcev presentation") {
  auto p = preset_presentation(PresetId::parse("c"));
  for (std::size_t k : {1, 2, 3}) {
    auto q = quotient_by_length_ideal(p.generators, k, p.relations);
    REQUIRE(q.table.order() == classes_by_bfs(p.generators, k, p) + 1);
    REQUIRE(check_associative(q.table));
    REQUIRE(q.image("ax") == q.image("by"));
    if (k >= 2) {
      REQUIRE(q.image("cu") != q.image("dv"));
    }
    REQUIRE(q.image(Word(k + 1, 'a')) == q.zero);
  }
}

TEST_CASE("S_m quotients") {
  REQUIRE(sm_normal_form("eeeeax", 3) == "eeax");
  REQUIRE(sm_normal_form("eeeax", 3) == "eax");
  REQUIRE(sm_normal_form("aeeeee", 4) == "aee");
  std::vector<std::size_t> expect{39, 471, 5655};
  for (std::size_t b = 1; b <= 3; ++b) {
    REQUIRE(sm_count(3, b) == expect[b - 1]);
    auto q = sm_quotient(3, b);
    REQUIRE(q.table.order() == expect[b - 1]);
    if (b <= 2) {
      REQUIRE(check_associative(q.table));
    }
  }
  auto q = sm_quotient(3, 2);
  REQUIRE(q.image("eeea") == q.image("ea"));
  REQUIRE(q.image("axcb") == q.zero);
  REQUIRE(q.image("exex") != q.zero);
}

TEST_CASE("F_1 is finite and not J-trivial") {
  auto f = build_fn(1);
  REQUIRE(f.order_bound() == Catch::Approx(27.0L * 27.0L * 6.0L + 1.0L));
  auto q = f.enumerate();
  REQUIRE(q.table.order() == 1620);
  REQUIRE_FALSE(is_j_trivial(q.table));
  std::mt19937_64                   rng(11);
  std::uniform_int_distribution<elem> pick(0, 1619);
  for (int i = 0; i < 20000; ++i) {
    elem x = pick(rng), y = pick(rng), z = pick(rng);
    REQUIRE(q.table.at(q.table.at(x, y), z) == q.table.at(x, q.table.at(y, z)));
  }
  REQUIRE(f.is_zero(f.normal("xbxbxb")));
  REQUIRE(f.equal("xca", "xe"));
  REQUIRE(f.is_zero(f.normal("xax")));
  REQUIRE_FALSE(f.equal("a", "e"));
  REQUIRE_FALSE(f.equal("xa", "xe"));
  REQUIRE_THROWS_AS(build_fn(2).enumerate(), Error);
}

TEST_CASE("the bicyclic fragment") {
  auto pt = bicyclic4();
  REQUIRE(pt.size() == 4);
  REQUIRE_FALSE(partial_associativity_failure(pt));
  REQUIRE(bicyclic_normal_form("ab") == "");
  REQUIRE(bicyclic_normal_form("ba") == "ba");
  REQUIRE(bicyclic_normal_form("aabba") == "a");
  REQUIRE(bicyclic_normal_form("bbaab") == "bba");
  for (elem x = 0; x < 4; ++x) {
    for (elem y = 0; y < 4; ++y) {
      if (auto z = pt.product(x, y)) {
        auto lx = pt.label(x) == "1" ? Word{} : pt.label(x);
        auto ly = pt.label(y) == "1" ? Word{} : pt.label(y);
        auto lz = pt.label(*z) == "1" ? Word{} : pt.label(*z);
        REQUIRE(bicyclic_normal_form(lx + ly) == lz);
      }
    }
  }
}

TEST_CASE("presets") {
  REQUIRE(preset_presentation(PresetId::parse("q")).relations.size() == 6);
  REQUIRE(preset_presentation(PresetId::parse("t")).relations.size() == 6);
  REQUIRE(preset_presentation(PresetId::parse("s")).relations.size() == 6);
  REQUIRE_THROWS_AS(preset_presentation(PresetId::parse("fn:1")), Error);
  REQUIRE_THROWS_AS(preset_presentation(PresetId::parse("bicyclic4")), Error);
}
