#include <catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>

#include "lef/io.hpp"
#include "lef/systems.hpp"

using namespace lef;

namespace {

  std::string where_of(auto&& f) {
    try {
      f();
    } catch (SchemaError const& e) {
      return e.where();
    }
    return "(no error)";
  }

}  // namespace

TEST_CASE("tables round-trip") {
  for (auto const& t : enumerate_semigroups(3)) {
    auto j = to_json(t);
    REQUIRE(table_from_json(j) == t);
    REQUIRE(table_from_json(parse_json(j.dump())) == t);
  }
  MulTable t(2, {0, 1, 1, 0}, {"e", "g"});
  auto     j = to_json(t);
  REQUIRE(j["labels"][1] == "g");
  REQUIRE(table_from_json(j).label(1) == "g");
}

TEST_CASE("table errors carry a pointer") {
  auto j = parse_json(R"({"order": 3, "table": [[0,1,2],[1,2,7],[2,0,1]]})");
  REQUIRE(where_of([&] { table_from_json(j); }) == "/table/1/2");
  REQUIRE_THROWS_WITH(table_from_json(j),
                      Catch::Matchers::ContainsSubstring("entry 7 is out of range for order 3"));
  REQUIRE(where_of([&] { table_from_json(parse_json(R"({"table": []})")); }) == "/order");
  REQUIRE(where_of([&] { table_from_json(parse_json(R"({"order": 2, "table": [[0,0]]})")); }) == "/table");
  REQUIRE(where_of([&] { table_from_json(parse_json(R"({"order": 2, "labels": ["a"], "table": [[0,0],[0,0]]})")); })
          == "/labels");
  REQUIRE_THROWS_WITH(parse_json("{\"order\": 2,"), Catch::Matchers::ContainsSubstring("byte"));
}

TEST_CASE("presentations round-trip") {
  for (auto name : {"q", "s", "t", "c", "sm:3"}) {
    auto p = preset_presentation(PresetId::parse(name));
    auto r = presentation_from_json(to_json(p));
    REQUIRE(r.name == p.name);
    REQUIRE(r.generators == p.generators);
    REQUIRE(r.relations == p.relations);
  }
  auto bad = parse_json(R"({"name": "z", "generators": ["a"], "relations": [["a", "ab"]]})");
  REQUIRE(where_of([&] { presentation_from_json(bad); }) == "/relations/0/1");
}

TEST_CASE("partial tables round-trip") {
  auto pt = bicyclic4();
  auto j  = to_json(pt);
  REQUIRE(partial_from_json(j) == pt);
  auto bad = parse_json(R"({"elements": ["p", "q"], "products": {"p,r": "q"}})");
  REQUIRE(where_of([&] { partial_from_json(bad); }) == "/products/p,r");
}

TEST_CASE("rewriting systems round-trip") {
  for (auto const& sys : {q_system(), fn_system(2), sm_system(3)}) {
    auto r = system_from_json(to_json(sys));
    REQUIRE(r.name() == sys.name());
    REQUIRE(r.alphabet() == sys.alphabet());
    REQUIRE(r.parameter_n() == sys.parameter_n());
    REQUIRE(r.schemas().size() == sys.schemas().size());
    for (auto const& w : acebx().words_up_to(4)) {
      REQUIRE(normal_form(r, w) == normal_form(sys, w));
    }
  }
}

TEST_CASE("word pair and wrap files") {
  WordPairFile p{"free", {"a", "ab"}, approx_integers({1, 2})};
  auto         j  = to_json(p);
  auto         p2 = word_pair_from_json(j);
  REQUIRE(p2.host == "free");
  REQUIRE(p2.elements == p.elements);
  REQUIRE(p2.pair.f == p.pair.f);

  WordWrapFile w{"t", {"a"}, {cyclic_group(2), {"a", "aa"}}};
  auto         w2 = word_wrap_from_json(to_json(w));
  REQUIRE(w2.subset == w.subset);
  REQUIRE(w2.wrap.d == w.wrap.d);
  REQUIRE(w2.wrap.table == w.wrap.table);
  auto j2 = to_json(w);
  j2["map"].erase(j2["map"].begin());
  REQUIRE_THROWS_AS(word_wrap_from_json(j2), SchemaError);
}

TEST_CASE("files") {
  auto path = (std::filesystem::temp_directory_path() / "lef_io_test.json").string();
  write_json_file(path, to_json(bicyclic4()));
  REQUIRE(partial_from_json(read_json_file(path)) == bicyclic4());
  std::remove(path.c_str());
  REQUIRE_THROWS_AS(read_json_file(path), Error);
}

TEST_CASE("hosts") {
  REQUIRE_FALSE(word_host("free").preset);
  REQUIRE(word_host("t").preset == PresetId::parse("t"));
  REQUIRE(word_host("free").equal("ab", "ab"));
  REQUIRE(word_host("t").equal("xcd", "xe"));
}
