#include <catch_amalgamated.hpp>

#include <cstdlib>
#include <random>

#include "lef/appendix.hpp"
#include "lef/error.hpp"
#include "lef/pattern.hpp"
#include "lef/rewrite.hpp"
#include "lef/systems.hpp"

using namespace lef;

TEST_CASE("patterns instantiate") {
  std::vector<std::string> vars;
  auto p = parse_pattern("x^(alpha) a^(alpha + 1) e^(n - alpha)", vars);
  REQUIRE(vars.size() == 1);
  std::vector<long> v{2};
  REQUIRE(instantiate_pattern(p, v, 3) == "xxaaae");
  auto c = parse_constraints("alpha>=1; alpha<n", vars);
  REQUIRE(c.size() == 2);
  REQUIRE(c[0].holds(v, 3));
  REQUIRE_FALSE(c[1].holds(v, 2));
}

TEST_CASE("Q normal forms") {
  auto const& q = q_system();
  REQUIRE(normal_form(q, "xca") == "xe");
  REQUIRE(normal_form(q, "xe") == "xe");
  REQUIRE(normal_form(q, "xax") != normal_form(q, "xex"));
  REQUIRE(normal_form(q, "cx") == normal_form(q, "xb"));
  REQUIRE(normal_form(q, "aex") == normal_form(q, "ax"));
}

TEST_CASE("normal forms are irreducible, idempotent and shortlex-least on the trace") {
  auto const& A = acebx();
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> letter(0, 4), len(1, 9);
  for (RewriteSystem const* sys : {&q_system()}) {
    for (int it = 0; it < 400; ++it) {
      Word w;
      for (int k = len(rng); k > 0; --k) {
        w += A.letters()[letter(rng)];
      }
      auto nf = normal_form(*sys, w);
      REQUIRE(is_irreducible(*sys, nf));
      REQUIRE(normal_form(*sys, nf) == nf);
      auto trace = reduction_trace(*sys, w);
      Word cur   = w;
      for (auto const& s : trace) {
        REQUIRE(s.before == cur);
        REQUIRE(A.shortlex_less(s.after, s.before));
        cur = s.after;
      }
      REQUIRE(cur == nf);
    }
  }
}

TEST_CASE("reduce_once picks the leftmost redex") {
  for (auto w : {"xcaxca", "aexcab", "ecaxb"}) {
    auto s  = reduce_once(q_system(), w);
    auto rs = redexes(q_system(), w);
    REQUIRE(s);
    for (auto const& r : rs) {
      REQUIRE(s->redex.position <= r.position);
    }
  }
  REQUIRE_FALSE(reduce_once(q_system(), "xe"));
}

TEST_CASE("step limit") {
  RewriteOptions o;
  o.step_limit = 1;
  REQUIRE_THROWS_AS(normal_form(q_system(), "xcaxcaxca", o), StepLimitExceeded);
  ::setenv("LEF_STEP_LIMIT", "17", 1);
  REQUIRE(default_rewrite_options().step_limit == 17);
  ::unsetenv("LEF_STEP_LIMIT");
  REQUIRE(default_rewrite_options().step_limit == 100000);
}

TEST_CASE("instantiate checks conditions") {
  auto const& q = q_system();
  for (std::size_t s = 0; s < q.schemas().size(); ++s) {
    if (!q.schemas()[s].conditions.empty()) {
      std::vector<long> bad(q.schemas()[s].variables.size(), -1);
      REQUIRE_THROWS_AS(instantiate(q, s, bad), Error);
      break;
    }
  }
}

TEST_CASE("termination: shortlex holds, plain lex does not") {
  for (auto const& sys : {q_system(), fn_system(1), fn_system(2), sm_system(3)}) {
    auto r = check_termination_order(sys, 4);
    REQUIRE(r.instances > 0);
    REQUIRE(r.shortlex_holds());
  }
  auto r = check_termination_order(q_system(), 4);
  REQUIRE(r.instances == 211);
  REQUIRE_FALSE(r.lex_holds());
}

TEST_CASE("local confluence at bounded exponents") {
  auto q = check_local_confluence(q_system(), 3);
  REQUIRE(q.rules.size() == 102);
  REQUIRE(q.pairs.size() == 5986);
  REQUIRE(q.locally_confluent());
  auto f1 = check_local_confluence(fn_system(1), 3, Execution::serial);
  REQUIRE(f1.pairs.size() == 1594);
  REQUIRE(f1.locally_confluent());
  auto f2 = check_local_confluence(fn_system(2), 3);
  REQUIRE(f2.pairs.size() == 9054);
  REQUIRE(f2.locally_confluent());
}

TEST_CASE("serial and parallel confluence agree") {
  auto a = check_local_confluence(q_system(), 2, Execution::serial);
  auto b = check_local_confluence(q_system(), 2, Execution::parallel);
  REQUIRE(a.left_nf == b.left_nf);
  REQUIRE(a.right_nf == b.right_nf);
}

TEST_CASE("critical pairs of a toy system") {
  std::vector<ConcreteRule> rules{{"ab", "b", 0, {}}, {"ba", "a", 1, {}}};
  auto cps = critical_pairs(rules);
  REQUIRE(cps.size() == 2);
  for (auto const& cp : cps) {
    REQUIRE(cp.joint.size() == 3);
  }
}

TEST_CASE("tabulated joins") {
  REQUIRE(appendix_rows(AppendixTable::a).size() == 26);
  REQUIRE(appendix_rows(AppendixTable::b).size() == 62);
  auto a = verify_appendix(AppendixTable::a, 3);
  REQUIRE(a.instantiable_rows() == 26);
  REQUIRE(a.all_confirmed());
  auto b1 = verify_appendix(AppendixTable::b, 4, 1);
  REQUIRE(b1.instantiable_rows() == 48);
  REQUIRE(b1.all_confirmed());
  auto b2 = verify_appendix(AppendixTable::b, 4, 2, Execution::serial);
  REQUIRE(b2.instantiable_rows() == 60);
  REQUIRE(b2.all_confirmed());
}

TEST_CASE("corrected rows keep the original entry") {
  std::size_t n = 0;
  for (auto w : {AppendixTable::a, AppendixTable::b}) {
    for (auto const& r : appendix_rows(w)) {
      n += !r.erratum.empty();
    }
  }
  REQUIRE(n == 3);
}
