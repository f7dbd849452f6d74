#include <catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <set>

#include "lef/error.hpp"
#include "lef/fsg.hpp"

using namespace lef;

namespace {

  MulTable relabel(MulTable const& t, std::vector<elem> const& p) {
    std::size_t       n = t.order();
    std::vector<elem> d(n * n);
    for (elem x = 0; x < n; ++x) {
      for (elem y = 0; y < n; ++y) {
        d[p[x] * n + p[y]] = p[t.at(x, y)];
      }
    }
    return MulTable(n, d);
  }

  std::vector<elem> naive_min_form(MulTable const& t) {
    std::vector<elem> p(t.order());
    std::iota(p.begin(), p.end(), 0);
    std::vector<elem> best;
    do {
      auto d = relabel(t, p).data();
      if (best.empty() || d < best) {
        best = d;
      }
    } while (std::next_permutation(p.begin(), p.end()));
    return best;
  }

  std::size_t automorphisms(MulTable const& t) {
    std::vector<elem> p(t.order());
    std::iota(p.begin(), p.end(), 0);
    std::size_t a = 0;
    do {
      a += relabel(t, p).data() == t.data();
    } while (std::next_permutation(p.begin(), p.end()));
    return a;
  }

  bool brute_assoc(std::vector<elem> const& d, std::size_t n) {
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        for (std::size_t z = 0; z < n; ++z) {
          if (d[d[x * n + y] * n + z] != d[x * n + d[y * n + z]]) {
            return false;
          }
        }
      }
    }
    return true;
  }

  // x <=_J y iff x = s y t for some s, t in S^1; n stands for the identity
  bool naive_leq_j(MulTable const& t, elem x, elem y) {
    std::size_t n = t.order();
    auto mul = [&](std::size_t a, std::size_t b) -> std::size_t {
      if (a == n) {
        return b;
      }
      if (b == n) {
        return a;
      }
      return t.at(a, b);
    };
    for (std::size_t s = 0; s <= n; ++s) {
      for (std::size_t u = 0; u <= n; ++u) {
        if (mul(mul(s, y), u) == x) {
          return true;
        }
      }
    }
    return false;
  }

  bool naive_leq_l(MulTable const& t, elem x, elem y) {
    if (x == y) {
      return true;
    }
    for (elem s = 0; s < t.order(); ++s) {
      if (t.at(s, y) == x) {
        return true;
      }
    }
    return false;
  }

  bool naive_leq_r(MulTable const& t, elem x, elem y) {
    if (x == y) {
      return true;
    }
    for (elem s = 0; s < t.order(); ++s) {
      if (t.at(y, s) == x) {
        return true;
      }
    }
    return false;
  }

}  // namespace

TEST_CASE("tables reject bad data") {
  REQUIRE_THROWS_AS(MulTable(2, {0, 1, 2, 0}), Error);
  REQUIRE_THROWS_AS(MulTable(2, {0, 1, 1}), Error);
  MulTable right_zero(2, {0, 1, 0, 1});
  REQUIRE(check_associative(right_zero));
  MulTable bad(2, {1, 0, 0, 0});
  REQUIRE(associativity_failure(bad).has_value());
}

TEST_CASE("brute force over all order-3 tables") {
  std::size_t       labelled = 0;
  std::set<std::vector<elem>> classes, jt;
  std::vector<elem> d(9, 0);
  for (int code = 0; code < 19683; ++code) {
    int c = code;
    for (auto& v : d) {
      v = static_cast<elem>(c % 3);
      c /= 3;
    }
    if (!brute_assoc(d, 3)) {
      continue;
    }
    ++labelled;
    MulTable t(3, d);
    auto     m = naive_min_form(t);
    classes.insert(m);
    if (is_j_trivial(t)) {
      jt.insert(m);
    }
  }
  REQUIRE(labelled == 113);
  REQUIRE(count_labelled_semigroups(3) == labelled);
  REQUIRE(enumerate_semigroups(3).size() == classes.size());
  REQUIRE(classes.size() == 24);
  REQUIRE(enumerate_semigroups(3, ClassFilter::j_trivial).size() == jt.size());
  REQUIRE(jt.size() == 9);
}

TEST_CASE("enumeration counts") {
  std::vector<std::size_t> any{1, 5, 24, 188, 1915};
  std::vector<std::size_t> labelled{1, 8, 113, 3492, 183732};
  for (std::size_t k = 1; k <= 5; ++k) {
    auto reps = enumerate_semigroups(k);
    REQUIRE(reps.size() == any[k - 1]);
    // orbit-stabiliser: the labelled tables are the orbits of the reps
    std::size_t fact = 1, total = 0;
    for (std::size_t i = 2; i <= k; ++i) {
      fact *= i;
    }
    for (auto const& t : reps) {
      REQUIRE(check_associative(t));
      total += fact / automorphisms(t);
    }
    REQUIRE(total == labelled[k - 1]);
    if (k <= 4) {
      REQUIRE(count_labelled_semigroups(k) == labelled[k - 1]);
    }
  }
}

TEST_CASE("representatives are canonical and distinct") {
  auto reps = enumerate_semigroups(4);
  std::set<std::vector<elem>> seen;
  for (auto const& t : reps) {
    REQUIRE(canonical_form(t) == t);
    REQUIRE(seen.insert(naive_min_form(t)).second);
  }
  std::vector<elem> p{2, 0, 3, 1};
  for (auto const& t : reps) {
    REQUIRE(canonical_form(permute(t, p)) == t);
  }
}

TEST_CASE("class filters") {
  std::vector<std::size_t> groups{1, 1, 1, 2, 1, 2, 1, 5};
  for (std::size_t k = 1; k <= 8; ++k) {
    REQUIRE(enumerate_semigroups(k, ClassFilter::group).size() == groups[k - 1]);
  }
  std::vector<std::size_t> jt{1, 2, 9, 60};
  for (std::size_t k = 1; k <= 4; ++k) {
    auto all = enumerate_semigroups(k);
    auto n   = std::count_if(all.begin(), all.end(), [](auto const& t) { return is_j_trivial(t); });
    REQUIRE(static_cast<std::size_t>(n) == jt[k - 1]);
    REQUIRE(enumerate_semigroups(k, ClassFilter::j_trivial).size() == jt[k - 1]);
  }
  REQUIRE(enumerate_semigroups(5, ClassFilter::j_trivial).size() == 593);
  REQUIRE(parse_class_filter("j-trivial") == ClassFilter::j_trivial);
  REQUIRE_THROWS_AS(parse_class_filter("monoid"), Error);
  REQUIRE_THROWS_AS(enumerate_semigroups(6), Error);
}

TEST_CASE("serial and parallel enumeration agree") {
  REQUIRE(enumerate_semigroups(4, ClassFilter::any, Execution::serial)
          == enumerate_semigroups(4, ClassFilter::any, Execution::parallel));
}

TEST_CASE("Green's relations against a naive oracle") {
  for (std::size_t k = 1; k <= 3; ++k) {
    for (auto const& t : enumerate_semigroups(k)) {
      auto g = green(t);
      for (elem x = 0; x < k; ++x) {
        for (elem y = 0; y < k; ++y) {
          REQUIRE(g.leq_j(x, y) == naive_leq_j(t, x, y));
          REQUIRE(g.leq_l(x, y) == naive_leq_l(t, x, y));
          REQUIRE(g.leq_r(x, y) == naive_leq_r(t, x, y));
          bool l = naive_leq_l(t, x, y) && naive_leq_l(t, y, x);
          bool r = naive_leq_r(t, x, y) && naive_leq_r(t, y, x);
          REQUIRE((g.l.class_of[x] == g.l.class_of[y]) == l);
          REQUIRE((g.r.class_of[x] == g.r.class_of[y]) == r);
          REQUIRE((g.h.class_of[x] == g.h.class_of[y]) == (l && r));
        }
      }
    }
  }
}

TEST_CASE("D = J on finite tables; classes partition") {
  for (auto const& t : enumerate_semigroups(4)) {
    auto g = green(t);
    REQUIRE(g.d.class_of == g.j.class_of);
    std::size_t n = 0;
    for (auto const& c : g.h.classes) {
      n += c.size();
    }
    REQUIRE(n == t.order());
  }
}

TEST_CASE("structural predicates") {
  auto z3 = enumerate_semigroups(3, ClassFilter::group).front();
  REQUIRE(is_group(z3));
  REQUIRE(is_clifford(z3));
  REQUIRE(is_completely_simple(z3));
  REQUIRE(identity_element(z3).has_value());
  REQUIRE_FALSE(zero_element(z3).has_value());
  auto z1 = adjoin_zero(z3);
  REQUIRE(z1.order() == 4);
  REQUIRE(zero_element(z1).has_value());
  REQUIRE(is_clifford(z1));
  REQUIRE_FALSE(is_group(z1));
  auto m = adjoin_identity(MulTable(2, {0, 0, 0, 0}));
  REQUIRE(m.order() == 3);
  REQUIRE(identity_element(m).has_value());
  REQUIRE(is_semilattice(MulTable(2, {0, 0, 0, 1})));
  MulTable left_zero(2, {0, 0, 1, 1});
  REQUIRE(is_completely_simple(left_zero));
  REQUIRE_FALSE(is_commutative(left_zero));
  REQUIRE(is_r_trivial(left_zero) != is_l_trivial(left_zero));
  auto p = direct_product(z3, left_zero);
  REQUIRE(p.order() == 6);
  REQUIRE(check_associative(p));
  REQUIRE(is_completely_simple(p));
  auto ip = idempotent_power(z3, 1);
  REQUIRE(ip.value == *identity_element(z3));
}

TEST_CASE("generated subsemigroups") {
  auto z4 = enumerate_semigroups(4, ClassFilter::group);
  for (auto const& g : z4) {
    for (elem x = 0; x < 4; ++x) {
      std::vector<elem> seed{x};
      auto              s = generate_subsemigroup(g, seed);
      REQUIRE(is_group(s.table));
      REQUIRE(4 % s.table.order() == 0);
    }
  }
}

TEST_CASE("egg-box diagrams") {
  auto g = enumerate_semigroups(2, ClassFilter::group).front();
  auto e = egg_box(adjoin_zero(g));
  REQUIRE_FALSE(e.empty());
  REQUIRE(e.find('|') != std::string::npos);
}
