#include <catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <set>

#include "lef/approx.hpp"
#include "lef/constructors.hpp"
#include "lef/error.hpp"

using namespace lef;

namespace {

  long least_modulus(std::vector<long> const& xs) {
    for (long m = 1;; ++m) {
      std::set<long> r;
      for (long x : xs) {
        r.insert(((x % m) + m) % m);
      }
      if (r.size() == xs.size()) {
        return m;
      }
    }
  }

  std::vector<elem> closure_hh(MulTable const& t, std::vector<elem> const& h) {
    std::set<elem> s(h.begin(), h.end());
    for (auto x : h) {
      for (auto y : h) {
        s.insert(t.at(x, y));
      }
    }
    return {s.begin(), s.end()};
  }

}  // namespace

TEST_CASE("integers approximate into the least injective Z_m") {
  IntHost Z;
  for (auto xs : std::vector<std::vector<long>>{{3, 7, 12}, {0, 1, 2, 3}, {-5, 5}, {4}, {-10, 9, 1, 0}}) {
    auto H = make_subset(Z, xs);
    auto p = approx_integers(xs);
    REQUIRE(p.table.order() == static_cast<std::size_t>(least_modulus(xs)));
    REQUIRE(check_approximating_pair(Z, H, p).valid);
  }
  REQUIRE(least_modulus({3, 7, 12}) == 6);
  REQUIRE_THROWS_AS(make_subset(Z, {1, 1}), Error);
}

TEST_CASE("checker verdicts") {
  IntHost Z;
  auto    H = make_subset(Z, {1, 2, 3});
  auto    p = approx_integers({1, 2, 3});
  auto    q = p;
  q.f[1]    = q.f[0];
  REQUIRE(check_approximating_pair(Z, H, q).kind == "injectivity");
  q = p;
  q.f.pop_back();
  REQUIRE(check_approximating_pair(Z, H, q).kind == "totality");
  q       = p;
  q.table = cyclic_group(5);
  q.f     = {1, 2, 4};
  REQUIRE(check_approximating_pair(Z, H, q).kind == "product");
}

TEST_CASE("Rees approximation over Z") {
  ReesIntSpec spec{2, 2, {{0, 3}, {-2, 1}}};
  ReesHost    host{spec};
  std::vector<ReesElem> xs{{0, 1, 0}, {1, -2, 1}, {0, 4, 1}};
  auto        H = make_subset(host, xs);
  auto        r = approx_rees(spec, H);
  REQUIRE(check_approximating_pair(host, H, r.pair).valid);
  REQUIRE(is_completely_simple(r.pair.table));
  REQUIRE(r.pair.table.order() == r.finite_spec.i_size * r.modulus * r.finite_spec.lambda_size);
}

TEST_CASE("semilattice approximation and projection coherence") {
  std::mt19937_64 rng(3);
  for (int it = 0; it < 40; ++it) {
    auto                spec = random_semilattice_spec(rng);
    SemilatticeIntHost  host{spec};
    std::vector<SlElem> xs;
    std::set<SlElem>    seen;
    for (int k = 0; k < 4; ++k) {
      SlElem x{static_cast<elem>(rng() % spec.meet.order()), static_cast<long>(rng() % 21) - 10};
      if (seen.insert(x).second) {
        xs.push_back(x);
      }
    }
    auto H = make_subset(host, xs);
    auto a = approx_semilattice(spec, H);
    REQUIRE(check_approximating_pair(host, H, a.pair).valid);
    REQUIRE(is_clifford(a.pair.table));
    for (auto const& [key, psi] : a.projection) {
      auto [e1, e2] = key;
      if (e1 == e2) {
        for (elem g = 0; g < psi.size(); ++g) {
          REQUIRE(psi[g] == g);
        }
      }
      for (auto const& [key2, psi2] : a.projection) {
        if (key2.first == e2 && a.projection.count({e1, key2.second})) {
          auto const& direct = a.projection.at({e1, key2.second});
          for (elem g = 0; g < psi.size(); ++g) {
            REQUIRE(psi2[psi[g]] == direct[g]);
          }
        }
      }
    }
  }
}

TEST_CASE("length-ideal quotient approximates C") {
  auto       c = preset_presentation(PresetId::parse("c"));
  WordHost   host{PresetId::parse("c"), {}};
  auto       H = make_subset(host, {"a", "x", "ax", "cu", "dv", "u"});
  auto       q = approx_by_length_ideal(c, H);
  REQUIRE(check_approximating_pair(host, H, q.pair).valid);
  REQUIRE(q.pair.f[3] != q.pair.f[4]);
}

TEST_CASE("approximations of tables give wrappings of the same tables") {
  std::mt19937 rng(5);
  std::size_t  checked = 0;
  for (std::size_t k = 2; k <= 4; ++k) {
    for (auto const& t : enumerate_semigroups(k)) {
      TableHost         host{&t};
      std::vector<elem> h;
      for (elem x = 1; x < k; ++x) {
        if (rng() % 2) {
          h.push_back(x);
        }
      }
      if (h.empty()) {
        h.push_back(static_cast<elem>(k - 1));
      }
      auto hh = closure_hh(t, h);
      elem sink = 0;
      auto H  = make_subset(host, h);
      auto HH = make_subset(host, hh);
      for (auto const& F : {t, adjoin_zero(t)}) {
        ApproxPair p{F, hh};
        REQUIRE(check_approximating_pair(host, HH, p).valid);
        auto w = wrap_from_approx(t, H, HH, p, sink);
        REQUIRE(check_lwf_wrapping(host, H, w).valid);
        ++checked;
      }
    }
  }
  REQUIRE(checked > 100);
}

TEST_CASE("wrap checker verdicts") {
  auto      t = cyclic_group(3);
  TableHost host{&t};
  auto      H = make_subset(host, {1});
  WrapMap<elem> w{t, {0, 1, 2}};
  REQUIRE(check_lwf_wrapping(host, H, w).valid);
  w.d = {0, 0, 2};
  REQUIRE(check_lwf_wrapping(host, H, w).kind == "coverage");
  w.d = {0, 1, 0};
  REQUIRE(check_lwf_wrapping(host, H, w).kind == "wrap-product");
  w.d = {0, 1};
  REQUIRE(check_lwf_wrapping(host, H, w).kind == "totality");
  auto HH = make_subset(host, {1, 2});
  REQUIRE_THROWS_AS(wrap_from_approx(t, H, HH, ApproxPair{t, {1, 2}}, 1), Error);
}

TEST_CASE("random campaigns") {
  auto a = approx_campaign(30, 1);
  REQUIRE(a.instances == 30);
  REQUIRE(a.all_passed());
  REQUIRE(a.failures.empty());
  auto b = approx_campaign(30, 1, Execution::serial);
  REQUIRE(b.largest_table == a.largest_table);
  std::mt19937_64 rng(9);
  for (int i = 0; i < 100; ++i) {
    auto s = random_rees_spec(rng);
    REQUIRE(s.i_size >= 1);
    REQUIRE(s.i_size <= 3);
    REQUIRE(s.lambda_size <= 3);
    for (auto const& row : s.p) {
      for (long v : row) {
        REQUIRE(std::abs(v) <= 10);
      }
    }
    auto sl = random_semilattice_spec(rng);
    REQUIRE(is_semilattice(sl.meet));
    REQUIRE(sl.meet.order() <= 3);
  }
}

TEST_CASE("Rees instances are associative") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 60; ++i) {
    auto     spec = random_rees_spec(rng);
    ReesHost host{spec};
    std::vector<ReesElem> xs{{0, static_cast<long>(rng() % 5), 0}};
    if (spec.i_size > 1) {
      xs.push_back({1, -3, spec.lambda_size - 1});
    }
    auto H = make_subset(host, xs);
    auto r = approx_rees(spec, H);
    REQUIRE(check_associative(r.pair.table));
  }
}
