#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "lef/constructors.hpp"
#include "lef/error.hpp"
#include "lef/execution.hpp"
#include "lef/fsg.hpp"
#include "lef/oracle.hpp"
#include "lef/words.hpp"

namespace lef {

  ////////////////////////////////////////////////////////////////////////
  // Hosts: element universes with equality and product
  ////////////////////////////////////////////////////////////////////////

  struct TableHost {
    using value_type = elem;
    MulTable const* table;

    bool equal(elem x, elem y) const {
      return x == y;
    }
    elem multiply(elem x, elem y) const {
      return table->at(x, y);
    }
    std::string show(elem x) const {
      return table->label(x);
    }
  };

  //! Words modulo a word-problem oracle; the free semigroup when `preset`
  //! is empty.
  struct WordHost {
    using value_type = Word;
    std::optional<PresetId> preset;
    BfsBounds               bounds;

    bool        equal(Word const& u, Word const& v) const;
    Word        multiply(Word const& u, Word const& v) const {
      return u + v;
    }
    std::string show(Word const& w) const {
      return w;
    }
  };

  //! The additive integers.
  struct IntHost {
    using value_type = long;
    bool equal(long x, long y) const {
      return x == y;
    }
    long multiply(long x, long y) const {
      return x + y;
    }
    std::string show(long x) const {
      return std::to_string(x);
    }
  };

  //! M(Z; I, Lambda; P) with integer sandwich entries p[lambda][i].
  struct ReesIntSpec {
    std::size_t                    i_size      = 1;
    std::size_t                    lambda_size = 1;
    std::vector<std::vector<long>> p;
  };

  struct ReesElem {
    std::size_t i;
    long        g;
    std::size_t lambda;
    auto        operator<=>(ReesElem const&) const = default;
  };

  struct ReesHost {
    using value_type = ReesElem;
    ReesIntSpec spec;

    bool equal(ReesElem const& x, ReesElem const& y) const {
      return x == y;
    }
    ReesElem    multiply(ReesElem const& x, ReesElem const& y) const {
      return {x.i, x.g + spec.p.at(x.lambda).at(y.i) + y.g, y.lambda};
    }
    std::string show(ReesElem const& x) const {
      return "(" + std::to_string(x.i) + "," + std::to_string(x.g) + "," + std::to_string(x.lambda)
             + ")";
    }
  };

  //! A semilattice of copies of Z; the map from component e1 down to e2 is
  //! multiplication by `mult[{e1, e2}]` (1 on the diagonal).
  struct SemilatticeIntSpec {
    MulTable                                meet;
    std::map<std::pair<elem, elem>, long> mult;

    long multiplier(elem e1, elem e2) const;
  };

  void validate_semilattice_int_spec(SemilatticeIntSpec const& spec);

  struct SlElem {
    elem e;
    long value;
    auto operator<=>(SlElem const&) const = default;
  };

  struct SemilatticeIntHost {
    using value_type = SlElem;
    SemilatticeIntSpec spec;

    bool equal(SlElem const& x, SlElem const& y) const {
      return x == y;
    }
    SlElem      multiply(SlElem const& x, SlElem const& y) const {
      elem m = spec.meet.at(x.e, y.e);
      return {m, spec.multiplier(x.e, m) * x.value + spec.multiplier(y.e, m) * y.value};
    }
    std::string show(SlElem const& x) const {
      return "[" + spec.meet.label(x.e) + ":" + std::to_string(x.value) + "]";
    }
  };

  ////////////////////////////////////////////////////////////////////////
  // Witnesses
  ////////////////////////////////////////////////////////////////////////

  //! Triples index into `elements`: elements[k] = elements[i] * elements[j].
  template <typename T>
  struct FiniteSubset {
    std::vector<T>                                               elements;
    std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> products;
  };

  //! All products inside the subset. Throws if two elements are equal.
  template <typename Host>
  FiniteSubset<typename Host::value_type> make_subset(Host const&                                  host,
                                                      std::vector<typename Host::value_type> const& xs) {
    FiniteSubset<typename Host::value_type> H{xs, {}};
    for (std::size_t i = 0; i < xs.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (host.equal(xs[i], xs[j])) {
          throw Error("subset elements " + host.show(xs[j]) + " and " + host.show(xs[i])
                      + " are equal");
        }
      }
    }
    for (std::size_t i = 0; i < xs.size(); ++i) {
      for (std::size_t j = 0; j < xs.size(); ++j) {
        auto p = host.multiply(xs[i], xs[j]);
        for (std::size_t k = 0; k < xs.size(); ++k) {
          if (host.equal(p, xs[k])) {
            H.products.emplace_back(i, j, k);
            break;
          }
        }
      }
    }
    return H;
  }

  //! f[k] is the image of subset element k.
  struct ApproxPair {
    MulTable          table;
    std::vector<elem> f;
  };

  //! d[x] is the host element of table element x.
  template <typename T>
  struct WrapMap {
    MulTable       table;
    std::vector<T> d;
  };

  struct WitnessVerdict {
    bool        valid = true;
    std::string kind  = "valid";  // valid, totality, injectivity, product, coverage, wrap-product
    std::string message;
  };

  template <typename T>
  WitnessVerdict check_approximating_pair(FiniteSubset<T> const& H,
                                          ApproxPair const&      pair,
                                          auto&&                 show) {
    auto const& F = pair.table;
    if (pair.f.size() != H.elements.size()) {
      return {false, "totality", "map has " + std::to_string(pair.f.size()) + " images for "
                                     + std::to_string(H.elements.size()) + " elements"};
    }
    for (std::size_t i = 0; i < pair.f.size(); ++i) {
      if (pair.f[i] >= F.order()) {
        return {false, "totality", "image of " + show(H.elements[i]) + " is out of range"};
      }
      for (std::size_t j = 0; j < i; ++j) {
        if (pair.f[i] == pair.f[j]) {
          return {false, "injectivity", show(H.elements[j]) + " and " + show(H.elements[i])
                                            + " both map to " + F.label(pair.f[i])};
        }
      }
    }
    for (auto [i, j, k] : H.products) {
      if (F.at(pair.f[i], pair.f[j]) != pair.f[k]) {
        return {false, "product", "f(" + show(H.elements[i]) + ") f(" + show(H.elements[j])
                                      + ") != f(" + show(H.elements[k]) + ")"};
      }
    }
    return {};
  }

  template <typename Host>
  WitnessVerdict check_approximating_pair(Host const&                                     host,
                                          FiniteSubset<typename Host::value_type> const& H,
                                          ApproxPair const&                               pair) {
    return check_approximating_pair(H, pair, [&](auto const& x) { return host.show(x); });
  }

  template <typename Host>
  WitnessVerdict check_lwf_wrapping(Host const&                                             host,
                                    FiniteSubset<typename Host::value_type> const&         H,
                                    WrapMap<typename Host::value_type> const&              wrap) {
    auto const& D = wrap.table;
    if (wrap.d.size() != D.order()) {
      return {false, "totality", "wrap map has " + std::to_string(wrap.d.size()) + " values for "
                                     + std::to_string(D.order()) + " elements"};
    }
    // in_h[x] = index in H of d(x), if any
    std::vector<std::optional<std::size_t>> in_h(D.order());
    std::vector<bool>                       covered(H.elements.size(), false);
    for (elem x = 0; x < D.order(); ++x) {
      for (std::size_t k = 0; k < H.elements.size(); ++k) {
        if (host.equal(wrap.d[x], H.elements[k])) {
          in_h[x]    = k;
          covered[k] = true;
          break;
        }
      }
    }
    for (std::size_t k = 0; k < H.elements.size(); ++k) {
      if (!covered[k]) {
        return {false, "coverage", host.show(H.elements[k]) + " is not in the image"};
      }
    }
    for (elem x = 0; x < D.order(); ++x) {
      if (!in_h[x]) {
        continue;
      }
      for (elem y = 0; y < D.order(); ++y) {
        if (!in_h[y]) {
          continue;
        }
        auto lhs = wrap.d[D.at(x, y)];
        auto rhs = host.multiply(wrap.d[x], wrap.d[y]);
        if (!host.equal(lhs, rhs)) {
          return {false, "wrap-product", "d(" + D.label(x) + " " + D.label(y) + ") = "
                                             + host.show(lhs) + " but d(" + D.label(x) + ") d("
                                             + D.label(y) + ") = " + host.show(rhs)};
        }
      }
    }
    return {};
  }

  ////////////////////////////////////////////////////////////////////////
  // Constructions
  ////////////////////////////////////////////////////////////////////////

  //! Z_m with the least m that is injective on xs; f(x) = x mod m.
  ApproxPair approx_integers(std::vector<long> const& xs);
  MulTable   cyclic_group(std::size_t m);

  //! The Rees lemma over Z: index sets cut to those used by Hp, Z
  //! approximated on X u Y u (X u Y)^2 u (X u Y)^3.
  struct ReesApprox {
    ApproxPair  pair;
    std::size_t modulus = 0;
    ReesSpec    finite_spec;
  };
  ReesApprox approx_rees(ReesIntSpec const& spec, FiniteSubset<ReesElem> const& Hp);

  //! The semilattice lemma over Z components. `projection[{e, e2}]` maps
  //! F_e onto F_{e2} for e2 <= e in E'.
  struct SemilatticeApprox {
    ApproxPair                                           pair;
    std::vector<elem>                                    support;  // E' as indices of E
    SemilatticeSpec                                      finite_spec;
    std::map<std::pair<elem, elem>, std::vector<elem>> projection;
  };
  SemilatticeApprox approx_semilattice(SemilatticeIntSpec const& spec, FiniteSubset<SlElem> const& H);

  //! (C/I, pi) for a presentation with length-preserving relations; I is
  //! the ideal of words longer than the longest element of H.
  struct QuotientApprox {
    ApproxPair   pair;
    WordQuotient quotient;
  };
  QuotientApprox approx_by_length_ideal(Presentation const& pres, FiniteSubset<Word> const& H);

  //! From an approximating pair for H u H^2 on a table host, a wrap map on
  //! the same finite table; elements outside the image go to `sink`, which
  //! must lie outside H.
  WrapMap<elem> wrap_from_approx(MulTable const&             host,
                                 FiniteSubset<elem> const&   H,
                                 FiniteSubset<elem> const&   HH,
                                 ApproxPair const&           pair,
                                 elem                        sink);

  //! Random Rees and semilattice instances over Z (|I|, |Lambda| <= 3,
  //! semilattices of order <= 3, subsets of 1..5 elements with integers in
  //! [-10, 10]); instance i uses seed + i.
  struct ApproxCampaign {
    std::size_t              instances = 0;  // of each kind
    std::size_t              rees_valid = 0;
    std::size_t              semilattice_valid = 0;
    std::size_t              semilattice_clifford = 0;
    std::size_t              largest_table = 0;
    std::vector<std::string> failures;

    bool all_passed() const noexcept {
      return rees_valid == instances && semilattice_valid == instances
             && semilattice_clifford == instances;
    }
  };

  ReesIntSpec        random_rees_spec(std::mt19937_64& rng);
  SemilatticeIntSpec random_semilattice_spec(std::mt19937_64& rng);

  ApproxCampaign approx_campaign(std::size_t   count,
                                 std::uint64_t seed,
                                 Execution     exec = Execution::parallel);

}  // namespace lef
