#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lef/execution.hpp"

namespace lef {

  using elem = std::uint32_t;

  //! A finite magma given by its Cayley table. `at(x, y)` is x*y (row = left
  //! factor). Entries are range checked on construction; associativity is a
  //! separate query.
  class MulTable {
   public:
    MulTable() = default;
    MulTable(std::size_t              order,
             std::vector<elem>        table,
             std::vector<std::string> labels = {});

    std::size_t order() const noexcept {
      return _n;
    }
    elem at(elem x, elem y) const noexcept {
      return _t[static_cast<std::size_t>(x) * _n + y];
    }
    std::vector<elem> const& data() const noexcept {
      return _t;
    }
    //! Labels; defaults to "0", "1", ... .
    std::vector<std::string> const& labels() const noexcept {
      return _labels;
    }
    std::string const& label(elem x) const {
      return _labels.at(x);
    }
    std::optional<elem> find_label(std::string const& s) const;

    elem product(std::span<elem const> xs) const;

    bool operator==(MulTable const& that) const {
      return _n == that._n && _t == that._t;
    }

   private:
    std::size_t              _n = 0;
    std::vector<elem>        _t;
    std::vector<std::string> _labels;
  };

  //! The first (x, y, z) in lexicographic order with (xy)z != x(yz).
  std::optional<std::array<elem, 3>> associativity_failure(MulTable const& t);
  bool                               check_associative(MulTable const& t);

  std::optional<elem> identity_element(MulTable const& t);
  std::optional<elem> zero_element(MulTable const& t);
  bool                is_idempotent(MulTable const& t, elem x);
  std::vector<elem>   idempotents(MulTable const& t);

  //! S^1: `t` itself if it has an identity, else a new identity labelled "1".
  MulTable adjoin_identity(MulTable const& t);
  //! S^0: `t` itself if it has a zero, else a new zero labelled "0".
  MulTable adjoin_zero(MulTable const& t);

  //! Smallest k >= 1 with x^k idempotent; `stabilized` when x^k = x^(k+1).
  struct IdempotentPower {
    std::size_t k;
    elem        value;
    bool        stabilized;
  };
  IdempotentPower idempotent_power(MulTable const& t, elem x);

  //! A binary relation on the elements, stored as a dense matrix.
  class BinaryRelation {
   public:
    BinaryRelation() = default;
    explicit BinaryRelation(std::size_t n) : _n(n), _m(n * n, 0) {}
    bool operator()(elem x, elem y) const noexcept {
      return _m[static_cast<std::size_t>(x) * _n + y] != 0;
    }
    void set(elem x, elem y) noexcept {
      _m[static_cast<std::size_t>(x) * _n + y] = 1;
    }
    std::size_t size() const noexcept {
      return _n;
    }

   private:
    std::size_t       _n = 0;
    std::vector<char> _m;
  };

  struct Partition {
    std::vector<std::vector<elem>> classes;   // each sorted, ordered by least element
    std::vector<std::size_t>       class_of;  // element -> class index
  };

  //! Green's preorders (x <=_L y iff x in S^1 y, and so on) and equivalences.
  struct GreenData {
    BinaryRelation  leq_l, leq_r, leq_j;
    Partition l, r, j, h, d;
  };

  GreenData green(MulTable const& t);

  bool is_j_trivial(MulTable const& t);
  bool is_l_trivial(MulTable const& t);
  bool is_r_trivial(MulTable const& t);
  bool is_group(MulTable const& t);
  //! Simple (one J-class) with an idempotent.
  bool is_completely_simple(MulTable const& t);
  //! Every element lies in a subgroup and idempotents are central.
  bool is_clifford(MulTable const& t);
  bool is_commutative(MulTable const& t);
  bool is_semilattice(MulTable const& t);

  //! The subsemigroup generated by `seeds`, relabelled 0..k-1 in order of
  //! discovery; `embedding[i]` is the original index of new element i.
  struct Subsemigroup {
    MulTable          table;
    std::vector<elem> embedding;
  };
  Subsemigroup generate_subsemigroup(MulTable const& t, std::span<elem const> seeds);

  //! Elements (i, j) are numbered i * |t2| + j.
  MulTable direct_product(MulTable const& t1, MulTable const& t2);

  //! Relabels by `perm` (old index -> new index).
  MulTable permute(MulTable const& t, std::span<elem const> perm);

  //! Egg-box diagrams of the D-classes: R-classes as rows, L-classes as
  //! columns, H-classes as cells; idempotents are starred.
  std::string egg_box(MulTable const& t);

  enum class ClassFilter {
    any,
    group,
    j_trivial,
    l_trivial,
    r_trivial,
    completely_simple,
    clifford
  };

  ClassFilter parse_class_filter(std::string const& name);
  std::string to_string(ClassFilter f);
  bool        satisfies(MulTable const& t, ClassFilter f);

  //! One representative per isomorphism class (anti-isomorphic tables are
  //! not identified), as the lexicographically least relabelled table;
  //! output sorted. Orders up to 5, and up to 8 for `group`.
  std::vector<MulTable> enumerate_semigroups(std::size_t order,
                                             ClassFilter filter = ClassFilter::any,
                                             Execution   exec   = Execution::parallel);

  //! The number of associative tables (no isomorphism reduction).
  std::size_t count_labelled_semigroups(std::size_t order);

  //! Canonical form: least table over all relabellings.
  MulTable canonical_form(MulTable const& t);

}  // namespace lef
