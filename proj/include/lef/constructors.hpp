#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lef/fsg.hpp"
#include "lef/partial.hpp"
#include "lef/rewrite.hpp"
#include "lef/words.hpp"

namespace lef {

  //! M(G; I, Lambda; P) over a finite group. `p[lambda][i]` is a group element.
  struct ReesSpec {
    MulTable                       group;
    std::size_t                    i_size      = 1;
    std::size_t                    lambda_size = 1;
    std::vector<std::vector<elem>> p;
  };

  //! (i, g, lambda) is element (i * |G| + g) * |Lambda| + lambda.
  std::size_t rees_index(ReesSpec const& spec, std::size_t i, elem g, std::size_t lambda);
  MulTable    rees_matrix(ReesSpec const& spec);

  //! A semilattice E of semigroups S_e. `homs[{e1, e2}]` for e2 < e1 maps
  //! S_{e1} into S_{e2}; homs on the diagonal are the identity and may be
  //! omitted.
  struct SemilatticeSpec {
    MulTable                                             meet;
    std::vector<MulTable>                                components;
    std::map<std::pair<elem, elem>, std::vector<elem>> homs;
  };

  //! e1 <= e2 in the semilattice order, i.e. e1 e2 = e1.
  bool semilattice_leq(MulTable const& meet, elem e1, elem e2);

  //! Throws naming the failing triple or pair when the spec is not coherent.
  void validate_semilattice_spec(SemilatticeSpec const& spec);

  //! Element x of S_e is numbered offset(e) + x, components in index order.
  //! The final associativity check is cubic in the order and can be skipped.
  MulTable semilattice_semigroup(SemilatticeSpec const& spec, bool check_associativity = true);
  std::vector<std::size_t> semilattice_offsets(SemilatticeSpec const& spec);

  //! A finite quotient of a semigroup of words with a word -> element map.
  struct WordQuotient {
    MulTable                       table;
    elem                           zero = 0;
    std::size_t                    max_len = 0;
    std::unordered_map<Word, elem> index;
    //! Set for S_m quotients: words are reduced first and `max_len` bounds
    //! the e-reduced length.
    long sm_m = 0;

    //! The element of a word; long words go to zero.
    elem image(std::string_view w) const;
  };

  //! Words of length <= max_len modulo the (length preserving) relations,
  //! with every longer word collapsed to zero. Classes are labelled by their
  //! shortlex-least member and ordered shortlex.
  WordQuotient quotient_by_length_ideal(Alphabet const&                         alphabet,
                                        std::size_t                             max_len,
                                        std::vector<std::pair<Word, Word>> const& relations = {});

  //! Sg<a,c,e,b,x | e^m = e> modulo the ideal of elements with e-reduced
  //! length above `bound`.
  WordQuotient sm_quotient(long m, std::size_t bound);
  //! Normal form in Sg<...| e^m = e>: every e-run e^k becomes e^(1 + (k-1) mod (m-1)).
  Word sm_normal_form(std::string_view w, long m);

  //! F_n: normal forms under the F_n rewriting system, with every word of
  //! block count above n sent to zero (spelled "0").
  class FnHandle {
   public:
    explicit FnHandle(long n);

    static constexpr char const* zero_word = "0";

    long n() const noexcept {
      return _n;
    }
    RewriteSystem const& system() const noexcept {
      return *_system;
    }

    Word normal(std::string_view w) const;
    bool equal(std::string_view u, std::string_view v) const;
    Word multiply(std::string_view u, std::string_view v) const;
    bool is_zero(std::string_view w) const;

    //! ((2n+1)^3)^(n+1) * (2(2n+1))^n + 1, counting the zero.
    long double order_bound() const;

    //! All elements, closed from the generators; only for n = 1.
    WordQuotient enumerate() const;

   private:
    long                           _n;
    std::shared_ptr<RewriteSystem> _system;
    struct Memo;
    std::shared_ptr<Memo> _memo;
  };

  FnHandle build_fn(long n);

  struct Presentation {
    std::string                        name;
    Alphabet                           generators;
    std::vector<std::pair<Word, Word>> relations;
  };

  //! Q, S, T, C, sm:<m>; throws for fn:<n> (use build_fn) and bicyclic4
  //! (use bicyclic4()).
  Presentation preset_presentation(PresetId id);

  //! {1, a, b, ba} in <a, b | ab = 1>, with the products that stay inside.
  PartialTable bicyclic4();
  //! Normal form b^i a^j in the bicyclic monoid; "" is the identity.
  Word bicyclic_normal_form(std::string_view w);

}  // namespace lef
