#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lef/approx.hpp"
#include "lef/execution.hpp"
#include "lef/oracle.hpp"

namespace lef {

  //! Decides whether a word represents an element of H_n, the elements of
  //! words of length <= n.
  class MembershipOracle {
   public:
    MembershipOracle(PresetId preset, long n, BfsBounds bounds = {});

    PresetId preset() const noexcept {
      return _preset;
    }
    long n() const noexcept {
      return _n;
    }
    Alphabet const& alphabet() const noexcept {
      return _pres.generators;
    }
    //! W_n, shortlex.
    std::vector<Word> const& short_words() const noexcept {
      return _words;
    }
    //! One representative per element of H_n.
    std::vector<Word> const& representatives() const noexcept {
      return _reps;
    }

    //! equal: w is in H_n; distinct: it is not; unknown: undecided.
    Verdict member(std::string_view w) const;

   private:
    PresetId          _preset;
    long              _n;
    BfsBounds         _bounds;
    Presentation      _pres;
    std::vector<Word> _words;
    std::vector<Word> _reps;
  };

  //! With modulus 0 the members are words graded by length. With modulus
  //! m >= 2 they are S_m normal forms graded by e-reduced length.
  struct PreAccurateSet {
    long                           n       = 0;
    long                           modulus = 0;
    std::size_t                    cap     = 0;  // largest grade explored
    std::vector<Word>              short_words;      // W_n
    std::vector<Word>              representatives;  // H_n, one word each
    std::vector<std::vector<Word>> layers;           // layers[k]: members of grade k
    bool                           truncated = false;
    std::vector<Word>              indeterminate;

    std::vector<Word> words() const;
    //! Reduces w first when modulus is set.
    bool              contains(std::string_view w) const;
    std::size_t       grade(std::string_view w) const;
    std::size_t       max_grade() const;
    std::size_t       max_length() const;
  };

  //! Layer by layer: a word of length k >= 2 is pre-accurate when its element
  //! lies in H_n and it splits into two pre-accurate words. Stops early once
  //! no longer member can exist.
  PreAccurateSet enumerate_preaccurate(PresetId    host,
                                       long        n,
                                       std::size_t length_cap,
                                       Execution   exec   = Execution::parallel,
                                       BfsBounds   bounds = {});

  //! The same recursion on S_m normal forms: a candidate is the normal form
  //! of a product of two members, graded by e-reduced length; each grade is
  //! closed under products with grade-0 members before moving on.
  PreAccurateSet enumerate_preaccurate_sm(PresetId    host,
                                          long        n,
                                          long        m,
                                          std::size_t grade_cap,
                                          Execution   exec   = Execution::parallel,
                                          BfsBounds   bounds = {});

  //! The recursive definition applied directly; for cross-checks.
  bool is_preaccurate_naive(MembershipOracle const& oracle, std::string_view w);

  struct LwfOptions {
    std::size_t length_cap = 8;  // grade cap for the L_{2n} recursion
    BfsBounds   bounds{0, 1000000, 4};
    //! Use m = n 2^(6^(n+1)) for T; fails unless that is buildable.
    bool closed_form_bound = false;
  };

  struct LwfResult {
    WrapMap<Word>  wrap;
    PreAccurateSet preaccurate;  // L_{2n}; S_m normal forms for S
    Word           fallback;     // s
    std::size_t    m = 0;        // D_m for T; S_m exponent for S
    std::size_t    ideal_bound = 0;
  };

  //! The wrapping construction for S (through S_m) and T (through D_m).
  LwfResult build_lwf_wrapping(PresetId                  host,
                               FiniteSubset<Word> const& H,
                               long                      n,
                               LwfOptions const&         opts = {});

}  // namespace lef
