#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lef/words.hpp"

namespace lef {

  //! An integer linear form in named variables and the parameter n.
  //! Grammar: sums and differences of terms `k`, `kn`, `n`, `v`, `kv`.
  class LinearExpr {
   public:
    LinearExpr() = default;

    //! Unknown identifiers are appended to `vars`.
    static LinearExpr parse(std::string_view text, std::vector<std::string>& vars);
    static LinearExpr constant(long k);

    long evaluate(std::span<long const> values, long n) const;

    long constant_term() const noexcept {
      return _constant;
    }
    long n_coefficient() const noexcept {
      return _n;
    }
    //! (variable index, nonzero coefficient), sorted by index.
    std::vector<std::pair<std::size_t, long>> const& terms() const noexcept {
      return _terms;
    }
    bool uses_variable(std::size_t v) const noexcept;

    LinearExpr operator-(LinearExpr const& that) const;

    std::string to_string(std::vector<std::string> const& vars) const;

   private:
    void add_term(std::size_t var, long coeff);

    long                                      _constant = 0;
    long                                      _n        = 0;
    std::vector<std::pair<std::size_t, long>> _terms;
  };

  enum class Relation { lt, le, eq, ne, ge, gt };

  //! `expr rel 0`.
  struct Constraint {
    LinearExpr  expr;
    Relation    rel;
    std::string text;

    bool holds(std::span<long const> values, long n) const;
  };

  //! Parses `;`-separated chains such as "0<beta<=alpha<=2n; alpha+gamma>2n".
  std::vector<Constraint> parse_constraints(std::string_view text,
                                            std::vector<std::string>& vars);

  struct PatternAtom {
    char       letter;
    LinearExpr exponent;
  };

  //! A word with symbolic exponents: "x a^alpha c^(beta-1) e".
  using Pattern = std::vector<PatternAtom>;

  Pattern     parse_pattern(std::string_view text, std::vector<std::string>& vars);
  std::string pattern_to_string(Pattern const& p, std::vector<std::string> const& vars);

  //! Throws if an exponent evaluates negative.
  Word instantiate_pattern(Pattern const& p, std::span<long const> values, long n);
  //! Same, but reports negative exponents by returning false.
  bool try_instantiate_pattern(Pattern const& p,
                               std::span<long const> values,
                               long                  n,
                               Word&                 out);

  //! Calls `f(values)` for each assignment of `nvars` variables in [0, bound].
  template <typename F>
  void for_each_assignment(std::size_t nvars, long bound, F&& f) {
    std::vector<long> values(nvars, 0);
    while (true) {
      f(std::span<long const>(values));
      std::size_t i = nvars;
      while (i > 0 && values[i - 1] == bound) {
        values[--i] = 0;
      }
      if (i == 0) {
        return;
      }
      ++values[i - 1];
    }
  }

}  // namespace lef
