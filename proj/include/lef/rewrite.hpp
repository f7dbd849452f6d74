#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lef/execution.hpp"
#include "lef/pattern.hpp"
#include "lef/words.hpp"

namespace lef {

  //! A family of rewriting rules lhs -> rhs indexed by integer assignments
  //! of its variables, restricted by linear side conditions.
  struct RuleSchema {
    std::string              name;
    std::vector<std::string> variables;
    Pattern                  lhs;
    Pattern                  rhs;
    std::vector<Constraint>  conditions;

    static RuleSchema parse(std::string      name,
                            std::string_view lhs,
                            std::string_view rhs,
                            std::string_view conditions);

    bool        uses_n() const;
    std::string to_string() const;
  };

  struct ConcreteRule {
    Word              lhs;
    Word              rhs;
    std::size_t       schema = 0;
    std::vector<long> assignment;
  };

  class RewriteSystem {
   public:
    //! The order of `alphabet` is the termination order.
    RewriteSystem(std::string             name,
                  Alphabet                alphabet,
                  std::vector<RuleSchema> schemas,
                  std::optional<long>     n = std::nullopt);

    std::string const& name() const noexcept {
      return _name;
    }
    Alphabet const& alphabet() const noexcept {
      return _alphabet;
    }
    std::vector<RuleSchema> const& schemas() const noexcept {
      return _schemas;
    }
    std::optional<long> parameter_n() const noexcept {
      return _n;
    }
    long n() const noexcept {
      return _n.value_or(0);
    }
    std::size_t schema_index(std::string_view name) const;

   private:
    std::string             _name;
    Alphabet                _alphabet;
    std::vector<RuleSchema> _schemas;
    std::optional<long>     _n;
  };

  //! Throws naming the first failing condition.
  ConcreteRule instantiate(RewriteSystem const&  system,
                           std::size_t           schema,
                           std::span<long const> assignment);

  //! Every instance of every schema with all variables in [0, bound].
  std::vector<ConcreteRule> concrete_rules(RewriteSystem const& system, long bound);

  struct Redex {
    std::size_t       position = 0;
    std::size_t       length   = 0;
    std::size_t       schema   = 0;
    std::vector<long> assignment;
  };

  struct Step {
    Redex redex;
    Word  before;
    Word  after;
  };

  //! All redexes of `schema` (or of every schema when nullopt) in `w`.
  std::vector<Redex> redexes(RewriteSystem const&       system,
                             std::string_view           w,
                             std::optional<std::size_t> schema = std::nullopt);

  Word apply(RewriteSystem const& system, std::string_view w, Redex const& r);

  //! Leftmost redex, then lowest schema index, then lexicographically
  //! smallest assignment.
  std::optional<Step> reduce_once(RewriteSystem const& system, std::string_view w);

  struct RewriteOptions {
    std::size_t step_limit = 100000;
    //! Throw if a step fails to decrease in shortlex order.
    bool check_decrease = true;
  };

  //! Limit from LEF_STEP_LIMIT if set, otherwise 100000.
  RewriteOptions default_rewrite_options();

  Word              normal_form(RewriteSystem const& system,
                                std::string_view     w,
                                RewriteOptions const& opts = default_rewrite_options());
  std::vector<Step> reduction_trace(RewriteSystem const&  system,
                                    std::string_view      w,
                                    RewriteOptions const& opts = default_rewrite_options());
  bool              is_irreducible(RewriteSystem const& system, std::string_view w);

  struct TerminationReport {
    std::size_t               instances = 0;
    std::vector<ConcreteRule> shortlex_violations;
    std::vector<ConcreteRule> lex_violations;

    bool shortlex_holds() const noexcept {
      return shortlex_violations.empty();
    }
    bool lex_holds() const noexcept {
      return lex_violations.empty();
    }
  };

  //! Compares rhs with lhs for every instance with variables in [0, bound],
  //! in shortlex and in plain lexicographic order.
  TerminationReport check_termination_order(RewriteSystem const& system, long bound);

  struct CriticalPair {
    Word        joint;
    Word        left;
    Word        right;
    std::size_t rule1 = 0;  // index into the concrete rule list
    std::size_t rule2 = 0;
    std::size_t offset = 0;  // start of rule2's lhs in `joint`
    bool        containment = false;
  };

  std::vector<CriticalPair> critical_pairs(std::vector<ConcreteRule> const& rules);

  struct ConfluenceReport {
    std::vector<ConcreteRule> rules;
    std::vector<CriticalPair> pairs;
    std::vector<Word>         left_nf;
    std::vector<Word>         right_nf;
    std::vector<std::size_t>  unresolved;

    bool locally_confluent() const noexcept {
      return unresolved.empty();
    }
  };

  ConfluenceReport check_local_confluence(RewriteSystem const& system,
                                          long                 bound,
                                          Execution            exec = Execution::parallel);

}  // namespace lef
