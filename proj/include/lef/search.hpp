#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lef/execution.hpp"
#include "lef/fsg.hpp"
#include "lef/partial.hpp"
#include "lef/words.hpp"

namespace lef {

  enum class SearchStatus { embeddable, not_embeddable_up_to_bound };
  std::string to_string(SearchStatus s);

  struct SearchResult {
    SearchStatus status = SearchStatus::not_embeddable_up_to_bound;
    //! The table and the images of the partial table's elements.
    std::optional<MulTable>  witness;
    std::vector<elem>        injection;
    std::size_t              explored = 0;
    std::size_t              bound    = 0;
    //! Orders actually searched (empty when max_order < |elements|).
    std::vector<std::size_t> orders;
  };

  //! Complete backtracking over the tables of each order |pt|..max_order
  //! that extend pt on the first |pt| indices. Throws when pt violates
  //! partial associativity.
  SearchResult embed_partial_table(PartialTable const& pt,
                                   std::size_t         max_order,
                                   ClassFilter         filter = ClassFilter::any,
                                   Execution           exec   = Execution::parallel);

  struct Assignment {
    std::vector<elem>        values;    // one per variable
    std::vector<std::size_t> violated;  // indices of distinctness pairs that collapse
  };

  using WordPairs = std::vector<std::pair<Word, Word>>;

  //! Letters of the relations and distinctness pairs, in order of first use.
  std::string assignment_variables(WordPairs const& relations, WordPairs const& distinct);

  //! Calls `f` for every map from the variables to table elements that
  //! satisfies all relations; collapsed distinctness pairs are tagged.
  void for_each_relational_assignment(MulTable const&                          table,
                                      WordPairs const&                         relations,
                                      WordPairs const&                         distinct,
                                      std::string const&                       variables,
                                      std::function<void(Assignment const&)> const& f);

  //! The first assignment (in variable-major order) satisfying the relations
  //! under which no distinctness pair collapses.
  std::optional<Assignment> find_separating_assignment(MulTable const&    table,
                                                       WordPairs const&   relations,
                                                       WordPairs const&   distinct,
                                                       std::string const& variables);

  std::vector<Assignment> find_relational_assignments(MulTable const&  table,
                                                      WordPairs const& relations,
                                                      WordPairs const& distinct = {});

  //! Totals over a family of tables; `untagged` counts assignments where no
  //! distinctness pair collapses.
  struct AssignmentCensus {
    std::size_t tables   = 0;
    std::size_t total    = 0;
    std::size_t untagged = 0;
    std::vector<std::pair<std::size_t, Assignment>> counterexamples;  // first few
  };

  AssignmentCensus assignment_census(std::vector<MulTable> const& tables,
                                     WordPairs const&             relations,
                                     WordPairs const&             distinct,
                                     Execution                    exec = Execution::parallel);

  //! Evaluates a word under an assignment of its letters.
  elem evaluate(MulTable const& t, std::string const& variables, std::vector<elem> const& values,
                std::string_view w);

}  // namespace lef
