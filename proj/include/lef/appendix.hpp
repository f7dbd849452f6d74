#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "lef/execution.hpp"
#include "lef/rewrite.hpp"

namespace lef {

  //! One row of a critical-pair table: the joint t, the results t1 and t2
  //! of one step of each rule, and the common descendant t0. Words are
  //! patterns in alpha, beta, gamma, alpha2, beta2 and n; `domain` lists
  //! every side condition, including those left implicit in the table.
  struct AppendixRow {
    std::string id;
    std::string rule1;
    std::string rule2;
    std::string special;
    std::string domain;
    std::string t;
    std::string t1;
    std::string t2;
    std::string t0;
    //! Nonempty when a tabulated entry was corrected; holds the original.
    std::string erratum;
  };

  enum class AppendixTable { a, b };

  std::span<AppendixRow const> appendix_rows(AppendixTable which);

  struct RowResult {
    AppendixRow const*       row = nullptr;
    std::size_t              instances = 0;
    std::size_t              failures  = 0;
    std::vector<std::string> messages;  // at most a few, for failures

    bool instantiable() const noexcept {
      return instances > 0;
    }
    bool confirmed() const noexcept {
      return failures == 0;
    }
  };

  struct AppendixReport {
    AppendixTable          table;
    long                   n         = 0;
    long                   max_exp   = 0;
    std::vector<RowResult> rows;

    std::size_t instantiable_rows() const;
    std::size_t confirmed_rows() const;  // instantiable and without failures
    bool        all_confirmed() const {
      return confirmed_rows() == instantiable_rows();
    }
  };

  //! Table A is checked against the Q-system, table B against F_n. Every
  //! assignment with variables in [0, max_exp] satisfying the row domain is
  //! tested: t1 (t2) must be a one-step rule1 (rule2) rewrite of t, and the
  //! normal forms of t1, t2, t0 must coincide.
  AppendixReport verify_appendix(AppendixTable which,
                                 long          max_exp,
                                 long          n    = 0,
                                 Execution     exec = Execution::parallel);

}  // namespace lef
