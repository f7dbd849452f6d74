#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lef/constructors.hpp"
#include "lef/execution.hpp"
#include "lef/words.hpp"

namespace lef {

  enum class Verdict { equal, distinct, unknown };
  std::string to_string(Verdict v);

  struct EqualityVerdict {
    Verdict status = Verdict::unknown;
    //! "normal-form", "path", "invariant", "exhaustion", "homomorphism" or
    //! "bound".
    std::string evidence;
    //! u = path.front(), v = path.back(), one relation application apart.
    std::vector<Word> path;
    //! Normal forms for "normal-form"; the separating quantity for "invariant".
    std::string detail;
    std::size_t explored = 0;
  };

  //! Exact oracle for q and fn:<n>.
  EqualityVerdict word_equal_nf(PresetId preset, std::string_view u, std::string_view v);

  struct BfsBounds {
    std::size_t length_bound = 0;  // 0: |u| + |v| + 4
    std::size_t node_bound   = 1000000;
    //! When >= 2, an undecided preset query also tries homomorphisms into
    //! every semigroup of order 2..image_order (at most 5).
    std::size_t image_order = 0;
  };

  //! Bidirectional search in the relation graph of a presentation. Equal
  //! comes with a path; distinct comes from a conserved quantity or a side
  //! whose component was explored completely within the bounds.
  EqualityVerdict word_equal_bfs(Presentation const& pres,
                                 std::string_view    u,
                                 std::string_view    v,
                                 BfsBounds           bounds = {});
  //! Preset form: q, s, t, c or sm:<m>; memoised by unordered pair and bounds.
  EqualityVerdict word_equal_bfs(PresetId preset,
                                 std::string_view u,
                                 std::string_view v,
                                 BfsBounds        bounds = {});

  //! A homomorphism from the presented semigroup into a semigroup of order
  //! <= max_order that separates u and v, described; tables in enumeration
  //! order, assignments in variable-major order.
  std::optional<std::string> image_separates(Presentation const& pres,
                                             std::string_view    u,
                                             std::string_view    v,
                                             std::size_t         max_order);

  std::optional<std::string> invariant_separates(PresetId preset,
                                                 std::string_view u,
                                                 std::string_view v);

  //! Words one relation application away from w, within the length bound;
  //! `truncated` is set when some neighbour was longer.
  std::vector<Word> relation_neighbours(Presentation const& pres,
                                        std::string_view    w,
                                        std::size_t         length_bound,
                                        bool&               truncated);

  //! Checks that consecutive path entries differ by one relation application.
  bool replay_path(Presentation const& pres, std::vector<Word> const& path);

  struct Closure {
    Word              root;
    std::vector<Word> words;  // in discovery order, root first
    bool              complete = false;
    std::size_t       max_len  = 0;
  };

  Closure closure(Presentation const& pres,
                  std::string_view    w,
                  std::size_t         length_bound,
                  std::size_t         node_bound);

  //! Closures of many words at once.
  std::vector<Closure> closures(Presentation const&      pres,
                                std::vector<Word> const& words,
                                std::size_t              length_bound,
                                std::size_t              node_bound,
                                Execution                exec = Execution::parallel);

  //! Every unordered pair of distinct words of length <= max_len over Q's
  //! generators, decided by the normal-form oracle and by the relation-graph
  //! oracle (conserved quantities, then BFS with `bounds`, then images in
  //! semigroups of order <= bounds.image_order). Images into orders <= 3 are
  //! compared through precomputed word signatures.
  struct AgreementReport {
    std::size_t words = 0;
    std::size_t pairs = 0;
    std::size_t agree = 0;
    std::size_t contradictions = 0;  // both decided, different answers
    std::size_t unknown = 0;         // graph oracle undecided
    std::vector<std::pair<Word, Word>> examples;  // first few disagreements
    std::size_t by_invariant = 0, by_image = 0, by_path = 0, by_exhaustion = 0;
  };

  AgreementReport q_oracle_agreement(std::size_t max_len,
                                     BfsBounds   bounds,
                                     Execution   exec = Execution::parallel);

}  // namespace lef
