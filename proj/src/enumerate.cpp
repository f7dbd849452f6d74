#include <algorithm>
#include <array>
#include <numeric>

#include "lef/error.hpp"
#include "lef/fsg.hpp"
#include "lef/parallel.hpp"

namespace lef {

  namespace {

    constexpr std::size_t max_any_order = 5;
    constexpr std::size_t max_filter_order = 5;
    constexpr std::size_t max_group_order  = 8;
    constexpr std::size_t max_canon_order  = 9;

    constexpr int none = -1;

    //! Backtracking over row-major cells; `latin` adds quasigroup pruning
    //! with the identity pinned to 0.
    struct Filler {
      int                          n;
      bool                         latin;
      std::array<int, 81>          t;
      std::array<std::uint32_t, 9> row_used{}, col_used{};

      Filler(int order, bool latin_) : n(order), latin(latin_) {
        t.fill(none);
        if (latin) {
          for (int x = 0; x < n; ++x) {
            place(0, x, x);
            place(x, 0, x);
          }
        }
      }

      int& cell(int x, int y) {
        return t[x * n + y];
      }

      void place(int x, int y, int v) {
        cell(x, y) = v;
        row_used[x] |= 1u << v;
        col_used[y] |= 1u << v;
      }

      void clear(int x, int y) {
        int v = cell(x, y);
        row_used[x] &= ~(1u << v);
        col_used[y] &= ~(1u << v);
        cell(x, y) = none;
      }

      // All triples touching cell (i, j) whose groupings are both defined.
      bool consistent(int i, int j) {
        int v = cell(i, j);
        for (int z = 0; z < n; ++z) {
          // (ij)z vs i(jz)
          int a = cell(v, z), b = cell(j, z);
          if (a != none && b != none) {
            int c = cell(i, b);
            if (c != none && c != a) {
              return false;
            }
          }
          // (xi)j vs x(ij)
          int xi = cell(z, i);
          if (xi != none) {
            int l = cell(xi, j), r = cell(z, v);
            if (l != none && r != none && l != r) {
              return false;
            }
          }
        }
        for (int x = 0; x < n; ++x) {
          for (int y = 0; y < n; ++y) {
            // (xy)j with xy = i vs x(yj)
            if (cell(x, y) == i) {
              int yj = cell(y, j);
              if (yj != none) {
                int r = cell(x, yj);
                if (r != none && r != v) {
                  return false;
                }
              }
            }
            // i(xy) with xy = j vs (ix)y
            if (cell(x, y) == j) {
              int ix = cell(i, x);
              if (ix != none) {
                int l = cell(ix, y);
                if (l != none && l != v) {
                  return false;
                }
              }
            }
          }
        }
        return true;
      }

      template <typename F>
      void run(int pos, F&& leaf) {
        while (pos < n * n && t[pos] != none) {
          ++pos;
        }
        if (pos == n * n) {
          leaf(*this);
          return;
        }
        int x = pos / n, y = pos % n;
        for (int v = 0; v < n; ++v) {
          if (latin && ((row_used[x] >> v) & 1u || (col_used[y] >> v) & 1u)) {
            continue;
          }
          place(x, y, v);
          if (consistent(x, y)) {
            run(pos + 1, leaf);
          }
          clear(x, y);
        }
      }

      MulTable table() const {
        std::vector<elem> d(t.begin(), t.begin() + n * n);
        return MulTable(n, std::move(d));
      }
    };

    // new index a holds old element q[a]; p is the inverse
    int compare_relabelled(std::vector<elem> const& d,
                           std::size_t              n,
                           std::vector<elem> const& q,
                           std::vector<elem> const& p) {
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          elem v = p[d[q[a] * n + q[b]]];
          elem w = d[a * n + b];
          if (v != w) {
            return v < w ? -1 : 1;
          }
        }
      }
      return 0;
    }

    // Only relabellings fixing `fixed` are considered when it is set.
    bool is_canonical(std::vector<elem> const& d, std::size_t n, bool fix_zero) {
      std::vector<elem> q(n), p(n);
      std::iota(q.begin(), q.end(), 0);
      auto first = fix_zero ? q.begin() + 1 : q.begin();
      while (std::next_permutation(first, q.end())) {
        for (std::size_t a = 0; a < n; ++a) {
          p[q[a]] = static_cast<elem>(a);
        }
        if (compare_relabelled(d, n, q, p) < 0) {
          return false;
        }
      }
      return true;
    }

    std::vector<std::pair<int, int>> top_branches(int n, bool latin) {
      std::vector<std::pair<int, int>> out;
      if (latin) {
        if (n <= 2) {
          out.emplace_back(none, none);
          return out;
        }
        for (int v = 0; v < n; ++v) {
          if (v != 1) {
            out.emplace_back(v, none);
          }
        }
        return out;
      }
      for (int v = 0; v < n; ++v) {
        for (int w = 0; w < (n > 1 ? n : 1); ++w) {
          out.emplace_back(v, n > 1 ? w : none);
        }
      }
      return out;
    }

    template <typename Leaf>
    void run_branches(int n, bool latin, Execution exec, Leaf&& leaf) {
      auto branches = top_branches(n, latin);
      for_each_index(branches.size(), exec, [&](std::size_t k) {
        Filler f(n, latin);
        auto [v, w] = branches[k];
        // latin: the first free cell is (1,1); otherwise (0,0) then (0,1)
        int x0 = latin ? 1 : 0, y0 = latin ? 1 : 0;
        if (v != none) {
          f.place(x0, y0, v);
          if (!f.consistent(x0, y0)) {
            return;
          }
        }
        if (w != none) {
          f.place(0, 1, w);
          if (!f.consistent(0, 1)) {
            return;
          }
        }
        f.run(0, [&](Filler& g) { leaf(k, g); });
      });
    }

  }  // namespace

  std::vector<MulTable> enumerate_semigroups(std::size_t order, ClassFilter filter, Execution exec) {
    std::size_t bound = filter == ClassFilter::any     ? max_any_order
                        : filter == ClassFilter::group ? max_group_order
                                                       : max_filter_order;
    if (order == 0 || order > bound) {
      throw Error("enumeration of order " + std::to_string(order) + " with class "
                  + to_string(filter) + " is outside the supported range 1.." + std::to_string(bound));
    }
    bool latin    = filter == ClassFilter::group;
    auto n        = static_cast<int>(order);
    auto branches = top_branches(n, latin);
    std::vector<std::vector<MulTable>> found(branches.size());
    run_branches(n, latin, exec, [&](std::size_t k, Filler& f) {
      std::vector<elem> d(f.t.begin(), f.t.begin() + n * n);
      if (!is_canonical(d, order, latin)) {
        return;
      }
      MulTable t(order, std::move(d));
      if (satisfies(t, filter)) {
        found[k].push_back(std::move(t));
      }
    });
    std::vector<MulTable> out;
    for (auto& v : found) {
      std::move(v.begin(), v.end(), std::back_inserter(out));
    }
    std::sort(out.begin(), out.end(), [](MulTable const& a, MulTable const& b) {
      return a.data() < b.data();
    });
    return out;
  }

  std::size_t count_labelled_semigroups(std::size_t order) {
    if (order == 0 || order > max_filter_order) {
      throw Error("labelled count of order " + std::to_string(order)
                  + " is outside the supported range 1.." + std::to_string(max_filter_order));
    }
    auto                     n = static_cast<int>(order);
    std::vector<std::size_t> counts(top_branches(n, false).size(), 0);
    run_branches(n, false, Execution::parallel, [&](std::size_t k, Filler&) { ++counts[k]; });
    return std::accumulate(counts.begin(), counts.end(), std::size_t{0});
  }

  MulTable canonical_form(MulTable const& t) {
    auto n = t.order();
    if (n > max_canon_order) {
      throw Error("canonical form is limited to order " + std::to_string(max_canon_order));
    }
    auto const&       d = t.data();
    std::vector<elem> q(n), p(n), best_q(n), best_p(n);
    std::iota(q.begin(), q.end(), 0);
    best_q = best_p = q;
    do {
      for (std::size_t a = 0; a < n; ++a) {
        p[q[a]] = static_cast<elem>(a);
      }
      // compare against the current best relabelling
      for (std::size_t a = 0, done = 0; a < n && !done; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          elem v = p[d[q[a] * n + q[b]]];
          elem w = best_p[d[best_q[a] * n + best_q[b]]];
          if (v != w) {
            if (v < w) {
              best_q = q;
              best_p = p;
            }
            done = 1;
            break;
          }
        }
      }
    } while (std::next_permutation(q.begin(), q.end()));
    return permute(t, best_p);
  }

}  // namespace lef
