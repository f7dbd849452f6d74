#include "lef/search.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>

#include "lef/error.hpp"
#include "lef/parallel.hpp"

namespace lef {

  std::string to_string(SearchStatus s) {
    return s == SearchStatus::embeddable ? "embeddable" : "not_embeddable_up_to_bound";
  }

  namespace {

    constexpr int undef = -1;

    //! A k x k table under construction with an undo trail.
    class Completion {
     public:
      Completion(std::size_t k, std::size_t h, bool latin)
          : _k(k), _h(h), _latin(latin), _t(k * k, undef), _rows(k, 0), _cols(k, 0) {
        for (std::size_t x = 0; x < h; ++x) {
          for (std::size_t y = 0; y < h; ++y) {
            _order.push_back(x * k + y);
          }
        }
        for (std::size_t c = 0; c < k * k; ++c) {
          if (c / k >= h || c % k >= h) {
            _order.push_back(c);
          }
        }
      }

      int get(std::size_t x, std::size_t y) const {
        return _t[x * _k + y];
      }

      std::size_t trail_size() const {
        return _trail.size();
      }

      void undo_to(std::size_t mark) {
        while (_trail.size() > mark) {
          auto c = _trail.back();
          _trail.pop_back();
          if (_latin) {
            auto v = static_cast<unsigned>(_t[c]);
            _rows[c / _k] &= ~(1u << v);
            _cols[c % _k] &= ~(1u << v);
          }
          _t[c] = undef;
        }
      }

      //! Sets (x, y) = v and closes under associativity; false on conflict.
      bool assign(std::size_t x, std::size_t y, int v) {
        _queue.clear();
        if (!require(x, y, v)) {
          return false;
        }
        while (!_queue.empty()) {
          auto c = _queue.back();
          _queue.pop_back();
          if (!propagate(c / _k, c % _k, _t[c])) {
            return false;
          }
        }
        return true;
      }

      //! Index into `_order` of the first undefined cell, or k*k.
      std::size_t next_cell() const {
        for (std::size_t i = 0; i < _order.size(); ++i) {
          if (_t[_order[i]] == undef) {
            return i;
          }
        }
        return _order.size();
      }

      std::size_t cell(std::size_t i) const {
        return _order[i];
      }
      std::size_t cells() const noexcept {
        return _order.size();
      }
      std::size_t order() const noexcept {
        return _k;
      }

      //! Largest value admissible for the cell at position i of the order;
      //! -1 when the prefix already breaks first-use order of new elements.
      int value_cap(std::size_t i) const {
        auto block = _h * _h;
        if (i >= block) {
          return static_cast<int>(_k) - 1;
        }
        int m = static_cast<int>(_h) - 1;
        for (std::size_t j = 0; j < i; ++j) {
          int v = _t[_order[j]];
          if (v > m + 1) {
            return -1;
          }
          m = std::max(m, v);
        }
        return std::min(m + 1, static_cast<int>(_k) - 1);
      }

      MulTable table(std::vector<std::string> labels) const {
        std::vector<elem> d(_t.begin(), _t.end());
        return MulTable(_k, std::move(d), std::move(labels));
      }

     private:
      bool require(std::size_t x, std::size_t y, int v) {
        auto c = x * _k + y;
        if (_t[c] != undef) {
          return _t[c] == v;
        }
        if (_latin) {
          unsigned bit = 1u << static_cast<unsigned>(v);
          if ((_rows[x] & bit) || (_cols[y] & bit)) {
            return false;
          }
          _rows[x] |= bit;
          _cols[y] |= bit;
        }
        _t[c] = v;
        _trail.push_back(c);
        _queue.push_back(c);
        return true;
      }

      //! (a b) c = a (b c) given two of the three products involved.
      bool link(std::size_t ab, std::size_t a, std::size_t c, std::size_t bc) {
        int l = get(ab, c);
        int r = get(a, bc);
        if (l == undef && r == undef) {
          return true;
        }
        if (l == undef) {
          return require(ab, c, r);
        }
        if (r == undef) {
          return require(a, bc, l);
        }
        return l == r;
      }

      bool propagate(std::size_t x, std::size_t y, int v) {
        auto vv = static_cast<std::size_t>(v);
        for (std::size_t z = 0; z < _k; ++z) {
          // (x y) z = x (y z)
          if (int yz = get(y, z); yz != undef && !link(vv, x, z, static_cast<std::size_t>(yz))) {
            return false;
          }
          // (z x) y = z (x y)
          if (int zx = get(z, x); zx != undef && !link(static_cast<std::size_t>(zx), z, y, vv)) {
            return false;
          }
        }
        for (std::size_t p = 0; p < _k; ++p) {
          for (std::size_t q = 0; q < _k; ++q) {
            // x = p q:  (p q) y = p (q y)
            if (get(p, q) == static_cast<int>(x)) {
              if (int qy = get(q, y); qy != undef && !link(x, p, y, static_cast<std::size_t>(qy))) {
                return false;
              }
            }
            // y = p q:  (x p) q = x (p q)
            if (get(p, q) == static_cast<int>(y)) {
              if (int xp = get(x, p); xp != undef && !link(static_cast<std::size_t>(xp), x, q, y)) {
                return false;
              }
            }
          }
        }
        return true;
      }

      std::size_t              _k, _h;
      bool                     _latin;
      std::vector<int>         _t;
      std::vector<unsigned>    _rows, _cols;
      std::vector<std::size_t> _order;
      std::vector<std::size_t> _trail;
      std::vector<std::size_t> _queue;
    };



    struct Branch {
      std::optional<MulTable> witness;
      std::size_t             explored = 0;
    };

    class Searcher {
     public:
      Searcher(ClassFilter filter, std::vector<std::string> const& labels, std::atomic<bool> const* stop)
          : _filter(filter), _labels(labels), _stop(stop) {}

      //! Candidate values for the next undefined cell; empty when the prefix
      //! is not in first-use order. `done` when no cell is undefined.
      std::vector<int> choices(Completion const& s, std::size_t& cell, bool& done) const {
        auto i = s.next_cell();
        done   = i == s.cells();
        if (done) {
          return {};
        }
        cell    = s.cell(i);
        int cap = s.value_cap(i);
        std::vector<int> out;
        for (int v = 0; v <= cap; ++v) {
          out.push_back(v);
        }
        return out;
      }

      bool accept(Completion const& s, Branch& out) const {
        auto t = s.table(_labels);
        if (check_associative(t) && satisfies(t, _filter)) {
          out.witness = std::move(t);
          return true;
        }
        return false;
      }

      bool run(Completion& s, Branch& out) const {
        if (_stop && _stop->load(std::memory_order_relaxed)) {
          return false;
        }
        ++out.explored;
        std::size_t cell = 0;
        bool        done = false;
        auto        vs   = choices(s, cell, done);
        if (done) {
          return accept(s, out);
        }
        for (int v : vs) {
          auto mark = s.trail_size();
          if (s.assign(cell / s.order(), cell % s.order(), v) && run(s, out)) {
            return true;
          }
          s.undo_to(mark);
        }
        return false;
      }

     private:
      ClassFilter                     _filter;
      std::vector<std::string> const& _labels;
      std::atomic<bool> const*        _stop;
    };

    std::vector<std::string> witness_labels(PartialTable const& pt, std::size_t k) {
      auto labels = pt.labels();
      for (std::size_t i = pt.size(); i < k; ++i) {
        std::string l = std::to_string(i);
        while (std::find(labels.begin(), labels.end(), l) != labels.end()) {
          l += "'";
        }
        labels.push_back(l);
      }
      return labels;
    }

    //! One order: false when some defined product is contradicted up front.
    Branch search_order(PartialTable const& pt, std::size_t k, ClassFilter filter, Execution exec) {
      Branch     result;
      bool       latin = filter == ClassFilter::group;
      Completion root(k, pt.size(), latin);
      for (elem x = 0; x < pt.size(); ++x) {
        for (elem y = 0; y < pt.size(); ++y) {
          if (auto z = pt.product(x, y)) {
            if (!root.assign(x, y, static_cast<int>(*z))) {
              return result;
            }
          }
        }
      }
      auto     labels = witness_labels(pt, k);
      Searcher serial(filter, labels, nullptr);
      ++result.explored;
      std::size_t cell = 0;
      bool        done = false;
      auto        vs   = serial.choices(root, cell, done);
      if (done) {
        serial.accept(root, result);
        return result;
      }
      // first-level branches in value order; the least successful one wins
      std::vector<Branch>      branches(vs.size());
      std::atomic<std::size_t> best{vs.size()};
      std::vector<std::atomic<bool>> stops(vs.size());
      for_each_index(vs.size(), exec, [&](std::size_t b) {
        if (best.load() < b) {
          return;
        }
        Completion s = root;
        Searcher   searcher(filter, labels, &stops[b]);
        if (s.assign(cell / k, cell % k, vs[b]) && searcher.run(s, branches[b])) {
          std::size_t cur = best.load();
          while (b < cur && !best.compare_exchange_weak(cur, b)) {
          }
          for (std::size_t j = b + 1; j < vs.size(); ++j) {
            stops[j].store(true);
          }
        }
      });
      for (auto& br : branches) {
        result.explored += br.explored;
      }
      if (best.load() < vs.size()) {
        result.witness = std::move(branches[best.load()].witness);
      }
      return result;
    }

  }  // namespace

  SearchResult embed_partial_table(PartialTable const& pt,
                                   std::size_t         max_order,
                                   ClassFilter         filter,
                                   Execution           exec) {
    if (auto f = partial_associativity_failure(pt)) {
      throw Error("partial table is not associative at (" + pt.label((*f)[0]) + ", "
                  + pt.label((*f)[1]) + ", " + pt.label((*f)[2]) + ")");
    }
    if (pt.size() == 0) {
      throw Error("partial table has no elements");
    }
    if (max_order > 8) {
      throw Error("embed_partial_table: orders above 8 are not supported");
    }
    SearchResult out;
    out.bound = max_order;
    for (std::size_t k = pt.size(); k <= max_order; ++k) {
      out.orders.push_back(k);
      auto b = search_order(pt, k, filter, exec);
      out.explored += b.explored;
      if (b.witness) {
        out.status  = SearchStatus::embeddable;
        out.witness = std::move(b.witness);
        for (elem x = 0; x < pt.size(); ++x) {
          out.injection.push_back(x);
        }
        return out;
      }
    }
    return out;
  }

  std::string assignment_variables(WordPairs const& relations, WordPairs const& distinct) {
    std::string vars;
    auto        add = [&](Word const& w) {
      for (char c : w) {
        if (vars.find(c) == std::string::npos) {
          vars.push_back(c);
        }
      }
    };
    for (auto const& [u, v] : relations) {
      add(u);
      add(v);
    }
    for (auto const& [u, v] : distinct) {
      add(u);
      add(v);
    }
    return vars;
  }

  elem evaluate(MulTable const& t, std::string const& variables, std::vector<elem> const& values,
                std::string_view w) {
    if (w.empty()) {
      throw Error("cannot evaluate the empty word");
    }
    auto val = [&](char c) {
      auto p = variables.find(c);
      if (p == std::string::npos || p >= values.size()) {
        throw Error(std::string("letter ") + c + " has no value");
      }
      return values[p];
    };
    elem r = val(w[0]);
    for (std::size_t i = 1; i < w.size(); ++i) {
      r = t.at(r, val(w[i]));
    }
    return r;
  }

  namespace {
    //! Backtracking over variables; `f` returns true to stop.
    bool assignments(MulTable const&                                table,
                     WordPairs const&                               relations,
                     WordPairs const&                               distinct,
                     std::string const&                             variables,
                     std::function<bool(Assignment const&)> const& f) {
      if (variables.size() > 8) {
        throw Error("at most 8 variables are supported");
      }
      for (auto const& rs : {relations, distinct}) {
        for (auto const& [u, v] : rs) {
          for (char c : u + v) {
            if (variables.find(c) == std::string::npos) {
              throw Error(std::string("letter ") + c + " is not a variable");
            }
          }
        }
      }
      if (variables.empty()) {
        return false;
      }
      // relations become checkable once their last variable is set
      std::vector<std::vector<std::size_t>> due(variables.size());
      for (std::size_t r = 0; r < relations.size(); ++r) {
        std::size_t last = 0;
        for (char c : relations[r].first + relations[r].second) {
          last = std::max(last, variables.find(c));
        }
        due[last].push_back(r);
      }
      Assignment a;
      a.values.assign(variables.size(), 0);
      auto n = static_cast<elem>(table.order());
      std::function<bool(std::size_t)> go = [&](std::size_t depth) {
        if (depth == variables.size()) {
          a.violated.clear();
          for (std::size_t d = 0; d < distinct.size(); ++d) {
            if (evaluate(table, variables, a.values, distinct[d].first)
                == evaluate(table, variables, a.values, distinct[d].second)) {
              a.violated.push_back(d);
            }
          }
          return f(a);
        }
        for (elem v = 0; v < n; ++v) {
          a.values[depth] = v;
          bool ok         = true;
          for (auto r : due[depth]) {
            if (evaluate(table, variables, a.values, relations[r].first)
                != evaluate(table, variables, a.values, relations[r].second)) {
              ok = false;
              break;
            }
          }
          if (ok && go(depth + 1)) {
            return true;
          }
        }
        return false;
      };
      return go(0);
    }
  }  // namespace

  void for_each_relational_assignment(MulTable const&                                table,
                                      WordPairs const&                               relations,
                                      WordPairs const&                               distinct,
                                      std::string const&                             variables,
                                      std::function<void(Assignment const&)> const& f) {
    assignments(table, relations, distinct, variables, [&](Assignment const& a) {
      f(a);
      return false;
    });
  }

  std::optional<Assignment> find_separating_assignment(MulTable const&    table,
                                                       WordPairs const&   relations,
                                                       WordPairs const&   distinct,
                                                       std::string const& variables) {
    std::optional<Assignment> out;
    assignments(table, relations, distinct, variables, [&](Assignment const& a) {
      if (a.violated.empty()) {
        out = a;
        return true;
      }
      return false;
    });
    return out;
  }

  std::vector<Assignment> find_relational_assignments(MulTable const&  table,
                                                      WordPairs const& relations,
                                                      WordPairs const& distinct) {
    std::vector<Assignment> out;
    for_each_relational_assignment(table, relations, distinct, assignment_variables(relations, distinct),
                                   [&](Assignment const& a) { out.push_back(a); });
    return out;
  }

  AssignmentCensus assignment_census(std::vector<MulTable> const& tables,
                                     WordPairs const&             relations,
                                     WordPairs const&             distinct,
                                     Execution                    exec) {
    constexpr std::size_t keep = 5;
    auto                  vars = assignment_variables(relations, distinct);
    std::vector<AssignmentCensus> per(tables.size());
    for_each_index(tables.size(), exec, [&](std::size_t i) {
      for_each_relational_assignment(tables[i], relations, distinct, vars, [&](Assignment const& a) {
        ++per[i].total;
        if (a.violated.empty()) {
          ++per[i].untagged;
          if (per[i].counterexamples.size() < keep) {
            per[i].counterexamples.emplace_back(i, a);
          }
        }
      });
    });
    AssignmentCensus out;
    out.tables = tables.size();
    for (auto& c : per) {
      out.total += c.total;
      out.untagged += c.untagged;
      for (auto& e : c.counterexamples) {
        if (out.counterexamples.size() < keep) {
          out.counterexamples.push_back(std::move(e));
        }
      }
    }
    return out;
  }

}  // namespace lef
