#include "lef/rewrite.hpp"

#include <algorithm>
#include <cstdlib>

#include "lef/error.hpp"
#include "lef/parallel.hpp"

namespace lef {

  RuleSchema RuleSchema::parse(std::string      name,
                               std::string_view lhs,
                               std::string_view rhs,
                               std::string_view conditions) {
    RuleSchema s;
    s.name       = std::move(name);
    s.lhs        = parse_pattern(lhs, s.variables);
    auto nlhs    = s.variables.size();
    s.rhs        = parse_pattern(rhs, s.variables);
    s.conditions = parse_constraints(conditions, s.variables);
    if (s.variables.size() != nlhs) {
      throw Error("schema " + s.name + ": variable " + s.variables[nlhs]
                  + " does not occur in the left-hand side");
    }
    return s;
  }

  bool RuleSchema::uses_n() const {
    auto in = [](Pattern const& p) {
      return std::any_of(p.begin(), p.end(), [](auto const& a) {
        return a.exponent.n_coefficient() != 0;
      });
    };
    return in(lhs) || in(rhs)
           || std::any_of(conditions.begin(), conditions.end(), [](auto const& c) {
                return c.expr.n_coefficient() != 0;
              });
  }

  std::string RuleSchema::to_string() const {
    std::string out = pattern_to_string(lhs, variables) + " -> "
                      + pattern_to_string(rhs, variables);
    std::string last;
    bool        first = true;
    for (auto const& c : conditions) {
      if (c.text == last) {
        continue;
      }
      out += first ? "  [" : "; ";
      out += c.text;
      last  = c.text;
      first = false;
    }
    if (!first) {
      out += "]";
    }
    return out;
  }

  RewriteSystem::RewriteSystem(std::string             name,
                               Alphabet                alphabet,
                               std::vector<RuleSchema> schemas,
                               std::optional<long>     n)
      : _name(std::move(name)),
        _alphabet(std::move(alphabet)),
        _schemas(std::move(schemas)),
        _n(n) {
    for (auto const& s : _schemas) {
      for (auto const* p : {&s.lhs, &s.rhs}) {
        for (auto const& a : *p) {
          if (!_alphabet.contains(a.letter)) {
            throw Error("schema " + s.name + ": letter '" + a.letter
                        + "' is not in alphabet \""
                        + std::string(_alphabet.letters()) + "\"");
          }
        }
      }
      if (s.lhs.empty()) {
        throw Error("schema " + s.name + ": empty left-hand side");
      }
      if (s.uses_n() && !_n) {
        throw Error("schema " + s.name + " uses n but the system has no parameter n");
      }
      std::vector<char> bound(s.variables.size(), 0);
      for (auto const& a : s.lhs) {
        std::size_t unbound = 0;
        for (auto const& [v, c] : a.exponent.terms()) {
          if (!bound[v]) {
            ++unbound;
            if (c <= 0) {
              throw Error("schema " + s.name + ": variable " + s.variables[v]
                          + " first occurs with a non-positive coefficient");
            }
            bound[v] = 1;
          }
        }
        if (unbound > 1) {
          throw Error("schema " + s.name
                      + ": a left-hand exponent introduces more than one variable");
        }
      }
    }
  }

  std::size_t RewriteSystem::schema_index(std::string_view name) const {
    for (std::size_t i = 0; i < _schemas.size(); ++i) {
      if (_schemas[i].name == name) {
        return i;
      }
    }
    throw Error("system " + _name + " has no schema named \"" + std::string(name) + "\"");
  }

  ConcreteRule instantiate(RewriteSystem const&  system,
                           std::size_t           schema,
                           std::span<long const> assignment) {
    auto const& s = system.schemas().at(schema);
    if (assignment.size() != s.variables.size()) {
      throw Error("schema " + s.name + ": expected " + std::to_string(s.variables.size())
                  + " values, got " + std::to_string(assignment.size()));
    }
    for (auto const& c : s.conditions) {
      if (!c.holds(assignment, system.n())) {
        std::string vals;
        for (std::size_t i = 0; i < assignment.size(); ++i) {
          vals += (i ? ", " : "") + s.variables[i] + "=" + std::to_string(assignment[i]);
        }
        throw Error("schema " + s.name + ": condition \"" + c.text
                    + "\" fails for " + vals);
      }
    }
    ConcreteRule r;
    r.schema     = schema;
    r.assignment = {assignment.begin(), assignment.end()};
    r.lhs        = instantiate_pattern(s.lhs, assignment, system.n());
    r.rhs        = instantiate_pattern(s.rhs, assignment, system.n());
    if (r.lhs.empty()) {
      throw Error("schema " + s.name + ": instance has an empty left-hand side");
    }
    return r;
  }

  std::vector<ConcreteRule> concrete_rules(RewriteSystem const& system, long bound) {
    std::vector<ConcreteRule> out;
    long                      n = system.n();
    for (std::size_t i = 0; i < system.schemas().size(); ++i) {
      auto const& s = system.schemas()[i];
      for_each_assignment(s.variables.size(), bound, [&](std::span<long const> v) {
        for (auto const& c : s.conditions) {
          if (!c.holds(v, n)) {
            return;
          }
        }
        ConcreteRule r;
        if (!try_instantiate_pattern(s.lhs, v, n, r.lhs)
            || !try_instantiate_pattern(s.rhs, v, n, r.rhs) || r.lhs.empty()) {
          return;
        }
        r.schema     = i;
        r.assignment = {v.begin(), v.end()};
        out.push_back(std::move(r));
      });
    }
    return out;
  }

  namespace {
    struct Matcher {
      RuleSchema const& s;
      long              n;
      std::string_view  w;
      std::size_t       start;
      std::vector<long> values;
      std::vector<char> bound;

      template <typename Emit>
      void run(std::size_t pos, std::size_t atom, Emit& emit) {
        if (atom == s.lhs.size()) {
          if (pos == start) {
            return;
          }
          for (auto const& c : s.conditions) {
            if (!c.holds(values, n)) {
              return;
            }
          }
          for (auto const& a : s.rhs) {
            if (a.exponent.evaluate(values, n) < 0) {
              return;
            }
          }
          emit(pos - start, values);
          return;
        }
        auto const& a   = s.lhs[atom];
        std::size_t avail = 0;
        while (pos + avail < w.size() && w[pos + avail] == a.letter) {
          ++avail;
        }
        long        fixed = a.exponent.constant_term() + a.exponent.n_coefficient() * n;
        std::size_t free  = SIZE_MAX;
        long        coeff = 0;
        for (auto const& [v, c] : a.exponent.terms()) {
          if (bound[v]) {
            fixed += c * values[v];
          } else {
            free  = v;
            coeff = c;
          }
        }
        if (free == SIZE_MAX) {
          if (fixed < 0 || static_cast<std::size_t>(fixed) > avail) {
            return;
          }
          run(pos + static_cast<std::size_t>(fixed), atom + 1, emit);
          return;
        }
        bound[free] = 1;
        for (std::size_t k = 0; k <= avail; ++k) {
          long rest = static_cast<long>(k) - fixed;
          if (rest < 0 || rest % coeff != 0) {
            continue;
          }
          values[free] = rest / coeff;
          run(pos + k, atom + 1, emit);
        }
        bound[free]  = 0;
        values[free] = 0;
      }
    };

    template <typename Emit>
    void match_at(RewriteSystem const& system,
                  std::size_t          schema,
                  std::string_view     w,
                  std::size_t          pos,
                  Emit&&               emit) {
      auto const& s = system.schemas()[schema];
      // cheap rejection on the first atom with a positive constant exponent
      auto const& first = s.lhs.front();
      if (first.exponent.terms().empty()
          && first.exponent.constant_term() + first.exponent.n_coefficient() * system.n() > 0
          && (pos >= w.size() || w[pos] != first.letter)) {
        return;
      }
      Matcher m{s,
                system.n(),
                w,
                pos,
                std::vector<long>(s.variables.size(), 0),
                std::vector<char>(s.variables.size(), 0)};
      m.run(pos, 0, emit);
    }
  }  // namespace

  std::vector<Redex> redexes(RewriteSystem const&       system,
                             std::string_view           w,
                             std::optional<std::size_t> schema) {
    std::vector<Redex> out;
    for (std::size_t pos = 0; pos < w.size(); ++pos) {
      for (std::size_t i = 0; i < system.schemas().size(); ++i) {
        if (schema && *schema != i) {
          continue;
        }
        match_at(system, i, w, pos, [&](std::size_t len, std::vector<long> const& v) {
          out.push_back({pos, len, i, v});
        });
      }
    }
    return out;
  }

  Word apply(RewriteSystem const& system, std::string_view w, Redex const& r) {
    auto const& s   = system.schemas().at(r.schema);
    Word        out = Word(w.substr(0, r.position));
    out += instantiate_pattern(s.rhs, r.assignment, system.n());
    out += w.substr(r.position + r.length);
    return out;
  }

  std::optional<Step> reduce_once(RewriteSystem const& system, std::string_view w) {
    for (std::size_t pos = 0; pos < w.size(); ++pos) {
      for (std::size_t i = 0; i < system.schemas().size(); ++i) {
        std::optional<Redex> best;
        match_at(system, i, w, pos, [&](std::size_t len, std::vector<long> const& v) {
          if (!best || v < best->assignment) {
            best = Redex{pos, len, i, v};
          }
        });
        if (best) {
          Step st{*best, Word(w), apply(system, w, *best)};
          return st;
        }
      }
    }
    return std::nullopt;
  }

  bool is_irreducible(RewriteSystem const& system, std::string_view w) {
    return !reduce_once(system, w).has_value();
  }

  RewriteOptions default_rewrite_options() {
    RewriteOptions opts;
    if (char const* env = std::getenv("LEF_STEP_LIMIT")) {
      char* end = nullptr;
      auto  v   = std::strtoull(env, &end, 10);
      if (end != env && *end == '\0' && v > 0) {
        opts.step_limit = static_cast<std::size_t>(v);
      }
    }
    return opts;
  }

  namespace {
    template <typename OnStep>
    Word reduce_loop(RewriteSystem const&  system,
                     std::string_view      w,
                     RewriteOptions const& opts,
                     OnStep&&              on_step) {
      system.alphabet().validate(w);
      Word        cur(w);
      std::size_t steps = 0;
      while (auto st = reduce_once(system, cur)) {
        if (++steps > opts.step_limit) {
          throw StepLimitExceeded("normal form of \"" + std::string(w) + "\" under "
                                  + system.name() + ": step limit "
                                  + std::to_string(opts.step_limit) + " exceeded");
        }
        if (opts.check_decrease && !system.alphabet().shortlex_less(st->after, cur)) {
          throw Error("schema " + system.schemas()[st->redex.schema].name + " rewrote \""
                      + cur + "\" to \"" + st->after
                      + "\", which is not smaller in shortlex order");
        }
        cur = st->after;
        on_step(*st);
      }
      return cur;
    }
  }  // namespace

  Word normal_form(RewriteSystem const& system, std::string_view w, RewriteOptions const& opts) {
    return reduce_loop(system, w, opts, [](Step const&) {});
  }

  std::vector<Step> reduction_trace(RewriteSystem const&  system,
                                    std::string_view      w,
                                    RewriteOptions const& opts) {
    std::vector<Step> out;
    reduce_loop(system, w, opts, [&out](Step const& st) { out.push_back(st); });
    return out;
  }

  TerminationReport check_termination_order(RewriteSystem const& system, long bound) {
    TerminationReport rep;
    auto const&       A = system.alphabet();
    for (auto& r : concrete_rules(system, bound)) {
      ++rep.instances;
      if (!A.shortlex_less(r.rhs, r.lhs)) {
        rep.shortlex_violations.push_back(r);
      }
      if (!A.lex_less(r.rhs, r.lhs)) {
        rep.lex_violations.push_back(r);
      }
    }
    return rep;
  }

  std::vector<CriticalPair> critical_pairs(std::vector<ConcreteRule> const& rules) {
    std::vector<CriticalPair> out;
    for (std::size_t i = 0; i < rules.size(); ++i) {
      auto const& l1 = rules[i].lhs;
      for (std::size_t j = 0; j < rules.size(); ++j) {
        auto const& l2 = rules[j].lhs;
        // l2 inside l1
        if (l2.size() <= l1.size()) {
          for (std::size_t p = 0; p + l2.size() <= l1.size(); ++p) {
            if (i == j && p == 0) {
              continue;
            }
            if (l1.compare(p, l2.size(), l2) == 0) {
              CriticalPair cp;
              cp.joint       = l1;
              cp.left        = rules[i].rhs;
              cp.right       = l1.substr(0, p) + rules[j].rhs + l1.substr(p + l2.size());
              cp.rule1       = i;
              cp.rule2       = j;
              cp.offset      = p;
              cp.containment = true;
              out.push_back(std::move(cp));
            }
          }
        }
        // proper overlap: suffix of l1 is a prefix of l2
        auto m = std::min(l1.size(), l2.size());
        for (std::size_t k = 1; k < m; ++k) {
          if (l1.compare(l1.size() - k, k, l2, 0, k) == 0) {
            CriticalPair cp;
            cp.joint  = l1 + l2.substr(k);
            cp.left   = rules[i].rhs + l2.substr(k);
            cp.right  = l1.substr(0, l1.size() - k) + rules[j].rhs;
            cp.rule1  = i;
            cp.rule2  = j;
            cp.offset = l1.size() - k;
            out.push_back(std::move(cp));
          }
        }
      }
    }
    return out;
  }

  ConfluenceReport check_local_confluence(RewriteSystem const& system, long bound, Execution exec) {
    ConfluenceReport rep;
    rep.rules = concrete_rules(system, bound);
    rep.pairs = critical_pairs(rep.rules);
    auto np   = rep.pairs.size();
    rep.left_nf.resize(np);
    rep.right_nf.resize(np);
    auto opts = default_rewrite_options();
    for_each_index(np, exec, [&](std::size_t i) {
      rep.left_nf[i]  = normal_form(system, rep.pairs[i].left, opts);
      rep.right_nf[i] = normal_form(system, rep.pairs[i].right, opts);
    });
    for (std::size_t i = 0; i < np; ++i) {
      if (rep.left_nf[i] != rep.right_nf[i]) {
        rep.unresolved.push_back(i);
      }
    }
    return rep;
  }

}  // namespace lef
