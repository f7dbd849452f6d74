#include "lef/oracle.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <unordered_set>

#include "lef/error.hpp"
#include "lef/parallel.hpp"
#include "lef/rewrite.hpp"
#include "lef/search.hpp"
#include "lef/systems.hpp"

namespace lef {

  std::string to_string(Verdict v) {
    switch (v) {
      case Verdict::equal:
        return "equal";
      case Verdict::distinct:
        return "distinct";
      case Verdict::unknown:
        return "unknown";
    }
    return "?";
  }

  namespace {
    FnHandle const& fn_handle(long n) {
      static std::mutex                mtx;
      static std::map<long, FnHandle>  handles;
      std::lock_guard<std::mutex>      lock(mtx);
      auto                             it = handles.find(n);
      if (it == handles.end()) {
        it = handles.emplace(n, FnHandle(n)).first;
      }
      return it->second;
    }
  }  // namespace

  EqualityVerdict word_equal_nf(PresetId preset, std::string_view u, std::string_view v) {
    Word nu, nv;
    if (preset.kind == PresetKind::q) {
      q_system().alphabet().validate(u);
      q_system().alphabet().validate(v);
      nu = normal_form(q_system(), u);
      nv = normal_form(q_system(), v);
    } else if (preset.kind == PresetKind::fn) {
      auto const& h = fn_handle(preset.parameter);
      h.system().alphabet().validate(u);
      h.system().alphabet().validate(v);
      nu = h.normal(u);
      nv = h.normal(v);
    } else {
      throw Error("no normal-form oracle for preset " + preset.name());
    }
    EqualityVerdict out;
    out.status   = nu == nv ? Verdict::equal : Verdict::distinct;
    out.evidence = "normal-form";
    out.detail   = nu + " / " + nv;
    return out;
  }

  std::vector<Word> relation_neighbours(Presentation const& pres,
                                        std::string_view    w,
                                        std::size_t         length_bound,
                                        bool&               truncated) {
    std::vector<Word> out;
    auto              rewrite_all = [&](Word const& from, Word const& to) {
      if (from.empty() || from.size() > w.size()) {
        return;
      }
      for (std::size_t p = 0; p + from.size() <= w.size(); ++p) {
        if (w.compare(p, from.size(), from) != 0) {
          continue;
        }
        if (w.size() - from.size() + to.size() > length_bound) {
          truncated = true;
          continue;
        }
        Word next;
        next.reserve(w.size() - from.size() + to.size());
        next.append(w.substr(0, p)).append(to).append(w.substr(p + from.size()));
        if (!next.empty()) {
          out.push_back(std::move(next));
        }
      }
    };
    for (auto const& [l, r] : pres.relations) {
      rewrite_all(l, r);
      rewrite_all(r, l);
    }
    return out;
  }

  bool replay_path(Presentation const& pres, std::vector<Word> const& path) {
    if (path.empty()) {
      return false;
    }
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      bool trunc = false;
      auto nb    = relation_neighbours(pres, path[i], SIZE_MAX, trunc);
      if (std::find(nb.begin(), nb.end(), path[i + 1]) == nb.end()) {
        return false;
      }
    }
    return true;
  }

  namespace {
    struct Side {
      std::unordered_map<Word, Word> parent;
      std::vector<Word>              frontier;
      bool                           truncated = false;

      bool done() const {
        return frontier.empty();
      }
    };

    std::vector<Word> trace(Side const& s, Word w) {
      std::vector<Word> out{w};
      for (;;) {
        auto const& p = s.parent.at(w);
        if (p.empty()) {
          break;
        }
        w = p;
        out.push_back(w);
      }
      return out;
    }
  }  // namespace

  EqualityVerdict word_equal_bfs(Presentation const& pres,
                                 std::string_view    u,
                                 std::string_view    v,
                                 BfsBounds           bounds) {
    pres.generators.validate(u);
    pres.generators.validate(v);
    auto            limit = bounds.length_bound ? bounds.length_bound : u.size() + v.size() + 4;
    EqualityVerdict out;
    if (u == v) {
      out.status   = Verdict::equal;
      out.evidence = "path";
      out.path     = {Word(u)};
      return out;
    }
    Side su, sv;
    su.parent[Word(u)] = "";
    su.frontier        = {Word(u)};
    sv.parent[Word(v)] = "";
    sv.frontier        = {Word(v)};
    auto explored      = [&] { return su.parent.size() + sv.parent.size(); };
    while (true) {
      if (su.done() && !su.truncated) {
        out.status   = Verdict::distinct;
        out.evidence = "exhaustion";
        out.detail   = "component of " + Word(u) + " has " + std::to_string(su.parent.size())
                     + " words";
        break;
      }
      if (sv.done() && !sv.truncated) {
        out.status   = Verdict::distinct;
        out.evidence = "exhaustion";
        out.detail   = "component of " + Word(v) + " has " + std::to_string(sv.parent.size())
                     + " words";
        break;
      }
      if (su.done() && sv.done()) {
        out.evidence = "bound";
        out.detail   = "length bound " + std::to_string(limit);
        break;
      }
      if (explored() > bounds.node_bound) {
        out.evidence = "bound";
        out.detail   = "node bound " + std::to_string(bounds.node_bound);
        break;
      }
      bool  grow_u = !su.done() && (sv.done() || su.frontier.size() <= sv.frontier.size());
      Side& a      = grow_u ? su : sv;
      Side& b      = grow_u ? sv : su;
      std::vector<Word> next;
      std::optional<Word> meet_a;
      for (auto const& w : a.frontier) {
        for (auto& y : relation_neighbours(pres, w, limit, a.truncated)) {
          if (a.parent.count(y)) {
            continue;
          }
          a.parent.emplace(y, w);
          if (b.parent.count(y)) {
            meet_a = y;
            break;
          }
          next.push_back(std::move(y));
        }
        if (meet_a) {
          break;
        }
      }
      if (meet_a) {
        auto left  = trace(su, *meet_a);
        auto right = trace(sv, *meet_a);
        std::reverse(left.begin(), left.end());
        left.insert(left.end(), right.begin() + 1, right.end());
        out.status   = Verdict::equal;
        out.evidence = "path";
        out.path     = std::move(left);
        break;
      }
      a.frontier = std::move(next);
    }
    out.explored = explored();
    return out;
  }

  std::optional<std::string> invariant_separates(PresetId preset,
                                                 std::string_view u,
                                                 std::string_view v) {
    if (!has_conserved_registry(preset)) {
      return std::nullopt;
    }
    return conserved_vector(u, preset).first_difference(conserved_vector(v, preset));
  }

  namespace {
    std::vector<MulTable> const& semigroups_of_order(std::size_t k) {
      static std::mutex                                            mtx;
      static std::map<std::size_t, std::vector<MulTable>> cache;
      std::lock_guard<std::mutex>                                  lock(mtx);
      auto                                                         it = cache.find(k);
      if (it == cache.end()) {
        it = cache.emplace(k, enumerate_semigroups(k)).first;
      }
      return it->second;
    }
  }  // namespace

  std::optional<std::string> image_separates(Presentation const& pres,
                                             std::string_view    u,
                                             std::string_view    v,
                                             std::size_t         max_order) {
    if (max_order > 5) {
      throw Error("image_separates: orders above 5 are not enumerated");
    }
    pres.generators.validate(u);
    pres.generators.validate(v);
    std::string vars(pres.generators.letters());
    WordPairs   distinct{{Word(u), Word(v)}};
    for (std::size_t k = 2; k <= max_order; ++k) {
      auto const& tables = semigroups_of_order(k);
      for (std::size_t i = 0; i < tables.size(); ++i) {
        if (auto a = find_separating_assignment(tables[i], pres.relations, distinct, vars)) {
          std::string d = "order " + std::to_string(k) + " table " + std::to_string(i) + ":";
          for (std::size_t j = 0; j < vars.size(); ++j) {
            d += std::string(" ") + vars[j] + "->" + std::to_string(a->values[j]);
          }
          return d;
        }
      }
    }
    return std::nullopt;
  }

  EqualityVerdict word_equal_bfs(PresetId preset,
                                 std::string_view u,
                                 std::string_view v,
                                 BfsBounds        bounds) {
    static std::mutex                                       mtx;
    static std::unordered_map<std::string, EqualityVerdict> memo;
    Word a(u), b(v);
    bool swapped = b < a;
    if (swapped) {
      std::swap(a, b);
    }
    auto key = preset.name() + "|" + a + "|" + b + "|" + std::to_string(bounds.length_bound) + "|"
               + std::to_string(bounds.node_bound) + "|" + std::to_string(bounds.image_order);
    EqualityVerdict out;
    bool            hit = false;
    {
      std::lock_guard<std::mutex> lock(mtx);
      auto                        it = memo.find(key);
      if (it != memo.end()) {
        out = it->second;
        hit = true;
      }
    }
    if (!hit) {
      auto pres = preset_presentation(preset);
      pres.generators.validate(a);
      pres.generators.validate(b);
      if (auto q = invariant_separates(preset, a, b)) {
        out.status   = Verdict::distinct;
        out.evidence = "invariant";
        out.detail   = *q;
      } else {
        out = word_equal_bfs(pres, a, b, bounds);
        if (out.status == Verdict::unknown && bounds.image_order >= 2) {
          if (auto h = image_separates(pres, a, b, bounds.image_order)) {
            out.status   = Verdict::distinct;
            out.evidence = "homomorphism";
            out.detail   = *h;
          }
        }
      }
      std::lock_guard<std::mutex> lock(mtx);
      memo.emplace(key, out);
    }
    if (swapped) {
      std::reverse(out.path.begin(), out.path.end());
    }
    return out;
  }

  Closure closure(Presentation const& pres,
                  std::string_view    w,
                  std::size_t         length_bound,
                  std::size_t         node_bound) {
    pres.generators.validate(w);
    Closure                  c;
    c.root = Word(w);
    std::unordered_set<Word> seen{c.root};
    c.words.push_back(c.root);
    bool truncated = false;
    for (std::size_t i = 0; i < c.words.size(); ++i) {
      if (c.words.size() > node_bound) {
        truncated = true;
        break;
      }
      for (auto& y : relation_neighbours(pres, c.words[i], length_bound, truncated)) {
        if (seen.insert(y).second) {
          c.words.push_back(std::move(y));
        }
      }
    }
    c.complete = !truncated;
    for (auto const& x : c.words) {
      c.max_len = std::max(c.max_len, x.size());
    }
    return c;
  }

  std::vector<Closure> closures(Presentation const&      pres,
                                std::vector<Word> const& words,
                                std::size_t              length_bound,
                                std::size_t              node_bound,
                                Execution                exec) {
    std::vector<Closure> out(words.size());
    for_each_index(words.size(), exec, [&](std::size_t i) {
      out[i] = closure(pres, words[i], length_bound, node_bound);
    });
    return out;
  }

  AgreementReport q_oracle_agreement(std::size_t max_len, BfsBounds bounds, Execution exec) {
    auto const id   = PresetId::parse("q");
    auto const pres = preset_presentation(id);
    auto const W    = pres.generators.words_up_to(max_len);
    std::string const vars(pres.generators.letters());

    std::vector<Word>            nf(W.size());
    std::vector<ConservedVector> cv(W.size());
    for_each_index(W.size(), exec, [&](std::size_t i) {
      nf[i] = normal_form(q_system(), W[i]);
      cv[i] = conserved_vector(W[i], id);
    });

    // images in all semigroups of order 2..min(3, image_order)
    std::vector<std::pair<MulTable const*, std::vector<elem>>> homs;
    for (std::size_t k = 2; k <= std::min<std::size_t>(3, bounds.image_order); ++k) {
      for (auto const& t : semigroups_of_order(k)) {
        for_each_relational_assignment(t, pres.relations, {}, vars, [&](Assignment const& a) {
          homs.emplace_back(&t, a.values);
        });
      }
    }
    std::vector<std::vector<elem>> sig(W.size());
    for_each_index(W.size(), exec, [&](std::size_t i) {
      for (auto const& [t, values] : homs) {
        sig[i].push_back(evaluate(*t, vars, values, W[i]));
      }
    });

    AgreementReport out;
    out.words = W.size();
    out.pairs = W.size() * (W.size() - 1) / 2;
    // pairs that share the conserved vector and the small-image signature
    std::map<std::pair<ConservedVector, std::vector<elem>>, std::vector<std::size_t>> classes;
    std::map<ConservedVector, std::size_t>                                             by_cv;
    for (std::size_t i = 0; i < W.size(); ++i) {
      classes[{cv[i], sig[i]}].push_back(i);
      ++by_cv[cv[i]];
    }
    std::size_t same_cv = 0, same_sig = 0;
    for (auto const& [k, c] : by_cv) {
      same_cv += c * (c - 1) / 2;
    }
    std::vector<std::pair<std::size_t, std::size_t>> hard;
    for (auto const& [k, c] : classes) {
      same_sig += c.size() * (c.size() - 1) / 2;
      for (std::size_t a = 0; a < c.size(); ++a) {
        for (std::size_t b = a + 1; b < c.size(); ++b) {
          hard.emplace_back(c[a], c[b]);
        }
      }
    }
    out.by_invariant = out.pairs - same_cv;
    out.by_image     = same_cv - same_sig;
    // pairs separated so far are all normal-form distinct or a contradiction
    std::size_t early_contra = 0;
    for (std::size_t i = 0; i < W.size(); ++i) {
      for (std::size_t j = i + 1; j < W.size(); ++j) {
        if (nf[i] == nf[j] && (cv[i] != cv[j] || sig[i] != sig[j])) {
          ++early_contra;
          if (out.examples.size() < 5) {
            out.examples.emplace_back(W[i], W[j]);
          }
        }
      }
    }

    std::vector<Verdict>     verdict(hard.size());
    std::vector<std::string> evidence(hard.size());
    for_each_index(hard.size(), exec, [&](std::size_t h) {
      auto const& u = W[hard[h].first];
      auto const& v = W[hard[h].second];
      auto        r = word_equal_bfs(pres, u, v, bounds);
      if (r.status == Verdict::unknown && bounds.image_order >= 4) {
        for (std::size_t k = 4; k <= bounds.image_order && r.status == Verdict::unknown; ++k) {
          auto const& tables = semigroups_of_order(k);
          WordPairs   d{{u, v}};
          for (auto const& t : tables) {
            if (find_separating_assignment(t, pres.relations, d, vars)) {
              r.status   = Verdict::distinct;
              r.evidence = "homomorphism";
              break;
            }
          }
        }
      }
      verdict[h]  = r.status;
      evidence[h] = r.evidence;
    });
    out.contradictions = early_contra;
    out.agree          = out.pairs - same_sig - early_contra;
    for (std::size_t h = 0; h < hard.size(); ++h) {
      bool same = nf[hard[h].first] == nf[hard[h].second];
      if (verdict[h] == Verdict::unknown) {
        ++out.unknown;
      } else if ((verdict[h] == Verdict::equal) == same) {
        ++out.agree;
        out.by_path += evidence[h] == "path";
        out.by_exhaustion += evidence[h] == "exhaustion";
        out.by_image += evidence[h] == "homomorphism";
      } else {
        ++out.contradictions;
      }
      if (verdict[h] == Verdict::unknown || (verdict[h] == Verdict::equal) != same) {
        if (out.examples.size() < 5) {
          out.examples.emplace_back(W[hard[h].first], W[hard[h].second]);
        }
      }
    }
    return out;
  }

}  // namespace lef
