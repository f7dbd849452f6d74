#include "lef/lwf.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <unordered_set>

#include "lef/error.hpp"
#include "lef/parallel.hpp"

namespace lef {

  MembershipOracle::MembershipOracle(PresetId preset, long n, BfsBounds bounds)
      : _preset(preset), _n(n), _bounds(bounds), _pres(preset_presentation(preset)) {
    if (n < 1) {
      throw Error("H_n needs n >= 1");
    }
    if (!has_conserved_registry(preset)) {
      throw Error("membership oracle needs a conserved-quantity registry for " + preset.name());
    }
    _words = _pres.generators.words_up_to(static_cast<std::size_t>(n));
    for (auto const& w : _words) {
      bool fresh = true;
      for (auto const& r : _reps) {
        if (invariant_separates(_preset, w, r)) {
          continue;
        }
        auto v = word_equal_bfs(_preset, w, r, _bounds);
        if (v.status == Verdict::unknown) {
          throw Error("cannot decide whether " + w + " = " + r + " in " + preset.name());
        }
        if (v.status == Verdict::equal) {
          fresh = false;
          break;
        }
      }
      if (fresh) {
        _reps.push_back(w);
      }
    }
  }

  Verdict MembershipOracle::member(std::string_view w) const {
    bool undecided = false;
    for (auto const& r : _reps) {
      if (invariant_separates(_preset, w, r)) {
        continue;
      }
      auto v = word_equal_bfs(_preset, w, r, _bounds);
      if (v.status == Verdict::equal) {
        return Verdict::equal;
      }
      undecided = undecided || v.status == Verdict::unknown;
    }
    return undecided ? Verdict::unknown : Verdict::distinct;
  }

  std::vector<Word> PreAccurateSet::words() const {
    std::vector<Word> out;
    for (auto const& l : layers) {
      out.insert(out.end(), l.begin(), l.end());
    }
    return out;
  }

  std::size_t PreAccurateSet::grade(std::string_view w) const {
    return modulus == 0 ? w.size() : e_reduced_length(w);
  }

  bool PreAccurateSet::contains(std::string_view w) const {
    Word r = modulus == 0 ? Word(w) : sm_normal_form(w, modulus);
    auto g = grade(r);
    if (g >= layers.size()) {
      return false;
    }
    auto const& l = layers[g];
    return std::find(l.begin(), l.end(), r) != l.end();
  }

  std::size_t PreAccurateSet::max_grade() const {
    for (std::size_t k = layers.size(); k-- > 0;) {
      if (!layers[k].empty()) {
        return k;
      }
    }
    return 0;
  }

  std::size_t PreAccurateSet::max_length() const {
    std::size_t len = 0;
    for (auto const& l : layers) {
      for (auto const& w : l) {
        len = std::max(len, w.size());
      }
    }
    return len;
  }

  namespace {
    //! The shared recursion; `reduce` maps a product to its representative.
    PreAccurateSet recurse(MembershipOracle const&                  oracle,
                           long                                     modulus,
                           std::size_t                              cap,
                           Execution                                exec,
                           std::function<Word(Word const&)> const& reduce) {
      PreAccurateSet out;
      out.n               = oracle.n();
      out.modulus         = modulus;
      out.cap             = cap;
      out.short_words     = oracle.short_words();
      out.representatives = oracle.representatives();
      out.layers.assign(cap + 1, {});
      std::set<Word> seen, undecided;
      auto           less = [&](Word const& a, Word const& b) { return oracle.alphabet().lex_less(a, b); };

      // decides candidates of one grade in parallel; returns the new members
      auto decide = [&](std::set<Word> const& cand) {
        std::vector<Word> cv;
        for (auto const& w : cand) {
          if (!seen.count(w) && !undecided.count(w)) {
            cv.push_back(w);
          }
        }
        std::vector<Verdict> verdicts(cv.size());
        for_each_index(cv.size(), exec, [&](std::size_t i) { verdicts[i] = oracle.member(cv[i]); });
        std::vector<Word> fresh;
        for (std::size_t i = 0; i < cv.size(); ++i) {
          if (verdicts[i] == Verdict::equal) {
            fresh.push_back(cv[i]);
            seen.insert(cv[i]);
          } else if (verdicts[i] == Verdict::unknown) {
            undecided.insert(cv[i]);
            out.indeterminate.push_back(cv[i]);
          }
        }
        return fresh;
      };

      std::set<Word> letters;
      for (char c : oracle.alphabet().letters()) {
        letters.insert(Word(1, c));
      }
      for (auto& w : decide(letters)) {
        out.layers[out.grade(w)].push_back(w);
      }
      std::size_t last = 1;
      std::size_t k    = 0;
      for (; k <= cap; ++k) {
        if (k > 2 * last) {
          break;
        }
        // grade k is closed under splits (j, k - j), including j = 0 or k
        while (true) {
          std::set<Word> cand;
          for (std::size_t j = 0; j <= k; ++j) {
            for (auto const& p : out.layers[j]) {
              for (auto const& q : out.layers[k - j]) {
                auto w = reduce(p + q);
                if (out.grade(w) == k) {
                  cand.insert(std::move(w));
                }
              }
            }
          }
          auto fresh = decide(cand);
          if (fresh.empty()) {
            break;
          }
          auto& layer = out.layers[k];
          layer.insert(layer.end(), fresh.begin(), fresh.end());
        }
        std::sort(out.layers[k].begin(), out.layers[k].end(), less);
        if (!out.layers[k].empty()) {
          last = std::max(last, k);
        }
      }
      std::sort(out.indeterminate.begin(), out.indeterminate.end(), less);
      out.truncated = k > cap && 2 * last > cap;
      return out;
    }
  }  // namespace

  PreAccurateSet enumerate_preaccurate(PresetId    host,
                                       long        n,
                                       std::size_t length_cap,
                                       Execution   exec,
                                       BfsBounds   bounds) {
    if (length_cap < 1) {
      throw Error("enumerate_preaccurate: length cap must be at least 1");
    }
    MembershipOracle oracle(host, n, bounds);
    return recurse(oracle, 0, length_cap, exec, [](Word const& w) { return w; });
  }

  PreAccurateSet enumerate_preaccurate_sm(PresetId    host,
                                          long        n,
                                          long        m,
                                          std::size_t grade_cap,
                                          Execution   exec,
                                          BfsBounds   bounds) {
    if (grade_cap < 1) {
      throw Error("enumerate_preaccurate_sm: grade cap must be at least 1");
    }
    if (m < 2) {
      throw Error("enumerate_preaccurate_sm: m must be at least 2");
    }
    MembershipOracle oracle(host, n, bounds);
    if (!oracle.alphabet().contains('e')) {
      throw Error("enumerate_preaccurate_sm: the alphabet has no e");
    }
    return recurse(oracle, m, grade_cap, exec, [m](Word const& w) { return sm_normal_form(w, m); });
  }

  bool is_preaccurate_naive(MembershipOracle const& oracle, std::string_view w) {
    if (w.empty() || oracle.member(w) != Verdict::equal) {
      return false;
    }
    if (w.size() == 1) {
      return true;
    }
    for (std::size_t j = 1; j < w.size(); ++j) {
      if (is_preaccurate_naive(oracle, w.substr(0, j)) && is_preaccurate_naive(oracle, w.substr(j))) {
        return true;
      }
    }
    return false;
  }

  namespace {
    Word fallback_word(PresetId host, Alphabet const& A, long n) {
      auto                       len = static_cast<std::size_t>(2 * n);
      std::set<ConservedVector>  vectors;
      for (auto const& w : A.words_up_to(len)) {
        vectors.insert(conserved_vector(w, host));
      }
      for (auto const& w : A.words_of_length(len + 1)) {
        if (!vectors.count(conserved_vector(w, host))) {
          return w;
        }
      }
      throw Error("no word of length " + std::to_string(len + 1) + " is separated from H_"
                  + std::to_string(len));
    }
  }  // namespace

  LwfResult build_lwf_wrapping(PresetId host, FiniteSubset<Word> const& H, long n, LwfOptions const& opts) {
    if (host.kind != PresetKind::s && host.kind != PresetKind::t) {
      throw Error("the wrapping construction is available for s and t only");
    }
    if (n < 1) {
      throw Error("build_lwf_wrapping: n must be at least 1");
    }
    MembershipOracle hn(host, n, opts.bounds);
    for (auto const& h : H.elements) {
      auto v = hn.member(h);
      if (v != Verdict::equal) {
        throw Error("element " + h + (v == Verdict::distinct ? " is not in H_" : " is undecided for H_")
                    + std::to_string(n));
      }
    }
    LwfResult out;
    long      m_s   = 2 * n + 1;
    out.preaccurate = host.kind == PresetKind::t
                          ? enumerate_preaccurate(host, 2 * n, opts.length_cap, Execution::parallel,
                                                  opts.bounds)
                          : enumerate_preaccurate_sm(host, 2 * n, m_s, opts.length_cap,
                                                     Execution::parallel, opts.bounds);
    if (out.preaccurate.truncated) {
      throw Error("L_" + std::to_string(2 * n) + " is truncated at grade "
                  + std::to_string(opts.length_cap));
    }
    if (!out.preaccurate.indeterminate.empty()) {
      throw Error("L_" + std::to_string(2 * n) + " membership undecided for "
                  + out.preaccurate.indeterminate.front());
    }
    auto pres    = preset_presentation(host);
    out.fallback = fallback_word(host, pres.generators, n);
    auto L       = out.preaccurate.words();

    if (host.kind == PresetKind::t) {
      if (opts.closed_form_bound) {
        long double m = n * std::pow(2.0L, std::pow(6.0L, n + 1));
        throw Error("the bound m = n 2^(6^(n+1)) = " + std::to_string(static_cast<double>(m))
                    + " is too large to build");
      }
      out.m      = out.preaccurate.max_length();
      auto D     = quotient_by_length_ideal(pres.generators, out.m);
      out.wrap.table = D.table;
      out.wrap.d.assign(D.table.order(), out.fallback);
      for (auto const& w : L) {
        out.wrap.d[D.image(w)] = w;
      }
      out.wrap.d[D.zero] = out.fallback;
      return out;
    }

    out.m           = static_cast<std::size_t>(m_s);
    out.ideal_bound = out.preaccurate.max_grade();
    auto D          = sm_quotient(m_s, out.ideal_bound);
    out.wrap.table = D.table;
    out.wrap.d.assign(D.table.order(), out.fallback);
    std::vector<bool> set(D.table.order(), false);
    WordHost          S{host, opts.bounds};
    for (auto const& w : L) {
      auto x = D.image(w);
      if (x == D.zero) {
        throw Error("pre-accurate word " + w + " falls into the ideal");
      }
      if (set[x]) {
        if (!S.equal(out.wrap.d[x], w)) {
          throw Error("pre-accurate words " + out.wrap.d[x] + " and " + w
                      + " share an S_m class but differ in " + host.name());
        }
        continue;
      }
      set[x]       = true;
      out.wrap.d[x] = w;
    }
    return out;
  }

}  // namespace lef
