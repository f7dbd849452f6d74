#include "lef/constructors.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <mutex>
#include <numeric>

#include "lef/error.hpp"
#include "lef/systems.hpp"

namespace lef {

  namespace {
    constexpr std::size_t max_quotient_order = 6000;

    std::string show(std::pair<elem, elem> p) {
      return "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")";
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Rees matrix semigroups
  ////////////////////////////////////////////////////////////////////////

  std::size_t rees_index(ReesSpec const& spec, std::size_t i, elem g, std::size_t lambda) {
    return (i * spec.group.order() + g) * spec.lambda_size + lambda;
  }

  MulTable rees_matrix(ReesSpec const& spec) {
    auto const& G = spec.group;
    if (!is_group(G) || !check_associative(G)) {
      throw Error("rees_matrix: the base table is not a group");
    }
    if (spec.i_size == 0 || spec.lambda_size == 0) {
      throw Error("rees_matrix: index sets must be nonempty");
    }
    if (spec.p.size() != spec.lambda_size) {
      throw Error("rees_matrix: sandwich matrix needs " + std::to_string(spec.lambda_size)
                  + " rows");
    }
    for (std::size_t l = 0; l < spec.lambda_size; ++l) {
      if (spec.p[l].size() != spec.i_size) {
        throw Error("rees_matrix: sandwich row " + std::to_string(l) + " needs "
                    + std::to_string(spec.i_size) + " entries");
      }
      for (elem v : spec.p[l]) {
        if (v >= G.order()) {
          throw Error("rees_matrix: sandwich entry out of range");
        }
      }
    }
    auto                     g = G.order();
    auto                     n = spec.i_size * g * spec.lambda_size;
    std::vector<elem>        d(n * n);
    std::vector<std::string> labels(n);
    for (std::size_t i = 0; i < spec.i_size; ++i) {
      for (elem x = 0; x < g; ++x) {
        for (std::size_t l = 0; l < spec.lambda_size; ++l) {
          auto a    = rees_index(spec, i, x, l);
          labels[a] = "(" + std::to_string(i) + "," + G.label(x) + "," + std::to_string(l) + ")";
          for (std::size_t j = 0; j < spec.i_size; ++j) {
            for (elem y = 0; y < g; ++y) {
              for (std::size_t m = 0; m < spec.lambda_size; ++m) {
                elem prod = G.at(G.at(x, spec.p[l][j]), y);
                d[a * n + rees_index(spec, j, y, m)] = static_cast<elem>(rees_index(spec, i, prod, m));
              }
            }
          }
        }
      }
    }
    return MulTable(n, std::move(d), std::move(labels));
  }

  ////////////////////////////////////////////////////////////////////////
  // Semilattices of semigroups
  ////////////////////////////////////////////////////////////////////////

  bool semilattice_leq(MulTable const& meet, elem e1, elem e2) {
    return meet.at(e1, e2) == e1;
  }

  namespace {
    std::vector<elem> identity_map(std::size_t n) {
      std::vector<elem> v(n);
      std::iota(v.begin(), v.end(), 0);
      return v;
    }

    std::vector<elem> const& hom_of(SemilatticeSpec const& spec,
                                    elem                   e1,
                                    elem                   e2,
                                    std::vector<elem>&     scratch) {
      if (e1 == e2) {
        auto it = spec.homs.find({e1, e2});
        if (it != spec.homs.end()) {
          return it->second;
        }
        scratch = identity_map(spec.components[e1].order());
        return scratch;
      }
      auto it = spec.homs.find({e1, e2});
      if (it == spec.homs.end()) {
        throw Error("semilattice: missing homomorphism " + show({e1, e2}));
      }
      return it->second;
    }
  }  // namespace

  void validate_semilattice_spec(SemilatticeSpec const& spec) {
    auto const& E = spec.meet;
    if (!is_semilattice(E)) {
      throw Error("semilattice: the index table is not commutative, idempotent and associative");
    }
    auto k = static_cast<elem>(E.order());
    if (spec.components.size() != k) {
      throw Error("semilattice: expected " + std::to_string(k) + " components, got "
                  + std::to_string(spec.components.size()));
    }
    for (elem e = 0; e < k; ++e) {
      if (auto f = associativity_failure(spec.components[e])) {
        throw Error("semilattice: component " + std::to_string(e) + " is not associative");
      }
    }
    for (auto const& [key, map] : spec.homs) {
      auto [e1, e2] = key;
      if (e1 >= k || e2 >= k || !semilattice_leq(E, e2, e1)) {
        throw Error("semilattice: homomorphism " + show(key) + " is not between e1 >= e2");
      }
      auto const& S1 = spec.components[e1];
      auto const& S2 = spec.components[e2];
      if (map.size() != S1.order()) {
        throw Error("semilattice: homomorphism " + show(key) + " has the wrong domain size");
      }
      for (elem v : map) {
        if (v >= S2.order()) {
          throw Error("semilattice: homomorphism " + show(key) + " leaves its codomain");
        }
      }
      for (elem x = 0; x < S1.order(); ++x) {
        if (e1 == e2 && map[x] != x) {
          throw Error("semilattice: homomorphism " + show(key) + " is not the identity");
        }
        for (elem y = 0; y < S1.order(); ++y) {
          if (map[S1.at(x, y)] != S2.at(map[x], map[y])) {
            throw Error("semilattice: map " + show(key) + " is not a homomorphism at ("
                        + S1.label(x) + ", " + S1.label(y) + ")");
          }
        }
      }
    }
    std::vector<elem> s1, s2, s3;
    for (elem a = 0; a < k; ++a) {
      for (elem b = 0; b < k; ++b) {
        if (!semilattice_leq(E, b, a)) {
          continue;
        }
        auto const& ab = hom_of(spec, a, b, s1);
        for (elem c = 0; c < k; ++c) {
          if (!semilattice_leq(E, c, b)) {
            continue;
          }
          auto const& bc = hom_of(spec, b, c, s2);
          auto const& ac = hom_of(spec, a, c, s3);
          for (elem x = 0; x < spec.components[a].order(); ++x) {
            if (bc[ab[x]] != ac[x]) {
              throw Error("semilattice: composition fails for (" + std::to_string(a) + ","
                          + std::to_string(b) + "," + std::to_string(c) + ")");
            }
          }
        }
      }
    }
  }

  std::vector<std::size_t> semilattice_offsets(SemilatticeSpec const& spec) {
    std::vector<std::size_t> off(spec.components.size() + 1, 0);
    for (std::size_t e = 0; e < spec.components.size(); ++e) {
      off[e + 1] = off[e] + spec.components[e].order();
    }
    return off;
  }

  MulTable semilattice_semigroup(SemilatticeSpec const& spec, bool check_associativity) {
    validate_semilattice_spec(spec);
    auto const&              E   = spec.meet;
    auto                     k   = static_cast<elem>(E.order());
    auto                     off = semilattice_offsets(spec);
    auto                     n   = off.back();
    std::vector<elem>        d(n * n);
    std::vector<std::string> labels;
    for (elem e = 0; e < k; ++e) {
      for (elem x = 0; x < spec.components[e].order(); ++x) {
        labels.push_back(E.label(e) + ":" + spec.components[e].label(x));
      }
    }
    std::vector<elem> s1, s2;
    for (elem e1 = 0; e1 < k; ++e1) {
      for (elem e2 = 0; e2 < k; ++e2) {
        elem        m  = E.at(e1, e2);
        auto const& f1 = hom_of(spec, e1, m, s1);
        auto const& f2 = hom_of(spec, e2, m, s2);
        auto const& S  = spec.components[m];
        for (elem x = 0; x < spec.components[e1].order(); ++x) {
          for (elem y = 0; y < spec.components[e2].order(); ++y) {
            d[(off[e1] + x) * n + off[e2] + y] = static_cast<elem>(off[m] + S.at(f1[x], f2[y]));
          }
        }
      }
    }
    MulTable t(n, std::move(d), std::move(labels));
    if (!check_associativity) {
      return t;
    }
    if (auto f = associativity_failure(t)) {
      throw Error("semilattice: the glued product is not associative at (" + t.label((*f)[0])
                  + ", " + t.label((*f)[1]) + ", " + t.label((*f)[2]) + ")");
    }
    return t;
  }

  ////////////////////////////////////////////////////////////////////////
  // Word quotients
  ////////////////////////////////////////////////////////////////////////

  elem WordQuotient::image(std::string_view raw) const {
    Word w(raw);
    if (sm_m > 0) {
      w = sm_normal_form(w, sm_m);
      if (e_reduced_length(w) > max_len) {
        return zero;
      }
    }
    auto it = index.find(w);
    if (it != index.end()) {
      return it->second;
    }
    if (w.size() > max_len) {
      return zero;
    }
    throw Error("word \"" + Word(w) + "\" has no image in the quotient");
  }

  namespace {
    struct UnionFind {
      std::vector<std::size_t> parent;
      explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
      }
      std::size_t find(std::size_t x) {
        while (parent[x] != x) {
          x = parent[x] = parent[parent[x]];
        }
        return x;
      }
      void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) {
          parent[std::max(a, b)] = std::min(a, b);
        }
      }
    };

    // Builds the table from representatives (shortlex ordered) and a map
    // from every word of length <= max_len to its class.
    WordQuotient finish_quotient(std::vector<Word>              reps,
                                 std::unordered_map<Word, elem> index,
                                 std::size_t                    max_len,
                                 auto&&                         reduce) {
      auto n = reps.size() + 1;
      if (n > max_quotient_order) {
        throw Error("quotient of order " + std::to_string(n) + " exceeds the limit of "
                    + std::to_string(max_quotient_order));
      }
      auto              zero = static_cast<elem>(reps.size());
      std::vector<elem> d(n * n, zero);
      for (std::size_t i = 0; i < reps.size(); ++i) {
        for (std::size_t j = 0; j < reps.size(); ++j) {
          if (reps[i].size() + reps[j].size() > max_len) {
            continue;
          }
          auto w  = reduce(reps[i] + reps[j]);
          auto it = index.find(w);
          if (it != index.end()) {
            d[i * n + j] = it->second;
          }
        }
      }
      reps.push_back("0");
      WordQuotient q{MulTable(n, std::move(d), std::move(reps)), zero, max_len, std::move(index)};
      return q;
    }
  }  // namespace

  WordQuotient quotient_by_length_ideal(Alphabet const&                           alphabet,
                                        std::size_t                               max_len,
                                        std::vector<std::pair<Word, Word>> const& relations) {
    if (max_len == 0) {
      throw Error("quotient_by_length_ideal: max_len must be at least 1");
    }
    for (auto const& [u, v] : relations) {
      alphabet.validate(u);
      alphabet.validate(v);
      if (u.size() != v.size() || u.empty()) {
        throw Error("quotient_by_length_ideal: relation " + u + " = " + v
                    + " does not preserve length");
      }
    }
    std::size_t total = 0, layer = 1;
    for (std::size_t len = 1; len <= max_len; ++len) {
      layer *= alphabet.size();
      total += layer;
      if (total >= max_quotient_order) {
        throw Error("quotient_by_length_ideal: more than " + std::to_string(max_quotient_order)
                    + " words up to length " + std::to_string(max_len));
      }
    }
    std::vector<Word>              reps;
    std::unordered_map<Word, elem> index;
    for (std::size_t len = 1; len <= max_len; ++len) {
      auto                                  words = alphabet.words_of_length(len);
      std::unordered_map<Word, std::size_t> pos;
      for (std::size_t i = 0; i < words.size(); ++i) {
        pos[words[i]] = i;
      }
      UnionFind uf(words.size());
      for (std::size_t i = 0; i < words.size(); ++i) {
        auto const& w = words[i];
        for (auto const& [u, v] : relations) {
          if (u.size() > len) {
            continue;
          }
          for (std::size_t p = 0; p + u.size() <= len; ++p) {
            if (w.compare(p, u.size(), u) == 0) {
              uf.unite(i, pos.at(w.substr(0, p) + v + w.substr(p + u.size())));
            }
          }
        }
      }
      std::vector<elem> class_elem(words.size(), 0);
      for (std::size_t i = 0; i < words.size(); ++i) {
        auto root = uf.find(i);
        if (root == i) {
          class_elem[i] = static_cast<elem>(reps.size());
          reps.push_back(words[i]);
        }
        index[words[i]] = class_elem[root];
      }
    }
    return finish_quotient(std::move(reps), std::move(index), max_len, [](Word const& w) {
      return w;
    });
  }

  Word sm_normal_form(std::string_view w, long m) {
    if (m < 2) {
      throw Error("S_m requires m >= 2");
    }
    Word        out;
    std::size_t i = 0;
    while (i < w.size()) {
      if (w[i] != 'e') {
        out += w[i++];
        continue;
      }
      std::size_t k = 0;
      while (i < w.size() && w[i] == 'e') {
        ++k;
        ++i;
      }
      out.append(1 + (k - 1) % static_cast<std::size_t>(m - 1), 'e');
    }
    return out;
  }

  WordQuotient sm_quotient(long m, std::size_t bound) {
    if (m < 2) {
      throw Error("S_m requires m >= 2");
    }
    auto const& A = acebx();
    // normal forms: e-runs of length < m around at most `bound` other letters
    std::vector<Word> layer{""};
    std::vector<Word> normal;
    std::vector<Word> runs;
    for (long k = 0; k < m; ++k) {
      runs.push_back(Word(static_cast<std::size_t>(k), 'e'));
    }
    for (std::size_t len = 0; len <= bound; ++len) {
      std::vector<Word> next;
      for (auto const& w : layer) {
        for (auto const& r : runs) {
          if (!(w + r).empty()) {
            normal.push_back(w + r);
          }
          if (len < bound) {
            for (char c : std::string_view("acbx")) {
              next.push_back(w + r + c);
            }
          }
        }
      }
      layer = std::move(next);
      if (normal.size() >= max_quotient_order) {
        throw Error("sm_quotient: more than " + std::to_string(max_quotient_order) + " elements");
      }
    }
    std::sort(normal.begin(), normal.end(), [&](Word const& a, Word const& b) {
      return A.shortlex_less(a, b);
    });
    std::unordered_map<Word, elem> index;
    for (std::size_t i = 0; i < normal.size(); ++i) {
      index[normal[i]] = static_cast<elem>(i);
    }
    auto n    = normal.size() + 1;
    auto zero = static_cast<elem>(normal.size());
    if (n > max_quotient_order) {
      throw Error("sm_quotient: more than " + std::to_string(max_quotient_order) + " elements");
    }
    std::vector<elem> d(n * n, zero);
    for (std::size_t i = 0; i < normal.size(); ++i) {
      for (std::size_t j = 0; j < normal.size(); ++j) {
        auto w = sm_normal_form(normal[i] + normal[j], m);
        if (e_reduced_length(w) <= bound) {
          d[i * n + j] = index.at(w);
        }
      }
    }
    normal.push_back("0");
    WordQuotient q{MulTable(n, std::move(d), std::move(normal)), zero, bound, std::move(index), m};
    return q;
  }

  ////////////////////////////////////////////////////////////////////////
  // F_n
  ////////////////////////////////////////////////////////////////////////

  struct FnHandle::Memo {
    std::mutex                     mtx;
    std::unordered_map<Word, Word> nf;
  };

  FnHandle::FnHandle(long n)
      : _n(n), _system(std::make_shared<RewriteSystem>(fn_system(n))), _memo(std::make_shared<Memo>()) {}

  bool FnHandle::is_zero(std::string_view w) const {
    return w == zero_word || block_count_s(w) > static_cast<std::size_t>(_n);
  }

  Word FnHandle::normal(std::string_view w) const {
    if (w.empty()) {
      throw Error("F_n has no empty word");
    }
    if (is_zero(w)) {
      return zero_word;
    }
    Word key(w);
    {
      std::lock_guard<std::mutex> lock(_memo->mtx);
      auto                        it = _memo->nf.find(key);
      if (it != _memo->nf.end()) {
        return it->second;
      }
    }
    auto nf = normal_form(*_system, key);
    std::lock_guard<std::mutex> lock(_memo->mtx);
    _memo->nf.emplace(std::move(key), nf);
    return nf;
  }

  bool FnHandle::equal(std::string_view u, std::string_view v) const {
    return normal(u) == normal(v);
  }

  Word FnHandle::multiply(std::string_view u, std::string_view v) const {
    if (u == zero_word || v == zero_word) {
      return zero_word;
    }
    return normal(Word(u) + Word(v));
  }

  long double FnHandle::order_bound() const {
    long double k = 2.0L * _n + 1;
    return std::pow(k * k * k, static_cast<long double>(_n + 1))
               * std::pow(2 * k, static_cast<long double>(_n))
           + 1;
  }

  WordQuotient FnHandle::enumerate() const {
    if (_n != 1) {
      throw Error("F_n is enumerated only for n = 1");
    }
    auto const&                    A = _system->alphabet();
    std::vector<Word>              elems;
    std::unordered_map<Word, elem> index;
    std::deque<Word>               queue;
    auto                           add = [&](Word const& w) {
      if (!index.count(w)) {
        index[w] = 0;
        elems.push_back(w);
        queue.push_back(w);
      }
    };
    for (char c : A.letters()) {
      add(normal(std::string(1, c)));
    }
    add(zero_word);
    while (!queue.empty()) {
      auto w = queue.front();
      queue.pop_front();
      for (char c : A.letters()) {
        add(multiply(w, std::string(1, c)));
      }
      if (elems.size() > order_bound()) {
        throw Error("F_1 closure exceeded its order bound");
      }
    }
    std::sort(elems.begin(), elems.end(), [&](Word const& a, Word const& b) {
      if (a == zero_word || b == zero_word) {
        return b == zero_word && a != zero_word;
      }
      return A.shortlex_less(a, b);
    });
    auto n = elems.size();
    for (std::size_t i = 0; i < n; ++i) {
      index[elems[i]] = static_cast<elem>(i);
    }
    std::vector<elem> d(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        d[i * n + j] = index.at(multiply(elems[i], elems[j]));
      }
    }
    auto         zero = index.at(zero_word);
    WordQuotient q{MulTable(n, std::move(d), elems), zero, SIZE_MAX, std::move(index)};
    return q;
  }

  FnHandle build_fn(long n) {
    return FnHandle(n);
  }

  ////////////////////////////////////////////////////////////////////////
  // Presets
  ////////////////////////////////////////////////////////////////////////

  Presentation preset_presentation(PresetId id) {
    switch (id.kind) {
      case PresetKind::q:
        return {"q",
                acebx(),
                {{"xb", "cx"}, {"ac", "ca"}, {"ae", "ea"}, {"ec", "ce"}, {"xca", "xe"}, {"aex", "ax"}}};
      case PresetKind::s:
        return {"s",
                acebx(),
                {{"axb", "acx"},
                 {"ac", "ca"},
                 {"xca", "xe"},
                 {"ea", "ae"},
                 {"aex", "ax"},
                 {"xexb", "bxex"}}};
      case PresetKind::t:
        return {"t",
                Alphabet("acdebx"),
                {{"axb", "acx"},
                 {"ac", "cd"},
                 {"xcd", "xe"},
                 {"ed", "ae"},
                 {"aex", "ax"},
                 {"xexb", "bxex"}}};
      case PresetKind::c:
        return {"c", Alphabet("abcduvxy"), {{"ax", "by"}, {"cx", "dy"}, {"au", "bv"}}};
      case PresetKind::sm:
        if (id.parameter < 2) {
          throw Error("sm:<m> requires m >= 2");
        }
        return {id.name(), acebx(), {{Word(static_cast<std::size_t>(id.parameter), 'e'), "e"}}};
      case PresetKind::fn:
        throw Error("fn:<n> is given by its rewriting system; use build_fn");
      case PresetKind::bicyclic4:
        throw Error("bicyclic4 is a partial table, not a presentation");
    }
    throw Error("unknown preset");
  }

  Word bicyclic_normal_form(std::string_view w) {
    Word out;
    for (char c : w) {
      if (c != 'a' && c != 'b') {
        throw Error("bicyclic words use the letters a and b");
      }
      if (c == 'b' && !out.empty() && out.back() == 'a') {
        out.pop_back();
      } else {
        out += c;
      }
    }
    return out;
  }

  PartialTable bicyclic4() {
    std::vector<Word> words{"", "a", "b", "ba"};
    PartialTable      pt({"1", "a", "b", "ba"});
    for (elem x = 0; x < 4; ++x) {
      for (elem y = 0; y < 4; ++y) {
        auto w  = bicyclic_normal_form(words[x] + words[y]);
        auto it = std::find(words.begin(), words.end(), w);
        if (it != words.end()) {
          pt.set(x, y, static_cast<elem>(it - words.begin()));
        }
      }
    }
    return pt;
  }

}  // namespace lef
