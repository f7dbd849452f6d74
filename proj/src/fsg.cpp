#include "lef/fsg.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "lef/error.hpp"

namespace lef {

  MulTable::MulTable(std::size_t order, std::vector<elem> table, std::vector<std::string> labels)
      : _n(order), _t(std::move(table)), _labels(std::move(labels)) {
    if (_n == 0) {
      throw Error("multiplication table of order 0");
    }
    if (_t.size() != _n * _n) {
      throw Error("multiplication table of order " + std::to_string(_n) + " needs "
                  + std::to_string(_n * _n) + " entries, got " + std::to_string(_t.size()));
    }
    for (std::size_t i = 0; i < _t.size(); ++i) {
      if (_t[i] >= _n) {
        throw Error("table entry (" + std::to_string(i / _n) + "," + std::to_string(i % _n)
                    + ") = " + std::to_string(_t[i]) + " is out of range");
      }
    }
    if (_labels.empty()) {
      for (std::size_t i = 0; i < _n; ++i) {
        _labels.push_back(std::to_string(i));
      }
    } else if (_labels.size() != _n) {
      throw Error("expected " + std::to_string(_n) + " labels, got "
                  + std::to_string(_labels.size()));
    }
  }

  std::optional<elem> MulTable::find_label(std::string const& s) const {
    auto it = std::find(_labels.begin(), _labels.end(), s);
    if (it == _labels.end()) {
      return std::nullopt;
    }
    return static_cast<elem>(it - _labels.begin());
  }

  elem MulTable::product(std::span<elem const> xs) const {
    if (xs.empty()) {
      throw Error("empty product");
    }
    elem acc = xs[0];
    for (std::size_t i = 1; i < xs.size(); ++i) {
      acc = at(acc, xs[i]);
    }
    return acc;
  }

  std::optional<std::array<elem, 3>> associativity_failure(MulTable const& t) {
    auto n = static_cast<elem>(t.order());
    for (elem x = 0; x < n; ++x) {
      for (elem y = 0; y < n; ++y) {
        elem xy = t.at(x, y);
        for (elem z = 0; z < n; ++z) {
          if (t.at(xy, z) != t.at(x, t.at(y, z))) {
            return std::array<elem, 3>{x, y, z};
          }
        }
      }
    }
    return std::nullopt;
  }

  bool check_associative(MulTable const& t) {
    return !associativity_failure(t).has_value();
  }

  std::optional<elem> identity_element(MulTable const& t) {
    auto n = static_cast<elem>(t.order());
    for (elem e = 0; e < n; ++e) {
      bool ok = true;
      for (elem x = 0; x < n && ok; ++x) {
        ok = t.at(e, x) == x && t.at(x, e) == x;
      }
      if (ok) {
        return e;
      }
    }
    return std::nullopt;
  }

  std::optional<elem> zero_element(MulTable const& t) {
    auto n = static_cast<elem>(t.order());
    for (elem z = 0; z < n; ++z) {
      bool ok = true;
      for (elem x = 0; x < n && ok; ++x) {
        ok = t.at(z, x) == z && t.at(x, z) == z;
      }
      if (ok) {
        return z;
      }
    }
    return std::nullopt;
  }

  bool is_idempotent(MulTable const& t, elem x) {
    return t.at(x, x) == x;
  }

  std::vector<elem> idempotents(MulTable const& t) {
    std::vector<elem> out;
    for (elem x = 0; x < t.order(); ++x) {
      if (is_idempotent(t, x)) {
        out.push_back(x);
      }
    }
    return out;
  }

  namespace {
    MulTable adjoin(MulTable const& t, bool identity, std::string const& name) {
      auto              n = t.order();
      auto              m = n + 1;
      auto              u = static_cast<elem>(n);
      std::vector<elem> d(m * m);
      for (elem x = 0; x < m; ++x) {
        for (elem y = 0; y < m; ++y) {
          elem v;
          if (x < n && y < n) {
            v = t.at(x, y);
          } else if (identity) {
            v = x == u ? y : x;
          } else {
            v = u;
          }
          d[x * m + y] = v;
        }
      }
      auto labels = t.labels();
      labels.push_back(std::find(labels.begin(), labels.end(), name) == labels.end()
                           ? name
                           : name + "'");
      return MulTable(m, std::move(d), std::move(labels));
    }
  }  // namespace

  MulTable adjoin_identity(MulTable const& t) {
    return identity_element(t) ? t : adjoin(t, true, "1");
  }

  MulTable adjoin_zero(MulTable const& t) {
    return zero_element(t) ? t : adjoin(t, false, "0");
  }

  IdempotentPower idempotent_power(MulTable const& t, elem x) {
    elem p = x;
    for (std::size_t k = 1; k <= t.order(); ++k) {
      if (is_idempotent(t, p)) {
        return {k, p, t.at(p, x) == p};
      }
      p = t.at(p, x);
    }
    throw Error("no idempotent power found; is the table associative?");
  }

  namespace {
    Partition partition_of(std::size_t n, auto&& equivalent) {
      Partition p;
      p.class_of.assign(n, SIZE_MAX);
      for (elem x = 0; x < n; ++x) {
        if (p.class_of[x] != SIZE_MAX) {
          continue;
        }
        std::vector<elem> cls;
        for (elem y = x; y < n; ++y) {
          if (p.class_of[y] == SIZE_MAX && equivalent(x, y)) {
            p.class_of[y] = p.classes.size();
            cls.push_back(y);
          }
        }
        p.classes.push_back(std::move(cls));
      }
      return p;
    }
  }  // namespace

  GreenData green(MulTable const& t) {
    auto      n = t.order();
    GreenData g;
    g.leq_l = BinaryRelation(n);
    g.leq_r = BinaryRelation(n);
    g.leq_j = BinaryRelation(n);
    std::vector<char> right(n);
    for (elem y = 0; y < n; ++y) {
      g.leq_l.set(y, y);
      g.leq_r.set(y, y);
      std::fill(right.begin(), right.end(), 0);
      right[y] = 1;
      for (elem z = 0; z < n; ++z) {
        g.leq_l.set(t.at(z, y), y);
        g.leq_r.set(t.at(y, z), y);
        right[t.at(y, z)] = 1;
      }
      // S^1 y S^1 = S^1 (y S^1)
      for (elem u = 0; u < n; ++u) {
        if (!right[u]) {
          continue;
        }
        g.leq_j.set(u, y);
        for (elem z = 0; z < n; ++z) {
          g.leq_j.set(t.at(z, u), y);
        }
      }
    }
    g.l = partition_of(n, [&](elem x, elem y) { return g.leq_l(x, y) && g.leq_l(y, x); });
    g.r = partition_of(n, [&](elem x, elem y) { return g.leq_r(x, y) && g.leq_r(y, x); });
    g.j = partition_of(n, [&](elem x, elem y) { return g.leq_j(x, y) && g.leq_j(y, x); });
    g.h = partition_of(n, [&](elem x, elem y) {
      return g.l.class_of[x] == g.l.class_of[y] && g.r.class_of[x] == g.r.class_of[y];
    });
    // D = R o L
    g.d = partition_of(n, [&](elem x, elem y) {
      for (elem z : g.r.classes[g.r.class_of[x]]) {
        if (g.l.class_of[z] == g.l.class_of[y]) {
          return true;
        }
      }
      return false;
    });
    return g;
  }

  namespace {
    bool trivial(Partition const& p) {
      return std::all_of(p.classes.begin(), p.classes.end(), [](auto const& c) {
        return c.size() == 1;
      });
    }
  }  // namespace

  bool is_j_trivial(MulTable const& t) {
    return trivial(green(t).j);
  }
  bool is_l_trivial(MulTable const& t) {
    return trivial(green(t).l);
  }
  bool is_r_trivial(MulTable const& t) {
    return trivial(green(t).r);
  }

  bool is_group(MulTable const& t) {
    auto e = identity_element(t);
    if (!e) {
      return false;
    }
    auto n = static_cast<elem>(t.order());
    for (elem x = 0; x < n; ++x) {
      bool inv = false;
      for (elem y = 0; y < n && !inv; ++y) {
        inv = t.at(x, y) == *e && t.at(y, x) == *e;
      }
      if (!inv) {
        return false;
      }
    }
    return true;
  }

  bool is_completely_simple(MulTable const& t) {
    return green(t).j.classes.size() == 1 && !idempotents(t).empty();
  }

  bool is_clifford(MulTable const& t) {
    auto n = static_cast<elem>(t.order());
    for (elem x = 0; x < n; ++x) {
      auto w = idempotent_power(t, x).value;
      if (t.at(w, x) != x) {
        return false;
      }
    }
    for (elem e : idempotents(t)) {
      for (elem y = 0; y < n; ++y) {
        if (t.at(e, y) != t.at(y, e)) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_commutative(MulTable const& t) {
    auto n = static_cast<elem>(t.order());
    for (elem x = 0; x < n; ++x) {
      for (elem y = x + 1; y < n; ++y) {
        if (t.at(x, y) != t.at(y, x)) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_semilattice(MulTable const& t) {
    return is_commutative(t) && idempotents(t).size() == t.order() && check_associative(t);
  }

  Subsemigroup generate_subsemigroup(MulTable const& t, std::span<elem const> seeds) {
    if (seeds.empty()) {
      throw Error("generate_subsemigroup: no seeds");
    }
    std::vector<std::size_t> index(t.order(), SIZE_MAX);
    std::vector<elem>        elems;
    auto                     add = [&](elem x) {
      if (x >= t.order()) {
        throw Error("generate_subsemigroup: seed " + std::to_string(x) + " out of range");
      }
      if (index[x] == SIZE_MAX) {
        index[x] = elems.size();
        elems.push_back(x);
      }
    };
    for (elem s : seeds) {
      add(s);
    }
    for (std::size_t i = 0; i < elems.size(); ++i) {
      for (std::size_t j = 0; j <= i; ++j) {
        add(t.at(elems[i], elems[j]));
        add(t.at(elems[j], elems[i]));
      }
    }
    auto                     k = elems.size();
    std::vector<elem>        d(k * k);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < k; ++i) {
      labels.push_back(t.label(elems[i]));
      for (std::size_t j = 0; j < k; ++j) {
        d[i * k + j] = static_cast<elem>(index[t.at(elems[i], elems[j])]);
      }
    }
    return {MulTable(k, std::move(d), std::move(labels)), elems};
  }

  MulTable direct_product(MulTable const& t1, MulTable const& t2) {
    auto              n1 = t1.order(), n2 = t2.order(), n = n1 * n2;
    std::vector<elem> d(n * n);
    std::vector<std::string> labels;
    for (elem a = 0; a < n1; ++a) {
      for (elem b = 0; b < n2; ++b) {
        labels.push_back("(" + t1.label(a) + "," + t2.label(b) + ")");
      }
    }
    for (elem a = 0; a < n1; ++a) {
      for (elem b = 0; b < n2; ++b) {
        for (elem c = 0; c < n1; ++c) {
          for (elem e = 0; e < n2; ++e) {
            d[(a * n2 + b) * n + (c * n2 + e)]
                = static_cast<elem>(t1.at(a, c) * n2 + t2.at(b, e));
          }
        }
      }
    }
    return MulTable(n, std::move(d), std::move(labels));
  }

  MulTable permute(MulTable const& t, std::span<elem const> perm) {
    auto n = t.order();
    if (perm.size() != n) {
      throw Error("permutation has the wrong size");
    }
    std::vector<elem>        d(n * n);
    std::vector<std::string> labels(n);
    for (elem x = 0; x < n; ++x) {
      labels[perm[x]] = t.label(x);
      for (elem y = 0; y < n; ++y) {
        d[perm[x] * n + perm[y]] = perm[t.at(x, y)];
      }
    }
    return MulTable(n, std::move(d), std::move(labels));
  }

  std::string egg_box(MulTable const& t) {
    auto               g = green(t);
    std::ostringstream out;
    for (std::size_t k = 0; k < g.d.classes.size(); ++k) {
      auto const&              dc = g.d.classes[k];
      std::vector<std::size_t> rows, cols;
      for (elem x : dc) {
        if (std::find(rows.begin(), rows.end(), g.r.class_of[x]) == rows.end()) {
          rows.push_back(g.r.class_of[x]);
        }
        if (std::find(cols.begin(), cols.end(), g.l.class_of[x]) == cols.end()) {
          cols.push_back(g.l.class_of[x]);
        }
      }
      std::vector<std::vector<std::string>> cells(rows.size(),
                                                  std::vector<std::string>(cols.size()));
      std::size_t                           width = 1;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < cols.size(); ++j) {
          std::string s;
          for (elem x : g.r.classes[rows[i]]) {
            if (g.l.class_of[x] == cols[j]) {
              s += (s.empty() ? "" : ",") + t.label(x) + (is_idempotent(t, x) ? "*" : "");
            }
          }
          width       = std::max(width, s.size());
          cells[i][j] = s;
        }
      }
      out << "D-class " << k + 1 << " (" << dc.size() << " element"
          << (dc.size() == 1 ? "" : "s") << ")\n";
      std::string rule = "+";
      for (std::size_t j = 0; j < cols.size(); ++j) {
        rule += std::string(width + 2, '-') + "+";
      }
      out << rule << "\n";
      for (auto const& row : cells) {
        out << "|";
        for (auto const& c : row) {
          out << " " << c << std::string(width - c.size(), ' ') << " |";
        }
        out << "\n" << rule << "\n";
      }
    }
    return out.str();
  }

  ClassFilter parse_class_filter(std::string const& raw) {
    std::string name = raw;
    std::replace(name.begin(), name.end(), '-', '_');
    if (name == "any") {
      return ClassFilter::any;
    } else if (name == "group") {
      return ClassFilter::group;
    } else if (name == "j_trivial") {
      return ClassFilter::j_trivial;
    } else if (name == "l_trivial") {
      return ClassFilter::l_trivial;
    } else if (name == "r_trivial") {
      return ClassFilter::r_trivial;
    } else if (name == "completely_simple") {
      return ClassFilter::completely_simple;
    } else if (name == "clifford") {
      return ClassFilter::clifford;
    }
    throw Error("unknown class \"" + raw
                + "\" (expected any, group, j-trivial, l-trivial, r-trivial, "
                  "completely-simple, clifford)");
  }

  std::string to_string(ClassFilter f) {
    switch (f) {
      case ClassFilter::any:
        return "any";
      case ClassFilter::group:
        return "group";
      case ClassFilter::j_trivial:
        return "j-trivial";
      case ClassFilter::l_trivial:
        return "l-trivial";
      case ClassFilter::r_trivial:
        return "r-trivial";
      case ClassFilter::completely_simple:
        return "completely-simple";
      case ClassFilter::clifford:
        return "clifford";
    }
    return "?";
  }

  bool satisfies(MulTable const& t, ClassFilter f) {
    switch (f) {
      case ClassFilter::any:
        return true;
      case ClassFilter::group:
        return is_group(t);
      case ClassFilter::j_trivial:
        return is_j_trivial(t);
      case ClassFilter::l_trivial:
        return is_l_trivial(t);
      case ClassFilter::r_trivial:
        return is_r_trivial(t);
      case ClassFilter::completely_simple:
        return is_completely_simple(t);
      case ClassFilter::clifford:
        return is_clifford(t);
    }
    return false;
  }

}  // namespace lef
