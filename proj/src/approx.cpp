#include "lef/approx.hpp"

#include <algorithm>
#include <numeric>
#include <mutex>
#include <set>

#include "lef/parallel.hpp"

namespace lef {

  bool WordHost::equal(Word const& u, Word const& v) const {
    if (!preset) {
      return u == v;
    }
    EqualityVerdict r = preset->kind == PresetKind::q || preset->kind == PresetKind::fn
                            ? word_equal_nf(*preset, u, v)
                            : word_equal_bfs(*preset, u, v, bounds);
    if (r.status == Verdict::unknown) {
      throw Error("word oracle for " + preset->name() + " cannot decide " + u + " = " + v + " ("
                  + r.detail + ")");
    }
    return r.status == Verdict::equal;
  }

  long SemilatticeIntSpec::multiplier(elem e1, elem e2) const {
    if (e1 == e2) {
      return 1;
    }
    auto it = mult.find({e1, e2});
    if (it == mult.end()) {
      throw Error("semilattice: no map from component " + std::to_string(e1) + " to "
                  + std::to_string(e2));
    }
    return it->second;
  }

  void validate_semilattice_int_spec(SemilatticeIntSpec const& spec) {
    auto const& E = spec.meet;
    if (!is_semilattice(E)) {
      throw Error("semilattice: the index table is not a semilattice");
    }
    auto k = static_cast<elem>(E.order());
    for (auto const& [key, m] : spec.mult) {
      if (key.first >= k || key.second >= k || key.first == key.second
          || !semilattice_leq(E, key.second, key.first)) {
        throw Error("semilattice: map (" + std::to_string(key.first) + ","
                    + std::to_string(key.second) + ") is not between e1 > e2");
      }
    }
    for (elem a = 0; a < k; ++a) {
      for (elem b = 0; b < k; ++b) {
        if (!semilattice_leq(E, b, a)) {
          continue;
        }
        for (elem c = 0; c < k; ++c) {
          if (semilattice_leq(E, c, b)
              && spec.multiplier(a, b) * spec.multiplier(b, c) != spec.multiplier(a, c)) {
            throw Error("semilattice: composition fails for (" + std::to_string(a) + ","
                        + std::to_string(b) + "," + std::to_string(c) + ")");
          }
        }
      }
    }
  }

  namespace {
    long mod(long x, long m) {
      long r = x % m;
      return r < 0 ? r + m : r;
    }
  }  // namespace

  MulTable cyclic_group(std::size_t m) {
    if (m == 0) {
      throw Error("cyclic group of order 0");
    }
    std::vector<elem> d(m * m);
    for (std::size_t x = 0; x < m; ++x) {
      for (std::size_t y = 0; y < m; ++y) {
        d[x * m + y] = static_cast<elem>((x + y) % m);
      }
    }
    return MulTable(m, std::move(d));
  }

  ApproxPair approx_integers(std::vector<long> const& xs) {
    std::set<long> distinct(xs.begin(), xs.end());
    if (distinct.size() != xs.size()) {
      throw Error("approx_integers: repeated element");
    }
    for (long m = 1;; ++m) {
      std::set<long> seen;
      bool           ok = true;
      for (long x : xs) {
        ok = seen.insert(mod(x, m)).second;
        if (!ok) {
          break;
        }
      }
      if (ok) {
        ApproxPair p{cyclic_group(static_cast<std::size_t>(m)), {}};
        for (long x : xs) {
          p.f.push_back(static_cast<elem>(mod(x, m)));
        }
        return p;
      }
    }
  }

  ReesApprox approx_rees(ReesIntSpec const& spec, FiniteSubset<ReesElem> const& Hp) {
    if (Hp.elements.empty()) {
      throw Error("approx_rees: empty subset");
    }
    std::set<std::size_t> J, Sigma;
    std::set<long>        base;
    for (auto const& x : Hp.elements) {
      if (x.i >= spec.i_size || x.lambda >= spec.lambda_size) {
        throw Error("approx_rees: index out of range");
      }
      J.insert(x.i);
      Sigma.insert(x.lambda);
      base.insert(x.g);
    }
    for (auto l : Sigma) {
      for (auto j : J) {
        base.insert(spec.p.at(l).at(j));
      }
    }
    std::set<long> z(base);
    for (long a : base) {
      for (long b : base) {
        z.insert(a + b);
        for (long c : base) {
          z.insert(a + b + c);
        }
      }
    }
    auto g = approx_integers(std::vector<long>(z.begin(), z.end()));
    auto m = static_cast<long>(g.table.order());

    std::vector<std::size_t> jv(J.begin(), J.end()), sv(Sigma.begin(), Sigma.end());
    ReesSpec                 fs{g.table, jv.size(), sv.size(), {}};
    for (auto l : sv) {
      std::vector<elem> row;
      for (auto j : jv) {
        row.push_back(static_cast<elem>(mod(spec.p[l][j], m)));
      }
      fs.p.push_back(std::move(row));
    }
    ReesApprox out{{rees_matrix(fs), {}}, static_cast<std::size_t>(m), fs};
    for (auto const& x : Hp.elements) {
      auto i = static_cast<std::size_t>(std::find(jv.begin(), jv.end(), x.i) - jv.begin());
      auto l = static_cast<std::size_t>(std::find(sv.begin(), sv.end(), x.lambda) - sv.begin());
      out.pair.f.push_back(
          static_cast<elem>(rees_index(fs, i, static_cast<elem>(mod(x.g, m)), l)));
    }
    return out;
  }

  SemilatticeApprox approx_semilattice(SemilatticeIntSpec const& spec, FiniteSubset<SlElem> const& H) {
    validate_semilattice_int_spec(spec);
    if (H.elements.empty()) {
      throw Error("approx_semilattice: empty subset");
    }
    auto const& E = spec.meet;
    // E': closure of the touched indices under meets
    std::set<elem> touched;
    for (auto const& x : H.elements) {
      if (x.e >= E.order()) {
        throw Error("approx_semilattice: component index out of range");
      }
      touched.insert(x.e);
    }
    std::vector<elem> support(touched.begin(), touched.end());
    for (std::size_t i = 0; i < support.size(); ++i) {
      for (std::size_t j = 0; j <= i; ++j) {
        elem m = E.at(support[i], support[j]);
        if (std::find(support.begin(), support.end(), m) == support.end()) {
          support.push_back(m);
        }
      }
    }
    std::sort(support.begin(), support.end());
    auto k   = support.size();
    auto pos = [&](elem e) {
      return static_cast<elem>(std::find(support.begin(), support.end(), e) - support.begin());
    };
    // K_e and its finite approximation T_e = Z_{m_e}
    std::vector<long> modulus(k);
    for (std::size_t a = 0; a < k; ++a) {
      std::set<long> K;
      for (auto const& x : H.elements) {
        if (semilattice_leq(E, support[a], x.e)) {
          K.insert(spec.multiplier(x.e, support[a]) * x.value);
        }
      }
      modulus[a] = K.empty() ? 1 : static_cast<long>(approx_integers({K.begin(), K.end()}).table.order());
    }
    // F_e = prod_{e' <= e} T_{e'}, mixed radix over e' in support order
    std::vector<std::vector<std::size_t>> below(k);
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = 0; b < k; ++b) {
        if (semilattice_leq(E, support[b], support[a])) {
          below[a].push_back(b);
        }
      }
    }
    auto encode = [&](std::size_t a, std::vector<long> const& coords) {
      std::size_t code = 0;
      for (std::size_t t = 0; t < below[a].size(); ++t) {
        code = code * static_cast<std::size_t>(modulus[below[a][t]])
               + static_cast<std::size_t>(coords[t]);
      }
      return static_cast<elem>(code);
    };
    auto decode = [&](std::size_t a, std::size_t code) {
      std::vector<long> coords(below[a].size());
      for (std::size_t t = below[a].size(); t-- > 0;) {
        auto m    = static_cast<std::size_t>(modulus[below[a][t]]);
        coords[t] = static_cast<long>(code % m);
        code /= m;
      }
      return coords;
    };

    SemilatticeApprox out;
    out.support = support;
    std::vector<elem> md(k * k);
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = 0; b < k; ++b) {
        md[a * k + b] = pos(E.at(support[a], support[b]));
      }
    }
    std::vector<std::string> mlabels;
    for (auto e : support) {
      mlabels.push_back(E.label(e));
    }
    out.finite_spec.meet = MulTable(k, md, mlabels);
    for (std::size_t a = 0; a < k; ++a) {
      std::size_t size = 1;
      for (auto b : below[a]) {
        size *= static_cast<std::size_t>(modulus[b]);
      }
      std::vector<elem> d(size * size);
      for (std::size_t x = 0; x < size; ++x) {
        auto cx = decode(a, x);
        for (std::size_t y = 0; y < size; ++y) {
          auto cy = decode(a, y);
          std::vector<long> cz(cx.size());
          for (std::size_t t = 0; t < cx.size(); ++t) {
            cz[t] = (cx[t] + cy[t]) % modulus[below[a][t]];
          }
          d[x * size + y] = encode(a, cz);
        }
      }
      out.finite_spec.components.emplace_back(size, std::move(d));
    }
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = 0; b < k; ++b) {
        if (a == b || !semilattice_leq(E, support[b], support[a])) {
          continue;
        }
        auto const&       Fa = out.finite_spec.components[a];
        std::vector<elem> map(Fa.order());
        for (std::size_t x = 0; x < Fa.order(); ++x) {
          auto              cx = decode(a, x);
          std::vector<long> cy;
          for (std::size_t t = 0; t < below[a].size(); ++t) {
            if (std::find(below[b].begin(), below[b].end(), below[a][t]) != below[b].end()) {
              cy.push_back(cx[t]);
            }
          }
          map[x] = encode(b, cy);
        }
        out.finite_spec.homs[{static_cast<elem>(a), static_cast<elem>(b)}] = map;
        out.projection[{support[a], support[b]}] = std::move(map);
      }
    }
    out.pair.table = semilattice_semigroup(out.finite_spec, false);
    auto off       = semilattice_offsets(out.finite_spec);
    for (auto const& x : H.elements) {
      auto              a = pos(x.e);
      std::vector<long> coords;
      for (auto b : below[a]) {
        coords.push_back(mod(spec.multiplier(x.e, support[b]) * x.value, modulus[b]));
      }
      out.pair.f.push_back(static_cast<elem>(off[a] + encode(a, coords)));
    }
    return out;
  }

  QuotientApprox approx_by_length_ideal(Presentation const& pres, FiniteSubset<Word> const& H) {
    std::size_t len = 1;
    for (auto const& w : H.elements) {
      len = std::max(len, w.size());
    }
    QuotientApprox out{{}, quotient_by_length_ideal(pres.generators, len, pres.relations)};
    out.pair.table = out.quotient.table;
    for (auto const& w : H.elements) {
      out.pair.f.push_back(out.quotient.image(w));
    }
    return out;
  }

  WrapMap<elem> wrap_from_approx(MulTable const&           host,
                                 FiniteSubset<elem> const& H,
                                 FiniteSubset<elem> const& HH,
                                 ApproxPair const&         pair,
                                 elem                      sink) {
    if (std::find(H.elements.begin(), H.elements.end(), sink) != H.elements.end()) {
      throw Error("wrap_from_approx: the sink " + host.label(sink) + " lies in H");
    }
    for (auto h : H.elements) {
      if (std::find(HH.elements.begin(), HH.elements.end(), h) == HH.elements.end()) {
        throw Error("wrap_from_approx: " + host.label(h) + " is missing from H u H^2");
      }
    }
    WrapMap<elem> w{pair.table, std::vector<elem>(pair.table.order(), sink)};
    for (std::size_t k = 0; k < HH.elements.size(); ++k) {
      w.d.at(pair.f.at(k)) = HH.elements[k];
    }
    return w;
  }

  namespace {
    long uniform(std::mt19937_64& rng, long lo, long hi) {
      return std::uniform_int_distribution<long>(lo, hi)(rng);
    }

    std::vector<MulTable> const& small_semilattices() {
      static std::vector<MulTable> const all = [] {
        std::vector<MulTable> out;
        for (std::size_t k = 1; k <= 3; ++k) {
          for (auto& t : enumerate_semigroups(k, ClassFilter::any, Execution::serial)) {
            if (is_semilattice(t)) {
              out.push_back(std::move(t));
            }
          }
        }
        return out;
      }();
      return all;
    }
  }  // namespace

  ReesIntSpec random_rees_spec(std::mt19937_64& rng) {
    ReesIntSpec spec;
    spec.i_size      = static_cast<std::size_t>(uniform(rng, 1, 3));
    spec.lambda_size = static_cast<std::size_t>(uniform(rng, 1, 3));
    spec.p.assign(spec.lambda_size, std::vector<long>(spec.i_size));
    for (auto& row : spec.p) {
      for (auto& x : row) {
        x = uniform(rng, -10, 10);
      }
    }
    return spec;
  }

  SemilatticeIntSpec random_semilattice_spec(std::mt19937_64& rng) {
    auto const&        all = small_semilattices();
    SemilatticeIntSpec spec;
    spec.meet = all[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(all.size()) - 1))];
    auto k    = static_cast<elem>(spec.meet.order());
    for (elem a = 0; a < k; ++a) {
      for (elem b = 0; b < k; ++b) {
        if (a != b && semilattice_leq(spec.meet, b, a)) {
          spec.mult[{a, b}] = uniform(rng, -3, 3);
        }
      }
    }
    // chains a > b > c: the long map is the composite
    for (elem a = 0; a < k; ++a) {
      for (elem b = 0; b < k; ++b) {
        for (elem c = 0; c < k; ++c) {
          if (a != b && b != c && a != c && semilattice_leq(spec.meet, b, a)
              && semilattice_leq(spec.meet, c, b)) {
            spec.mult[{a, c}] = spec.mult[{a, b}] * spec.mult[{b, c}];
          }
        }
      }
    }
    return spec;
  }

  ApproxCampaign approx_campaign(std::size_t count, std::uint64_t seed, Execution exec) {
    ApproxCampaign out;
    out.instances = count;
    std::mutex mtx;
    for_each_index(count, exec, [&](std::size_t i) {
      std::mt19937_64 rng(seed + i);
      std::string     fail;

      ReesHost              rh{random_rees_spec(rng)};
      std::set<ReesElem>    rs;
      auto                  size = uniform(rng, 1, 5);
      while (static_cast<long>(rs.size()) < size) {
        rs.insert({static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(rh.spec.i_size) - 1)),
                   uniform(rng, -10, 10),
                   static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(rh.spec.lambda_size) - 1))});
      }
      auto H1 = make_subset(rh, std::vector<ReesElem>(rs.begin(), rs.end()));
      auto r1 = approx_rees(rh.spec, H1);
      auto v1 = check_approximating_pair(rh, H1, r1.pair);

      SemilatticeIntHost sh{random_semilattice_spec(rng)};
      std::set<SlElem>   ss;
      size = uniform(rng, 1, 5);
      while (static_cast<long>(ss.size()) < size) {
        ss.insert({static_cast<elem>(uniform(rng, 0, static_cast<long>(sh.spec.meet.order()) - 1)),
                   uniform(rng, -10, 10)});
      }
      auto H2  = make_subset(sh, std::vector<SlElem>(ss.begin(), ss.end()));
      auto r2  = approx_semilattice(sh.spec, H2);
      auto v2  = check_approximating_pair(sh, H2, r2.pair);
      bool cl  = is_clifford(r2.pair.table);

      std::lock_guard<std::mutex> lock(mtx);
      out.largest_table = std::max({out.largest_table, r1.pair.table.order(), r2.pair.table.order()});
      out.rees_valid += v1.valid;
      out.semilattice_valid += v2.valid;
      out.semilattice_clifford += cl;
      if (!v1.valid) {
        out.failures.push_back("instance " + std::to_string(i) + " rees: " + v1.kind + " " + v1.message);
      }
      if (!v2.valid) {
        out.failures.push_back("instance " + std::to_string(i) + " semilattice: " + v2.kind + " "
                               + v2.message);
      }
      if (!cl) {
        out.failures.push_back("instance " + std::to_string(i) + " semilattice: not Clifford");
      }
    });
    std::sort(out.failures.begin(), out.failures.end());
    return out;
  }

}  // namespace lef
