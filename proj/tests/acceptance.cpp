#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "lef/appendix.hpp"
#include "lef/approx.hpp"
#include "lef/constructors.hpp"
#include "lef/lwf.hpp"
#include "lef/oracle.hpp"
#include "lef/search.hpp"
#include "lef/systems.hpp"

using namespace lef;

namespace {

  int failures = 0;

  void criterion(int id, std::string const& name, std::function<bool(std::ostream&)> const& body) {
    std::ostringstream note;
    auto               t0 = std::chrono::steady_clock::now();
    bool               ok = false;
    try {
      ok = body(note);
    } catch (std::exception const& e) {
      note << "exception: " << e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    failures += !ok;
    std::printf("%s %2d %s: %s (%.1fs)\n", ok ? "PASS" : "FAIL", id, name.c_str(), note.str().c_str(), secs);
    std::fflush(stdout);
  }

  double elapsed(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }

  std::vector<MulTable> tables_up_to(std::size_t k, ClassFilter f) {
    std::vector<MulTable> out;
    for (std::size_t i = 1; i <= k; ++i) {
      for (auto& t : enumerate_semigroups(i, f)) {
        out.push_back(std::move(t));
      }
    }
    return out;
  }

  bool census_is_clean(std::ostream& note, char const* what, AssignmentCensus const& c) {
    note << what << ": " << c.tables << " tables, " << c.total << " assignments, " << c.untagged
         << " counterexamples; ";
    return c.total > 0 && c.untagged == 0;
  }

}  // namespace

int main() {
  criterion(1, "appendix A", [](std::ostream& note) {
    auto t0 = std::chrono::steady_clock::now();
    auto r  = verify_appendix(AppendixTable::a, 4);
    note << r.confirmed_rows() << "/" << r.rows.size() << " rows joined at exponents <= 4";
    return r.instantiable_rows() == r.rows.size() && r.all_confirmed() && elapsed(t0) < 120;
  });

  criterion(2, "appendix B", [](std::ostream& note) {
    bool ok = true;
    for (long n : {1, 2}) {
      auto t0 = std::chrono::steady_clock::now();
      auto r  = verify_appendix(AppendixTable::b, 4, n);
      note << "n=" << n << ": " << r.confirmed_rows() << "/" << r.instantiable_rows()
           << " instantiable rows joined; ";
      ok = ok && r.instantiable_rows() > 0 && r.all_confirmed() && elapsed(t0) < 600;
    }
    return ok;
  });

  criterion(3, "termination order", [](std::ostream& note) {
    std::size_t instances = 0, violations = 0;
    for (auto const& s : {q_system(), fn_system(1), fn_system(2), sm_system(3)}) {
      auto r = check_termination_order(s, 4);
      instances += r.instances;
      violations += r.shortlex_violations.size();
    }
    note << instances << " rule instances, " << violations << " violations";
    return instances > 0 && violations == 0;
  });

  criterion(4, "F_n shadow", [](std::ostream& note) {
    std::size_t exceptions = 0;
    for (long n : {1, 2, 5}) {
      FnHandle                    f(n);
      std::map<Word, Word>        q_to_f;
      std::map<Word, std::set<Word>> f_to_q;
      auto W = acebx().words_up_to(static_cast<std::size_t>(std::min(n, 5L)));
      for (auto const& w : W) {
        auto q  = normal_form(q_system(), w);
        auto fn = f.normal(w);
        auto [it, fresh] = q_to_f.emplace(q, fn);
        exceptions += !fresh && it->second != fn;
        f_to_q[fn].insert(q);
      }
      std::size_t merged = 0;
      if (n == 5) {
        for (auto const& [fn, qs] : f_to_q) {
          merged += qs.size() - 1;
        }
        exceptions += merged;
      }
      note << "n=" << n << ": " << W.size() << " words, " << q_to_f.size() << " Q classes; ";
    }
    note << exceptions << " exceptions";
    return exceptions == 0;
  });

  criterion(5, "bicyclic witness", [](std::ostream& note) {
    auto t0 = std::chrono::steady_clock::now();
    auto r  = embed_partial_table(bicyclic4(), 4, ClassFilter::any);
    note << to_string(r.status) << ", complete search over order 4, " << r.explored << " nodes";
    return r.status == SearchStatus::not_embeddable_up_to_bound && r.orders == std::vector<std::size_t>{4}
           && elapsed(t0) < 300;
  });

  criterion(6, "Malcev group collapse", [](std::ostream& note) {
    auto c = preset_presentation(PresetId::parse("c"));
    return census_is_clean(note, "groups of order <= 6",
                           assignment_census(tables_up_to(6, ClassFilter::group), c.relations, {{"cu", "dv"}}));
  });

  criterion(7, "J-trivial collapse for Q", [](std::ostream& note) {
    auto t0 = std::chrono::steady_clock::now();
    auto q  = preset_presentation(PresetId::parse("q"));
    bool ok = census_is_clean(note, "J-trivial of order <= 4",
                              assignment_census(tables_up_to(4, ClassFilter::j_trivial), q.relations,
                                                {{"xax", "xex"}}));
    return ok && elapsed(t0) < 900;
  });

  criterion(8, "S/T collapse", [](std::ostream& note) {
    auto all = tables_up_to(4, ClassFilter::any);
    bool ok  = true;
    for (auto name : {"s", "t"}) {
      auto p = preset_presentation(PresetId::parse(name));
      ok     = census_is_clean(note, name, assignment_census(all, p.relations, {{"xaxb", "bxax"}, {"xax", "xex"}}))
           && ok;
    }
    return ok;
  });

  criterion(9, "constructive lemmas", [](std::ostream& note) {
    auto c = approx_campaign(200, 1);
    note << "rees " << c.rees_valid << "/" << c.instances << ", semilattice " << c.semilattice_valid << "/"
         << c.instances << ", clifford " << c.semilattice_clifford << "/" << c.instances;
    for (auto const& f : c.failures) {
      note << "; " << f;
    }
    return c.instances == 200 && c.all_passed();
  });

  criterion(10, "LWF construction", [](std::ostream& note) {
    auto      t0 = std::chrono::steady_clock::now();
    auto      t  = PresetId::parse("t");
    auto      s  = PresetId::parse("s");
    LwfOptions opts;
    WordHost  th{t, opts.bounds};
    WordHost  sh{s, opts.bounds};
    auto      L1 = enumerate_preaccurate(t, 1, 8);
    auto      words = L1.words();
    bool      gens  = std::set<Word>(words.begin(), words.end()) == std::set<Word>{"a", "c", "d", "e", "b", "x"};
    auto      Ht    = make_subset(th, MembershipOracle(t, 1).representatives());
    auto      rt    = build_lwf_wrapping(t, Ht, 1, opts);
    auto      vt    = check_lwf_wrapping(th, Ht, rt.wrap);
    auto      Hs    = make_subset(sh, {"a"});
    auto      rs    = build_lwf_wrapping(s, Hs, 1, opts);
    auto      vs    = check_lwf_wrapping(sh, Hs, rs.wrap);
    note << "L_1(T) has " << words.size() << " words; T: D_" << rt.m << " of order " << rt.wrap.table.order()
         << " " << vt.kind << "; S: S_" << rs.m << " quotient of order " << rs.wrap.table.order() << " "
         << vs.kind;
    return gens && words.size() == 6 && vt.valid && vs.valid && elapsed(t0) < 60;
  });

  criterion(11, "oracle coherence", [](std::ostream& note) {
    auto        tid = PresetId::parse("t");
    auto        tp  = preset_presentation(tid);
    auto        W   = tp.generators.words_up_to(4);
    auto        cl  = closures(tp, W, 10, 20000);
    std::size_t joined = 0, reached = 0;
    for (auto const& c : cl) {
      auto cv = conserved_vector(c.root, tid);
      for (auto const& w : c.words) {
        ++reached;
        joined += conserved_vector(w, tid) != cv;
      }
    }
    note << "T: " << W.size() << " words, " << reached << " reached, " << joined
         << " separated pairs joined; ";
    BfsBounds b;
    b.image_order = 5;
    auto q = q_oracle_agreement(5, b);
    note << "Q: " << q.agree << "/" << q.pairs << " pairs agree, " << q.contradictions << " contradictions, "
         << q.unknown << " undecided";
    if (!q.examples.empty()) {
      note << " (e.g. " << q.examples.front().first << " vs " << q.examples.front().second << ")";
    }
    return joined == 0 && q.agree == q.pairs;
  });

  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
