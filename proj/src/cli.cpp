#include "lef/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <sstream>

#include "lef/appendix.hpp"
#include "lef/approx.hpp"
#include "lef/constructors.hpp"
#include "lef/fsg.hpp"
#include "lef/io.hpp"
#include "lef/lwf.hpp"
#include "lef/oracle.hpp"
#include "lef/rewrite.hpp"
#include "lef/search.hpp"
#include "lef/systems.hpp"

namespace lef::cli {

  namespace {

    std::vector<std::string> split(std::string const& s, char sep) {
      std::vector<std::string> out;
      std::string              cur;
      std::istringstream       in(s);
      while (std::getline(in, cur, sep)) {
        if (!cur.empty()) {
          out.push_back(cur);
        }
      }
      return out;
    }

    RewriteSystem resolve_system(std::string const& name) {
      auto lower = name;
      std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) {
        return static_cast<char>(std::tolower(c));
      });
      if (lower == "q") {
        return q_system();
      }
      if (lower.rfind("fn:", 0) == 0 || lower.rfind("sm:", 0) == 0) {
        auto id = PresetId::parse(lower);
        return id.kind == PresetKind::fn ? fn_system(id.parameter) : sm_system(id.parameter);
      }
      return system_from_json(read_json_file(name));
    }

    MulTable resolve_table(std::string const& spec) {
      if (spec.rfind("cyclic:", 0) == 0) {
        return cyclic_group(std::stoul(spec.substr(7)));
      }
      if (spec.rfind("enum:", 0) == 0) {
        auto parts = split(spec.substr(5), ':');
        if (parts.size() < 2 || parts.size() > 3) {
          throw Error("expected enum:<order>:<index>[:<class>]");
        }
        auto filter = parts.size() == 3 ? parse_class_filter(parts[2]) : ClassFilter::any;
        auto all    = enumerate_semigroups(std::stoul(parts[0]), filter);
        auto i      = std::stoul(parts[1]);
        if (i >= all.size()) {
          throw Error("only " + std::to_string(all.size()) + " tables of that order and class");
        }
        return all[i];
      }
      return table_from_json(read_json_file(spec));
    }

    PartialTable resolve_partial(std::string const& spec) {
      if (spec == "bicyclic4") {
        return bicyclic4();
      }
      return partial_from_json(read_json_file(spec));
    }

    WordPairs parse_pairs(std::string const& s) {
      WordPairs out;
      for (auto const& item : split(s, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) {
          throw Error("expected u=v in \"" + item + "\"");
        }
        out.emplace_back(expand_word(item.substr(0, eq)), expand_word(item.substr(eq + 1)));
      }
      return out;
    }

    std::string row_text(MulTable const& t) {
      std::string s;
      for (elem x = 0; x < t.order(); ++x) {
        if (x != 0) {
          s += " ";
        }
        for (elem y = 0; y < t.order(); ++y) {
          s += t.order() <= 10 ? std::to_string(t.at(x, y)) : (y ? "," : "") + std::to_string(t.at(x, y));
        }
      }
      return s;
    }

    Json partition_json(MulTable const& t, Partition const& p) {
      Json out = Json::array();
      for (auto const& c : p.classes) {
        Json cl = Json::array();
        for (auto x : c) {
          cl.push_back(t.label(x));
        }
        out.push_back(std::move(cl));
      }
      return out;
    }

    Json classification(MulTable const& t) {
      auto id = identity_element(t);
      auto z  = zero_element(t);
      return {{"order", t.order()},
              {"associative", check_associative(t)},
              {"commutative", is_commutative(t)},
              {"identity", id ? Json(t.label(*id)) : Json(nullptr)},
              {"zero", z ? Json(t.label(*z)) : Json(nullptr)},
              {"idempotents", idempotents(t).size()},
              {"group", is_group(t)},
              {"j-trivial", is_j_trivial(t)},
              {"l-trivial", is_l_trivial(t)},
              {"r-trivial", is_r_trivial(t)},
              {"completely-simple", is_completely_simple(t)},
              {"clifford", is_clifford(t)},
              {"semilattice", is_semilattice(t)}};
    }

    std::string verdict_line(EqualityVerdict const& v) {
      std::string s = to_string(v.status) + " (" + v.evidence + ")";
      if (!v.detail.empty()) {
        s += ": " + v.detail;
      }
      if (!v.path.empty()) {
        s += ": ";
        for (std::size_t i = 0; i < v.path.size(); ++i) {
          s += (i ? " -> " : "") + v.path[i];
        }
      }
      return s;
    }

    Json verdict_json(EqualityVerdict const& v) {
      return {{"status", to_string(v.status)},
              {"evidence", v.evidence},
              {"detail", v.detail},
              {"path", v.path},
              {"explored", v.explored}};
    }

    struct Context {
      std::ostream& out;
      bool          json = false;

      int emit(Json const& j, std::string const& text, int code) const {
        if (json) {
          out << j.dump(2) << "\n";
        } else {
          out << text;
        }
        return code;
      }
    };

  }  // namespace

  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Executable semigroup constructions: rewriting, finite tables, embeddings, approximations"};
    app.name("lef");
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "Print a JSON report");

    std::string system, word, table, partial, preset, cls = "any", relations, distinct, which = "A";
    std::string u, v, values, words, file, outfile, subset, path;
    long        bound = 3, max_exp = 4, n = 1, order = 1, count = 200;
    std::size_t max_order = 4, length_bound = 0, node_bound = 1000000, image_order = 0, cap = 8;
    std::uint64_t seed = 1;
    bool          closed_form_bound = false, count_only = false;

    auto* presets_c = app.add_subcommand("presets", "List the built-in presets");

    auto* rewrite_c = app.add_subcommand("rewrite", "Rewrite a word to normal form, showing each step");
    rewrite_c->add_option("--system", system, "q, fn:<n>, sm:<m> or a system JSON file")->required();
    rewrite_c->add_option("--word", word, "Word, e.g. \"x a^3 c\"")->required();

    auto* nf_c = app.add_subcommand("nf", "Normal form of a word");
    nf_c->add_option("--system", system, "q, fn:<n>, sm:<m> or a system JSON file")->required();
    nf_c->add_option("--word", word)->required();

    auto* conf_c = app.add_subcommand("confluence", "Check local confluence by bounded instantiation");
    conf_c->add_option("--system", system)->required();
    conf_c->add_option("--bound", bound, "Largest exponent instantiated");

    auto* term_c = app.add_subcommand("termination", "Check that every rule instance decreases");
    term_c->add_option("--system", system)->required();
    term_c->add_option("--bound", bound);

    auto* green_c = app.add_subcommand("green", "Green's relations and egg-box diagrams");
    green_c->add_option("--table", table, "Table JSON file, cyclic:<m> or enum:<order>:<index>[:<class>]")
        ->required();

    auto* classify_c = app.add_subcommand("classify", "Structural properties of a table");
    classify_c->add_option("--table", table)->required();

    auto* embed_c = app.add_subcommand("embed", "Search for an embedding of a partial table");
    embed_c->add_option("--partial", partial, "bicyclic4 or a partial-table JSON file")->required();
    embed_c->add_option("--max-order", max_order);
    embed_c->add_option("--class", cls);
    embed_c->add_option("--out", outfile, "Write the witness table");

    auto* assign_c = app.add_subcommand("assign", "Relational assignments in finite tables");
    assign_c->add_option("--table", table, "One table");
    assign_c->add_option("--order", order, "All tables of orders 1..order");
    assign_c->add_option("--class", cls);
    assign_c->add_option("--preset", preset, "Take the relations of q, s, t or c");
    assign_c->add_option("--relations", relations, "u=v,...");
    assign_c->add_option("--distinct", distinct, "u=v,... pairs expected to stay distinct")->required();

    auto* approx_c = app.add_subcommand("approx", "Approximating pairs");
    approx_c->require_subcommand(1);
    auto* ai = approx_c->add_subcommand("integers", "Z_m approximating a set of integers");
    ai->add_option("--values", values)->required();
    auto* aq = approx_c->add_subcommand("quotient", "Length-ideal quotient of a presentation");
    aq->add_option("--preset", preset)->required();
    aq->add_option("--words", words)->required();
    aq->add_option("--out", outfile);
    auto* ac = approx_c->add_subcommand("check", "Re-check a saved pair");
    ac->add_option("--pair", file)->required();
    auto* ar = approx_c->add_subcommand("random", "Randomized Rees and semilattice campaign");
    ar->add_option("--count", count);
    ar->add_option("--seed", seed);

    auto* lwf_c = app.add_subcommand("lwf", "Build and check a wrapping for s or t");
    lwf_c->add_option("--preset", preset)->required();
    lwf_c->add_option("--n", n);
    lwf_c->add_option("--subset", subset, "Comma-separated words; default H_n");
    lwf_c->add_option("--cap", cap, "Grade cap for L_{2n}");
    lwf_c->add_flag("--closed-form-bound", closed_form_bound);
    lwf_c->add_option("--out", outfile);
    lwf_c->add_option("--check", file, "Re-check a saved wrap map instead");

    auto* eq_c = app.add_subcommand("eq", "Decide equality of two words in a preset");
    eq_c->add_option("--preset", preset)->required();
    eq_c->add_option("--u", u)->required();
    eq_c->add_option("--v", v)->required();
    eq_c->add_option("--length-bound", length_bound);
    eq_c->add_option("--node-bound", node_bound);
    eq_c->add_option("--image-order", image_order, "Try homomorphisms into semigroups of order <= k");

    auto* enum_c = app.add_subcommand("enumerate", "Semigroups of an order up to isomorphism");
    enum_c->add_option("--order", order)->required();
    enum_c->add_option("--class", cls);
    enum_c->add_flag("--count", count_only, "Only print the count");

    auto* app_c = app.add_subcommand("verify-appendix", "Re-derive the critical-pair tables");
    app_c->add_option("--which", which, "A or B");
    app_c->add_option("--max-exp", max_exp);
    app_c->add_option("--n", n, "Parameter of F_n for table B");

    auto* replay_c = app.add_subcommand("replay", "Check an equality path");
    replay_c->add_option("--preset", preset)->required();
    replay_c->add_option("--path", path, "Comma-separated words")->required();

    try {
      std::vector<std::string> rev(args.rbegin(), args.rend());
      app.parse(rev);
    } catch (CLI::CallForHelp const& e) {
      return app.exit(e, out, err);
    } catch (CLI::ParseError const& e) {
      app.exit(e, out, err);
      return exit_error;
    }

    Context ctx{out, json};
    try {
      if (*presets_c) {
        Json        j = Json::array();
        std::string t;
        for (auto name : {"q", "s", "t", "c", "sm:3"}) {
          auto p = preset_presentation(PresetId::parse(name));
          j.push_back(to_json(p));
          t += p.name + "  <" + std::string(p.generators.letters()) + " |";
          for (auto const& [l, r] : p.relations) {
            t += " " + l + "=" + r;
          }
          t += ">\n";
        }
        t += "fn:<n>  finite quotient F_n by rewriting (n >= 1)\n";
        t += "bicyclic4  partial table {1, a, b, ba}\n";
        j.push_back({{"name", "fn:<n>"}});
        j.push_back({{"name", "bicyclic4"}, {"partial", to_json(bicyclic4())}});
        return ctx.emit(j, t, exit_ok);
      }

      if (*rewrite_c || *nf_c) {
        auto sys = resolve_system(system);
        auto w   = expand_word(word);
        if (*nf_c) {
          auto r = normal_form(sys, w);
          return ctx.emit({{"word", w}, {"normal_form", r}}, r + "\n", exit_ok);
        }
        auto        steps = reduction_trace(sys, w);
        Json        js    = Json::array();
        std::string t;
        for (auto const& s : steps) {
          auto const& schema = sys.schemas()[s.redex.schema];
          js.push_back({{"before", s.before}, {"after", s.after}, {"rule", schema.name},
                        {"position", s.redex.position}});
          t += s.before + " -> " + s.after + "   [rule " + schema.name + " at "
               + std::to_string(s.redex.position) + "]\n";
        }
        Word nf = steps.empty() ? w : steps.back().after;
        t += "normal form: " + nf + "\n";
        return ctx.emit({{"word", w}, {"steps", js}, {"normal_form", nf}}, t, exit_ok);
      }

      if (*conf_c) {
        auto        sys = resolve_system(system);
        auto        rep = check_local_confluence(sys, bound);
        Json        un  = Json::array();
        std::string t   = sys.name() + ": " + std::to_string(rep.rules.size()) + " rule instances, "
                        + std::to_string(rep.pairs.size()) + " critical pairs, "
                        + std::to_string(rep.unresolved.size()) + " unresolved\n";
        for (auto i : rep.unresolved) {
          auto const& p = rep.pairs[i];
          un.push_back({{"joint", p.joint}, {"left", p.left}, {"right", p.right},
                        {"left_nf", rep.left_nf[i]}, {"right_nf", rep.right_nf[i]}});
          if (un.size() <= 10) {
            t += "  " + p.joint + ": " + p.left + " ->* " + rep.left_nf[i] + ", " + p.right + " ->* "
                 + rep.right_nf[i] + "\n";
          }
        }
        Json j = {{"system", sys.name()}, {"bound", bound}, {"rules", rep.rules.size()},
                  {"pairs", rep.pairs.size()}, {"locally_confluent", rep.locally_confluent()},
                  {"unresolved", un}};
        return ctx.emit(j, t, rep.locally_confluent() ? exit_ok : exit_negative);
      }

      if (*term_c) {
        auto sys  = resolve_system(system);
        auto rep  = check_termination_order(sys, bound);
        auto show = [](std::vector<ConcreteRule> const& v) {
          Json j = Json::array();
          for (auto const& r : v) {
            j.push_back({r.lhs, r.rhs});
          }
          return j;
        };
        std::string t = sys.name() + ": " + std::to_string(rep.instances) + " instances\n  shortlex: "
                        + (rep.shortlex_holds() ? "holds" : std::to_string(rep.shortlex_violations.size()) + " violations")
                        + "\n  lex: "
                        + (rep.lex_holds() ? "holds" : std::to_string(rep.lex_violations.size()) + " violations")
                        + "\n";
        if (!rep.lex_holds()) {
          t += "  e.g. " + rep.lex_violations.front().lhs + " -> " + rep.lex_violations.front().rhs
               + " is not lexicographically smaller\n";
        }
        Json j = {{"system", sys.name()}, {"instances", rep.instances},
                  {"shortlex_violations", show(rep.shortlex_violations)},
                  {"lex_violations", show(rep.lex_violations)}};
        return ctx.emit(j, t, rep.shortlex_holds() ? exit_ok : exit_negative);
      }

      if (*green_c) {
        auto t = resolve_table(table);
        if (!check_associative(t)) {
          throw Error("the table is not associative");
        }
        auto g = green(t);
        Json j = {{"l", partition_json(t, g.l)}, {"r", partition_json(t, g.r)}, {"j", partition_json(t, g.j)},
                  {"h", partition_json(t, g.h)}, {"d", partition_json(t, g.d)}};
        return ctx.emit(j, egg_box(t), exit_ok);
      }

      if (*classify_c) {
        auto        t = resolve_table(table);
        auto        j = classification(t);
        std::string s;
        for (auto const& [k, val] : j.items()) {
          s += k + ": " + (val.is_string() ? val.get<std::string>() : val.dump()) + "\n";
        }
        return ctx.emit(j, s, exit_ok);
      }

      if (*embed_c) {
        auto pt = resolve_partial(partial);
        auto r  = embed_partial_table(pt, max_order, parse_class_filter(cls));
        Json j  = {{"status", to_string(r.status)}, {"bound", r.bound}, {"explored", r.explored},
                   {"orders", r.orders}, {"class", to_string(parse_class_filter(cls))}};
        std::string t;
        if (r.witness) {
          j["witness"]   = to_json(*r.witness);
          j["injection"] = r.injection;
          t = "embeddable into a table of order " + std::to_string(r.witness->order()) + " ("
              + std::to_string(r.explored) + " nodes)\n" + row_text(*r.witness) + "\n";
          if (!outfile.empty()) {
            write_json_file(outfile, to_json(*r.witness));
          }
        } else {
          auto f = parse_class_filter(cls);
          t = std::string("exhausted: no ") + (f == ClassFilter::any ? "" : to_string(f) + " ") + "embedding up to order "
              + std::to_string(max_order) + " (" + std::to_string(r.explored) + " nodes)\n";
        }
        return ctx.emit(j, t, r.witness ? exit_ok : exit_negative);
      }

      if (*assign_c) {
        WordPairs rels = preset.empty() ? parse_pairs(relations)
                                        : preset_presentation(PresetId::parse(preset)).relations;
        if (!preset.empty() && !relations.empty()) {
          throw Error("give --preset or --relations, not both");
        }
        auto                  dist = parse_pairs(distinct);
        std::vector<MulTable> tables;
        if (!table.empty()) {
          tables.push_back(resolve_table(table));
        } else {
          for (long k = 1; k <= order; ++k) {
            auto more = enumerate_semigroups(static_cast<std::size_t>(k), parse_class_filter(cls));
            tables.insert(tables.end(), more.begin(), more.end());
          }
        }
        auto c    = assignment_census(tables, rels, dist);
        auto vars = assignment_variables(rels, dist);
        Json ex   = Json::array();
        std::string t = std::to_string(c.tables) + " tables, " + std::to_string(c.total)
                        + " assignments satisfy the relations, " + std::to_string(c.untagged)
                        + " keep every distinct pair apart\n";
        for (auto const& [ti, a] : c.counterexamples) {
          Json vals = Json::object();
          std::string line = "  table " + std::to_string(ti) + ":";
          for (std::size_t i = 0; i < vars.size(); ++i) {
            vals[std::string(1, vars[i])] = a.values[i];
            line += std::string(" ") + vars[i] + "=" + std::to_string(a.values[i]);
          }
          ex.push_back({{"table", ti}, {"values", vals}});
          t += line + "\n";
        }
        Json j = {{"tables", c.tables}, {"assignments", c.total}, {"untagged", c.untagged},
                  {"variables", vars}, {"counterexamples", ex}};
        return ctx.emit(j, t, c.untagged == 0 ? exit_ok : exit_negative);
      }

      if (*approx_c) {
        if (*ai) {
          std::vector<long> xs;
          for (auto const& s : split(values, ',')) {
            xs.push_back(std::stol(s));
          }
          auto p = approx_integers(xs);
          auto v = check_approximating_pair(IntHost{}, make_subset(IntHost{}, xs), p);
          Json j = {{"modulus", p.table.order()}, {"map", p.f}, {"valid", v.valid}};
          std::string t = "Z_" + std::to_string(p.table.order()) + ":";
          for (std::size_t i = 0; i < xs.size(); ++i) {
            t += " " + std::to_string(xs[i]) + "->" + std::to_string(p.f[i]);
          }
          t += "\n" + v.kind + "\n";
          return ctx.emit(j, t, v.valid ? exit_ok : exit_negative);
        }
        if (*aq) {
          auto id   = PresetId::parse(preset);
          auto pres = preset_presentation(id);
          WordHost host{id, {}};
          std::vector<Word> hs;
          for (auto const& w : split(words, ',')) {
            hs.push_back(expand_word(w));
          }
          auto H = make_subset(host, hs);
          auto q = approx_by_length_ideal(pres, H);
          auto v = check_approximating_pair(host, H, q.pair);
          WordPairFile f{id.name(), hs, q.pair};
          if (!outfile.empty()) {
            write_json_file(outfile, to_json(f));
          }
          Json j = {{"order", q.pair.table.order()}, {"map", q.pair.f}, {"valid", v.valid}, {"kind", v.kind},
                    {"message", v.message}};
          std::string t = "quotient of order " + std::to_string(q.pair.table.order()) + ": " + v.kind
                          + (v.message.empty() ? "" : " (" + v.message + ")") + "\n";
          return ctx.emit(j, t, v.valid ? exit_ok : exit_negative);
        }
        if (*ac) {
          auto f    = word_pair_from_json(read_json_file(file));
          auto host = word_host(f.host);
          auto H    = make_subset(host, f.elements);
          auto v    = check_approximating_pair(host, H, f.pair);
          Json j    = {{"valid", v.valid}, {"kind", v.kind}, {"message", v.message}};
          return ctx.emit(j, v.kind + (v.message.empty() ? "" : ": " + v.message) + "\n",
                          v.valid ? exit_ok : exit_negative);
        }
        auto c = approx_campaign(static_cast<std::size_t>(count), seed);
        Json j = {{"instances", c.instances}, {"seed", seed}, {"rees_valid", c.rees_valid},
                  {"semilattice_valid", c.semilattice_valid}, {"semilattice_clifford", c.semilattice_clifford},
                  {"largest_table", c.largest_table}, {"failures", c.failures}};
        std::string t = std::to_string(c.instances) + " instances (seed " + std::to_string(seed)
                        + "): rees " + std::to_string(c.rees_valid) + " valid, semilattice "
                        + std::to_string(c.semilattice_valid) + " valid, "
                        + std::to_string(c.semilattice_clifford) + " Clifford\n";
        for (auto const& f : c.failures) {
          t += "  " + f + "\n";
        }
        return ctx.emit(j, t, c.all_passed() ? exit_ok : exit_negative);
      }

      if (*lwf_c) {
        auto       id = PresetId::parse(preset);
        LwfOptions opts;
        opts.length_cap  = cap;
        opts.closed_form_bound = closed_form_bound;
        WordHost host{id, opts.bounds};
        if (!file.empty()) {
          auto f = word_wrap_from_json(read_json_file(file));
          auto H = make_subset(word_host(f.host, opts.bounds), f.subset);
          auto v = check_lwf_wrapping(word_host(f.host, opts.bounds), H, f.wrap);
          return ctx.emit({{"valid", v.valid}, {"kind", v.kind}, {"message", v.message}},
                          v.kind + (v.message.empty() ? "" : ": " + v.message) + "\n",
                          v.valid ? exit_ok : exit_negative);
        }
        std::vector<Word> hs;
        if (subset.empty()) {
          hs = MembershipOracle(id, n, opts.bounds).representatives();
        } else {
          for (auto const& w : split(subset, ',')) {
            hs.push_back(expand_word(w));
          }
        }
        auto H = make_subset(host, hs);
        auto r = build_lwf_wrapping(id, H, n, opts);
        auto v = check_lwf_wrapping(host, H, r.wrap);
        if (!outfile.empty()) {
          write_json_file(outfile, to_json(WordWrapFile{id.name(), hs, r.wrap}));
        }
        auto L = r.preaccurate.words();
        Json j = {{"preset", id.name()}, {"n", n}, {"subset", hs}, {"preaccurate", L},
                  {"m", r.m}, {"ideal_bound", r.ideal_bound}, {"fallback", r.fallback},
                  {"order", r.wrap.table.order()}, {"valid", v.valid}, {"kind", v.kind}, {"message", v.message}};
        std::string t = "L_" + std::to_string(2 * n) + ": " + std::to_string(L.size()) + " words"
                        + (r.preaccurate.modulus ? " (S_" + std::to_string(r.preaccurate.modulus) + " normal forms)" : "")
                        + "\nD: order " + std::to_string(r.wrap.table.order()) + ", m = " + std::to_string(r.m)
                        + (id.kind == PresetKind::s ? ", e-reduced bound " + std::to_string(r.ideal_bound) : "")
                        + "\nfallback: " + r.fallback + "\ncheck: " + v.kind
                        + (v.message.empty() ? "" : " (" + v.message + ")") + "\n";
        return ctx.emit(j, t, v.valid ? exit_ok : exit_negative);
      }

      if (*eq_c) {
        auto id = PresetId::parse(preset);
        auto a  = expand_word(u);
        auto b  = expand_word(v);
        EqualityVerdict r;
        if (id.kind == PresetKind::fn || (id.kind == PresetKind::q && length_bound == 0 && image_order == 0)) {
          r = word_equal_nf(id, a, b);
        } else {
          r = word_equal_bfs(id, a, b, BfsBounds{length_bound, node_bound, image_order});
        }
        Json j = verdict_json(r);
        j["preset"] = id.name();
        j["u"]      = a;
        j["v"]      = b;
        return ctx.emit(j, verdict_line(r) + "\n", r.status == Verdict::unknown ? exit_negative : exit_ok);
      }

      if (*enum_c) {
        auto filter = parse_class_filter(cls);
        auto all    = enumerate_semigroups(static_cast<std::size_t>(order), filter);
        Json tj     = Json::array();
        std::string t = std::to_string(all.size()) + " " + to_string(filter) + " semigroups of order "
                        + std::to_string(order) + "\n";
        for (std::size_t i = 0; i < all.size(); ++i) {
          tj.push_back(to_json(all[i]));
          if (!count_only) {
            t += std::to_string(i) + ": " + row_text(all[i]) + "\n";
          }
        }
        Json j = {{"order", order}, {"class", to_string(filter)}, {"count", all.size()}};
        if (!count_only) {
          j["tables"] = tj;
        }
        return ctx.emit(j, t, exit_ok);
      }

      if (*app_c) {
        auto w = which;
        std::transform(w.begin(), w.end(), w.begin(), [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
        if (w != "A" && w != "B") {
          throw Error("--which must be A or B");
        }
        auto        tab = w == "A" ? AppendixTable::a : AppendixTable::b;
        auto        rep = verify_appendix(tab, max_exp, tab == AppendixTable::b ? n : 0);
        Json        rows = Json::array();
        std::string t;
        for (auto const& r : rep.rows) {
          rows.push_back({{"id", r.row->id}, {"instances", r.instances}, {"failures", r.failures},
                          {"messages", r.messages}});
          t += r.row->id + ": " + std::to_string(r.instances) + " instances, "
               + (!r.instantiable() ? "not instantiable" : r.confirmed() ? "joined" : std::to_string(r.failures) + " failures")
               + "\n";
          for (auto const& m : r.messages) {
            t += "    " + m + "\n";
          }
        }
        t += std::to_string(rep.confirmed_rows()) + "/" + std::to_string(rep.instantiable_rows())
             + " instantiable rows joined\n";
        Json j = {{"table", w}, {"n", rep.n}, {"max_exp", max_exp}, {"rows", rows},
                  {"confirmed", rep.confirmed_rows()}, {"instantiable", rep.instantiable_rows()}};
        return ctx.emit(j, t, rep.all_confirmed() ? exit_ok : exit_negative);
      }

      if (*replay_c) {
        auto              pres = preset_presentation(PresetId::parse(preset));
        std::vector<Word> p;
        for (auto const& w : split(path, ',')) {
          p.push_back(expand_word(w));
        }
        bool ok = replay_path(pres, p);
        return ctx.emit({{"valid", ok}, {"path", p}}, std::string(ok ? "valid" : "invalid") + " path\n",
                        ok ? exit_ok : exit_negative);
      }
    } catch (SchemaError const& e) {
      err << "error: " << e.what() << "\n";
      return exit_error;
    } catch (std::exception const& e) {
      err << "error: " << e.what() << "\n";
      return exit_error;
    }
    return exit_error;
  }

}  // namespace lef::cli
