#include "lef/io.hpp"

#include <fstream>
#include <sstream>

namespace lef {

  namespace {

    std::string child(std::string const& at, std::string const& key) {
      std::string k;
      for (char c : key) {
        if (c == '~') {
          k += "~0";
        } else if (c == '/') {
          k += "~1";
        } else {
          k.push_back(c);
        }
      }
      return at + "/" + k;
    }

    std::string child(std::string const& at, std::size_t i) {
      return at + "/" + std::to_string(i);
    }

    void expect_object(Json const& j, std::string const& at) {
      if (!j.is_object()) {
        throw SchemaError(at.empty() ? "/" : at, "expected an object");
      }
    }

    Json const& field(Json const& j, std::string const& key, std::string const& at) {
      expect_object(j, at);
      auto it = j.find(key);
      if (it == j.end()) {
        throw SchemaError(child(at, key), "missing");
      }
      return *it;
    }

    Json const& array(Json const& j, std::string const& at) {
      if (!j.is_array()) {
        throw SchemaError(at, "expected an array");
      }
      return j;
    }

    std::string text(Json const& j, std::string const& at) {
      if (!j.is_string()) {
        throw SchemaError(at, "expected a string");
      }
      return j.get<std::string>();
    }

    long integer(Json const& j, std::string const& at) {
      if (!j.is_number_integer()) {
        throw SchemaError(at, "expected an integer");
      }
      return j.get<long>();
    }

    std::vector<std::string> strings(Json const& j, std::string const& at) {
      std::vector<std::string> out;
      std::size_t              i = 0;
      for (auto const& x : array(j, at)) {
        out.push_back(text(x, child(at, i++)));
      }
      return out;
    }

    //! Rethrows library errors raised while building an object at `at`.
    template <typename F>
    auto at_pointer(std::string const& at, F&& f) {
      try {
        return f();
      } catch (SchemaError const&) {
        throw;
      } catch (Error const& e) {
        throw SchemaError(at.empty() ? "/" : at, e.what());
      }
    }

    Json pattern_json(Pattern const& p, std::vector<std::string> const& vars) {
      Json out = Json::array();
      for (auto const& a : p) {
        out.push_back({{"letter", std::string(1, a.letter)}, {"exp", a.exponent.to_string(vars)}});
      }
      return out;
    }

    std::string pattern_text(Json const& j, std::string const& at) {
      std::string out;
      std::size_t i = 0;
      for (auto const& a : array(j, at)) {
        auto here   = child(at, i++);
        auto letter = text(field(a, "letter", here), child(here, "letter"));
        if (letter.size() != 1) {
          throw SchemaError(child(here, "letter"), "expected a single letter");
        }
        std::string exp = "1";
        if (a.contains("exp")) {
          auto const& e = a["exp"];
          exp           = e.is_number_integer() ? std::to_string(e.get<long>()) : text(e, child(here, "exp"));
        }
        out += letter + "^(" + exp + ") ";
      }
      return out;
    }

  }  // namespace

  Json parse_json(std::string const& s) {
    try {
      return Json::parse(s);
    } catch (nlohmann::json::parse_error const& e) {
      throw SchemaError("/", std::string("malformed JSON at byte ") + std::to_string(e.byte));
    }
  }

  Json read_json_file(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw Error("cannot open " + path);
    }
    std::stringstream ss;
    ss << in.rdbuf();
    try {
      return parse_json(ss.str());
    } catch (SchemaError const& e) {
      throw SchemaError(e.where(), path + ": " + std::string(e.what()).substr(e.where().size() + 2));
    }
  }

  void write_json_file(std::string const& path, Json const& j) {
    std::ofstream out(path);
    if (!out) {
      throw Error("cannot write " + path);
    }
    out << j.dump(2) << "\n";
  }

  Json to_json(MulTable const& t) {
    Json rows = Json::array();
    for (elem x = 0; x < t.order(); ++x) {
      Json row = Json::array();
      for (elem y = 0; y < t.order(); ++y) {
        row.push_back(t.at(x, y));
      }
      rows.push_back(std::move(row));
    }
    return {{"order", t.order()}, {"labels", t.labels()}, {"table", std::move(rows)}};
  }

  MulTable table_from_json(Json const& j, std::string const& at) {
    long n = integer(field(j, "order", at), child(at, "order"));
    if (n < 1) {
      throw SchemaError(child(at, "order"), "order must be positive");
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) {
      labels = strings(j["labels"], child(at, "labels"));
      if (labels.size() != static_cast<std::size_t>(n)) {
        throw SchemaError(child(at, "labels"), "expected " + std::to_string(n) + " labels");
      }
    }
    auto const& rows = array(field(j, "table", at), child(at, "table"));
    if (rows.size() != static_cast<std::size_t>(n)) {
      throw SchemaError(child(at, "table"), "expected " + std::to_string(n) + " rows");
    }
    std::vector<elem> d;
    for (std::size_t x = 0; x < rows.size(); ++x) {
      auto const& row = array(rows[x], child(child(at, "table"), x));
      if (row.size() != static_cast<std::size_t>(n)) {
        throw SchemaError(child(child(at, "table"), x), "expected " + std::to_string(n) + " entries");
      }
      for (std::size_t y = 0; y < row.size(); ++y) {
        auto here = child(child(child(at, "table"), x), y);
        long v    = integer(row[y], here);
        if (v < 0 || v >= n) {
          throw SchemaError(here, "entry " + std::to_string(v) + " is out of range for order "
                                      + std::to_string(n));
        }
        d.push_back(static_cast<elem>(v));
      }
    }
    return at_pointer(at, [&] { return MulTable(static_cast<std::size_t>(n), d, labels); });
  }

  Json to_json(Presentation const& p) {
    Json gens = Json::array();
    for (char c : p.generators.letters()) {
      gens.push_back(std::string(1, c));
    }
    Json rels = Json::array();
    for (auto const& [l, r] : p.relations) {
      rels.push_back({l, r});
    }
    return {{"name", p.name}, {"generators", std::move(gens)}, {"relations", std::move(rels)}};
  }

  Presentation presentation_from_json(Json const& j, std::string const& at) {
    Presentation p;
    if (j.contains("name")) {
      p.name = text(j["name"], child(at, "name"));
    }
    std::string letters;
    auto        gens = strings(field(j, "generators", at), child(at, "generators"));
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (gens[i].size() != 1) {
        throw SchemaError(child(child(at, "generators"), i), "expected a single letter");
      }
      letters += gens[i];
    }
    p.generators   = at_pointer(child(at, "generators"), [&] { return Alphabet(letters); });
    auto const& rs = array(field(j, "relations", at), child(at, "relations"));
    for (std::size_t i = 0; i < rs.size(); ++i) {
      auto here = child(child(at, "relations"), i);
      auto pair = strings(rs[i], here);
      if (pair.size() != 2) {
        throw SchemaError(here, "expected [lhs, rhs]");
      }
      for (std::size_t k = 0; k < 2; ++k) {
        if (pair[k].empty() || !p.generators.is_word(pair[k])) {
          throw SchemaError(child(here, k), "\"" + pair[k] + "\" is not a nonempty word over the generators");
        }
      }
      p.relations.emplace_back(pair[0], pair[1]);
    }
    return p;
  }

  Json to_json(PartialTable const& pt) {
    Json products = Json::object();
    for (elem x = 0; x < pt.size(); ++x) {
      for (elem y = 0; y < pt.size(); ++y) {
        if (auto z = pt.product(x, y)) {
          products[pt.label(x) + "," + pt.label(y)] = pt.label(*z);
        }
      }
    }
    return {{"elements", pt.labels()}, {"products", std::move(products)}};
  }

  PartialTable partial_from_json(Json const& j, std::string const& at) {
    auto elements = strings(field(j, "elements", at), child(at, "elements"));
    for (std::size_t i = 0; i < elements.size(); ++i) {
      if (elements[i].find(',') != std::string::npos) {
        throw SchemaError(child(child(at, "elements"), i), "element labels cannot contain ','");
      }
    }
    auto        pt       = at_pointer(child(at, "elements"), [&] { return PartialTable(elements); });
    auto const& products = field(j, "products", at);
    expect_object(products, child(at, "products"));
    for (auto const& [key, value] : products.items()) {
      auto here  = child(child(at, "products"), key);
      auto comma = key.find(',');
      if (comma == std::string::npos) {
        throw SchemaError(here, "key must be \"x,y\"");
      }
      auto x = pt.find_label(key.substr(0, comma));
      auto y = pt.find_label(key.substr(comma + 1));
      auto z = pt.find_label(text(value, here));
      if (!x || !y) {
        throw SchemaError(here, "unknown factor in \"" + key + "\"");
      }
      if (!z) {
        throw SchemaError(here, "unknown product \"" + value.get<std::string>() + "\"");
      }
      pt.set(*x, *y, *z);
    }
    return pt;
  }

  Json to_json(RewriteSystem const& s) {
    Json alphabet = Json::array();
    for (char c : s.alphabet().letters()) {
      alphabet.push_back(std::string(1, c));
    }
    Json schemas = Json::array();
    for (auto const& r : s.schemas()) {
      Json conds = Json::array();
      for (auto const& c : r.conditions) {
        if (conds.empty() || conds.back() != c.text) {
          conds.push_back(c.text);
        }
      }
      schemas.push_back({{"name", r.name},
                         {"lhs", pattern_json(r.lhs, r.variables)},
                         {"rhs", pattern_json(r.rhs, r.variables)},
                         {"conditions", std::move(conds)}});
    }
    Json out = {{"name", s.name()},
                {"alphabet", std::move(alphabet)},
                {"order", std::string(s.alphabet().letters())},
                {"parameter_n", nullptr},
                {"schemas", std::move(schemas)}};
    if (s.parameter_n()) {
      out["parameter_n"] = *s.parameter_n();
    }
    return out;
  }

  RewriteSystem system_from_json(Json const& j, std::string const& at) {
    std::string name = j.contains("name") ? text(j["name"], child(at, "name")) : "custom";
    auto        letters = strings(field(j, "alphabet", at), child(at, "alphabet"));
    std::string set;
    for (std::size_t i = 0; i < letters.size(); ++i) {
      if (letters[i].size() != 1) {
        throw SchemaError(child(child(at, "alphabet"), i), "expected a single letter");
      }
      set += letters[i];
    }
    std::string order = set;
    if (j.contains("order")) {
      order = text(j["order"], child(at, "order"));
      std::string a = order, b = set;
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      if (a != b) {
        throw SchemaError(child(at, "order"), "must list the alphabet's letters");
      }
    }
    std::optional<long> n;
    if (j.contains("parameter_n") && !j["parameter_n"].is_null()) {
      n = integer(j["parameter_n"], child(at, "parameter_n"));
    }
    auto alphabet = at_pointer(child(at, "order"), [&] { return Alphabet(order); });
    std::vector<RuleSchema> schemas;
    auto const&             rs = array(field(j, "schemas", at), child(at, "schemas"));
    for (std::size_t i = 0; i < rs.size(); ++i) {
      auto        here  = child(child(at, "schemas"), i);
      std::string sname = rs[i].contains("name") ? text(rs[i]["name"], child(here, "name"))
                                                 : std::to_string(i + 1);
      auto        lhs   = pattern_text(field(rs[i], "lhs", here), child(here, "lhs"));
      auto        rhs   = pattern_text(field(rs[i], "rhs", here), child(here, "rhs"));
      std::string conds;
      if (rs[i].contains("conditions")) {
        for (auto const& c : strings(rs[i]["conditions"], child(here, "conditions"))) {
          conds += c + ";";
        }
      }
      schemas.push_back(at_pointer(here, [&] { return RuleSchema::parse(sname, lhs, rhs, conds); }));
    }
    return at_pointer(at, [&] { return RewriteSystem(name, alphabet, schemas, n); });
  }

  Json to_json(WordPairFile const& p) {
    Json map = Json::object();
    for (std::size_t i = 0; i < p.elements.size(); ++i) {
      map[p.elements[i]] = i < p.pair.f.size() ? p.pair.f[i] : 0;
    }
    return {{"host", p.host}, {"table", to_json(p.pair.table)}, {"map", std::move(map)}};
  }

  WordPairFile word_pair_from_json(Json const& j, std::string const& at) {
    WordPairFile out;
    out.host       = text(field(j, "host", at), child(at, "host"));
    out.pair.table = table_from_json(field(j, "table", at), child(at, "table"));
    auto const& map = field(j, "map", at);
    expect_object(map, child(at, "map"));
    for (auto const& [w, idx] : map.items()) {
      auto here = child(child(at, "map"), w);
      long v    = integer(idx, here);
      if (v < 0 || static_cast<std::size_t>(v) >= out.pair.table.order()) {
        throw SchemaError(here, "index " + std::to_string(v) + " is out of range");
      }
      out.elements.push_back(w);
      out.pair.f.push_back(static_cast<elem>(v));
    }
    return out;
  }

  Json to_json(WordWrapFile const& w) {
    Json map = Json::object();
    for (elem x = 0; x < w.wrap.table.order(); ++x) {
      map[w.wrap.table.label(x)] = x < w.wrap.d.size() ? w.wrap.d[x] : Word();
    }
    return {{"host", w.host}, {"subset", w.subset}, {"table", to_json(w.wrap.table)}, {"map", std::move(map)}};
  }

  WordWrapFile word_wrap_from_json(Json const& j, std::string const& at) {
    WordWrapFile out;
    out.host       = text(field(j, "host", at), child(at, "host"));
    out.subset     = strings(field(j, "subset", at), child(at, "subset"));
    out.wrap.table = table_from_json(field(j, "table", at), child(at, "table"));
    auto const& map = field(j, "map", at);
    expect_object(map, child(at, "map"));
    out.wrap.d.assign(out.wrap.table.order(), Word());
    std::vector<bool> seen(out.wrap.table.order(), false);
    for (auto const& [label, w] : map.items()) {
      auto here = child(child(at, "map"), label);
      auto x    = out.wrap.table.find_label(label);
      if (!x) {
        throw SchemaError(here, "no table element labelled \"" + label + "\"");
      }
      out.wrap.d[*x] = text(w, here);
      seen[*x]       = true;
    }
    for (elem x = 0; x < seen.size(); ++x) {
      if (!seen[x]) {
        throw SchemaError(child(at, "map"), "no value for table element \"" + out.wrap.table.label(x) + "\"");
      }
    }
    return out;
  }

  WordHost word_host(std::string const& name, BfsBounds bounds) {
    if (name == "free") {
      return WordHost{std::nullopt, bounds};
    }
    return WordHost{PresetId::parse(name), bounds};
  }

}  // namespace lef
