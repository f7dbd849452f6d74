#include "lef/pattern.hpp"

#include <algorithm>
#include <cctype>

#include "lef/error.hpp"

namespace lef {

  namespace {
    bool ident_start(char c) {
      return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
    }
    bool ident_char(char c) {
      return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
    }

    std::string strip(std::string_view s) {
      std::string out;
      for (char c : s) {
        if (!std::isspace(static_cast<unsigned char>(c))) {
          out.push_back(c);
        }
      }
      return out;
    }
  }  // namespace

  LinearExpr LinearExpr::constant(long k) {
    LinearExpr e;
    e._constant = k;
    return e;
  }

  void LinearExpr::add_term(std::size_t var, long coeff) {
    auto it = std::find_if(_terms.begin(), _terms.end(), [var](auto const& t) {
      return t.first == var;
    });
    if (it == _terms.end()) {
      _terms.emplace_back(var, coeff);
    } else {
      it->second += coeff;
    }
    std::erase_if(_terms, [](auto const& t) { return t.second == 0; });
    std::sort(_terms.begin(), _terms.end());
  }

  LinearExpr LinearExpr::parse(std::string_view raw, std::vector<std::string>& vars) {
    std::string text = strip(raw);
    auto fail = [&raw](std::string const& why) {
      return Error("expression \"" + std::string(raw) + "\": " + why);
    };
    if (text.empty()) {
      throw fail("empty");
    }
    LinearExpr  e;
    std::size_t i = 0;
    while (i < text.size()) {
      long sign = 1;
      if (text[i] == '+' || text[i] == '-') {
        sign = text[i] == '-' ? -1 : 1;
        ++i;
      } else if (i != 0) {
        throw fail("expected '+' or '-' at " + std::to_string(i));
      }
      bool has_digits = false;
      long k          = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        k          = k * 10 + (text[i] - '0');
        has_digits = true;
        ++i;
      }
      if (i < text.size() && text[i] == '*') {
        ++i;
      }
      if (i < text.size() && ident_start(text[i])) {
        std::size_t start = i;
        while (i < text.size() && ident_char(text[i])) {
          ++i;
        }
        std::string name = text.substr(start, i - start);
        long        c    = sign * (has_digits ? k : 1);
        if (name == "n") {
          e._n += c;
        } else {
          auto it = std::find(vars.begin(), vars.end(), name);
          if (it == vars.end()) {
            vars.push_back(name);
            it = vars.end() - 1;
          }
          e.add_term(static_cast<std::size_t>(it - vars.begin()), c);
        }
      } else if (has_digits) {
        e._constant += sign * k;
      } else {
        throw fail("expected a term at " + std::to_string(i));
      }
    }
    return e;
  }

  long LinearExpr::evaluate(std::span<long const> values, long n) const {
    long v = _constant + _n * n;
    for (auto const& [var, c] : _terms) {
      v += c * values[var];
    }
    return v;
  }

  bool LinearExpr::uses_variable(std::size_t v) const noexcept {
    return std::any_of(_terms.begin(), _terms.end(), [v](auto const& t) {
      return t.first == v;
    });
  }

  LinearExpr LinearExpr::operator-(LinearExpr const& that) const {
    LinearExpr e = *this;
    e._constant -= that._constant;
    e._n -= that._n;
    for (auto const& [var, c] : that._terms) {
      e.add_term(var, -c);
    }
    return e;
  }

  std::string LinearExpr::to_string(std::vector<std::string> const& vars) const {
    std::string out;
    auto        emit = [&out](long c, std::string const& name) {
      if (c == 0) {
        return;
      }
      if (c < 0) {
        out += "-";
      } else if (!out.empty()) {
        out += "+";
      }
      long a = c < 0 ? -c : c;
      if (a != 1 || name.empty()) {
        out += std::to_string(a);
      }
      out += name;
    };
    for (auto const& [var, c] : _terms) {
      emit(c, vars.at(var));
    }
    emit(_n, "n");
    emit(_constant, "");
    return out.empty() ? "0" : out;
  }

  bool Constraint::holds(std::span<long const> values, long n) const {
    long v = expr.evaluate(values, n);
    switch (rel) {
      case Relation::lt:
        return v < 0;
      case Relation::le:
        return v <= 0;
      case Relation::eq:
        return v == 0;
      case Relation::ne:
        return v != 0;
      case Relation::ge:
        return v >= 0;
      case Relation::gt:
        return v > 0;
    }
    return false;
  }

  std::vector<Constraint> parse_constraints(std::string_view text,
                                            std::vector<std::string>& vars) {
    std::vector<Constraint> out;
    std::size_t             pos = 0;
    while (pos <= text.size()) {
      auto        semi  = text.find(';', pos);
      auto        chain = text.substr(pos, semi == std::string_view::npos ? std::string_view::npos : semi - pos);
      std::string c     = strip(chain);
      pos               = semi == std::string_view::npos ? text.size() + 1 : semi + 1;
      if (c.empty()) {
        continue;
      }
      std::vector<std::string> operands;
      std::vector<Relation>    rels;
      std::string              cur;
      for (std::size_t i = 0; i < c.size();) {
        auto two = c.substr(i, 2);
        if (two == "<=" || two == ">=" || two == "==" || two == "!=") {
          operands.push_back(cur);
          cur.clear();
          rels.push_back(two == "<="   ? Relation::le
                         : two == ">=" ? Relation::ge
                         : two == "==" ? Relation::eq
                                       : Relation::ne);
          i += 2;
        } else if (c[i] == '<' || c[i] == '>' || c[i] == '=') {
          operands.push_back(cur);
          cur.clear();
          rels.push_back(c[i] == '<'   ? Relation::lt
                         : c[i] == '>' ? Relation::gt
                                       : Relation::eq);
          ++i;
        } else {
          cur.push_back(c[i]);
          ++i;
        }
      }
      operands.push_back(cur);
      if (rels.empty()) {
        throw Error("condition \"" + c + "\": no comparison operator");
      }
      for (std::size_t i = 0; i < rels.size(); ++i) {
        auto lhs = LinearExpr::parse(operands[i], vars);
        auto rhs = LinearExpr::parse(operands[i + 1], vars);
        out.push_back({lhs - rhs, rels[i], c});
      }
    }
    return out;
  }

  Pattern parse_pattern(std::string_view text, std::vector<std::string>& vars) {
    Pattern     p;
    std::size_t i    = 0;
    auto        fail = [&text](std::string const& why) {
      return Error("pattern \"" + std::string(text) + "\": " + why);
    };
    while (i < text.size()) {
      char c = text[i];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
        continue;
      }
      if (c == '^' || c == '(' || c == ')' || c == '{' || c == '}') {
        throw fail("unexpected '" + std::string(1, c) + "' at " + std::to_string(i));
      }
      ++i;
      if (i < text.size() && text[i] == '^') {
        ++i;
        std::string exp;
        if (i < text.size() && (text[i] == '(' || text[i] == '{')) {
          char close = text[i] == '(' ? ')' : '}';
          auto end   = text.find(close, i);
          if (end == std::string_view::npos) {
            throw fail("unclosed exponent");
          }
          exp = std::string(text.substr(i + 1, end - i - 1));
          i   = end + 1;
        } else {
          while (i < text.size() && ident_char(text[i])) {
            exp.push_back(text[i++]);
          }
        }
        if (exp.empty()) {
          throw fail("empty exponent");
        }
        p.push_back({c, LinearExpr::parse(exp, vars)});
      } else {
        p.push_back({c, LinearExpr::constant(1)});
      }
    }
    return p;
  }

  std::string pattern_to_string(Pattern const& p, std::vector<std::string> const& vars) {
    std::string out;
    for (auto const& a : p) {
      if (!out.empty()) {
        out += " ";
      }
      out.push_back(a.letter);
      auto const& e = a.exponent;
      if (!(e.terms().empty() && e.n_coefficient() == 0 && e.constant_term() == 1)) {
        auto s = e.to_string(vars);
        bool simple = std::all_of(s.begin(), s.end(), ident_char);
        out += simple ? "^" + s : "^(" + s + ")";
      }
    }
    return out;
  }

  bool try_instantiate_pattern(Pattern const& p,
                               std::span<long const> values,
                               long                  n,
                               Word&                 out) {
    out.clear();
    for (auto const& a : p) {
      long k = a.exponent.evaluate(values, n);
      if (k < 0) {
        return false;
      }
      out.append(static_cast<std::size_t>(k), a.letter);
    }
    return true;
  }

  Word instantiate_pattern(Pattern const& p, std::span<long const> values, long n) {
    Word out;
    for (auto const& a : p) {
      long k = a.exponent.evaluate(values, n);
      if (k < 0) {
        throw Error("exponent of " + std::string(1, a.letter) + " evaluates to "
                    + std::to_string(k));
      }
      out.append(static_cast<std::size_t>(k), a.letter);
    }
    return out;
  }

}  // namespace lef
