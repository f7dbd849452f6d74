#include "lef/words.hpp"

#include <algorithm>
#include <cctype>

#include "lef/error.hpp"

namespace lef {

  Alphabet::Alphabet() {
    _rank.fill(-1);
  }

  Alphabet::Alphabet(std::string_view letters) : Alphabet() {
    for (char c : letters) {
      auto u = static_cast<unsigned char>(c);
      if (std::isspace(u) || c == '^' || c == '(' || c == ')') {
        throw Error(std::string("invalid letter '") + c + "' in alphabet");
      }
      if (_rank[u] >= 0) {
        throw Error(std::string("duplicate letter '") + c + "' in alphabet");
      }
      _rank[u] = static_cast<std::int16_t>(_letters.size());
      _letters.push_back(c);
    }
  }

  std::size_t Alphabet::rank(char c) const {
    auto r = _rank[static_cast<unsigned char>(c)];
    if (r < 0) {
      throw Error(std::string("letter '") + c + "' is not in alphabet \""
                  + _letters + "\"");
    }
    return static_cast<std::size_t>(r);
  }

  bool Alphabet::is_word(std::string_view w) const noexcept {
    return std::all_of(w.begin(), w.end(), [this](char c) {
      return contains(c);
    });
  }

  void Alphabet::validate(std::string_view w) const {
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (!contains(w[i])) {
        throw Error("word \"" + std::string(w) + "\": letter '" + w[i]
                    + "' at position " + std::to_string(i)
                    + " is not in alphabet \"" + _letters + "\"");
      }
    }
  }

  bool Alphabet::lex_less(std::string_view u, std::string_view v) const {
    auto n = std::min(u.size(), v.size());
    for (std::size_t i = 0; i < n; ++i) {
      if (u[i] != v[i]) {
        return rank(u[i]) < rank(v[i]);
      }
    }
    return u.size() < v.size();
  }

  bool Alphabet::shortlex_less(std::string_view u, std::string_view v) const {
    if (u.size() != v.size()) {
      return u.size() < v.size();
    }
    return lex_less(u, v);
  }

  std::vector<Word> Alphabet::words_of_length(std::size_t len) const {
    std::vector<Word> out;
    if (_letters.empty()) {
      return out;
    }
    std::vector<std::size_t> digits(len, 0);
    while (true) {
      Word w(len, ' ');
      for (std::size_t i = 0; i < len; ++i) {
        w[i] = _letters[digits[i]];
      }
      out.push_back(std::move(w));
      std::size_t i = len;
      while (i > 0 && digits[i - 1] + 1 == _letters.size()) {
        digits[--i] = 0;
      }
      if (i == 0) {
        break;
      }
      ++digits[i - 1];
    }
    return out;
  }

  std::vector<Word> Alphabet::words_up_to(std::size_t max_len) const {
    std::vector<Word> out;
    for (std::size_t len = 1; len <= max_len; ++len) {
      auto layer = words_of_length(len);
      out.insert(out.end(),
                 std::make_move_iterator(layer.begin()),
                 std::make_move_iterator(layer.end()));
    }
    return out;
  }

  Word power(std::string_view w, std::size_t k) {
    Word out;
    out.reserve(w.size() * k);
    for (std::size_t i = 0; i < k; ++i) {
      out.append(w);
    }
    return out;
  }

  namespace {
    std::size_t read_exponent(std::string_view text, std::size_t& i) {
      if (i >= text.size() || text[i] != '^') {
        return 1;
      }
      ++i;
      bool braced = i < text.size() && text[i] == '{';
      if (braced) {
        ++i;
      }
      std::size_t start = i, value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + static_cast<std::size_t>(text[i] - '0');
        ++i;
      }
      if (i == start) {
        throw Error("word \"" + std::string(text) + "\": expected exponent at "
                    + std::to_string(start));
      }
      if (braced) {
        if (i >= text.size() || text[i] != '}') {
          throw Error("word \"" + std::string(text) + "\": missing '}'");
        }
        ++i;
      }
      return value;
    }

    Word expand_from(std::string_view text, std::size_t& i, bool nested) {
      Word out;
      while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
          ++i;
        } else if (c == '(') {
          ++i;
          Word inner = expand_from(text, i, true);
          if (i >= text.size() || text[i] != ')') {
            throw Error("word \"" + std::string(text) + "\": unbalanced '('");
          }
          ++i;
          out += power(inner, read_exponent(text, i));
        } else if (c == ')') {
          if (!nested) {
            throw Error("word \"" + std::string(text) + "\": unbalanced ')'");
          }
          return out;
        } else if (c == '^') {
          throw Error("word \"" + std::string(text) + "\": stray '^' at "
                      + std::to_string(i));
        } else {
          ++i;
          out += power(std::string_view(&c, 1), read_exponent(text, i));
        }
      }
      return out;
    }
  }  // namespace

  Word expand_word(std::string_view text) {
    std::size_t i = 0;
    return expand_from(text, i, false);
  }

  LetterCounts letter_counts(std::string_view w) {
    LetterCounts out;
    for (char c : w) {
      ++out[c];
    }
    return out;
  }

  LetterCounts letter_counts(std::string_view w, Alphabet const& alphabet) {
    alphabet.validate(w);
    LetterCounts out;
    for (char c : alphabet.letters()) {
      out[c] = 0;
    }
    for (char c : w) {
      ++out[c];
    }
    return out;
  }

  std::size_t block_count_s(std::string_view w) {
    static Alphabet const abcex("acebx");
    abcex.validate(w);
    std::size_t count = 0, i = 0;
    while (i < w.size()) {
      if (w[i] == 'x') {
        ++count;
        ++i;
        while (i < w.size() && w[i] == 'b') {
          ++i;
        }
      } else if (w[i] == 'b') {
        ++count;
        while (i < w.size() && w[i] == 'b') {
          ++i;
        }
      } else {
        ++i;
      }
    }
    return count;
  }

  std::size_t e_reduced_length(std::string_view w) {
    return w.size() - static_cast<std::size_t>(std::count(w.begin(), w.end(), 'e'));
  }

  PresetId PresetId::parse(std::string_view text) {
    std::string t;
    for (char c : text) {
      t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
    auto param = [&](std::size_t skip) -> long {
      auto rest = t.substr(skip);
      if (rest.empty() || !std::all_of(rest.begin(), rest.end(), [](char c) {
            return std::isdigit(static_cast<unsigned char>(c));
          })) {
        throw Error("preset \"" + std::string(text) + "\": expected a positive integer parameter");
      }
      long v = std::stol(rest);
      if (v < 1) {
        throw Error("preset \"" + std::string(text) + "\": parameter must be positive");
      }
      return v;
    };
    if (t == "q") {
      return {PresetKind::q, 0};
    } else if (t == "s") {
      return {PresetKind::s, 0};
    } else if (t == "t") {
      return {PresetKind::t, 0};
    } else if (t == "c") {
      return {PresetKind::c, 0};
    } else if (t == "bicyclic4") {
      return {PresetKind::bicyclic4, 0};
    } else if (t.rfind("sm:", 0) == 0) {
      return {PresetKind::sm, param(3)};
    } else if (t.rfind("fn:", 0) == 0) {
      return {PresetKind::fn, param(3)};
    }
    throw Error("unknown preset \"" + std::string(text)
                + "\" (expected q, s, t, c, sm:<m>, fn:<n>, bicyclic4)");
  }

  std::string PresetId::name() const {
    switch (kind) {
      case PresetKind::q:
        return "q";
      case PresetKind::s:
        return "s";
      case PresetKind::t:
        return "t";
      case PresetKind::c:
        return "c";
      case PresetKind::sm:
        return "sm:" + std::to_string(parameter);
      case PresetKind::fn:
        return "fn:" + std::to_string(parameter);
      case PresetKind::bicyclic4:
        return "bicyclic4";
    }
    return "?";
  }

  InvariantVector invariant_vector(std::string_view w) {
    InvariantVector v;
    v.letter_counts = letter_counts(w);
    if (Alphabet("acebx").is_word(w)) {
      v.block_count = block_count_s(w);
    }
    v.e_reduced_length = e_reduced_length(w);
    return v;
  }

  std::optional<std::string>
  ConservedVector::first_difference(ConservedVector const& that) const {
    auto n = std::min(_q.size(), that._q.size());
    for (std::size_t i = 0; i < n; ++i) {
      if (_q[i].value != that._q[i].value) {
        return _q[i].name;
      }
    }
    if (_q.size() != that._q.size()) {
      return std::string("arity");
    }
    return std::nullopt;
  }

  std::vector<long> ConservedVector::key() const {
    std::vector<long> k;
    for (auto const& q : _q) {
      k.push_back(q.value);
    }
    return k;
  }

  bool has_conserved_registry(PresetId preset) noexcept {
    switch (preset.kind) {
      case PresetKind::q:
      case PresetKind::s:
      case PresetKind::t:
      case PresetKind::c:
        return true;
      default:
        return false;
    }
  }

  ConservedVector conserved_vector(std::string_view w, PresetId preset) {
    auto n = [&w](char c) {
      return static_cast<long>(std::count(w.begin(), w.end(), c));
    };
    switch (preset.kind) {
      case PresetKind::q:
      case PresetKind::s:
        return ConservedVector({{"x_count", n('x')},
                                {"diff_a_minus_bc", n('a') - n('b') - n('c')}});
      case PresetKind::t:
        return ConservedVector(
            {{"x_count", n('x')},
             {"diff_ad_minus_bc", n('a') + n('d') - n('b') - n('c')}});
      case PresetKind::c:
        return ConservedVector({{"length", static_cast<long>(w.size())}});
      default:
        break;
    }
    throw Error("no conserved quantities registered for preset " + preset.name());
  }

}  // namespace lef
