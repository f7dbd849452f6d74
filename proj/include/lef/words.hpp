#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lef {

  using Word = std::string;

  //! An ordered set of distinct letters. The order is the one used for
  //! lexicographic and shortlex comparison.
  class Alphabet {
   public:
    Alphabet();
    explicit Alphabet(std::string_view letters);

    std::string_view letters() const noexcept {
      return _letters;
    }
    std::size_t size() const noexcept {
      return _letters.size();
    }
    bool contains(char c) const noexcept {
      return _rank[static_cast<unsigned char>(c)] >= 0;
    }
    std::size_t rank(char c) const;

    bool is_word(std::string_view w) const noexcept;
    //! Throws lef::Error naming the first foreign letter.
    void validate(std::string_view w) const;

    bool lex_less(std::string_view u, std::string_view v) const;
    bool shortlex_less(std::string_view u, std::string_view v) const;

    //! All nonempty words of length at most `max_len` in shortlex order.
    std::vector<Word> words_up_to(std::size_t max_len) const;
    std::vector<Word> words_of_length(std::size_t len) const;

    bool operator==(Alphabet const& that) const {
      return _letters == that._letters;
    }

   private:
    std::string                  _letters;
    std::array<std::int16_t, 256> _rank;
  };

  Word power(std::string_view w, std::size_t k);

  //! Expands `a^3`, `(xb)^2` and whitespace: "x a^2 (cb)^2" -> "xaacbcb".
  Word expand_word(std::string_view text);

  using LetterCounts = std::map<char, std::size_t>;

  LetterCounts letter_counts(std::string_view w);
  //! Every letter of `alphabet` is a key, absent letters map to 0.
  LetterCounts letter_counts(std::string_view w, Alphabet const& alphabet);

  //! Number of maximal subwords of the forms x, b^q, xb^q (q > 0) of a word
  //! over {a, b, c, e, x}.
  std::size_t block_count_s(std::string_view w);

  //! |w| minus the number of occurrences of e.
  std::size_t e_reduced_length(std::string_view w);

  enum class PresetKind { q, s, t, c, sm, fn, bicyclic4 };

  struct PresetId {
    PresetKind kind      = PresetKind::q;
    long       parameter = 0;

    //! Accepts q, s, t, c, sm:<m>, fn:<n>, bicyclic4 (case-insensitive).
    static PresetId parse(std::string_view text);
    std::string     name() const;

    bool operator==(PresetId const&) const = default;
    auto operator<=>(PresetId const&) const = default;
  };

  struct Quantity {
    std::string name;
    long        value;
    bool        operator==(Quantity const&) const = default;
  };

  struct InvariantVector {
    LetterCounts          letter_counts;
    std::size_t           block_count      = 0;
    std::size_t           e_reduced_length = 0;
    std::vector<Quantity> derived;

    bool operator==(InvariantVector const&) const = default;
  };

  //! Letter counts, block count (when defined) and e-reduced length of `w`.
  InvariantVector invariant_vector(std::string_view w);

  //! The quantities registered as conserved by `preset`.
  class ConservedVector {
   public:
    ConservedVector() = default;
    explicit ConservedVector(std::vector<Quantity> q) : _q(std::move(q)) {}

    std::vector<Quantity> const& quantities() const noexcept {
      return _q;
    }
    //! Name of the first quantity on which the vectors differ.
    std::optional<std::string> first_difference(ConservedVector const&) const;

    bool operator==(ConservedVector const&) const = default;
    auto operator<=>(ConservedVector const& that) const {
      return key() <=> that.key();
    }

   private:
    std::vector<long>     key() const;
    std::vector<Quantity> _q;
  };

  bool            has_conserved_registry(PresetId preset) noexcept;
  //! Throws for presets without a registry (sm, fn, bicyclic4).
  ConservedVector conserved_vector(std::string_view w, PresetId preset);

}  // namespace lef
