#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lef/fsg.hpp"

namespace lef {

  //! A finite set with a partially defined product.
  class PartialTable {
   public:
    PartialTable() = default;
    explicit PartialTable(std::vector<std::string> elements);

    std::size_t size() const noexcept {
      return _labels.size();
    }
    std::vector<std::string> const& labels() const noexcept {
      return _labels;
    }
    std::string const& label(elem x) const {
      return _labels.at(x);
    }
    std::optional<elem> find_label(std::string const& s) const;

    std::optional<elem> product(elem x, elem y) const;
    bool                defined(elem x, elem y) const {
      return product(x, y).has_value();
    }
    //! Throws if (x, y) is already defined with a different value.
    void set(elem x, elem y, elem z);

    std::size_t defined_count() const;

    bool operator==(PartialTable const&) const = default;

   private:
    std::vector<std::string> _labels;
    std::vector<long>        _p;  // -1 = undefined
  };

  //! The first triple (x, y, z) whose two groupings are defined and differ.
  std::optional<std::array<elem, 3>> partial_associativity_failure(PartialTable const& pt);

  //! The partial table of all products of `t`.
  PartialTable to_partial(MulTable const& t);

}  // namespace lef
