#include "lef/partial.hpp"

#include <algorithm>

#include "lef/error.hpp"

namespace lef {

  PartialTable::PartialTable(std::vector<std::string> elements)
      : _labels(std::move(elements)), _p(_labels.size() * _labels.size(), -1) {
    if (_labels.empty()) {
      throw Error("partial table with no elements");
    }
    for (std::size_t i = 0; i < _labels.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (_labels[i] == _labels[j]) {
          throw Error("duplicate element \"" + _labels[i] + "\"");
        }
      }
    }
  }

  std::optional<elem> PartialTable::find_label(std::string const& s) const {
    auto it = std::find(_labels.begin(), _labels.end(), s);
    if (it == _labels.end()) {
      return std::nullopt;
    }
    return static_cast<elem>(it - _labels.begin());
  }

  std::optional<elem> PartialTable::product(elem x, elem y) const {
    if (x >= size() || y >= size()) {
      throw Error("partial table index out of range");
    }
    long v = _p[x * size() + y];
    if (v < 0) {
      return std::nullopt;
    }
    return static_cast<elem>(v);
  }

  void PartialTable::set(elem x, elem y, elem z) {
    if (x >= size() || y >= size() || z >= size()) {
      throw Error("partial table index out of range");
    }
    long& v = _p[x * size() + y];
    if (v >= 0 && v != static_cast<long>(z)) {
      throw Error("product " + _labels[x] + "*" + _labels[y] + " defined twice");
    }
    v = z;
  }

  std::size_t PartialTable::defined_count() const {
    return static_cast<std::size_t>(std::count_if(_p.begin(), _p.end(), [](long v) {
      return v >= 0;
    }));
  }

  std::optional<std::array<elem, 3>> partial_associativity_failure(PartialTable const& pt) {
    auto n = static_cast<elem>(pt.size());
    for (elem x = 0; x < n; ++x) {
      for (elem y = 0; y < n; ++y) {
        auto xy = pt.product(x, y);
        for (elem z = 0; z < n; ++z) {
          auto yz = pt.product(y, z);
          if (!xy || !yz) {
            continue;
          }
          auto l = pt.product(*xy, z);
          auto r = pt.product(x, *yz);
          if (l && r && *l != *r) {
            return std::array<elem, 3>{x, y, z};
          }
        }
      }
    }
    return std::nullopt;
  }

  PartialTable to_partial(MulTable const& t) {
    PartialTable pt(t.labels());
    for (elem x = 0; x < t.order(); ++x) {
      for (elem y = 0; y < t.order(); ++y) {
        pt.set(x, y, t.at(x, y));
      }
    }
    return pt;
  }

}  // namespace lef
