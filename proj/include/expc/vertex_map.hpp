#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "expc/coloring.hpp"
#include "expc/errors.hpp"

namespace expc {

/// c^n when it fits in 64 bits.
inline std::optional<std::uint64_t> checked_power(std::uint64_t base, std::size_t exponent) {
  std::uint64_t result = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    if (base != 0 && result > std::numeric_limits<std::uint64_t>::max() / base) return std::nullopt;
    result *= base;
  }
  return result;
}

/// A map V(H) -> [c], i.e. a vertex of the exponential graph E_c(H).
///
/// The index bijection with [0, c^n) is row-major with vertex 0 the most
/// significant digit: index = sum_v (value(v) - 1) * c^(n-1-v).
class VertexMap {
 public:
  VertexMap() = default;

  VertexMap(std::vector<Color> values, Color palette) : values_(std::move(values)), palette_(palette) {
    if (palette_ < 1) throw InvalidArgument("palette must be at least 1");
    for (std::size_t v = 0; v < values_.size(); ++v)
      if (values_[v] < 1 || values_[v] > palette_)
        throw InvalidArgument("map value " + std::to_string(values_[v]) + " at vertex " + std::to_string(v) +
                              " outside [1," + std::to_string(palette_) + "]");
  }

  static VertexMap from_index(std::uint64_t index, std::size_t domain_order, Color palette) {
    const auto total = checked_power(palette, domain_order);
    if (!total || index >= *total)
      throw InvalidArgument("map index " + std::to_string(index) + " out of range");
    std::vector<Color> values(domain_order);
    for (std::size_t i = domain_order; i-- > 0;) {
      values[i] = static_cast<Color>(index % palette) + 1;
      index /= palette;
    }
    return VertexMap(std::move(values), palette);
  }

  std::size_t domain_order() const noexcept { return values_.size(); }
  Color palette() const noexcept { return palette_; }
  Color operator[](std::size_t v) const { return values_.at(v); }
  const std::vector<Color>& values() const noexcept { return values_; }

  std::uint64_t index() const {
    if (!checked_power(palette_, values_.size()))
      throw InvalidArgument("map space c^n does not fit a 64-bit index");
    std::uint64_t idx = 0;
    for (Color x : values_) idx = idx * palette_ + (x - 1);
    return idx;
  }

  /// Sorted distinct values.
  std::vector<Color> image() const {
    std::vector<Color> im = values_;
    std::sort(im.begin(), im.end());
    im.erase(std::unique(im.begin(), im.end()), im.end());
    return im;
  }

  bool takes_value(Color b) const { return std::find(values_.begin(), values_.end(), b) != values_.end(); }

  friend bool operator==(const VertexMap&, const VertexMap&) = default;

 private:
  std::vector<Color> values_;
  Color palette_ = 0;
};

}  // namespace expc
