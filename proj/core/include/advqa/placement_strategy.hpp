#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace advqa {

enum class Placement { kAppend, kPrepend, kMiddle, kRandom, kFixedIndex };

// Where the distractor sentence goes. FixedIndex targets a 1-based slot and
// clamps to "insert last" on paragraphs shorter than the target.
struct PlacementStrategy {
  Placement kind = Placement::kRandom;
  std::size_t fixed_index = 1;  // only meaningful for kFixedIndex, >= 1

  bool operator==(const PlacementStrategy&) const = default;

  static PlacementStrategy append() { return {Placement::kAppend}; }
  static PlacementStrategy prepend() { return {Placement::kPrepend}; }
  static PlacementStrategy middle() { return {Placement::kMiddle}; }
  static PlacementStrategy random() { return {Placement::kRandom}; }
  static PlacementStrategy fixed(std::size_t k) { return {Placement::kFixedIndex, k}; }

  std::string str() const {
    switch (kind) {
      case Placement::kAppend: return "append";
      case Placement::kPrepend: return "prepend";
      case Placement::kMiddle: return "middle";
      case Placement::kRandom: return "random";
      case Placement::kFixedIndex: return "fixed:" + std::to_string(fixed_index);
    }
    return "random";
  }

  // Accepts the CLI spelling: append|prepend|middle|random|fixed:<k> (k >= 1).
  static std::optional<PlacementStrategy> parse(std::string_view s) {
    if (s == "append") return append();
    if (s == "prepend") return prepend();
    if (s == "middle") return middle();
    if (s == "random") return random();
    if (s.rfind("fixed:", 0) == 0) {
      std::size_t k = 0;
      for (char c : s.substr(6)) {
        if (c < '0' || c > '9') return std::nullopt;
        k = k * 10 + static_cast<std::size_t>(c - '0');
      }
      if (k == 0) return std::nullopt;
      return fixed(k);
    }
    return std::nullopt;
  }
};

}  // namespace advqa
