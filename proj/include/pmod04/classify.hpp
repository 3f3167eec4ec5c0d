#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "pmod04/word.hpp"

namespace pmod04 {

/// The three conjugacy axes of reducible mapping classes: powers of the
/// twist a, of the twist b, and of the product ab (whose inverse is the
/// twist about the third curve of the lantern relation).
enum class Axis : uint8_t { A, B, AB };

/// a, b, or ab.
Word axis_word(Axis axis);
std::string_view axis_name(Axis axis);  // "A", "B", "AB"

enum class MappingClassType : uint8_t {
  Identity,
  Reducible,
  PseudoAnosov,
  Periodic,  // only occurs in the Z2 x Z2 extension
};
std::string_view type_name(MappingClassType type);

/// Witness for a reducible word: w = conjugator * axis_word(axis)^exponent
/// * conjugator^-1 (as group elements). The exponent is never zero and the
/// triple is canonical: the conjugator is the shortest word realizing the
/// decomposition, ties broken by the letter order a < a^-1 < b < b^-1.
struct ReducibleForm {
  Axis axis;
  int64_t exponent;
  Word conjugator;

  friend bool operator==(const ReducibleForm&, const ReducibleForm&) = default;
};

struct Classification {
  MappingClassType type;
  std::optional<ReducibleForm> reducible;  // set iff type == Reducible

  friend bool operator==(const Classification&, const Classification&) =
      default;
};

/// Thurston type of the mapping class spelled by a reduced word:
/// Identity for the empty word; Reducible exactly when the cyclically
/// reduced core is a nonzero power of a, of b, or a cyclic rotation of a
/// nonzero power of ab; PseudoAnosov otherwise.
Classification classify(const Word& w);

/// The reducible decomposition when there is one.
std::optional<ReducibleForm> axis_power_form(const Word& w);

/// Allocation-free variant for enumeration loops: the tag plus, for
/// reducible words, axis and exponent. No conjugator is materialized.
struct SpanClassification {
  MappingClassType type;
  Axis axis;         // valid iff type == Reducible
  int64_t exponent;  // valid iff type == Reducible
};
SpanClassification classify_span(std::span<const Letter> w);

/// Compact JSON object {"type": ..., "axis"?, "exponent"?, "conjugator"?}.
std::string classification_json(const Classification& c);

}  // namespace pmod04
