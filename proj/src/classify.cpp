#include "pmod04/classify.hpp"

#include <algorithm>

#include <json.hpp>

namespace pmod04 {

Word axis_word(Axis axis) {
  switch (axis) {
    case Axis::A: return Word{kAlpha};
    case Axis::B: return Word{kBeta};
    case Axis::AB: return Word{kAlpha, kBeta};
  }
  throw std::logic_error("bad axis");
}

std::string_view axis_name(Axis axis) {
  switch (axis) {
    case Axis::A: return "A";
    case Axis::B: return "B";
    case Axis::AB: return "AB";
  }
  throw std::logic_error("bad axis");
}

std::string_view type_name(MappingClassType type) {
  switch (type) {
    case MappingClassType::Identity: return "identity";
    case MappingClassType::Reducible: return "reducible";
    case MappingClassType::PseudoAnosov: return "pseudo_anosov";
    case MappingClassType::Periodic: return "periodic";
  }
  throw std::logic_error("bad type");
}

namespace {

struct CoreMatch {
  MappingClassType type;
  Axis axis;
  int64_t exponent;
  // Core spelled (ba)^k or (a^-1 b^-1)^k rather than a power of ab / of
  // (ab)^-1; the conjugator must absorb the one-letter rotation.
  bool rotated;
};

// Pattern-match a cyclically reduced core against the reducible shapes.
CoreMatch match_core(std::span<const Letter> core) {
  if (core.empty()) return {MappingClassType::Identity, Axis::A, 0, false};

  const Letter first = core.front();
  if (std::all_of(core.begin(), core.end(),
                  [&](Letter l) { return l == first; })) {
    Axis axis = first.gen() == Gen::Alpha ? Axis::A : Axis::B;
    return {MappingClassType::Reducible, axis,
            int64_t(core.size()) * first.sign(), false};
  }

  if (core.size() % 2 == 0) {
    const Letter second = core[1];
    if (second.gen() != first.gen() && second.sign() == first.sign()) {
      bool alternating = true;
      for (size_t i = 2; i < core.size() && alternating; ++i)
        alternating = core[i] == ((i % 2 == 0) ? first : second);
      if (alternating) {
        int64_t k = int64_t(core.size() / 2);
        bool positive = first.sign() > 0;
        // positive rotated: (ba)^k; negative rotated: (a^-1 b^-1)^k
        bool rotated = positive ? first.gen() == Gen::Beta
                                : first.gen() == Gen::Alpha;
        return {MappingClassType::Reducible, Axis::AB, positive ? k : -k,
                rotated};
      }
    }
  }

  return {MappingClassType::PseudoAnosov, Axis::A, 0, false};
}

}  // namespace

SpanClassification classify_span(std::span<const Letter> w) {
  size_t i = 0, j = w.size();
  while (j - i >= 2 && w[i] == w[j - 1].inverse()) {
    ++i;
    --j;
  }
  CoreMatch m = match_core(w.subspan(i, j - i));
  return {m.type, m.axis, m.exponent};
}

Classification classify(const Word& w) {
  CyclicDecomposition dec = cyclic_reduce(w);
  CoreMatch m = match_core(dec.core.letters());
  switch (m.type) {
    case MappingClassType::Identity:
      return {MappingClassType::Identity, std::nullopt};
    case MappingClassType::PseudoAnosov:
      return {MappingClassType::PseudoAnosov, std::nullopt};
    default: break;
  }

  Word conjugator = dec.conjugator;
  if (m.rotated) {
    // Both u*a^-1 and u*b realize the rotated core as a conjugate of
    // (ab)^exponent, and nothing shorter does; take the lexicographically
    // smaller candidate.
    Word with_alpha_inv = multiply(conjugator, Word{kAlphaInv});
    Word with_beta = multiply(conjugator, Word{kBeta});
    auto smaller = [](const Word& x, const Word& y) {
      if (x.size() != y.size()) return x.size() < y.size() ? x : y;
      return x <= y ? x : y;
    };
    conjugator = smaller(with_alpha_inv, with_beta);
  }
  return {MappingClassType::Reducible,
          ReducibleForm{m.axis, m.exponent, std::move(conjugator)}};
}

std::optional<ReducibleForm> axis_power_form(const Word& w) {
  return classify(w).reducible;
}

std::string classification_json(const Classification& c) {
  nlohmann::ordered_json j;
  j["type"] = type_name(c.type);
  if (c.reducible) {
    j["axis"] = axis_name(c.reducible->axis);
    j["exponent"] = c.reducible->exponent;
    j["conjugator"] = to_string(c.reducible->conjugator);
  }
  return j.dump();
}

}  // namespace pmod04
