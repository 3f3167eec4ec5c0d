#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pmod04/census.hpp"
#include "pmod04/classify.hpp"
#include "pmod04/word.hpp"

namespace pmod04 {

/// Element of the index-6 subgroup generated by the two twists together
/// with the two half-turn rotations: a twist word plus two central
/// involution bits, multiplying componentwise.
struct GammaElement {
  Word w;
  bool eps_i = false;
  bool eps_j = false;

  friend bool operator==(const GammaElement&, const GammaElement&) = default;
};

GammaElement gamma_multiply(const GammaElement& g, const GammaElement& h);
GammaElement gamma_invert(const GammaElement& g);

/// Word length with respect to {a, b, i, j}: the involutions are central
/// and independent of the twists, so every geodesic spends length(w) on
/// twists plus one step per set bit.
int64_t gamma_length(const GammaElement& g);

/// Identity for the trivial element; Periodic for the three pure
/// involutions; otherwise the type of the twist word (the involutions
/// never change pseudo-Anosov-ness, and a reducible twist part forces a
/// reducible product).
Classification gamma_classify(const GammaElement& g);

/// Sphere sizes s(n) + 2 s(n-1) + s(n-2) where s is the twist-word sphere.
BigInt gamma_sphere_count(int n);

struct GammaRow {
  int n = 0;
  BigInt total, periodic, reducible, pseudo_anosov;
  BigInt cum_total, cum_pa;
  BigRat ratio;  // cum_pa / cum_total

  friend bool operator==(const GammaRow&, const GammaRow&) = default;
};

/// Closed-form rows 0..max_n (no enumeration).
std::vector<GammaRow> gamma_table(int max_n);

/// Enumeration-backed rows: walks every twist word of length <= max_n and
/// distributes it over the four involution components.
std::vector<GammaRow> gamma_census(int max_n,
                                   const EnumerationOptions& opts = {});

/// Independent oracle: breadth-first search of the Cayley graph over
/// {a, a^-1, b, b^-1, i, j}, returning per-distance element counts. Kept
/// deliberately free of gamma_length / gamma_sphere_count.
std::vector<BigInt> gamma_bfs_sphere_counts(int max_n);

std::optional<size_t> first_row_mismatch(std::span<const GammaRow> a,
                                         std::span<const GammaRow> b);

/// CSV with header n,total,periodic,reducible,pseudo_anosov,cum_total,
/// cum_pa,ratio_exact,ratio_decimal; ratio_exact is cum_pa/cum_total.
std::string gamma_csv(std::span<const GammaRow> rows);
std::string gamma_json(std::span<const GammaRow> rows);

}  // namespace pmod04
