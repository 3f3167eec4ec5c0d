#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pmod04/bigint.hpp"
#include "pmod04/classify.hpp"
#include "pmod04/word.hpp"

namespace pmod04 {

/// Enumeration above this radius is refused unless explicitly overridden;
/// the radius-16 ball already holds ~43M words.
inline constexpr int kDefaultEnumerationCap = 16;

class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(int requested, int cap);
  int requested() const { return requested_; }
  int cap() const { return cap_; }

 private:
  int requested_;
  int cap_;
};

struct EnumerationOptions {
  unsigned threads = 1;
  int cap = kDefaultEnumerationCap;
};

/// Exact per-class counts for one sphere, from exhaustive enumeration.
/// Plain 64-bit counters: any radius small enough to enumerate is far
/// below their range.
struct SphereClassCounts {
  uint64_t total = 0;
  uint64_t axis_a = 0;
  uint64_t axis_b = 0;
  uint64_t axis_ab = 0;
  uint64_t pseudo_anosov = 0;

  uint64_t reducible() const { return axis_a + axis_b + axis_ab; }
  SphereClassCounts& operator+=(const SphereClassCounts& o);
  friend bool operator==(const SphereClassCounts&, const SphereClassCounts&) =
      default;
};

/// Enumerates sphere n and classifies every word. With threads > 1 the
/// sphere is split by fixed prefixes and the per-prefix counts are summed
/// in prefix order, so the result is identical for any thread count.
SphereClassCounts count_sphere_classes(int n,
                                       const EnumerationOptions& opts = {});

struct CensusRow {
  int n = 0;
  BigInt total, reducible, pseudo_anosov;  // sphere counts at radius n
  BigInt h_n, r_n, p_n;                    // cumulative counts, length <= n
  BigRat ratio;                            // p_n / h_n

  friend bool operator==(const CensusRow&, const CensusRow&) = default;
};

/// Enumeration-backed census of radii 0..max_n.
std::vector<CensusRow> census_rows(int max_n,
                                   const EnumerationOptions& opts = {});

/// Single enumerated row (spheres 0..n are walked for the cumulatives).
CensusRow count_sphere_by_class(int n, const EnumerationOptions& opts = {});

/// |{w of length n : w is a conjugate of a nonzero power of the axis}|.
BigInt count_conjugacy_set(Axis axis, int n,
                           const EnumerationOptions& opts = {});

BigInt closed_form_sphere_total(int n);  // 1, 4, 12, 36, ...

/// Reducible elements of length n: 4*3^r for n = 2r+1, 8*3^r for n = 2r+2.
BigInt closed_form_reducible(int n);

struct CumulativeCounts {
  BigInt h_n, r_n, p_n;
  friend bool operator==(const CumulativeCounts&, const CumulativeCounts&) =
      default;
};

/// h_n = 2*3^n - 1; r_n = 10*3^r - 6 (n = 2r+1) or 2*3^(r+1) - 6 (n = 2r);
/// p_n = h_n - r_n - 1.
CumulativeCounts closed_form_cumulative(int n);

/// Closed-form census rows 0..max_n; no enumeration, any radius.
std::vector<CensusRow> ratio_table(int max_n);

/// Independent route to the conjugacy sets: sweep all u with |u| <= n and
/// 0 < |k| <= n, reduce u * axis^k * u^-1, deduplicate, keep length n.
/// Deliberately ignorant of the classifier.
std::vector<std::string> bruteforce_conjugacy_set(Axis axis, int n,
                                                  int cap = 10);
BigInt count_conjugates_bruteforce(Axis axis, int n, int cap = 10);

/// Result of checking the three-to-one refinement map from C(a, 2r+1)
/// onto C(a, 2r+3): every source yields three distinct images, images are
/// pairwise disjoint, and they exactly cover the larger set.
struct PartitionReport {
  int r = 0;
  bool passed = false;
  size_t source_size = 0;     // |C(a, 2r+1)|
  size_t image_count = 0;     // distinct images produced
  size_t target_size = 0;     // |C(a, 2r+3)|
  std::vector<std::string> failures;  // first few counterexamples
};
PartitionReport verify_partition_phi(int r, int cap = 4);

/// Index of the first row where the two tables disagree, if any.
std::optional<size_t> first_row_mismatch(std::span<const CensusRow> a,
                                         std::span<const CensusRow> b);

/// CSV with header n,total,reducible,pseudo_anosov,h_n,r_n,p_n,
/// ratio_exact,ratio_decimal; ratio_exact is the unreduced p_n/h_n.
std::string census_csv(std::span<const CensusRow> rows);

/// JSON array mirroring the CSV fields; counts are encoded as strings so
/// arbitrarily large exact values survive any JSON parser.
std::string census_json(std::span<const CensusRow> rows);

}  // namespace pmod04
