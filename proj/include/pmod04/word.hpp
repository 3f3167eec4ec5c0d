#pragma once

#include <array>
#include <cassert>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pmod04/bigint.hpp"

namespace pmod04 {

/// Which of the two free generators a letter belongs to.
enum class Gen : uint8_t { Alpha = 0, Beta = 1 };

/// One of the four letters a, a^-1, b, b^-1 of the rank-2 free group.
/// The internal code fixes the total order used everywhere for
/// enumeration and tie-breaking: a < a^-1 < b < b^-1.
class Letter {
 public:
  constexpr Letter() = default;
  constexpr Letter(Gen g, int sign)
      : code_(uint8_t((uint8_t(g) << 1) | (sign < 0 ? 1 : 0))) {}

  static constexpr Letter from_code(uint8_t code) {
    Letter l;
    l.code_ = code;
    return l;
  }

  constexpr uint8_t code() const { return code_; }
  constexpr Gen gen() const { return Gen(code_ >> 1); }
  constexpr int sign() const { return (code_ & 1) ? -1 : +1; }
  constexpr Letter inverse() const { return from_code(code_ ^ 1); }
  constexpr char to_char() const { return "aAbB"[code_]; }

  /// 'a' = alpha, 'A' = alpha^-1, 'b' = beta, 'B' = beta^-1.
  static constexpr std::optional<Letter> from_char(char c) {
    switch (c) {
      case 'a': return from_code(0);
      case 'A': return from_code(1);
      case 'b': return from_code(2);
      case 'B': return from_code(3);
      default: return std::nullopt;
    }
  }

  friend constexpr bool operator==(Letter, Letter) = default;
  friend constexpr auto operator<=>(Letter, Letter) = default;

 private:
  uint8_t code_ = 0;
};

inline constexpr Letter kAlpha{Gen::Alpha, +1};
inline constexpr Letter kAlphaInv{Gen::Alpha, -1};
inline constexpr Letter kBeta{Gen::Beta, +1};
inline constexpr Letter kBetaInv{Gen::Beta, -1};

bool is_reduced(std::span<const Letter> letters);
bool is_cyclically_reduced(std::span<const Letter> letters);

/// A freely reduced word over {a, a^-1, b, b^-1}. Every constructor
/// reduces, so a Word is reduced by construction and its size() is the
/// word-metric length of the group element it denotes.
class Word {
 public:
  Word() = default;
  explicit Word(std::span<const Letter> letters) { assign_reduced(letters); }
  Word(std::initializer_list<Letter> letters) {
    assign_reduced({letters.begin(), letters.size()});
  }

  /// Adopts a sequence that is already freely reduced (checked in debug
  /// builds only); the enumeration hot paths use this to skip re-scanning.
  static Word from_reduced(std::span<const Letter> letters) {
    assert(is_reduced(letters));
    Word w;
    w.letters_.assign(letters.begin(), letters.end());
    return w;
  }

  bool empty() const { return letters_.empty(); }
  size_t size() const { return letters_.size(); }
  Letter operator[](size_t i) const { return letters_[i]; }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }
  std::span<const Letter> letters() const { return letters_; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  friend bool operator==(const Word&, const Word&) = default;
  // Lexicographic in the letter order; a proper prefix sorts first.
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  void assign_reduced(std::span<const Letter> letters);
  std::vector<Letter> letters_;
};

/// Free reduction of an arbitrary letter sequence. Idempotent.
Word reduce(std::span<const Letter> letters);

/// Reduced product of two reduced words (cancellation only at the seam).
Word multiply(const Word& u, const Word& v);

Word invert(const Word& w);

/// base^exponent, reduced; power(w, 0) is the empty word.
Word power(const Word& base, int64_t exponent);

/// The generator-swap automorphism a <-> b (an isometry).
Word swap_generators(const Word& w);

/// w = conjugator * core * conjugator^-1 with core cyclically reduced and
/// the conjugator the maximal cancelling prefix, so the decomposition is
/// unique and length(w) = length(core) + 2*length(conjugator).
struct CyclicDecomposition {
  Word core;
  Word conjugator;
};
CyclicDecomposition cyclic_reduce(const Word& w);

/// Rejected input for the word text syntax below.
class WordParseError : public std::runtime_error {
 public:
  WordParseError(char token, size_t position);
  char token() const { return token_; }
  size_t position() const { return position_; }  // 0-based

 private:
  char token_;
  size_t position_;
};

/// Text syntax: the characters a, A, b, B, optionally separated by
/// whitespace; the empty string is the identity. The result is reduced.
Word parse_word(std::string_view text);

std::string to_string(std::span<const Letter> letters);
std::string to_string(const Word& w);

/// Number of reduced words of length n: 1, 4, 12, 36, ...
BigInt sphere_size(int n);

namespace detail {

// Generous bound on enumerable radii; 3^n word counts make anything near
// it unreachable in practice.
inline constexpr int kMaxEnumerationRadius = 48;

template <class Fn>
void sphere_dfs(std::array<Letter, kMaxEnumerationRadius>& buf, int depth,
                int n, Fn& fn) {
  if (depth == n) {
    fn(std::span<const Letter>(buf.data(), size_t(n)));
    return;
  }
  const uint8_t banned =
      depth > 0 ? buf[size_t(depth) - 1].inverse().code() : uint8_t(255);
  for (uint8_t c = 0; c < 4; ++c) {
    if (c == banned) continue;
    buf[size_t(depth)] = Letter::from_code(c);
    sphere_dfs(buf, depth + 1, n, fn);
  }
}

}  // namespace detail

/// Streams every reduced word of length exactly n that starts with
/// `prefix`, in lexicographic order, calling fn(span). The span is only
/// valid during the call; the walk keeps one branch in memory.
template <class Fn>
void enumerate_sphere(int n, const Word& prefix, Fn&& fn) {
  if (n < 0) throw std::invalid_argument("sphere radius must be >= 0");
  if (n > detail::kMaxEnumerationRadius)
    throw std::invalid_argument("sphere radius too large to enumerate");
  if (prefix.size() > size_t(n))
    throw std::invalid_argument("prefix longer than the requested radius");
  std::array<Letter, detail::kMaxEnumerationRadius> buf;
  for (size_t i = 0; i < prefix.size(); ++i) buf[i] = prefix[i];
  detail::sphere_dfs(buf, int(prefix.size()), n, fn);
}

template <class Fn>
void enumerate_sphere(int n, Fn&& fn) {
  enumerate_sphere(n, Word{}, std::forward<Fn>(fn));
}

/// Materialized sphere, for small radii and tests.
std::vector<Word> sphere_words(int n, const Word& prefix = {});

}  // namespace pmod04
