#include "pmod04/word.hpp"

#include <cctype>

namespace pmod04 {

bool is_reduced(std::span<const Letter> letters) {
  for (size_t i = 0; i + 1 < letters.size(); ++i)
    if (letters[i] == letters[i + 1].inverse()) return false;
  return true;
}

bool is_cyclically_reduced(std::span<const Letter> letters) {
  if (!is_reduced(letters)) return false;
  if (letters.size() < 2) return true;
  return letters.front() != letters.back().inverse();
}

void Word::assign_reduced(std::span<const Letter> letters) {
  letters_.clear();
  letters_.reserve(letters.size());
  for (Letter l : letters) {
    if (!letters_.empty() && letters_.back() == l.inverse())
      letters_.pop_back();
    else
      letters_.push_back(l);
  }
}

Word reduce(std::span<const Letter> letters) { return Word(letters); }

Word multiply(const Word& u, const Word& v) {
  std::vector<Letter> out(u.begin(), u.end());
  for (Letter l : v) {
    if (!out.empty() && out.back() == l.inverse())
      out.pop_back();
    else
      out.push_back(l);
  }
  return Word::from_reduced(out);
}

Word invert(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (size_t i = w.size(); i > 0; --i) out.push_back(w[i - 1].inverse());
  return Word::from_reduced(out);
}

Word power(const Word& base, int64_t exponent) {
  const Word& factor_src = base;
  Word factor = exponent < 0 ? invert(factor_src) : factor_src;
  uint64_t count = exponent < 0 ? uint64_t(-(exponent + 1)) + 1
                                : uint64_t(exponent);
  Word result;
  for (uint64_t i = 0; i < count; ++i) result = multiply(result, factor);
  return result;
}

Word swap_generators(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  // a<->b maps inverse pairs to inverse pairs, so reducedness survives.
  for (Letter l : w) out.push_back(Letter::from_code(l.code() ^ 2));
  return Word::from_reduced(out);
}

CyclicDecomposition cyclic_reduce(const Word& w) {
  auto s = w.letters();
  size_t i = 0, j = s.size();
  while (j - i >= 2 && s[i] == s[j - 1].inverse()) {
    ++i;
    --j;
  }
  CyclicDecomposition d;
  d.core = Word::from_reduced(s.subspan(i, j - i));
  d.conjugator = Word::from_reduced(s.subspan(0, i));
  return d;
}

WordParseError::WordParseError(char token, size_t position)
    : std::runtime_error("unexpected token '" + std::string(1, token) +
                         "' at position " + std::to_string(position) +
                         " (expected a, A, b, B or whitespace)"),
      token_(token),
      position_(position) {}

Word parse_word(std::string_view text) {
  std::vector<Letter> raw;
  raw.reserve(text.size());
  for (size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    auto l = Letter::from_char(c);
    if (!l) throw WordParseError(c, i);
    raw.push_back(*l);
  }
  return reduce(raw);
}

std::string to_string(std::span<const Letter> letters) {
  std::string out;
  out.reserve(letters.size());
  for (Letter l : letters) out.push_back(l.to_char());
  return out;
}

std::string to_string(const Word& w) { return to_string(w.letters()); }

BigInt sphere_size(int n) {
  if (n < 0) throw std::invalid_argument("sphere radius must be >= 0");
  if (n == 0) return 1;
  return 4 * pow3(unsigned(n - 1));
}

std::vector<Word> sphere_words(int n, const Word& prefix) {
  std::vector<Word> out;
  enumerate_sphere(n, prefix, [&](std::span<const Letter> w) {
    out.push_back(Word::from_reduced(w));
  });
  return out;
}

}  // namespace pmod04
