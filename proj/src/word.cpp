#include "ropwords/word.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ropwords {

Word::Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
  for (Letter a : letters_) {
    if (a > 9) throw std::invalid_argument("word: letters must be single digits");
  }
}

Word Word::parse(std::string_view digits) {
  std::vector<Letter> letters;
  letters.reserve(digits.size());
  for (char c : digits) {
    if (c < '0' || c > '9') throw std::invalid_argument("word: invalid digit character");
    letters.push_back(static_cast<Letter>(c - '0'));
  }
  return Word(std::move(letters));
}

std::string Word::str() const {
  std::string s;
  s.reserve(letters_.size());
  for (Letter a : letters_) s.push_back(static_cast<char>('0' + a));
  return s;
}

Word Word::repeated(std::size_t times) const {
  std::vector<Letter> out;
  out.reserve(letters_.size() * times);
  for (std::size_t t = 0; t < times; ++t) out.insert(out.end(), letters_.begin(), letters_.end());
  return Word(std::move(out));
}

long long height(const Word& w) {
  return std::accumulate(w.begin(), w.end(), 0LL);
}

Word rotate(const Word& w, std::size_t k) {
  const std::size_t n = w.size();
  if (n == 0) return w;
  k %= n;
  std::vector<Letter> out;
  out.reserve(n);
  out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(k), w.end());
  out.insert(out.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
  return Word(std::move(out));
}

// Two-candidate minimal rotation scan (Booth-style), O(n).
Word least_rotation(const Word& w) {
  const std::size_t n = w.size();
  if (n <= 1) return w;
  std::size_t i = 0, j = 1, k = 0;
  while (i < n && j < n && k < n) {
    const Letter a = w[(i + k) % n];
    const Letter b = w[(j + k) % n];
    if (a == b) {
      ++k;
      continue;
    }
    if (a > b) {
      i += k + 1;
    } else {
      j += k + 1;
    }
    if (i == j) ++j;
    k = 0;
  }
  return rotate(w, std::min(i, j));
}

bool is_lyndon(const Word& w) {
  const std::size_t n = w.size();
  if (n == 0) return false;
  for (std::size_t k = 1; k < n; ++k) {
    // compare w with its rotation by k, in place
    std::size_t i = 0;
    while (i < n && w[i] == w[(i + k) % n]) ++i;
    if (i == n || w[i] > w[(i + k) % n]) return false;
  }
  return true;
}

std::size_t period(const Word& w) {
  const std::size_t n = w.size();
  if (n == 0) throw std::invalid_argument("period: undefined for the empty word");
  for (std::size_t p = 1; p < n; ++p) {
    if (n % p != 0) continue;
    bool repeats = true;
    for (std::size_t i = p; i < n && repeats; ++i) repeats = w[i] == w[i - p];
    if (repeats) return p;
  }
  return n;
}

Word step_read(const Word& w, std::size_t step) {
  const std::size_t n = w.size();
  if (std::gcd(step, n) != 1) {
    throw std::invalid_argument("step_read: step must be coprime with the word length");
  }
  if (n == 0) return w;
  const std::size_t stride = step % n;
  std::vector<Letter> out(n);
  std::size_t pos = 0;
  for (std::size_t j = 0; j < n; ++j) {
    out[j] = w[pos];
    pos += stride;
    if (pos >= n) pos -= n;
  }
  return Word(std::move(out));
}

std::map<Letter, std::size_t> letter_counts(const Word& w) {
  std::map<Letter, std::size_t> counts;
  for (Letter a : w) ++counts[a];
  return counts;
}

CyclicClass CyclicClass::of(const Word& w) {
  CyclicClass c;
  c.representative = least_rotation(w);
  c.period = w.empty() ? 0 : period(c.representative);
  return c;
}

}  // namespace ropwords
