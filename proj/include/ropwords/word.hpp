#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace ropwords {

// A letter is a decimal digit value. Words over {2,3} carry rhythm
// durations, words over {1..s} carry rap durations, and words over
// {0,1} represent binary necklaces. Alphabet restrictions are checked
// by the operations that need them, not by the carrier type.
using Letter = std::uint8_t;

// Finite sequence of letters. The empty word is allowed.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters);

  // Parses a digit string such as "2233233"; "" parses to the empty word.
  static Word parse(std::string_view digits);

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  std::vector<Letter>::const_iterator begin() const { return letters_.begin(); }
  std::vector<Letter>::const_iterator end() const { return letters_.end(); }

  const std::vector<Letter>& letters() const { return letters_; }

  // Digit-string form used everywhere words are serialized.
  std::string str() const;

  // This word repeated `times` times.
  Word repeated(std::size_t times) const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word& a, const Word& b) {
    return a.letters_ <=> b.letters_;  // lexicographic, prefixes first
  }

 private:
  std::vector<Letter> letters_;
};

// Sum of the letters. Rotation-invariant; 0 for the empty word.
long long height(const Word& w);

// Left rotation by k: the first k letters move to the end.
Word rotate(const Word& w, std::size_t k);

// Lexicographically least rotation, computed in linear time.
Word least_rotation(const Word& w);

// True iff w is strictly smaller than every nontrivial rotation of
// itself. Single letters qualify, the empty word does not.
bool is_lyndon(const Word& w);

// Smallest p dividing |w| such that w is its length-p prefix repeated.
// Throws std::invalid_argument for the empty word.
std::size_t period(const Word& w);

// Word x with x[j] = w[(j*step) mod n]. Requires gcd(step, n) = 1;
// throws std::invalid_argument otherwise.
Word step_read(const Word& w, std::size_t step);

// Multiplicity of each letter present in w.
std::map<Letter, std::size_t> letter_counts(const Word& w);

// Equivalence class of a word under rotation, keyed by its least
// rotation. `period` divides the representative's length; the class is
// aperiodic iff period equals length.
struct CyclicClass {
  Word representative;
  std::size_t period = 0;

  static CyclicClass of(const Word& w);

  bool aperiodic() const { return period == representative.size(); }

  friend bool operator==(const CyclicClass&, const CyclicClass&) = default;
};

}  // namespace ropwords
