#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "ropwords/word.hpp"

namespace ropwords {

// Partition of the positions holding letter 3 into pairs {j, (j+step) mod
// length}. Each pair is stored as (j, (j+step) mod length).
struct Pairing {
  std::size_t step = 0;
  std::size_t length = 0;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
};

// True iff some rotation of w factorizes into `parts` contiguous non-empty
// factors of equal height. Requires parts >= 2, a non-empty word, and
// strictly positive letters (so prefix heights increase strictly and the
// check reduces to divisibility of prefix sums).
bool equal_height_split(const Word& w, int parts);

// Direct definition: even height and no rotation splits into two factors of
// equal height. Word must be over {2,3}; the empty word is not a rop word.
bool is_rop(const Word& w);

// Prefix-height characterization: for a word of even height 2h, rop iff the
// length is odd (2l+1) and every rotation's length-l prefix has height h-1
// or h-2. Throws std::invalid_argument if the height is odd.
bool is_rop_lemma1(const Word& w);

// Returns the forced pairing of the 3-positions with step d (indices mod n)
// when one exists. Requires 0 < d < |w|.
std::optional<Pairing> has_d_pairing(const Word& w, std::size_t d);

// Pairing characterization: odd length 2l+1 and an l-pairing exists.
bool is_rop_pairing(const Word& w);

// Step-read characterization: odd length 2l+1 and the step-l reading admits
// a 1-pairing.
bool is_rop_stepread(const Word& w);

// Order-s generalization over {2,3}: height divisible by s and no rotation
// splits into s equal-height factors. is_s_rop(w, 2) agrees with is_rop(w).
bool is_s_rop(const Word& w, int s);

// Rhythmic arity property over {1..s}: height divisible by s and no
// rotation splits into s non-empty equal-height factors.
bool is_s_rap(const Word& w, int s);

}  // namespace ropwords
