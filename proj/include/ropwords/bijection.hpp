#pragma once

#include <cstddef>

#include "ropwords/word.hpp"

namespace ropwords {

// Cyclic class of a binary word, canonicalized to its least rotation.
struct BinaryNecklace {
  Word representative;
  std::size_t zeros = 0;
  std::size_t ones = 0;

  // Canonicalizes any word over {0,1}; throws for other letters.
  static BinaryNecklace of(const Word& w);

  friend bool operator==(const BinaryNecklace&, const BinaryNecklace&) = default;
};

// Cyclic class of a rop word, canonicalized to its least rotation. The
// representative of an aperiodic class is a Lyndon word.
struct RopClass {
  Word representative;
  std::size_t n2 = 0;
  std::size_t n3 = 0;
  std::size_t period = 0;

  // Verifies is_rop and canonicalizes; throws for non-rop input.
  static RopClass of(const Word& w);

  bool lyndon() const { return period == representative.size(); }

  friend bool operator==(const RopClass&, const RopClass&) = default;
};

// Sends 2 -> 0 and each adjacent pair 33 -> 1, reading left to right.
// Throws unless every maximal run of 3s has even length.
Word psi(const Word& w);

// Sends 0 -> 2 and 1 -> 33. Inverse of psi on its image.
Word psi_inverse(const Word& b);

// Expands a binary necklace with an odd number of zeros into the rop class
// with n2 = zeros letters 2 and n3 = 2*ones letters 3: each 1 becomes a 33
// pair, and the resulting word of odd length n' is laid out at stride
// (n'+1)/2 around the cycle. Aperiodic necklaces map to Lyndon classes.
RopClass necklace_to_rop(const BinaryNecklace& b);

// Inverse direction: reads the rop word at stride (n+1)/2, cuts at a
// letter 2 so no 3-run wraps, contracts 33 pairs, and canonicalizes.
// Throws if w is not a rop word.
BinaryNecklace rop_to_necklace(const Word& w);

}  // namespace ropwords
