#include "ropwords/bijection.hpp"

#include <stdexcept>

#include "ropwords/predicates.hpp"

namespace ropwords {

BinaryNecklace BinaryNecklace::of(const Word& w) {
  BinaryNecklace b;
  b.representative = least_rotation(w);
  for (Letter a : w) {
    if (a == 0) {
      ++b.zeros;
    } else if (a == 1) {
      ++b.ones;
    } else {
      throw std::invalid_argument("necklace: word must be over the alphabet {0,1}");
    }
  }
  return b;
}

RopClass RopClass::of(const Word& w) {
  if (!is_rop(w)) throw std::invalid_argument("rop class: word is not a rop word");
  RopClass c;
  c.representative = least_rotation(w);
  c.period = period(c.representative);
  for (Letter a : c.representative) {
    if (a == 2) {
      ++c.n2;
    } else {
      ++c.n3;
    }
  }
  return c;
}

Word psi(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  std::size_t i = 0;
  while (i < w.size()) {
    if (w[i] == 2) {
      out.push_back(0);
      ++i;
    } else if (w[i] == 3 && i + 1 < w.size() && w[i + 1] == 3) {
      out.push_back(1);
      i += 2;
    } else {
      throw std::invalid_argument("psi: every maximal run of 3s must have even length");
    }
  }
  return Word(std::move(out));
}

Word psi_inverse(const Word& b) {
  std::vector<Letter> out;
  out.reserve(2 * b.size());
  for (Letter a : b) {
    if (a == 0) {
      out.push_back(2);
    } else if (a == 1) {
      out.push_back(3);
      out.push_back(3);
    } else {
      throw std::invalid_argument("psi_inverse: word must be over the alphabet {0,1}");
    }
  }
  return Word(std::move(out));
}

// Both directions read the cycle at stride (n'+1)/2, i.e. -l mod n' for
// n' = 2l+1. That stride is always coprime with n', and it is the reading
// under which the classical correspondence tables come out: the mirror
// stride l would swap the chiral classes.
RopClass necklace_to_rop(const BinaryNecklace& b) {
  if (b.zeros % 2 == 0) {
    throw std::invalid_argument("necklace_to_rop: the zero count must be odd");
  }
  const Word expanded = psi_inverse(b.representative);
  const std::size_t n = expanded.size();  // odd: zeros + 2*ones
  const std::size_t stride = (n + 1) / 2;
  std::vector<Letter> placed(n);
  std::size_t pos = 0;
  for (std::size_t j = 0; j < n; ++j) {
    placed[pos] = expanded[j];
    pos += stride;
    if (pos >= n) pos -= n;
  }
  return RopClass::of(Word(std::move(placed)));
}

BinaryNecklace rop_to_necklace(const Word& w) {
  if (!is_rop(w)) throw std::invalid_argument("rop_to_necklace: input is not a rop word");
  const std::size_t n = w.size();
  const Word x = step_read(w, (n + 1) / 2);
  // cut at a letter 2 so no run of 3s wraps; every rop word contains a 2
  std::size_t cut = 0;
  while (x[cut] != 2) ++cut;
  return BinaryNecklace::of(psi(rotate(x, cut)));
}

}  // namespace ropwords
