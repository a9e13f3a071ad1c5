#include "ropwords/predicates.hpp"

#include <numeric>
#include <stdexcept>

namespace ropwords {

namespace {

void require_alphabet_23(const Word& w, const char* who) {
  for (Letter a : w) {
    if (a != 2 && a != 3) {
      throw std::invalid_argument(std::string(who) + ": word must be over the alphabet {2,3}");
    }
  }
}

// Prefix sums of w read twice around, so the height of any rotation's
// prefix is a difference of two entries.
std::vector<long long> doubled_prefix_sums(const Word& w) {
  const std::size_t n = w.size();
  std::vector<long long> sums(2 * n + 1, 0);
  for (std::size_t i = 0; i < 2 * n; ++i) sums[i + 1] = sums[i] + w[i % n];
  return sums;
}

long long even_height_or_throw(const Word& w, const char* who) {
  const long long h = height(w);
  if (h % 2 != 0) throw std::invalid_argument(std::string(who) + ": word height must be even");
  return h;
}

}  // namespace

bool equal_height_split(const Word& w, int parts) {
  if (parts < 2) throw std::invalid_argument("equal_height_split: need at least two parts");
  if (w.empty()) throw std::invalid_argument("equal_height_split: undefined for the empty word");
  for (Letter a : w) {
    if (a == 0) throw std::invalid_argument("equal_height_split: letters must be positive");
  }
  const long long h = height(w);
  if (h % parts != 0) return false;
  const long long target = h / parts;
  const std::size_t n = w.size();
  const auto sums = doubled_prefix_sums(w);
  // A rotation splits iff each of the parts-1 cut heights t, 2t, ...
  // appears among its strict prefix heights. Prefix heights increase
  // strictly, so counting multiples of t suffices.
  for (std::size_t k = 0; k < n; ++k) {
    int cuts = 0;
    for (std::size_t m = 1; m < n; ++m) {
      if ((sums[k + m] - sums[k]) % target == 0) {
        if (++cuts == parts - 1) return true;
      }
    }
  }
  return false;
}

bool is_rop(const Word& w) {
  require_alphabet_23(w, "is_rop");
  if (w.empty()) return false;
  if (height(w) % 2 != 0) return false;
  return !equal_height_split(w, 2);
}

bool is_rop_lemma1(const Word& w) {
  require_alphabet_23(w, "is_rop_lemma1");
  const long long h = even_height_or_throw(w, "is_rop_lemma1") / 2;
  const std::size_t n = w.size();
  if (n % 2 == 0) return false;
  const std::size_t ell = n / 2;
  const auto sums = doubled_prefix_sums(w);
  for (std::size_t k = 0; k < n; ++k) {
    const long long prefix_height = sums[k + ell] - sums[k];
    if (prefix_height != h - 1 && prefix_height != h - 2) return false;
  }
  return true;
}

std::optional<Pairing> has_d_pairing(const Word& w, std::size_t d) {
  const std::size_t n = w.size();
  if (d == 0 || d >= n) throw std::invalid_argument("has_d_pairing: step out of range");
  Pairing result{d, n, {}};
  const std::size_t orbits = std::gcd(d, n);
  const std::size_t orbit_len = n / orbits;
  std::vector<std::size_t> orbit(orbit_len);
  for (std::size_t start = 0; start < orbits; ++start) {
    std::size_t pos = start;
    for (std::size_t t = 0; t < orbit_len; ++t) {
      orbit[t] = pos;
      pos = (pos + d) % n;
    }
    // Runs of 3s along the orbit must have even length; pairs are forced
    // left to right within each run.
    std::size_t anchor = orbit_len;
    for (std::size_t t = 0; t < orbit_len; ++t) {
      if (w[orbit[t]] != 3) {
        anchor = t;
        break;
      }
    }
    if (anchor == orbit_len) {
      // orbit is all 3s: pairable iff its length is even
      if (orbit_len % 2 != 0) return std::nullopt;
      for (std::size_t t = 0; t < orbit_len; t += 2) {
        result.pairs.emplace_back(orbit[t], orbit[t + 1]);
      }
      continue;
    }
    std::vector<std::size_t> run;
    for (std::size_t step = 1; step <= orbit_len; ++step) {
      const std::size_t t = (anchor + step) % orbit_len;
      if (w[orbit[t]] == 3) {
        run.push_back(orbit[t]);
        continue;
      }
      if (run.size() % 2 != 0) return std::nullopt;
      for (std::size_t r = 0; r < run.size(); r += 2) {
        result.pairs.emplace_back(run[r], run[r + 1]);
      }
      run.clear();
    }
    // the walk ends back on the anchor, which is not a 3, so no run is open
  }
  return result;
}

bool is_rop_pairing(const Word& w) {
  require_alphabet_23(w, "is_rop_pairing");
  even_height_or_throw(w, "is_rop_pairing");
  const std::size_t n = w.size();
  if (n == 0 || n % 2 == 0) return false;
  if (n == 1) return true;  // even height forces the single letter 2
  return has_d_pairing(w, n / 2).has_value();
}

bool is_rop_stepread(const Word& w) {
  require_alphabet_23(w, "is_rop_stepread");
  even_height_or_throw(w, "is_rop_stepread");
  const std::size_t n = w.size();
  if (n == 0 || n % 2 == 0) return false;
  if (n == 1) return true;
  return has_d_pairing(step_read(w, n / 2), 1).has_value();
}

bool is_s_rop(const Word& w, int s) {
  if (s < 2) throw std::invalid_argument("is_s_rop: order must be at least 2");
  require_alphabet_23(w, "is_s_rop");
  if (w.empty()) throw std::invalid_argument("is_s_rop: undefined for the empty word");
  if (height(w) % s != 0) return false;
  return !equal_height_split(w, s);
}

bool is_s_rap(const Word& w, int s) {
  if (s < 2) throw std::invalid_argument("is_s_rap: order must be at least 2");
  if (w.empty()) throw std::invalid_argument("is_s_rap: undefined for the empty word");
  for (Letter a : w) {
    if (a < 1 || static_cast<int>(a) > s) {
      throw std::invalid_argument("is_s_rap: word must be over the alphabet {1..s}");
    }
  }
  if (height(w) % s != 0) return false;
  // letters are >= 1, so equal-height factors are automatically non-empty
  return !equal_height_split(w, s);
}

}  // namespace ropwords
