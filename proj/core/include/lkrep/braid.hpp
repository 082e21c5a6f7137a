#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace lkrep {

/// One Artin generator sigma_index^sign, index is 1-based.
struct Letter {
  int index = 1;
  int sign = +1;

  friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// A braid word on a fixed number of strands. Words are kept verbatim: no
/// free reduction and no normal form.
class BraidWord {
 public:
  explicit BraidWord(int strands, std::vector<Letter> letters = {});

  static BraidWord identity(int strands) { return BraidWord(strands); }

  int strands() const { return strands_; }
  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  /// Whitespace-separated signed generator indices, e.g. "1 -2 1".
  std::string to_string() const;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_;
  std::vector<Letter> letters_;
};

/// Permutation of {1..n}; images[i-1] is the image of i.
struct Permutation {
  std::vector<int> images;

  static Permutation identity(int n);
  int size() const { return static_cast<int>(images.size()); }
  int fixed_points() const;
  /// (*this)(other(i)).
  Permutation after(const Permutation& other) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
};

/// Parses "1 -2 1" style text. Throws ParseError naming the bad token.
BraidWord parse_braid(std::string_view text, int strands);

BraidWord compose(const BraidWord& a, const BraidWord& b);
BraidWord invert(const BraidWord& a);
int exponent_sum(const BraidWord& a);

/// (sigma_1 ... sigma_{k-1})^k as a word in B_n: the full twist of the
/// first k strands, central in B_k.
BraidWord full_twist(int n, int k);

/// Shifts every index by offset and re-homes the word on target_strands
/// strands. Offset 0 is the standard inclusion B_{n-1} into B_n.
BraidWord include(const BraidWord& a, int target_strands, int offset = 0);

/// Underlying permutation, with letters composed as maps left to right in
/// the same order as matrix products: w = l1 l2 ... gives s_{l1} o s_{l2} o ...
Permutation permutation_of(const BraidWord& a);

}  // namespace lkrep
