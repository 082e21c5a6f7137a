#include "lkrep/braid.hpp"

#include <charconv>
#include <numeric>
#include <sstream>

#include "lkrep/errors.hpp"

namespace lkrep {

BraidWord::BraidWord(int strands, std::vector<Letter> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands_ < 1) {
    throw DomainError("braid word needs at least one strand, got " + std::to_string(strands_));
  }
  for (const auto& l : letters_) {
    if (l.index < 1 || l.index > strands_ - 1) {
      throw DomainError("generator index " + std::to_string(l.index) + " out of range for " +
                        std::to_string(strands_) + " strands");
    }
    if (l.sign != 1 && l.sign != -1) {
      throw DomainError("letter sign must be +1 or -1");
    }
  }
}

std::string BraidWord::to_string() const {
  std::string out;
  for (const auto& l : letters_) {
    if (!out.empty()) out += ' ';
    out += std::to_string(l.sign * l.index);
  }
  return out;
}

Permutation Permutation::identity(int n) {
  Permutation p;
  p.images.resize(static_cast<std::size_t>(n));
  std::iota(p.images.begin(), p.images.end(), 1);
  return p;
}

int Permutation::fixed_points() const {
  int count = 0;
  for (int i = 0; i < size(); ++i) {
    if (images[static_cast<std::size_t>(i)] == i + 1) ++count;
  }
  return count;
}

Permutation Permutation::after(const Permutation& other) const {
  Permutation p;
  p.images.resize(other.images.size());
  for (std::size_t i = 0; i < other.images.size(); ++i) {
    p.images[i] = images[static_cast<std::size_t>(other.images[i] - 1)];
  }
  return p;
}

BraidWord parse_braid(std::string_view text, int strands) {
  if (strands < 1) throw DomainError("strand count must be positive");
  std::vector<Letter> letters;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    int value = 0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    if (*first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || first == last) {
      throw ParseError("not an integer generator: '" + token + "'");
    }
    if (value == 0) throw ParseError("generator 0 is not allowed: '" + token + "'");
    const int index = value > 0 ? value : -value;
    if (index > strands - 1) {
      throw ParseError("generator '" + token + "' out of range for " + std::to_string(strands) +
                       " strands");
    }
    letters.push_back({index, value > 0 ? 1 : -1});
  }
  return BraidWord(strands, std::move(letters));
}

BraidWord compose(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands()) {
    throw DomainError("cannot compose braids on " + std::to_string(a.strands()) + " and " +
                      std::to_string(b.strands()) + " strands");
  }
  std::vector<Letter> letters = a.letters();
  letters.insert(letters.end(), b.letters().begin(), b.letters().end());
  return BraidWord(a.strands(), std::move(letters));
}

BraidWord invert(const BraidWord& a) {
  std::vector<Letter> letters;
  letters.reserve(a.length());
  for (auto it = a.letters().rbegin(); it != a.letters().rend(); ++it) {
    letters.push_back({it->index, -it->sign});
  }
  return BraidWord(a.strands(), std::move(letters));
}

int exponent_sum(const BraidWord& a) {
  int sum = 0;
  for (const auto& l : a.letters()) sum += l.sign;
  return sum;
}

BraidWord full_twist(int n, int k) {
  if (k < 2 || k > n) {
    throw DomainError("full twist needs 2 <= k <= n, got k=" + std::to_string(k) +
                      " n=" + std::to_string(n));
  }
  std::vector<Letter> letters;
  letters.reserve(static_cast<std::size_t>(k * (k - 1)));
  for (int rep = 0; rep < k; ++rep) {
    for (int i = 1; i <= k - 1; ++i) letters.push_back({i, 1});
  }
  return BraidWord(n, std::move(letters));
}

BraidWord include(const BraidWord& a, int target_strands, int offset) {
  if (offset < 0 || offset + a.strands() > target_strands) {
    throw DomainError("cannot include a " + std::to_string(a.strands()) + "-strand braid at offset " +
                      std::to_string(offset) + " into " + std::to_string(target_strands) +
                      " strands");
  }
  std::vector<Letter> letters = a.letters();
  for (auto& l : letters) l.index += offset;
  return BraidWord(target_strands, std::move(letters));
}

Permutation permutation_of(const BraidWord& a) {
  Permutation p = Permutation::identity(a.strands());
  // p = s_{l1} o ... o s_{lk}; apply letters right to left to each point.
  for (int i = 0; i < a.strands(); ++i) {
    int x = i + 1;
    for (auto it = a.letters().rbegin(); it != a.letters().rend(); ++it) {
      if (x == it->index) {
        x = it->index + 1;
      } else if (x == it->index + 1) {
        x = it->index;
      }
    }
    p.images[static_cast<std::size_t>(i)] = x;
  }
  return p;
}

}  // namespace lkrep
