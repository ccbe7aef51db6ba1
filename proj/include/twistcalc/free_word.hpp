#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace tc {

// A letter is a signed generator index: +g or -g for g >= 1.
using Letter = std::int32_t;

inline Letter inverse_letter(Letter l) { return -l; }

/// Reduced word in a free group. Generators are 1-based indices; the
/// empty word is the identity. Words are kept freely reduced at all times.
class FreeWord {
 public:
  FreeWord() = default;
  explicit FreeWord(std::vector<Letter> letters);
  static FreeWord generator(int g) { return FreeWord({static_cast<Letter>(g)}); }

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  FreeWord inverse() const;
  FreeWord operator*(const FreeWord& rhs) const;
  bool operator==(const FreeWord& rhs) const = default;
  auto operator<=>(const FreeWord& rhs) const = default;

  void append(Letter l);
  void append(const FreeWord& w);

  /// Conjugate g * w * g^-1.
  FreeWord conjugated_by(const FreeWord& g) const;

  /// Removes cancelling prefix/suffix pairs; result represents the same
  /// conjugacy class.
  FreeWord cyclically_reduced() const;
  bool is_cyclically_reduced() const;

  /// Least rotation of the cyclically reduced word: canonical form for
  /// conjugacy comparison.
  FreeWord conjugacy_normal_form() const;
  bool conjugate_to(const FreeWord& other) const;

  /// Rotation starting at index i of this (assumed cyclically reduced) word.
  FreeWord rotated(std::size_t i) const;

  /// Exponent sums per generator, indices 1..max_gen.
  std::vector<std::int64_t> abelianization(int max_gen) const;

  std::string str() const;  // debugging aid: "a b' c" style with 1->a etc.

 private:
  std::vector<Letter> letters_;
};

/// Substitute each generator g by images[g-1] (and inverses accordingly).
FreeWord substitute(const FreeWord& w, std::span<const FreeWord> images);

}  // namespace tc
