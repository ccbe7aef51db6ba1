#include "twistcalc/free_word.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace tc {

namespace {

void reduce_append(std::vector<Letter>& out, Letter l) {
  if (l == 0) throw std::invalid_argument("zero letter in word");
  if (!out.empty() && out.back() == -l) {
    out.pop_back();
  } else {
    out.push_back(l);
  }
}

}  // namespace

FreeWord::FreeWord(std::vector<Letter> letters) {
  letters_.reserve(letters.size());
  for (Letter l : letters) reduce_append(letters_, l);
}

FreeWord FreeWord::inverse() const {
  std::vector<Letter> inv(letters_.rbegin(), letters_.rend());
  for (Letter& l : inv) l = -l;
  FreeWord w;
  w.letters_ = std::move(inv);  // reversal of a reduced word is reduced
  return w;
}

FreeWord FreeWord::operator*(const FreeWord& rhs) const {
  FreeWord w = *this;
  w.append(rhs);
  return w;
}

void FreeWord::append(Letter l) { reduce_append(letters_, l); }

void FreeWord::append(const FreeWord& w) {
  for (Letter l : w.letters_) reduce_append(letters_, l);
}

FreeWord FreeWord::conjugated_by(const FreeWord& g) const {
  FreeWord w = g;
  w.append(*this);
  w.append(g.inverse());
  return w;
}

FreeWord FreeWord::cyclically_reduced() const {
  std::size_t i = 0, j = letters_.size();
  while (j > i + 1 && letters_[i] == -letters_[j - 1]) {
    ++i;
    --j;
  }
  FreeWord w;
  w.letters_.assign(letters_.begin() + i, letters_.begin() + j);
  return w;
}

bool FreeWord::is_cyclically_reduced() const {
  if (letters_.size() < 2) return true;
  return letters_.front() != -letters_.back();
}

FreeWord FreeWord::rotated(std::size_t i) const {
  FreeWord w;
  w.letters_.reserve(letters_.size());
  for (std::size_t j = 0; j < letters_.size(); ++j)
    w.letters_.push_back(letters_[(i + j) % letters_.size()]);
  return w;
}

FreeWord FreeWord::conjugacy_normal_form() const {
  FreeWord c = cyclically_reduced();
  if (c.size() < 2) return c;
  FreeWord best = c;
  for (std::size_t i = 1; i < c.size(); ++i) {
    FreeWord r = c.rotated(i);
    if (r.letters_ < best.letters_) best = r;
  }
  return best;
}

bool FreeWord::conjugate_to(const FreeWord& other) const {
  return conjugacy_normal_form() == other.conjugacy_normal_form();
}

std::vector<std::int64_t> FreeWord::abelianization(int max_gen) const {
  std::vector<std::int64_t> v(static_cast<std::size_t>(max_gen) + 1, 0);
  for (Letter l : letters_) {
    int g = std::abs(l);
    if (g > max_gen) throw std::out_of_range("generator beyond basis");
    v[static_cast<std::size_t>(g)] += (l > 0) ? 1 : -1;
  }
  v.erase(v.begin());
  return v;
}

std::string FreeWord::str() const {
  std::string s;
  for (Letter l : letters_) {
    if (!s.empty()) s += ' ';
    int g = std::abs(l) - 1;
    if (g < 26) {
      s += static_cast<char>('a' + g);
    } else {
      s += 'g' + std::to_string(g);
    }
    if (l < 0) s += '\'';
  }
  return s.empty() ? "1" : s;
}

FreeWord substitute(const FreeWord& w, std::span<const FreeWord> images) {
  FreeWord out;
  for (Letter l : w.letters()) {
    std::size_t g = static_cast<std::size_t>(std::abs(l)) - 1;
    if (g >= images.size()) throw std::out_of_range("generator without image");
    out.append(l > 0 ? images[g] : images[g].inverse());
  }
  return out;
}

}  // namespace tc
