#include "nabt/presentation.hpp"

#include <cstdlib>
#include <sstream>

#include "nabt/errors.hpp"

namespace nabt {

Word Word::power(std::uint32_t gen, int power) {
  std::vector<Letter> letters(static_cast<std::size_t>(std::abs(power)),
                              Letter{gen, static_cast<std::int8_t>(power < 0 ? -1 : 1)});
  return Word(std::move(letters));
}

Word Word::inverse() const {
  std::vector<Letter> out(letters_.rbegin(), letters_.rend());
  for (auto& l : out) l.exp = static_cast<std::int8_t>(-l.exp);
  return Word(std::move(out));
}

Word Word::free_reduced() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (const auto& l : letters_) {
    if (!out.empty() && out.back().gen == l.gen && out.back().exp == -l.exp)
      out.pop_back();
    else
      out.push_back(l);
  }
  return Word(std::move(out));
}

Word Word::cyclically_reduced() const {
  Word w = free_reduced();
  std::size_t lo = 0;
  std::size_t hi = w.letters_.size();
  while (hi - lo >= 2 && w.letters_[lo].gen == w.letters_[hi - 1].gen &&
         w.letters_[lo].exp == -w.letters_[hi - 1].exp) {
    ++lo;
    --hi;
  }
  return Word(std::vector<Letter>(w.letters_.begin() + static_cast<std::ptrdiff_t>(lo),
                                  w.letters_.begin() + static_cast<std::ptrdiff_t>(hi)));
}

Word& Word::operator*=(const Word& rhs) {
  letters_.insert(letters_.end(), rhs.letters_.begin(), rhs.letters_.end());
  return *this;
}

FpGroup::FpGroup(std::vector<std::string> generator_names, std::vector<Word> relators)
    : names_(std::move(generator_names)), relators_(std::move(relators)) {
  for (const auto& r : relators_)
    for (const auto& l : r.letters())
      if (l.gen >= names_.size() || (l.exp != 1 && l.exp != -1))
        throw InvalidArgument("relator references undeclared generator " + std::to_string(l.gen));
}

std::string FpGroup::word_to_string(const Word& w) const {
  if (w.empty()) return "1";
  std::ostringstream out;
  auto letters = w.letters();
  for (std::size_t i = 0; i < letters.size();) {
    std::size_t j = i;
    while (j < letters.size() && letters[j] == letters[i]) ++j;
    int power = static_cast<int>(j - i) * letters[i].exp;
    if (i > 0) out << '*';
    out << names_[letters[i].gen];
    if (power != 1) out << '^' << power;
    i = j;
  }
  return out.str();
}

std::string FpGroup::to_string() const {
  std::ostringstream out;
  out << '<';
  for (std::size_t i = 0; i < names_.size(); ++i) out << (i ? "," : "") << names_[i];
  out << " | ";
  for (std::size_t i = 0; i < relators_.size(); ++i) out << (i ? ", " : "") << word_to_string(relators_[i]);
  out << '>';
  return out.str();
}

Elem evaluate(const Word& w, const PermGroup& group, std::span<const Elem> images) {
  Elem acc = PermGroup::identity();
  for (const auto& l : w.letters()) {
    Elem x = images[l.gen];
    acc = group.mul(acc, l.exp > 0 ? x : group.inv(x));
  }
  return acc;
}

std::ptrdiff_t first_failing_relator(const FpGroup& p, const PermGroup& group,
                                     std::span<const Elem> images) {
  for (std::size_t i = 0; i < p.relators().size(); ++i)
    if (evaluate(p.relators()[i], group, images) != PermGroup::identity())
      return static_cast<std::ptrdiff_t>(i);
  return -1;
}

}  // namespace nabt
