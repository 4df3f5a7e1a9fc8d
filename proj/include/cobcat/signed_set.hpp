#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace cobcat {

using Label = std::string;
using Word = std::vector<Label>;

enum class Sign : unsigned char { minus = 0, plus = 1 };

inline Sign flip(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }
inline char sign_char(Sign s) { return s == Sign::plus ? '+' : '-'; }

/// One boundary point: a label together with an orientation sign.
struct SignedPoint {
  Label label;
  Sign sign = Sign::plus;

  bool operator==(const SignedPoint&) const = default;
  auto operator<=>(const SignedPoint&) const = default;
};

/// An ordered word of signed points. Objects of the cobordism category.
struct SignedSet {
  std::vector<SignedPoint> points;

  int size() const { return static_cast<int>(points.size()); }
  bool empty() const { return points.empty(); }
  const SignedPoint& at(int pos1) const;  // 1-based access

  bool operator==(const SignedSet&) const = default;
  auto operator<=>(const SignedSet&) const = default;
};

SignedSet concat(const SignedSet& a, const SignedSet& b);

/// Dual object: flip every sign, then reverse the order. Involutive.
SignedSet dual(const SignedSet& x);

/// Labels of the minus points, in order.
Word inp(const SignedSet& x);
/// Labels of the plus points, in order.
Word outp(const SignedSet& x);
/// Labels of all points, in order.
Word word_of(const SignedSet& x);

/// The signed set with `in` as minus points followed by `out` as plus points.
SignedSet minus_plus_shape(const Word& in, const Word& out);

SignedSet all_minus(const Word& w);
SignedSet all_plus(const Word& w);

Word concat(const Word& a, const Word& b);
Word reversed(const Word& w);

/// Parses shorthand like "a+ b- c+". Whitespace separated, sign suffix.
SignedSet parse_signed_set(std::string_view text);
/// Parses shorthand like "a b c".
Word parse_word(std::string_view text);

std::string to_string(const SignedSet& x);
std::string to_string(const Word& w);

}  // namespace cobcat
