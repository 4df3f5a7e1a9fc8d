#include "cobcat/signed_set.hpp"

#include <algorithm>

#include "cobcat/error.hpp"

namespace cobcat {

const SignedPoint& SignedSet::at(int pos1) const {
  require(pos1 >= 1 && pos1 <= size(), Errc::index_out_of_range,
          "signed set position out of range");
  return points[static_cast<size_t>(pos1 - 1)];
}

SignedSet concat(const SignedSet& a, const SignedSet& b) {
  SignedSet r = a;
  r.points.insert(r.points.end(), b.points.begin(), b.points.end());
  return r;
}

SignedSet dual(const SignedSet& x) {
  SignedSet r;
  r.points.reserve(x.points.size());
  for (auto it = x.points.rbegin(); it != x.points.rend(); ++it)
    r.points.push_back({it->label, flip(it->sign)});
  return r;
}

Word inp(const SignedSet& x) {
  Word w;
  for (const auto& p : x.points)
    if (p.sign == Sign::minus) w.push_back(p.label);
  return w;
}

Word outp(const SignedSet& x) {
  Word w;
  for (const auto& p : x.points)
    if (p.sign == Sign::plus) w.push_back(p.label);
  return w;
}

Word word_of(const SignedSet& x) {
  Word w;
  w.reserve(x.points.size());
  for (const auto& p : x.points) w.push_back(p.label);
  return w;
}

SignedSet minus_plus_shape(const Word& in, const Word& out) {
  SignedSet r;
  r.points.reserve(in.size() + out.size());
  for (const auto& l : in) r.points.push_back({l, Sign::minus});
  for (const auto& l : out) r.points.push_back({l, Sign::plus});
  return r;
}

SignedSet all_minus(const Word& w) { return minus_plus_shape(w, {}); }
SignedSet all_plus(const Word& w) { return minus_plus_shape({}, w); }

Word concat(const Word& a, const Word& b) {
  Word r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

Word reversed(const Word& w) { return Word(w.rbegin(), w.rend()); }

SignedSet parse_signed_set(std::string_view text) {
  SignedSet r;
  size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && text[i] == ' ') ++i;
    if (i >= text.size()) break;
    size_t j = i;
    while (j < text.size() && text[j] != ' ') ++j;
    std::string_view tok = text.substr(i, j - i);
    if (tok.size() < 2 || (tok.back() != '+' && tok.back() != '-'))
      throw ParseError("bad signed point token: " + std::string(tok));
    r.points.push_back({Label(tok.substr(0, tok.size() - 1)),
                        tok.back() == '+' ? Sign::plus : Sign::minus});
    i = j;
  }
  return r;
}

Word parse_word(std::string_view text) {
  Word r;
  size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && text[i] == ' ') ++i;
    if (i >= text.size()) break;
    size_t j = i;
    while (j < text.size() && text[j] != ' ') ++j;
    r.push_back(Label(text.substr(i, j - i)));
    i = j;
  }
  return r;
}

std::string to_string(const SignedSet& x) {
  std::string s;
  for (int i = 0; i < x.size(); ++i) {
    if (i) s += ' ';
    s += x.points[static_cast<size_t>(i)].label;
    s += sign_char(x.points[static_cast<size_t>(i)].sign);
  }
  return s;
}

std::string to_string(const Word& w) {
  std::string s = "[";
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += ' ';
    s += w[i];
  }
  return s + "]";
}

}  // namespace cobcat
