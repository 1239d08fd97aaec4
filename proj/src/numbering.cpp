#include "godelkit/numbering.hpp"

namespace godelkit {

Code cantor_pair(const Nat& n, const Nat& p) {
  if (n < 0 || p < 0) throw error("cantor_pair: arguments must be naturals");
  Nat s = n + p;
  return s * (s + 1) / 2 + n + 1;
}

std::pair<Nat, Nat> cantor_unpair(const Code& c) {
  if (c < 1) throw error("cantor_unpair: 0 is outside the pairing's range");
  // s = floor((isqrt(8(c-1)+1) - 1) / 2) recovers the diagonal index.
  Nat m = c - 1;
  Nat s = (isqrt(8 * m + 1) - 1) / 2;
  Nat n = m - s * (s + 1) / 2;
  Nat p = s - n;
  return {n, p};
}

Code encode(const ArtTree& t) {
  Code tail = 0;
  for (auto it = t.children.rbegin(); it != t.children.rend(); ++it)
    tail = cantor_pair(encode(*it), tail);
  return cantor_pair(t.label, tail);
}

std::optional<ArtTree> decode_tree(const Code& c) {
  if (c < 1) return std::nullopt;
  auto [label, rest] = cantor_unpair(c);
  ArtTree t{label, {}};
  // rest is a right-nested list terminated by 0; codes strictly decrease
  // under unpairing, so this loop terminates.
  while (rest != 0) {
    auto [head, tail] = cantor_unpair(rest);
    auto child = decode_tree(head);
    if (!child) return std::nullopt;
    t.children.push_back(std::move(*child));
    rest = tail;
  }
  return t;
}

std::optional<TermPtr> decode_term(const Code& c) {
  auto t = decode_tree(c);
  if (!t) return std::nullopt;
  return term_from_articulated(*t);
}

std::optional<FormulaPtr> decode_formula(const Code& c) {
  auto t = decode_tree(c);
  if (!t) return std::nullopt;
  return formula_from_articulated(*t);
}

Code godel_number(const TermPtr& t) { return encode(to_articulated(t)); }
Code godel_number(const FormulaPtr& f) { return encode(to_articulated(f)); }

TermPtr reflect(const FormulaPtr& f) { return numeral(godel_number(f)); }

static Nat pair_bits_bound(const Nat& a, const Nat& b) {
  // bit_length(pair(n,p)) <= 2*max(bit_length(n), bit_length(p)) + 2
  Nat m = a > b ? a : b;
  return 2 * m + 2;
}

Nat encoded_bits_bound(const ArtTree& t) {
  Nat tail = 1;
  for (auto it = t.children.rbegin(); it != t.children.rend(); ++it)
    tail = pair_bits_bound(encoded_bits_bound(*it), tail);
  return pair_bits_bound(Nat(bit_length(t.label)), tail);
}

}  // namespace godelkit
