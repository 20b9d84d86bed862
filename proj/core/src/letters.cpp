#include "krc/letters.hpp"

namespace krc {

Ord compare(Letter a, Letter b, int n) {
  if (!is_valid_letter(a, n) || !is_valid_letter(b, n))
    throw Error("compare: letter out of range for rank n=" + std::to_string(n));
  if (a == b) return Ord::eq;
  if (a == -b && (a == n || a == -n)) return Ord::incomparable;
  int pa = chain_pos(a, n), pb = chain_pos(b, n);
  return pa < pb ? Ord::lt : Ord::gt;
}

bool leq(Letter a, Letter b, int n) {
  Ord o = compare(a, b, n);
  return o == Ord::lt || o == Ord::eq;
}

bool lt(Letter a, Letter b, int n) { return compare(a, b, n) == Ord::lt; }

std::string letter_str(Letter x) {
  return x > 0 ? std::to_string(x) : std::to_string(-x) + "~";
}

std::string letter_pretty(Letter x) {
  if (x > 0) return std::to_string(x);
  return std::to_string(-x) + "\xCC\x85";  // combining overline
}

}  // namespace krc
