#pragma once

#include <stdexcept>
#include <string>

namespace krc {

// A letter of the type D_n alphabet 1 < 2 < ... < n-1 < {n, n-bar} < ...
// < 2-bar < 1-bar.  Unbarred i is encoded as +i and barred i as -i, so
// bar() is a sign flip and an involution for free.
using Letter = int;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Ord { lt, eq, gt, incomparable };

constexpr Letter bar(Letter x) { return -x; }
constexpr bool is_barred(Letter x) { return x < 0; }

constexpr bool is_valid_letter(Letter x, int n) {
  return x != 0 && -n <= x && x <= n;
}

// Position in the chain; n and n-bar share a slot and are handled
// separately by compare().
constexpr int chain_pos(Letter x, int n) {
  return x > 0 ? (x == n ? n : x) : 2 * n - (-x);
}

Ord compare(Letter a, Letter b, int n);

// a <= b in the partial order (false for incomparable pairs).
bool leq(Letter a, Letter b, int n);
bool lt(Letter a, Letter b, int n);

// "3" for unbarred, "3~" for barred (ASCII), used in machine formats.
std::string letter_str(Letter x);
// "3" / UTF-8 overlined digit, used in human-readable traces.
std::string letter_pretty(Letter x);

}  // namespace krc
