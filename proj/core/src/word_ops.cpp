#include "krc/word_ops.hpp"

namespace krc {

std::optional<Letter> letter_f(int i, Letter x, int n) {
  if (i < 1 || i > n) throw Error("letter_f: color out of range");
  if (i <= n - 1) {
    if (x == i) return i + 1;
    if (x == -(i + 1)) return -i;
    return std::nullopt;
  }
  // color n
  if (x == n - 1) return -n;
  if (x == n) return -(n - 1);
  return std::nullopt;
}

std::optional<Letter> letter_e(int i, Letter x, int n) {
  if (i < 1 || i > n) throw Error("letter_e: color out of range");
  if (i <= n - 1) {
    if (x == i + 1) return i;
    if (x == -i) return -(i + 1);
    return std::nullopt;
  }
  if (x == -n) return n - 1;
  if (x == -(n - 1)) return n;
  return std::nullopt;
}

Signature signature(int i, std::span<const Letter> w, int n) {
  Signature sig;
  for (int pos = 0; pos < static_cast<int>(w.size()); ++pos) {
    if (letter_f(i, w[pos], n)) {
      sig.symbols.push_back('-');
      sig.position.push_back(pos);
    }
    if (letter_e(i, w[pos], n)) {
      sig.symbols.push_back('+');
      sig.position.push_back(pos);
    }
  }
  // Bracket scan: '-' cancels the most recent unmatched '+'.
  std::vector<int> plus_stack;   // indices into symbols
  std::vector<int> kept_minus;
  for (int j = 0; j < static_cast<int>(sig.symbols.size()); ++j) {
    if (sig.symbols[j] == '+') {
      plus_stack.push_back(j);
    } else if (!plus_stack.empty()) {
      plus_stack.pop_back();
    } else {
      kept_minus.push_back(j);
    }
  }
  sig.phi = static_cast<int>(kept_minus.size());
  sig.eps = static_cast<int>(plus_stack.size());
  if (sig.phi > 0) sig.f_position = sig.position[kept_minus.back()];
  if (sig.eps > 0) sig.e_position = sig.position[plus_stack.front()];
  return sig;
}

std::optional<Word> word_f(int i, const Word& w, int n) {
  Signature sig = signature(i, w, n);
  if (sig.phi == 0) return std::nullopt;
  Word out = w;
  out[sig.f_position] = *letter_f(i, w[sig.f_position], n);
  return out;
}

std::optional<Word> word_e(int i, const Word& w, int n) {
  Signature sig = signature(i, w, n);
  if (sig.eps == 0) return std::nullopt;
  Word out = w;
  out[sig.e_position] = *letter_e(i, w[sig.e_position], n);
  return out;
}

std::pair<int, int> eps_phi(int i, std::span<const Letter> w, int n) {
  Signature sig = signature(i, w, n);
  return {sig.eps, sig.phi};
}

}  // namespace krc
