#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "krc/letters.hpp"

namespace krc {

using Word = std::vector<Letter>;

// Crystal graph of B(varpi_1):
//   color i <= n-1:  i -> i+1  and  (i+1)-bar -> i-bar
//   color n:         n-1 -> n-bar  and  n -> (n-1)-bar
std::optional<Letter> letter_f(int i, Letter x, int n);
std::optional<Letter> letter_e(int i, Letter x, int n);

struct Signature {
  std::string symbols;        // '+'/'-' in word order
  std::vector<int> position;  // word index contributing each symbol
  int eps = 0;                // '+' count of the reduced form
  int phi = 0;                // '-' count of the reduced form
  int f_position = -1;        // word index of the rightmost surviving '-'
  int e_position = -1;        // word index of the leftmost surviving '+'
};

// i-signature of a word read as an element of B(varpi_1)^{otimes L},
// leftmost letter = leftmost tensor factor.  Reduction is a single
// left-to-right bracket scan, equivalent to repeated "+-" deletion.
Signature signature(int i, std::span<const Letter> w, int n);

std::optional<Word> word_f(int i, const Word& w, int n);
std::optional<Word> word_e(int i, const Word& w, int n);

std::pair<int, int> eps_phi(int i, std::span<const Letter> w, int n);

}  // namespace krc
