#pragma once

// Wire formats: braid words in, normal forms out.
//
// A braid word is a whitespace-separated list of nonzero integers, where
// k > 0 stands for sigma_k and k < 0 for sigma_{|k|}^{-1}. The tokens "D" and
// "D-" stand for Delta and Delta^{-1}. A normal form renders as
//   D^p | w1 . w2 . ... . wr
// with each wi the canonical word of the i-th factor.

#include <string>
#include <string_view>
#include <vector>

#include "garside/normal_form.hpp"

namespace garside {

// Throws ParseError on a malformed token and InvalidParameter when an index
// does not fit n strands.
ArtinWord parse_word(std::string_view text, int n);

// One word per nonblank line; lines starting with '#' are comments.
std::vector<ArtinWord> parse_word_list(std::string_view text, int n);

std::string render(const SimpleBraid& s);
std::string render(const NormalForm& x);

}  // namespace garside
