#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace cubic {

// Generators of SL2(Z) acting on the cover plane and on H2.
enum class Generator { S, T, SInv, TInv };

// Letters in product order: the word "T.S" is the matrix T*S, so S acts first.
using Word = std::vector<Generator>;

std::string to_string(Generator g);
std::string to_string(const Word& w);

// Parses "T.S", "S^-1.T", "" (identity). Throws std::invalid_argument.
Word parse_word(std::string_view s);

}  // namespace cubic
