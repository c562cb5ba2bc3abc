#include "cubic/word.hpp"

#include <stdexcept>

namespace cubic {

std::string to_string(Generator g) {
  switch (g) {
    case Generator::S: return "S";
    case Generator::T: return "T";
    case Generator::SInv: return "S^-1";
    case Generator::TInv: return "T^-1";
  }
  return "?";
}

std::string to_string(const Word& w) {
  std::string out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) out += '.';
    out += to_string(w[k]);
  }
  return out;
}

Word parse_word(std::string_view s) {
  Word w;
  std::size_t pos = 0;
  while (pos < s.size()) {
    auto dot = s.find('.', pos);
    auto tok = s.substr(pos, dot == std::string_view::npos ? std::string_view::npos : dot - pos);
    if (tok == "S") w.push_back(Generator::S);
    else if (tok == "T") w.push_back(Generator::T);
    else if (tok == "S^-1") w.push_back(Generator::SInv);
    else if (tok == "T^-1") w.push_back(Generator::TInv);
    else throw std::invalid_argument("bad word letter: " + std::string(tok));
    if (dot == std::string_view::npos) break;
    pos = dot + 1;
  }
  return w;
}

}  // namespace cubic
