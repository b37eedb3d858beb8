#include "garside/text.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

namespace garside {

ArtinWord parse_word(std::string_view text, int n) {
  if (n < 2 || n > kMaxStrands) {
    throw InvalidParameter("strand count out of range: " + std::to_string(n));
  }
  ArtinWord w{n, {}};
  const auto delta_word = SimpleBraid::delta(n).canonical_word();
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
    const std::string_view tok = text.substr(pos, end - pos);
    pos = end;
    if (tok == "D") {
      for (int i : delta_word) w.letters.push_back({i, 1});
      continue;
    }
    if (tok == "D-") {
      for (auto it = delta_word.rbegin(); it != delta_word.rend(); ++it) {
        w.letters.push_back({*it, -1});
      }
      continue;
    }
    int v = 0;
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    if (*first == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last || v == 0) {
      throw ParseError("malformed braid token '" + std::string(tok) + "'");
    }
    const int index = v > 0 ? v : -v;
    if (index > n - 1) {
      throw InvalidParameter("generator " + std::string(tok) +
                             " does not exist with " + std::to_string(n) +
                             " strands");
    }
    w.letters.push_back({index, v > 0 ? 1 : -1});
  }
  return w;
}

std::vector<ArtinWord> parse_word_list(std::string_view text, int n) {
  std::vector<ArtinWord> out;
  std::istringstream is{std::string(text)};
  std::string line;
  while (std::getline(is, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    out.push_back(parse_word(line, n));
  }
  return out;
}

std::string render(const SimpleBraid& s) {
  std::string out;
  for (int i : s.canonical_word()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(i);
  }
  return out;
}

std::string render(const NormalForm& x) {
  std::string out = "D^" + std::to_string(x.inf()) + " |";
  for (std::size_t i = 0; i < x.factors().size(); ++i) {
    out += i == 0 ? " " : " . ";
    out += render(x.factors()[i]);
  }
  return out;
}

}  // namespace garside
