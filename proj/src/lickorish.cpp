#include "pants/lickorish.hpp"

#include <charconv>
#include <sstream>

#include "pants/bounds.hpp"
#include "pants/error.hpp"

namespace pants {

namespace {

void validate(const TwistWord& w) {
  if (w.genus < 2) throw Error(ErrorCode::BadGenus, "genus must be >= 2");
  for (const auto& l : w.letters) {
    if (l.exponent != 1 && l.exponent != -1) {
      throw Error(ErrorCode::BadParameters, "exponents must be +1 or -1");
    }
    generator_weight(w.genus, l.index);
  }
}

int parse_int(std::string_view s, std::string_view token) {
  int value = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (s.empty() || ec != std::errc{} || ptr != end) {
    throw Error(ErrorCode::ParseError, "bad twist token '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

int generator_weight(int genus, int index) {
  if (genus < 2) throw Error(ErrorCode::BadGenus, "genus must be >= 2");
  if (index < 1 || index > 3 * genus - 1) {
    throw Error(ErrorCode::IndexOutOfRange, "twist index " + std::to_string(index) + " outside 1.." +
                                                std::to_string(3 * genus - 1));
  }
  if (index <= genus) return 1;
  if (index == genus + 1 || index == 2 * genus - 1) return 4;
  if (index <= 2 * genus - 2) return 6;
  return 0;
}

int word_path_length(const TwistWord& w) {
  validate(w);
  int total = 0;
  for (const auto& l : w.letters) total += generator_weight(w.genus, l.index);
  return total;
}

double distance_bound(const TwistWord& w) { return diameter_bound(w.genus) + word_path_length(w); }

TwistWord parse_word(int genus, std::string_view text) {
  TwistWord w{genus, {}};
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    if (token.size() < 2 || token[0] != 'T') {
      throw Error(ErrorCode::ParseError, "bad twist token '" + token + "'");
    }
    std::string_view body(token);
    body.remove_prefix(1);
    int exponent = 1;
    if (const auto caret = body.find('^'); caret != std::string_view::npos) {
      exponent = parse_int(body.substr(caret + 1), token);
      body = body.substr(0, caret);
      if (exponent != 1 && exponent != -1) {
        throw Error(ErrorCode::ParseError, "exponent must be 1 or -1 in '" + token + "'");
      }
    }
    const int index = parse_int(body, token);
    if (index < 1 || index > 3 * genus - 1) {
      throw Error(ErrorCode::ParseError, "twist index out of range in '" + token + "'");
    }
    w.letters.push_back({index, exponent});
  }
  validate(w);
  return w;
}

std::string format_word(const TwistWord& w) {
  std::string out;
  for (const auto& l : w.letters) {
    if (!out.empty()) out += ' ';
    out += 'T' + std::to_string(l.index);
    if (l.exponent == -1) out += "^-1";
  }
  return out;
}

}  // namespace pants
