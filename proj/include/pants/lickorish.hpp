#ifndef PANTS_LICKORISH_HPP
#define PANTS_LICKORISH_HPP

#include <string>
#include <string_view>
#include <vector>

namespace pants {

struct TwistLetter {
  int index = 1;
  int exponent = 1;
};

/// A word in the Lickorish twists T_1 .. T_{3g-1}, exponents +1 or -1.
struct TwistWord {
  int genus = 2;
  std::vector<TwistLetter> letters;
};

/// Length of the path from O_loops to its image under twist i:
/// 1 for i <= g, 4 for i = g+1 or 2g-1, 6 for g+2 <= i <= 2g-2, 0 from 2g on.
int generator_weight(int genus, int index);

/// Sum of generator weights; the exponent sign does not matter.
int word_path_length(const TwistWord& w);

/// diameter_bound(genus) + word_path_length(w). Only a valid bound when w is
/// a minimal-length word; that is not checked.
double distance_bound(const TwistWord& w);

/// Whitespace-separated tokens T<i> or T<i>^-1 (T<i>^1 also accepted).
TwistWord parse_word(int genus, std::string_view text);
std::string format_word(const TwistWord& w);

}  // namespace pants

#endif  // PANTS_LICKORISH_HPP
