// Pure braids on three strands: words in x12, x13, x23 and their combed form.
#ifndef CONWAY3_BRAID_WORD_HPP
#define CONWAY3_BRAID_WORD_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace conway3 {

/// The three generators of P3; x_ij is a full positive twist of strands i<j.
enum class Generator : std::uint8_t { x12, x13, x23 };

int first_index(Generator g);
int second_index(Generator g);
Generator generator_from_indices(int i, int j);  // throws ParseError
std::string to_string(Generator g);

/// One syllable g^exponent of a braid word.
struct Syllable {
  Generator gen;
  long exponent;

  friend bool operator==(const Syllable&, const Syllable&) = default;
};

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An element of P3 written as a freely reduced word: nonzero exponents and
/// no two adjacent syllables on the same generator.
class BraidWord {
 public:
  BraidWord() = default;
  explicit BraidWord(const std::vector<Syllable>& syllables);

  static BraidWord generator(Generator g, long exponent = 1);

  const std::vector<Syllable>& syllables() const { return syllables_; }
  bool is_identity() const { return syllables_.empty(); }
  std::size_t size() const { return syllables_.size(); }

  /// Appends g^e, merging with the last syllable and cancelling zeros.
  void append(Generator g, long e);

  BraidWord inverse() const;
  long exponent_sum(Generator g) const;
  /// Sum of |exponent| over all syllables.
  long letter_length() const;
  /// Same word with every exponent negated.
  BraidWord mirror() const;

  friend BraidWord operator*(const BraidWord& a, const BraidWord& b);
  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  std::vector<Syllable> syllables_;
};

/// Parses whitespace separated tokens `x12`, `x13^-2`, ...
BraidWord parse_braid(std::string_view text);
/// Inverse of parse_braid; the identity prints as the empty string.
std::string to_string(const BraidWord& w);

/// beta = tail * x12^e12 with tail a reduced word in x13, x23.
struct CombedForm {
  BraidWord tail;
  long e12 = 0;

  BraidWord to_word() const;
  friend bool operator==(const CombedForm&, const CombedForm&) = default;
};

std::string to_string(const CombedForm& cf);

/// x12^by * gen^sign * x12^-by rewritten as a word in x13, x23.
/// `gen` must be x13 or x23 and `sign`, `by` must be +1 or -1.
BraidWord conj_action(Generator gen, int sign, int by);

/// Pushes every x12 syllable to the right end of the word.
CombedForm comb(const BraidWord& w);

void to_json(nlohmann::json& j, const BraidWord& w);
void from_json(const nlohmann::json& j, BraidWord& w);
void to_json(nlohmann::json& j, const CombedForm& cf);

}  // namespace conway3

#endif  // CONWAY3_BRAID_WORD_HPP
