#include "conway3/braid_word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <sstream>

namespace conway3 {

int first_index(Generator g) { return g == Generator::x23 ? 2 : 1; }

int second_index(Generator g) { return g == Generator::x12 ? 2 : 3; }

Generator generator_from_indices(int i, int j) {
  if (i == 1 && j == 2) return Generator::x12;
  if (i == 1 && j == 3) return Generator::x13;
  if (i == 2 && j == 3) return Generator::x23;
  throw ParseError("generator index out of range: x" + std::to_string(i) +
                   std::to_string(j) + " (only x12, x13, x23 exist on 3 strands)");
}

std::string to_string(Generator g) {
  return "x" + std::to_string(first_index(g)) + std::to_string(second_index(g));
}

BraidWord::BraidWord(const std::vector<Syllable>& syllables) {
  for (const auto& s : syllables) append(s.gen, s.exponent);
}

BraidWord BraidWord::generator(Generator g, long exponent) {
  BraidWord w;
  w.append(g, exponent);
  return w;
}

void BraidWord::append(Generator g, long e) {
  if (e == 0) return;
  if (!syllables_.empty() && syllables_.back().gen == g) {
    syllables_.back().exponent += e;
    if (syllables_.back().exponent == 0) syllables_.pop_back();
    return;
  }
  syllables_.push_back({g, e});
}

BraidWord BraidWord::inverse() const {
  BraidWord w;
  for (auto it = syllables_.rbegin(); it != syllables_.rend(); ++it)
    w.syllables_.push_back({it->gen, -it->exponent});
  return w;
}

long BraidWord::exponent_sum(Generator g) const {
  long sum = 0;
  for (const auto& s : syllables_)
    if (s.gen == g) sum += s.exponent;
  return sum;
}

long BraidWord::letter_length() const {
  long n = 0;
  for (const auto& s : syllables_) n += std::labs(s.exponent);
  return n;
}

BraidWord BraidWord::mirror() const {
  BraidWord w;
  for (const auto& s : syllables_) w.syllables_.push_back({s.gen, -s.exponent});
  return w;
}

BraidWord operator*(const BraidWord& a, const BraidWord& b) {
  BraidWord w = a;
  for (const auto& s : b.syllables_) w.append(s.gen, s.exponent);
  return w;
}

namespace {

long parse_exponent(std::string_view token, std::string_view digits) {
  if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
  long e = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), e);
  if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size())
    throw ParseError("malformed exponent in token '" + std::string(token) + "'");
  if (e == 0) throw ParseError("zero exponent in token '" + std::string(token) + "'");
  return e;
}

Syllable parse_token(std::string_view token) {
  if (token.size() < 3 || token[0] != 'x')
    throw ParseError("malformed token '" + std::string(token) + "'");
  auto is_digit = [](char c) { return c >= '0' && c <= '9'; };
  if (!is_digit(token[1]) || !is_digit(token[2]))
    throw ParseError("malformed token '" + std::string(token) + "'");
  int i = token[1] - '0';
  int j = token[2] - '0';
  if (token.size() > 3 && is_digit(token[3]))
    throw ParseError("index out of range in token '" + std::string(token) + "'");
  if (i < 1 || j <= i)
    throw ParseError("generator indices must satisfy 1 <= i < j in '" +
                     std::string(token) + "'");
  Generator g = generator_from_indices(i, j);
  long e = 1;
  if (token.size() > 3) {
    if (token[3] != '^') throw ParseError("malformed token '" + std::string(token) + "'");
    e = parse_exponent(token, token.substr(4));
  }
  return {g, e};
}

}  // namespace

BraidWord parse_braid(std::string_view text) {
  BraidWord w;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    std::size_t end = pos;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
    if (end > pos) {
      Syllable s = parse_token(text.substr(pos, end - pos));
      w.append(s.gen, s.exponent);
    }
    pos = end;
  }
  return w;
}

std::string to_string(const BraidWord& w) {
  std::ostringstream out;
  bool first = true;
  for (const auto& s : w.syllables()) {
    if (!first) out << ' ';
    first = false;
    out << to_string(s.gen);
    if (s.exponent != 1) out << '^' << s.exponent;
  }
  return out.str();
}

BraidWord CombedForm::to_word() const {
  return tail * BraidWord::generator(Generator::x12, e12);
}

std::string to_string(const CombedForm& cf) {
  std::string tail = cf.tail.is_identity() ? "1" : to_string(cf.tail);
  return tail + " · x12^" + std::to_string(cf.e12);
}

// Conjugation by x12 acts on F2 = <x13, x23> as conjugation by x13*x23:
//   x12 x23 x12^-1 = x13 x23 x13^-1
//   x12 x13 x12^-1 = x13 x23 x13 x23^-1 x13^-1
BraidWord conj_action(Generator gen, int sign, int by) {
  if (gen == Generator::x12)
    throw std::invalid_argument("conj_action: x12 does not lie in the free factor");
  if ((sign != 1 && sign != -1) || (by != 1 && by != -1))
    throw std::invalid_argument("conj_action: sign and by must be +1 or -1");
  using G = Generator;
  std::vector<Syllable> image;
  if (by == 1) {
    if (gen == G::x23)
      image = {{G::x13, 1}, {G::x23, 1}, {G::x13, -1}};
    else
      image = {{G::x13, 1}, {G::x23, 1}, {G::x13, 1}, {G::x23, -1}, {G::x13, -1}};
  } else {
    if (gen == G::x13)
      image = {{G::x23, -1}, {G::x13, 1}, {G::x23, 1}};
    else
      image = {{G::x23, -1}, {G::x13, -1}, {G::x23, 1}, {G::x13, 1}, {G::x23, 1}};
  }
  BraidWord w(image);
  return sign == 1 ? w : w.inverse();
}

namespace {

// Applies the automorphism y -> x12^by y x12^-by to a word in x13, x23.
BraidWord apply_conj(const BraidWord& w, int by) {
  const BraidWord images[2][2] = {
      {conj_action(Generator::x13, 1, by), conj_action(Generator::x13, -1, by)},
      {conj_action(Generator::x23, 1, by), conj_action(Generator::x23, -1, by)}};
  BraidWord out;
  for (const auto& s : w.syllables()) {
    const int row = s.gen == Generator::x13 ? 0 : 1;
    const BraidWord& img = images[row][s.exponent > 0 ? 0 : 1];
    for (long k = 0; k < std::labs(s.exponent); ++k)
      for (const auto& t : img.syllables()) out.append(t.gen, t.exponent);
  }
  return out;
}

}  // namespace

CombedForm comb(const BraidWord& w) {
  // Right-to-left sweep: (tail, e) is the combed form of the suffix read so far.
  CombedForm cf;
  const auto& syl = w.syllables();
  for (auto it = syl.rbegin(); it != syl.rend(); ++it) {
    if (it->gen == Generator::x12) {
      const int by = it->exponent > 0 ? 1 : -1;
      for (long k = 0; k < std::labs(it->exponent); ++k) cf.tail = apply_conj(cf.tail, by);
      cf.e12 += it->exponent;
    } else {
      cf.tail = BraidWord::generator(it->gen, it->exponent) * cf.tail;
    }
  }
  return cf;
}

void to_json(nlohmann::json& j, const BraidWord& w) {
  j = nlohmann::json::array();
  for (const auto& s : w.syllables())
    j.push_back({first_index(s.gen), second_index(s.gen), s.exponent});
}

void from_json(const nlohmann::json& j, BraidWord& w) {
  w = BraidWord();
  for (const auto& triple : j) {
    if (!triple.is_array() || triple.size() != 3)
      throw ParseError("braid JSON entries must be [i, j, exponent] triples");
    long e = triple[2].get<long>();
    if (e == 0) throw ParseError("zero exponent in braid JSON");
    w.append(generator_from_indices(triple[0].get<int>(), triple[1].get<int>()), e);
  }
}

void to_json(nlohmann::json& j, const CombedForm& cf) {
  j = {{"tail", cf.tail}, {"e12", cf.e12}};
}

}  // namespace conway3
