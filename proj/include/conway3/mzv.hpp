// Multiple zeta values: numerics, shuffle regularization and the double
// shuffle relations used to compare MZV combinations exactly.
#ifndef CONWAY3_MZV_HPP
#define CONWAY3_MZV_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "conway3/big_int.hpp"

namespace conway3 {

/// (l1, ..., lk); zeta(l1..lk) = sum over n1 > ... > nk >= 1 of prod n_i^{-l_i}.
/// The empty composition stands for the constant 1.
using Composition = std::vector<int>;

int weight(const Composition& c);
bool is_admissible(const Composition& c);
std::string to_string(const Composition& c);  // "zeta(3,1)"

/// Word over {a, b}; a^{s1-1} b ... a^{sk-1} b encodes zeta(s1..sk).
using ABWord = std::string;

int depth(std::string_view w);
ABWord word_of(const Composition& c);
/// Inverse of word_of; requires a word ending in b (or empty).
Composition composition_of(std::string_view w);
bool is_convergent(std::string_view w);

class InadmissibleComposition : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class PrecisionUnattainable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Smallest absolute error zeta() can promise.
constexpr double kZetaPrecisionFloor = 1e-15;
constexpr int kMaxZetaWeight = 20;

/// Numerical MZV with |error| <= eps. Splits the iterated integral at 1/2 and
/// sums the resulting polylogarithms at 1/2, which converge like 2^-n.
double zeta(const Composition& c, double eps = 1e-8);
/// Long double value, cached; the error is around 1e-17.
long double zeta_precise(const Composition& c);

/// All compositions of m into exactly k parts, each part >= min_part.
std::vector<Composition> compositions(int m, int k, int min_part = 1);

/// Sum of zeta(l1..lk) over compositions of m with k parts, all parts >= 2.
double zeta_depth_sum(int m, int k);

/// Integer combination of MZVs, the empty composition meaning 1.
using MzvCombination = std::map<Composition, BigInt>;
using RationalMzvCombination = std::map<Composition, Rational>;

std::string to_string(const MzvCombination& m);
long double evaluate(const MzvCombination& m);

/// Regularized value of a word: the shuffle algebra homomorphism that agrees
/// with zeta on convergent words and sends the single letters a and b to 0.
MzvCombination shuffle_regularize(std::string_view w);

/// Shuffle product of two words, with multiplicities.
std::map<ABWord, BigInt> shuffle(std::string_view u, std::string_view v);
/// Quasi-shuffle (stuffle) product of compositions.
std::map<Composition, BigInt> stuffle(const Composition& u, const Composition& v);

/// True when the combination, all of one weight, lies in the rational span
/// of the regularized double shuffle relations of that weight.
bool vanishes_mod_double_shuffle(const RationalMzvCombination& m);

}  // namespace conway3

#endif  // CONWAY3_MZV_HPP
