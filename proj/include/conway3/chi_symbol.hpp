// The symbol chi: horizontal chord diagrams on 3 strands -> Z[t], through
// which the Conway polynomial of the short-circuit closure factors.
#ifndef CONWAY3_CHI_SYMBOL_HPP
#define CONWAY3_CHI_SYMBOL_HPP

#include <vector>

#include "conway3/braid_word.hpp"
#include "conway3/chord3.hpp"
#include "conway3/even_poly.hpp"
#include "conway3/nc_series.hpp"

namespace conway3 {

/// p_0 = 1, p_1 = t^2, p_{s+2} = t^2 (p_s + p_{s+1}).
EvenPoly p(int k);
/// sum over k/2 <= j <= k of C(j, 2j-k) t^{2j}.
EvenPoly p_closed(int k);
/// Conway polynomial of the (2, 2s+1) torus knot, from the skein recursion
/// q_s = (t^2 + 2) q_{s-1} - q_{s-2}.
EvenPoly q(int s);
/// sum over 0 <= j <= s of C(s+j, s-j) t^{2j}.
EvenPoly q_closed(int s);

/// Switches for negative-control runs of the verification driver.
struct ChiRules {
  bool flip_primed_sign = false;
};

/// Unit -> 1, zero class -> 0,
/// [c1..ck]  -> (-1)^{k-1} (prod_{i<k} p_1 p_{c_i - 1}) p_{c_k},
/// [c1..ck]' -> t^{-2} chi([c1..ck, 1]).
EvenPoly chi_code(const DiagramCode& code, const ChiRules& rules = {});

EvenPoly chi(const IntDiagramPoly& x, const ChiRules& rules = {});
/// chi of a word over {A, B, C}, reduced to the descending basis first.
EvenPoly chi(const Word& w, const ChiRules& rules = {});
EvenPoly chi(const IntSeries& s, const ChiRules& rules = {});

/// chi(reduce(magnus3(comb(w), N))) keeping only the t^{2j}, 2j <= N,
/// which no longer depend on N.
EvenPoly chi_of_braid(const BraidWord& w, int degree_bound, const ChiRules& rules = {});

/// Same value as chi_of_braid, computed without expanding the Magnus series:
/// the tail's factors (1 + t)^a are streamed through an automaton that tracks
/// the current run of C's, so large N stay cheap.
EvenPoly chi_of_braid_fast(const BraidWord& w, int degree_bound, const ChiRules& rules = {});

/// Unordered partition; parts kept sorted ascending.
struct PartitionMultiset {
  std::vector<int> parts;

  explicit PartitionMultiset(std::vector<int> p = {});
  friend bool operator==(const PartitionMultiset&, const PartitionMultiset&) = default;
};

/// [c1..ck] -> (1^{k-1}, c1-1, ..., c_{k-1}-1, ck), zero parts dropped.
PartitionMultiset partition_transform(const DiagramCode& code);
/// prod over parts of p_part.
EvenPoly p_product(const PartitionMultiset& m);

/// sum_{s=j}^{n-1} (-1)^s C(n-1,s) C(s+j,2j) == (-1)^{n-1} C(j, 2j-n+1)
bool binomial_identity_check(int n, int j);
/// sum_{l=1}^{n} (-1)^{n-l} C(n,l) sum_{s<l} q_s == p_{n-1}
bool telescoping_check(int n);

}  // namespace conway3

#endif  // CONWAY3_CHI_SYMBOL_HPP
