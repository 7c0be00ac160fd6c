#pragma once

#include <vector>

#include "knotpoly/diagram.hpp"

namespace knotpoly {

// Braid word in the Artin group B_n: a strand count and a sequence of signed
// generator indices, letter g meaning sigma_g for g > 0 and sigma_|g|^-1 for
// g < 0.
struct BraidWord {
  int strands;
  std::vector<int> letters;

  BraidWord(int n, std::vector<int> word);

  bool operator==(const BraidWord& rhs) const = default;
};

/// Word concatenation (a on top of b); strand counts must match.
BraidWord concat(const BraidWord& a, const BraidWord& b);
/// Group inverse: reversed letters, each negated.
BraidWord inverse(const BraidWord& a);
/// Add a strand on the right; letters unchanged.
BraidWord include_right(const BraidWord& a);
/// Add a strand on the left; every letter index shifts by one.
BraidWord include_left(const BraidWord& a);

/// Image permutation of {0..n-1}: strand entering top position p exits at
/// bottom position perm[p]. Homomorphism onto the symmetric group.
std::vector<int> braid_permutation(const BraidWord& a);

/// Sum of letter signs.
int braid_writhe(const BraidWord& a);

/// Markov conjugation g a g^-1.
BraidWord markov_m1(const BraidWord& a, const BraidWord& g);
/// Markov stabilisation: include a strand on the right and append sigma_n^±1.
BraidWord markov_m2(const BraidWord& a, int sign);

/// Pure braid generator (sigma_{j-1}...sigma_{i+1}) sigma_i^2
/// (sigma_{i+1}^-1...sigma_{j-1}^-1), 1 <= i < j <= n.
BraidWord pure_braid_generator(int n, int i, int j);

/// Side-by-side product: b's letters shifted past a's strands.
BraidWord braid_tensor(const BraidWord& a, const BraidWord& b);
/// Connected-sum word over n+m-1 strands: b's letters shifted by n-1.
BraidWord braid_clubsuit(const BraidWord& a, const BraidWord& b);
/// sigma_n prepended to the tensor word; closure is the connected sum.
BraidWord braid_heartsuit(const BraidWord& a, const BraidWord& b);

/// Oriented PD code of the braid closure: one crossing per letter, strands
/// oriented top to bottom, closure arcs around the right. A positive letter
/// produces a +1 crossing, so the diagram writhe equals the braid writhe.
PDCode braid_closure_pd(const BraidWord& a);

}  // namespace knotpoly
