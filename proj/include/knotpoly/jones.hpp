#pragma once

#include <string>

#include "knotpoly/braid.hpp"
#include "knotpoly/diagram.hpp"
#include "knotpoly/laurent.hpp"
#include "knotpoly/tl.hpp"

namespace knotpoly {

enum class Strategy { bracket, trace };

// Normalized invariant in A-variable form; presentation in t^(1/2) units is a
// rendering concern. poly_A always has even A-exponents.
struct JonesResult {
  LaurentPoly poly_A;
  int writhe = 0;
  Strategy strategy = Strategy::trace;
};

/// The representation B_n -> TL_n: sigma_i -> A·1 + A^-1 E_i,
/// sigma_i^-1 -> A^-1·1 + A E_i. Multiplicative over word concatenation.
TLElement<LaurentPoly> phi(const BraidWord& b);

/// Kauffman bracket of the closure via d^-1 tr(phi(b)); the division is
/// always exact (every closure state has at least one loop), so a
/// ConsistencyError here signals a convention bug.
LaurentPoly bracket_of_braid(const BraidWord& b);

/// V = (-A^-3)^w(b) · tr(phi(b)) / d.
JonesResult jones_via_trace(const BraidWord& b);

/// V = (-A)^(-3w(D)) · <|D|>.
JonesResult jones_via_bracket(const PDCode& pd, int crossing_limit = 24);

/// Mirror: A -> A^-1 and negated writhe.
JonesResult jones_mirror(const JonesResult& r);

/// Evaluates A^4 V(L+) - A^-4 V(L-) + (A^2 - A^-2) V(L0) at crossing k,
/// all three values via the bracket with orientations carried coherently
/// from pd. True iff the relation vanishes exactly.
bool verify_skein(const PDCode& pd, int k, int crossing_limit = 24);

/// True iff V(closure(a ⊗ b)) = d·V(closure a)·V(closure b) and
/// V(closure(a ♣ b)) = V(closure a)·V(closure b), both exactly (trace route).
bool verify_multiplicativity(const BraidWord& a, const BraidWord& b);

struct SuiteResult {
  long checks = 0;
  long failures = 0;
  bool ok() const { return failures == 0; }
};

/// Skein relation at every crossing of every closure of B_3 words up to the
/// given length.
SuiteResult run_skein_suite(int max_len = 5);

/// Random M1 conjugations and M2 stabilisations preserve jones_via_trace.
SuiteResult run_markov_suite(int m1_cases = 200, int m2_cases = 200, unsigned seed = 7);

/// jones_via_trace == jones_via_bracket∘closure for all B_3 words of length
/// <= 6 and all B_4 words of length <= 5.
SuiteResult run_cross_suite(int b3_len = 6, int b4_len = 5);

/// Disjoint-union and connected-sum identities on random word pairs.
SuiteResult run_mult_suite(int pairs = 50, unsigned seed = 11);

}  // namespace knotpoly
