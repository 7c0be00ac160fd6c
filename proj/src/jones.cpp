#include "knotpoly/jones.hpp"

#include <cstdlib>
#include <functional>
#include <random>

namespace knotpoly {

namespace {

/// (-A^-3)^w as an exact monomial.
LaurentPoly writhe_factor(int w) {
  return LaurentPoly::monomial(w % 2 == 0 ? 1 : -1, -3L * w);
}

TLElement<LaurentPoly> phi_letter(int n, int g) {
  int i = std::abs(g);
  auto one = TLElement<LaurentPoly>::identity(n);
  auto e = TLElement<LaurentPoly>::generator(n, i);
  if (g > 0)
    return one.scaled(LaurentPoly::monomial(1, 1)) + e.scaled(LaurentPoly::monomial(1, -1));
  return one.scaled(LaurentPoly::monomial(1, -1)) + e.scaled(LaurentPoly::monomial(1, 1));
}

}  // namespace

TLElement<LaurentPoly> phi(const BraidWord& b) {
  auto r = TLElement<LaurentPoly>::identity(b.strands);
  for (int g : b.letters) r *= phi_letter(b.strands, g);
  return r;
}

LaurentPoly bracket_of_braid(const BraidWord& b) {
  LaurentPoly tr = phi(b).trace();
  try {
    return div_exact(tr, LaurentPoly::loop_weight());
  } catch (const DivisibilityError&) {
    throw ConsistencyError("Markov trace not divisible by the loop weight");
  }
}

JonesResult jones_via_trace(const BraidWord& b) {
  int w = braid_writhe(b);
  return {writhe_factor(w) * bracket_of_braid(b), w, Strategy::trace};
}

JonesResult jones_via_bracket(const PDCode& pd, int crossing_limit) {
  int w = diagram_writhe(pd);
  return {writhe_factor(w) * kauffman_bracket(pd, crossing_limit), w, Strategy::bracket};
}

JonesResult jones_mirror(const JonesResult& r) {
  return {r.poly_A.mirrored(), -r.writhe, r.strategy};
}

bool verify_skein(const PDCode& pd, int k, int crossing_limit) {
  SkeinTriple triple = skein_triple(pd, k);
  // Writhes are derived from pd's own orientation analysis so that all three
  // diagrams carry coherent orientations even where the numbering alone would
  // leave an all-over component's direction free.
  DiagramInfo info(pd);
  int rest = 0;
  for (size_t j = 0; j < info.over_in_slot.size(); ++j) {
    if (static_cast<int>(j) == k) continue;
    rest += info.over_in_slot[j] == 3 ? 1 : -1;
  }
  LaurentPoly vp = writhe_factor(rest + 1) * kauffman_bracket(triple.l_plus, crossing_limit);
  LaurentPoly vm = writhe_factor(rest - 1) * kauffman_bracket(triple.l_minus, crossing_limit);
  LaurentPoly v0 = writhe_factor(rest) * kauffman_bracket(triple.l_zero, crossing_limit);
  LaurentPoly relation = LaurentPoly::monomial(1, 4) * vp - LaurentPoly::monomial(1, -4) * vm +
                         (LaurentPoly::monomial(1, 2) - LaurentPoly::monomial(1, -2)) * v0;
  return relation.is_zero();
}

bool verify_multiplicativity(const BraidWord& a, const BraidWord& b) {
  LaurentPoly va = jones_via_trace(a).poly_A;
  LaurentPoly vb = jones_via_trace(b).poly_A;
  LaurentPoly v_union = jones_via_trace(braid_tensor(a, b)).poly_A;
  if (v_union != LaurentPoly::loop_weight() * va * vb) return false;
  LaurentPoly v_sum = jones_via_trace(braid_clubsuit(a, b)).poly_A;
  return v_sum == va * vb;
}

namespace {

void enumerate_words(int strands, int max_len,
                     const std::function<void(const BraidWord&)>& visit) {
  std::vector<int> letters;
  std::vector<int> alphabet;
  for (int i = 1; i < strands; ++i) {
    alphabet.push_back(i);
    alphabet.push_back(-i);
  }
  auto rec = [&](auto&& self) -> void {
    visit(BraidWord(strands, letters));
    if (static_cast<int>(letters.size()) == max_len) return;
    for (int g : alphabet) {
      letters.push_back(g);
      self(self);
      letters.pop_back();
    }
  };
  rec(rec);
}

BraidWord random_word(std::mt19937& rng, int min_strands, int max_strands, int max_len) {
  std::uniform_int_distribution<int> nd(min_strands, max_strands);
  int n = nd(rng);
  if (n == 1) return {1, {}};
  std::uniform_int_distribution<int> ld(0, max_len);
  int len = ld(rng);
  std::uniform_int_distribution<int> gd(1, n - 1);
  std::uniform_int_distribution<int> sd(0, 1);
  std::vector<int> w;
  for (int i = 0; i < len; ++i) w.push_back(gd(rng) * (sd(rng) ? 1 : -1));
  return {n, std::move(w)};
}

}  // namespace

SuiteResult run_skein_suite(int max_len) {
  SuiteResult r;
  enumerate_words(3, max_len, [&](const BraidWord& b) {
    PDCode pd = braid_closure_pd(b);
    for (size_t k = 0; k < pd.crossings.size(); ++k) {
      ++r.checks;
      if (!verify_skein(pd, static_cast<int>(k))) ++r.failures;
    }
  });
  return r;
}

SuiteResult run_markov_suite(int m1_cases, int m2_cases, unsigned seed) {
  SuiteResult r;
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> sign(0, 1);
  for (int i = 0; i < m1_cases; ++i) {
    BraidWord b = random_word(rng, 2, 5, 10);
    BraidWord g = random_word(rng, b.strands, b.strands, 8);
    ++r.checks;
    if (jones_via_trace(markov_m1(b, g)).poly_A != jones_via_trace(b).poly_A) ++r.failures;
  }
  for (int i = 0; i < m2_cases; ++i) {
    BraidWord b = random_word(rng, 2, 5, 10);
    ++r.checks;
    if (jones_via_trace(markov_m2(b, sign(rng) ? 1 : -1)).poly_A != jones_via_trace(b).poly_A)
      ++r.failures;
  }
  return r;
}

SuiteResult run_cross_suite(int b3_len, int b4_len) {
  SuiteResult r;
  auto check = [&](const BraidWord& b) {
    ++r.checks;
    JonesResult via_trace = jones_via_trace(b);
    JonesResult via_bracket = jones_via_bracket(braid_closure_pd(b));
    if (via_trace.poly_A != via_bracket.poly_A || via_trace.writhe != via_bracket.writhe)
      ++r.failures;
  };
  enumerate_words(3, b3_len, check);
  enumerate_words(4, b4_len, check);
  return r;
}

SuiteResult run_mult_suite(int pairs, unsigned seed) {
  SuiteResult r;
  std::mt19937 rng(seed);
  for (int i = 0; i < pairs; ++i) {
    BraidWord a = random_word(rng, 1, 3, 5);
    BraidWord b = random_word(rng, 1, 3, 5);
    ++r.checks;
    if (!verify_multiplicativity(a, b)) ++r.failures;
  }
  return r;
}

}  // namespace knotpoly
