#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "knotpoly/tl.hpp"

using namespace knotpoly;

namespace {

using LP = LaurentPoly;
using ElemL = TLElement<LaurentPoly>;
using ElemR = TLElement<RationalFn>;

const LP d = LP::loop_weight();

LP mono(long c, long e) { return LP::monomial(c, e); }

// closed-form binomial oracle for Catalan numbers
Int catalan(int n) {
  Int b;
  mpz_bin_uiui(b.get_mpz_t(), 2 * static_cast<unsigned long>(n), static_cast<unsigned long>(n));
  return b / (n + 1);
}

ElemL random_element(std::mt19937& rng, const std::vector<TLDiagram>& basis, int max_terms = 4) {
  std::uniform_int_distribution<size_t> pick(0, basis.size() - 1);
  std::uniform_int_distribution<long> coeff(-3, 3);
  std::uniform_int_distribution<long> exp(-2, 2);
  ElemL e(basis[0].strands());
  std::uniform_int_distribution<int> nterms(1, max_terms);
  int n = nterms(rng);
  for (int i = 0; i < n; ++i)
    e += ElemL::from_diagram(basis[pick(rng)], mono(coeff(rng), exp(rng)));
  return e;
}

}  // namespace

TEST_CASE("generator diagrams") {
  CHECK(TLDiagram::generator(2, 1).match() == std::vector<int>{1, 0, 3, 2});
  CHECK(TLDiagram::generator(3, 2).match() == std::vector<int>{3, 2, 1, 0, 5, 4});
  CHECK_THROWS_AS(TLDiagram::generator(1, 1), std::out_of_range);
  CHECK_THROWS_AS(TLDiagram::generator(4, 0), std::out_of_range);
}

TEST_CASE("diagram validation") {
  CHECK_THROWS_AS(TLDiagram(2, {1, 0, 3, 1}), std::invalid_argument);  // not an involution
  CHECK_THROWS_AS(TLDiagram(2, {0, 1, 3, 2}), std::invalid_argument);  // fixed points
  CHECK_THROWS_AS(TLDiagram(2, {3, 2, 1, 0}), std::invalid_argument);  // crossing chords
  CHECK_NOTHROW(TLDiagram(2, {1, 0, 3, 2}));
}

TEST_CASE("chord string") {
  CHECK(TLDiagram::generator(3, 1).chord_string() == "(01)(2|5)(34)");
  CHECK(TLDiagram::identity(2).chord_string() == "(0|2)(1|3)");
}

TEST_CASE("diagram multiplication") {
  for (int n = 2; n <= 6; ++n) {
    for (int i = 1; i < n; ++i) {
      auto e = TLDiagram::generator(n, i);
      auto [prod, loops] = mul_diagrams(e, e);
      CHECK(prod == e);
      CHECK(loops == 1);
      auto [p2, l2] = mul_diagrams(TLDiagram::identity(n), e);
      CHECK(p2 == e);
      CHECK(l2 == 0);
    }
    for (int i = 1; i + 1 < n; ++i) {
      auto ei = TLDiagram::generator(n, i), ej = TLDiagram::generator(n, i + 1);
      auto [once, l1] = mul_diagrams(ei, ej);
      auto [back, l2] = mul_diagrams(once, ei);
      CHECK(back == ei);
      CHECK(l1 + l2 == 0);
    }
  }
  CHECK_THROWS_AS(mul_diagrams(TLDiagram::identity(2), TLDiagram::identity(3)),
                  std::invalid_argument);
}

TEST_CASE("E1E2 · E2E1 = d E1 in TL_3") {
  auto e1 = TLDiagram::generator(3, 1), e2 = TLDiagram::generator(3, 2);
  auto [e1e2, la] = mul_diagrams(e1, e2);
  auto [e2e1, lb] = mul_diagrams(e2, e1);
  CHECK(la == 0);
  CHECK(lb == 0);
  // hand-composed chord structures
  CHECK(e1e2.match() == std::vector<int>{1, 0, 3, 2, 5, 4});
  CHECK(e2e1.match() == std::vector<int>{5, 2, 1, 4, 3, 0});
  auto [prod, loops] = mul_diagrams(e1e2, e2e1);
  CHECK(prod == e1);
  CHECK(loops == 1);
}

TEST_CASE("generator relations in TL_n, n <= 8") {
  for (int n = 2; n <= 8; ++n) {
    auto one = ElemL::identity(n);
    for (int i = 1; i < n; ++i) {
      auto ei = ElemL::generator(n, i);
      CHECK(ei * ei == ei.scaled(d));
      for (int j = 1; j < n; ++j) {
        auto ej = ElemL::generator(n, j);
        if (std::abs(i - j) >= 2) CHECK(ei * ej == ej * ei);
        if (std::abs(i - j) == 1) CHECK(ei * ej * ei == ei);
      }
      CHECK(ei * one == ei);
      CHECK(one * ei == ei);
    }
  }
}

TEST_CASE("phi-style cancellation") {
  // (A·1 + A^-1 E1)(A^-1·1 + A E1) = 1 in TL_2
  auto one = ElemL::identity(2), e1 = ElemL::generator(2, 1);
  auto pos = one.scaled(mono(1, 1)) + e1.scaled(mono(1, -1));
  auto neg = one.scaled(mono(1, -1)) + e1.scaled(mono(1, 1));
  CHECK(pos * neg == one);
}

TEST_CASE("associativity on random triples") {
  std::mt19937 rng(2024);
  for (int n = 2; n <= 6; ++n) {
    auto basis = tl_basis(n);
    for (int rep = 0; rep < 12; ++rep) {
      auto x = random_element(rng, basis), y = random_element(rng, basis),
           z = random_element(rng, basis);
      CHECK((x * y) * z == x * (y * z));
    }
  }
}

TEST_CASE("basis counts match the Catalan oracle") {
  const long expected[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796};
  for (int n = 0; n <= 10; ++n) {
    CHECK(catalan(n) == expected[n]);
    CHECK(tl_basis(n).size() == static_cast<size_t>(expected[n]));
  }
  CHECK_THROWS_AS(tl_basis(13), std::out_of_range);
}

TEST_CASE("trace basics") {
  for (int n = 1; n <= 6; ++n) {
    CHECK(ElemL::identity(n).trace() == LP::loop_weight_pow(n));
    for (int i = 1; i < n; ++i)
      CHECK(ElemL::generator(n, i).trace() == LP::loop_weight_pow(n - 1));
  }
  CHECK(ElemL(3).trace() == LP());
}

TEST_CASE("inclusions and tensor") {
  CHECK(ElemL::identity(2).included() == ElemL::identity(3));
  CHECK(ElemL::generator(2, 1).included() == ElemL::generator(3, 1));
  CHECK(ElemL::generator(2, 1).left_included() == ElemL::generator(3, 2));
  CHECK(tensor(ElemL::generator(2, 1), ElemL::identity(1)) == ElemL::generator(3, 1));
  CHECK(tensor(ElemL::identity(1), ElemL::generator(2, 1)) == ElemL::generator(3, 2));
  // all three maps are algebra homomorphisms
  std::mt19937 rng(99);
  auto basis3 = tl_basis(3);
  auto basis2 = tl_basis(2);
  for (int rep = 0; rep < 10; ++rep) {
    auto x = random_element(rng, basis3), y = random_element(rng, basis3);
    CHECK((x * y).included() == x.included() * y.included());
    CHECK((x * y).left_included() == x.left_included() * y.left_included());
    ElemL u = random_element(rng, basis2), v = random_element(rng, basis2);
    CHECK(tensor(x * y, u * v) == tensor(x, u) * tensor(y, v));
  }
}

TEST_CASE("conditional expectation") {
  std::mt19937 rng(7);
  for (int n = 1; n <= 5; ++n) {
    auto basis = tl_basis(n);
    for (int rep = 0; rep < 8; ++rep) {
      auto x = random_element(rng, basis);
      CHECK(x.included().conditional_expectation() == x.scaled(d));
    }
    CHECK(ElemL::generator(n + 1, n).conditional_expectation() == ElemL::identity(n));
  }
}

TEST_CASE("trace and expectation relations") {
  std::mt19937 rng(31337);
  for (int n = 2; n <= 6; ++n) {
    auto basis = tl_basis(n);
    auto basis_up = tl_basis(n + 1);
    auto en = ElemL::generator(n + 1, n);
    for (int rep = 0; rep < 8; ++rep) {
      auto x = random_element(rng, basis), y = random_element(rng, basis);
      auto xu = random_element(rng, basis_up);
      CHECK((x * y).trace() == (y * x).trace());
      CHECK(xu.trace() == xu.conditional_expectation().trace());
      CHECK((x.included() * en).trace() == x.trace());
      CHECK((xu.conditional_expectation() * y).trace() == (xu * y.included()).trace());
      auto lhs = en * x.included() * en;
      auto rhs = x.conditional_expectation().included().included() * en;
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("reflection involution") {
  std::mt19937 rng(55);
  auto basis = tl_basis(4);
  for (int rep = 0; rep < 10; ++rep) {
    auto x = random_element(rng, basis), y = random_element(rng, basis);
    CHECK(x.reflected().reflected() == x);
    CHECK((x * y).reflected() == y.reflected() * x.reflected());
  }
  for (int i = 1; i < 4; ++i)
    CHECK(ElemL::generator(4, i).reflected() == ElemL::generator(4, i));
}

TEST_CASE("jones-wenzl base cases") {
  CHECK(jones_wenzl(0) == ElemR::identity(0));
  CHECK(jones_wenzl(1) == ElemR::identity(1));
  // f^(2) = 1 - (1/[2]) E1
  auto f2 = jones_wenzl(2);
  RationalFn inv2(LaurentPoly(1), subst_q_to_A(quantum_int(2)));
  CHECK(f2 == ElemR::identity(2) - ElemR::generator(2, 1).scaled(inv2));
  CHECK_THROWS_AS(jones_wenzl(-1), std::invalid_argument);
}

TEST_CASE("jones-wenzl properties up to n = 6") {
  for (int n = 0; n <= 6; ++n) {
    auto f = jones_wenzl(n);
    CHECK(f * f == f);
    CHECK(f.reflected() == f);
    CHECK(f.trace() == quantum_int_A(n + 1));
    for (int j = 1; j < n; ++j) {
      auto ej = ElemR::generator(n, j);
      CHECK((ej * f).is_zero());
      CHECK((f * ej).is_zero());
    }
    if (n >= 1) {
      CHECK(jones_wenzl(n - 1).included() * f == f);
      CHECK(f * jones_wenzl(n - 1).included() == f);
    }
    if (n >= 1) {
      RationalFn ratio = quantum_int_A(n + 1) / quantum_int_A(n);
      CHECK(f.conditional_expectation() == jones_wenzl(n - 1).scaled(ratio));
    }
  }
}
