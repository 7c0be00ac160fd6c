#include "knotpoly/braid.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

#include "pd_internal.hpp"

namespace knotpoly {

BraidWord::BraidWord(int n, std::vector<int> word) : strands(n), letters(std::move(word)) {
  if (strands < 1) throw std::invalid_argument("braid needs at least one strand");
  for (int g : letters) {
    if (g == 0 || std::abs(g) > strands - 1)
      throw std::out_of_range("letter " + std::to_string(g) + " not a generator of B_" +
                              std::to_string(strands));
  }
}

BraidWord concat(const BraidWord& a, const BraidWord& b) {
  if (a.strands != b.strands) throw std::invalid_argument("strand count mismatch");
  std::vector<int> w = a.letters;
  w.insert(w.end(), b.letters.begin(), b.letters.end());
  return {a.strands, std::move(w)};
}

BraidWord inverse(const BraidWord& a) {
  std::vector<int> w(a.letters.rbegin(), a.letters.rend());
  for (int& g : w) g = -g;
  return {a.strands, std::move(w)};
}

BraidWord include_right(const BraidWord& a) { return {a.strands + 1, a.letters}; }

BraidWord include_left(const BraidWord& a) {
  std::vector<int> w = a.letters;
  for (int& g : w) g += (g > 0) ? 1 : -1;
  return {a.strands + 1, std::move(w)};
}

std::vector<int> braid_permutation(const BraidWord& a) {
  std::vector<int> pos(static_cast<size_t>(a.strands));
  std::iota(pos.begin(), pos.end(), 0);  // pos[p] = strand currently at position p
  for (int g : a.letters) {
    int i = std::abs(g) - 1;
    std::swap(pos[static_cast<size_t>(i)], pos[static_cast<size_t>(i + 1)]);
  }
  // perm[strand] = final position
  std::vector<int> perm(static_cast<size_t>(a.strands));
  for (int p = 0; p < a.strands; ++p) perm[static_cast<size_t>(pos[static_cast<size_t>(p)])] = p;
  return perm;
}

int braid_writhe(const BraidWord& a) {
  int w = 0;
  for (int g : a.letters) w += (g > 0) ? 1 : -1;
  return w;
}

BraidWord markov_m1(const BraidWord& a, const BraidWord& g) {
  return concat(concat(g, a), inverse(g));
}

BraidWord markov_m2(const BraidWord& a, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("stabilisation sign must be ±1");
  BraidWord b = include_right(a);
  b.letters.push_back(sign * a.strands);
  return b;
}

BraidWord pure_braid_generator(int n, int i, int j) {
  if (!(1 <= i && i < j && j <= n)) throw std::out_of_range("need 1 <= i < j <= n");
  std::vector<int> w;
  for (int k = j - 1; k > i; --k) w.push_back(k);
  w.push_back(i);
  w.push_back(i);
  for (int k = i + 1; k <= j - 1; ++k) w.push_back(-k);
  return {n, std::move(w)};
}

namespace {

BraidWord shifted_product(const BraidWord& a, const BraidWord& b, int shift, int strands) {
  std::vector<int> w = a.letters;
  for (int g : b.letters) w.push_back(g > 0 ? g + shift : g - shift);
  return {strands, std::move(w)};
}

}  // namespace

BraidWord braid_tensor(const BraidWord& a, const BraidWord& b) {
  return shifted_product(a, b, a.strands, a.strands + b.strands);
}

BraidWord braid_clubsuit(const BraidWord& a, const BraidWord& b) {
  return shifted_product(a, b, a.strands - 1, a.strands + b.strands - 1);
}

BraidWord braid_heartsuit(const BraidWord& a, const BraidWord& b) {
  BraidWord t = braid_tensor(a, b);
  t.letters.insert(t.letters.begin(), a.strands);
  return t;
}

PDCode braid_closure_pd(const BraidWord& a) {
  const int n = a.strands;
  RebuildSpec spec;
  spec.oriented = true;
  spec.free_circles = 0;

  // synthetic edge ids: tops get 1..n so components are visited by their
  // topmost-left entry point
  std::vector<int> top(static_cast<size_t>(n)), cur(static_cast<size_t>(n));
  std::iota(top.begin(), top.end(), 1);
  cur = top;
  int next_edge = n + 1;

  for (int g : a.letters) {
    int i = std::abs(g) - 1;  // left position, 0-based
    int in_l = cur[static_cast<size_t>(i)], in_r = cur[static_cast<size_t>(i + 1)];
    int out_l = next_edge++, out_r = next_edge++;
    if (g > 0) {
      // under-strand enters at NW (left); over runs NE -> SW
      spec.tuples.push_back({in_l, out_l, out_r, in_r});
      spec.enter_over.push_back(3);
    } else {
      // under-strand enters at NE (right); over runs NW -> SE
      spec.tuples.push_back({in_r, in_l, out_l, out_r});
      spec.enter_over.push_back(1);
    }
    cur[static_cast<size_t>(i)] = out_l;
    cur[static_cast<size_t>(i + 1)] = out_r;
  }

  for (int p = 0; p < n; ++p) {
    if (cur[static_cast<size_t>(p)] == top[static_cast<size_t>(p)])
      ++spec.free_circles;  // strand untouched by any letter
    else
      spec.merges.emplace_back(cur[static_cast<size_t>(p)], top[static_cast<size_t>(p)]);
  }
  return rebuild_pd(spec);
}

}  // namespace knotpoly
