#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "knotpoly/laurent.hpp"

namespace knotpoly {

// A Temperley-Lieb basis diagram on n strands: a fixed-point-free
// non-crossing involution on the 2n boundary points. Points 0..n-1 run along
// the top left to right, points n..2n-1 along the bottom left to right.
// Non-crossing is checked against the circular boundary order (top left to
// right, then bottom right to left), under which it is exactly
// balanced-parenthesis nesting.
class TLDiagram {
 public:
  TLDiagram(int n, std::vector<int> match);

  static TLDiagram identity(int n);
  /// The cup-cap generator E_i, 1 <= i <= n-1.
  static TLDiagram generator(int n, int i);

  int strands() const { return n_; }
  int partner(int point) const { return match_[static_cast<size_t>(point)]; }
  const std::vector<int>& match() const { return match_; }

  /// The * involution: vertical reflection swapping the top and bottom rows.
  TLDiagram reflected() const;

  /// Debug rendering of the chord structure, e.g. E_1 in TL_3 -> "(01)(2|5)(34)".
  std::string chord_string() const;

  bool operator==(const TLDiagram& rhs) const {
    return n_ == rhs.n_ && match_ == rhs.match_;
  }
  bool operator!=(const TLDiagram& rhs) const { return !(*this == rhs); }
  bool operator<(const TLDiagram& rhs) const {
    if (n_ != rhs.n_) return n_ < rhs.n_;
    return match_ < rhs.match_;
  }

 private:
  int n_;
  std::vector<int> match_;
};

/// Stacks x above y, fusing x's bottom row to y's top row. Returns the
/// boundary diagram and the number of closed loops formed in the middle.
std::pair<TLDiagram, int> mul_diagrams(const TLDiagram& x, const TLDiagram& y);

/// Right inclusion: append a through-strand on the right.
TLDiagram include_diagram(const TLDiagram& x);
/// Left inclusion: prepend a through-strand on the left.
TLDiagram left_include_diagram(const TLDiagram& x);
/// Side-by-side placement.
TLDiagram tensor_diagrams(const TLDiagram& x, const TLDiagram& y);

/// Closes top-k to bottom-k around the right; returns the loop count.
int closure_loops(const TLDiagram& x);

/// Closes only the rightmost strand. Returns the smaller diagram and the
/// number of loops formed (0 or 1).
std::pair<TLDiagram, int> close_last_strand(const TLDiagram& x);

/// All non-crossing perfect matchings on 2n points; |result| = Catalan(n).
/// Guarded by a configurable limit since the count grows as ~4^n.
std::vector<TLDiagram> tl_basis(int n, int limit = 12);

// Formal linear combination of TL diagrams over a coefficient ring; the ring
// is LaurentPoly for bracket/trace work and RationalFn for the Jones-Wenzl
// recursion. Zero coefficients are never stored.
template <class Coeff>
class TLElement {
 public:
  explicit TLElement(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("negative strand count");
  }

  static TLElement identity(int n) { return from_diagram(TLDiagram::identity(n)); }
  static TLElement generator(int n, int i) {
    return from_diagram(TLDiagram::generator(n, i));
  }
  static TLElement from_diagram(TLDiagram d, Coeff c = Coeff(1)) {
    TLElement e(d.strands());
    if (!(c == Coeff(0))) e.combo_.emplace(std::move(d), std::move(c));
    return e;
  }

  int strands() const { return n_; }
  bool is_zero() const { return combo_.empty(); }
  size_t term_count() const { return combo_.size(); }
  const std::map<TLDiagram, Coeff>& combo() const { return combo_; }
  Coeff coeff(const TLDiagram& d) const {
    auto it = combo_.find(d);
    return it == combo_.end() ? Coeff(0) : it->second;
  }

  TLElement& operator+=(const TLElement& rhs) {
    require_same_strands(rhs);
    for (const auto& [d, c] : rhs.combo_) add_term(d, c);
    return *this;
  }
  TLElement& operator-=(const TLElement& rhs) {
    require_same_strands(rhs);
    for (const auto& [d, c] : rhs.combo_) add_term(d, Coeff(0) - c);
    return *this;
  }
  friend TLElement operator+(TLElement a, const TLElement& b) { return a += b; }
  friend TLElement operator-(TLElement a, const TLElement& b) { return a -= b; }

  TLElement operator-() const {
    TLElement r(n_);
    for (const auto& [d, c] : combo_) r.combo_.emplace(d, Coeff(0) - c);
    return r;
  }

  TLElement scaled(const Coeff& s) const {
    TLElement r(n_);
    if (s == Coeff(0)) return r;
    for (const auto& [d, c] : combo_) r.combo_.emplace(d, c * s);
    return r;
  }

  /// Bilinear extension of diagram concatenation; each closed loop formed
  /// contributes a factor of the loop weight d.
  friend TLElement operator*(const TLElement& a, const TLElement& b) {
    a.require_same_strands(b);
    TLElement r(a.n_);
    for (const auto& [da, ca] : a.combo_) {
      for (const auto& [db, cb] : b.combo_) {
        auto [prod, loops] = mul_diagrams(da, db);
        r.add_term(prod, ca * cb * Coeff(LaurentPoly::loop_weight_pow(loops)));
      }
    }
    return r;
  }
  TLElement& operator*=(const TLElement& rhs) { return *this = *this * rhs; }

  /// Markov trace: close each diagram around the right, weight d^loops.
  Coeff trace() const {
    Coeff t(0);
    for (const auto& [d, c] : combo_)
      t += c * Coeff(LaurentPoly::loop_weight_pow(closure_loops(d)));
    return t;
  }

  /// Conditional expectation TL_{n+1} -> TL_n: close only the last strand.
  TLElement conditional_expectation() const {
    if (n_ < 1) throw std::domain_error("conditional expectation needs >= 1 strand");
    TLElement r(n_ - 1);
    for (const auto& [d, c] : combo_) {
      auto [small, loops] = close_last_strand(d);
      r.add_term(small, c * Coeff(LaurentPoly::loop_weight_pow(loops)));
    }
    return r;
  }

  TLElement included() const { return mapped(n_ + 1, include_diagram); }
  TLElement left_included() const { return mapped(n_ + 1, left_include_diagram); }

  /// The * involution; coefficients are fixed (they are real).
  TLElement reflected() const {
    TLElement r(n_);
    for (const auto& [d, c] : combo_) r.combo_.emplace(d.reflected(), c);
    return r;
  }

  friend TLElement tensor(const TLElement& a, const TLElement& b) {
    TLElement r(a.n_ + b.n_);
    for (const auto& [da, ca] : a.combo_)
      for (const auto& [db, cb] : b.combo_)
        r.add_term(tensor_diagrams(da, db), ca * cb);
    return r;
  }

  bool operator==(const TLElement& rhs) const {
    return n_ == rhs.n_ && combo_ == rhs.combo_;
  }
  bool operator!=(const TLElement& rhs) const { return !(*this == rhs); }

 private:
  template <class F>
  TLElement mapped(int new_n, F&& f) const {
    TLElement r(new_n);
    for (const auto& [d, c] : combo_) r.combo_.emplace(f(d), c);
    return r;
  }

  void add_term(const TLDiagram& d, Coeff c) {
    if (c == Coeff(0)) return;
    auto it = combo_.find(d);
    if (it == combo_.end()) {
      combo_.emplace(d, std::move(c));
    } else {
      it->second += c;
      if (it->second == Coeff(0)) combo_.erase(it);
    }
  }

  void require_same_strands(const TLElement& rhs) const {
    if (n_ != rhs.n_) throw std::invalid_argument("strand count mismatch");
  }

  int n_;
  std::map<TLDiagram, Coeff> combo_;
};

/// Quantum integer [n] evaluated at q = -A^2, as a rational function.
RationalFn quantum_int_A(long n);

/// Jones-Wenzl idempotent f^(n), built by the inductive recursion
/// f^(n+1) = i(f^(n)) - ([n]/[n+1]) i(f^(n)) E_n i(f^(n)) with q = -A^2.
TLElement<RationalFn> jones_wenzl(int n);

}  // namespace knotpoly
