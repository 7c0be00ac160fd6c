#include "knotpoly/tl.hpp"

#include <sstream>

namespace knotpoly {

namespace {

// Position of a boundary point in the circular order: top 0..n-1 left to
// right, then bottom traversed right to left (2n-1 down to n).
int circular_pos(int point, int n) { return point < n ? point : 3 * n - 1 - point; }

int point_at_circular(int pos, int n) { return pos < n ? pos : 3 * n - 1 - pos; }

}  // namespace

TLDiagram::TLDiagram(int n, std::vector<int> match) : n_(n), match_(std::move(match)) {
  if (n_ < 0) throw std::invalid_argument("negative strand count");
  if (match_.size() != static_cast<size_t>(2 * n_))
    throw std::invalid_argument("match size must be 2n");
  for (int p = 0; p < 2 * n_; ++p) {
    int q = match_[static_cast<size_t>(p)];
    if (q < 0 || q >= 2 * n_ || q == p || match_[static_cast<size_t>(q)] != p)
      throw std::invalid_argument("match is not a fixed-point-free involution");
  }
  // nesting check over the circular boundary order
  std::vector<int> stack;
  for (int pos = 0; pos < 2 * n_; ++pos) {
    int p = point_at_circular(pos, n_);
    int q = match_[static_cast<size_t>(p)];
    if (circular_pos(q, n_) > pos) {
      stack.push_back(p);
    } else {
      if (stack.empty() || stack.back() != q)
        throw std::invalid_argument("chords cross");
      stack.pop_back();
    }
  }
}

TLDiagram TLDiagram::identity(int n) {
  std::vector<int> m(static_cast<size_t>(2 * n));
  for (int k = 0; k < n; ++k) {
    m[static_cast<size_t>(k)] = n + k;
    m[static_cast<size_t>(n + k)] = k;
  }
  return {n, std::move(m)};
}

TLDiagram TLDiagram::generator(int n, int i) {
  if (i < 1 || i > n - 1) throw std::out_of_range("generator index out of range");
  TLDiagram d = identity(n);
  auto& m = d.match_;
  m[static_cast<size_t>(i - 1)] = i;
  m[static_cast<size_t>(i)] = i - 1;
  m[static_cast<size_t>(n + i - 1)] = n + i;
  m[static_cast<size_t>(n + i)] = n + i - 1;
  return d;
}

TLDiagram TLDiagram::reflected() const {
  auto flip = [this](int p) { return p < n_ ? p + n_ : p - n_; };
  std::vector<int> m(static_cast<size_t>(2 * n_));
  for (int p = 0; p < 2 * n_; ++p)
    m[static_cast<size_t>(flip(p))] = flip(match_[static_cast<size_t>(p)]);
  return {n_, std::move(m)};
}

std::string TLDiagram::chord_string() const {
  std::ostringstream out;
  for (int p = 0; p < 2 * n_; ++p) {
    int q = match_[static_cast<size_t>(p)];
    if (q < p) continue;
    bool through = (p < n_) != (q < n_);
    out << '(' << p;
    if (through) out << '|';
    else if (p >= 10 || q >= 10) out << ' ';
    out << q << ')';
  }
  return out.str();
}

std::pair<TLDiagram, int> mul_diagrams(const TLDiagram& x, const TLDiagram& y) {
  if (x.strands() != y.strands()) throw std::invalid_argument("strand count mismatch");
  const int n = x.strands();
  // Combined point space: result top k = x top k; result bottom k = y bottom
  // k; x's bottom row is fused to y's top row. Walk paths through the fused
  // middle; cycles that never reach the boundary count as loops.
  std::vector<int> result(static_cast<size_t>(2 * n), -1);
  std::vector<bool> mid_seen(static_cast<size_t>(n), false);  // middle node i = x bottom i = y top i

  auto trace_from = [&](bool start_in_x, int start) {
    bool in_x = start_in_x;
    int p = start;
    while (true) {
      int q = in_x ? x.partner(p) : y.partner(p);
      if (in_x) {
        if (q < n) return q;  // landed on x's top: result top q
        mid_seen[static_cast<size_t>(q - n)] = true;
        in_x = false;
        p = q - n;  // continue from y's top
      } else {
        if (q >= n) return q;  // landed on y's bottom: result bottom, same label
        mid_seen[static_cast<size_t>(q)] = true;
        in_x = true;
        p = n + q;  // continue from x's bottom
      }
    }
  };

  for (int k = 0; k < n; ++k) {
    if (result[static_cast<size_t>(k)] != -1) continue;
    int land = trace_from(true, k);
    result[static_cast<size_t>(k)] = land;
    result[static_cast<size_t>(land)] = k;
  }
  for (int k = 0; k < n; ++k) {
    size_t idx = static_cast<size_t>(n + k);
    if (result[idx] != -1) continue;
    int land = trace_from(false, n + k);
    result[idx] = land;
    result[static_cast<size_t>(land)] = n + k;
  }

  int loops = 0;
  for (int m = 0; m < n; ++m) {
    if (mid_seen[static_cast<size_t>(m)]) continue;
    ++loops;
    int p = m;  // walk the closed cycle through x's bottom / y's top
    do {
      mid_seen[static_cast<size_t>(p)] = true;
      int q = x.partner(n + p) - n;  // on a closed loop this stays in the middle
      mid_seen[static_cast<size_t>(q)] = true;
      p = y.partner(q);
    } while (p != m);
  }
  return {TLDiagram(n, std::move(result)), loops};
}

TLDiagram include_diagram(const TLDiagram& x) {
  const int n = x.strands();
  auto relabel = [n](int p) { return p < n ? p : p + 1; };
  std::vector<int> m(static_cast<size_t>(2 * n + 2), -1);
  for (int p = 0; p < 2 * n; ++p)
    m[static_cast<size_t>(relabel(p))] = relabel(x.partner(p));
  m[static_cast<size_t>(n)] = 2 * n + 1;
  m[static_cast<size_t>(2 * n + 1)] = n;
  return {n + 1, std::move(m)};
}

TLDiagram left_include_diagram(const TLDiagram& x) {
  const int n = x.strands();
  auto relabel = [n](int p) { return p < n ? p + 1 : p + 2; };
  std::vector<int> m(static_cast<size_t>(2 * n + 2), -1);
  for (int p = 0; p < 2 * n; ++p)
    m[static_cast<size_t>(relabel(p))] = relabel(x.partner(p));
  m[0] = n + 1;
  m[static_cast<size_t>(n + 1)] = 0;
  return {n + 1, std::move(m)};
}

TLDiagram tensor_diagrams(const TLDiagram& x, const TLDiagram& y) {
  const int n = x.strands(), m = y.strands(), N = n + m;
  auto rx = [&](int p) { return p < n ? p : p + m; };           // x top k -> k, x bottom k -> N+k
  auto ry = [&](int p) { return p < m ? p + n : p + n + n; };   // y top k -> n+k, y bottom k -> N+n+k
  std::vector<int> out(static_cast<size_t>(2 * N), -1);
  for (int p = 0; p < 2 * n; ++p)
    out[static_cast<size_t>(rx(p))] = rx(x.partner(p));
  for (int p = 0; p < 2 * m; ++p)
    out[static_cast<size_t>(ry(p))] = ry(y.partner(p));
  return {N, std::move(out)};
}

int closure_loops(const TLDiagram& x) {
  const int n = x.strands();
  std::vector<bool> seen(static_cast<size_t>(2 * n), false);
  int loops = 0;
  for (int start = 0; start < 2 * n; ++start) {
    if (seen[static_cast<size_t>(start)]) continue;
    ++loops;
    int p = start;
    do {
      seen[static_cast<size_t>(p)] = true;
      int q = x.partner(p);
      seen[static_cast<size_t>(q)] = true;
      p = q < n ? q + n : q - n;  // closure arc joins top-k and bottom-k
    } while (p != start);
  }
  return loops;
}

std::pair<TLDiagram, int> close_last_strand(const TLDiagram& x) {
  const int N = x.strands();
  if (N < 1) throw std::domain_error("no strand to close");
  const int top_last = N - 1, bot_last = 2 * N - 1;
  auto relabel = [N](int p) { return p < N ? p : p - 1; };
  std::vector<int> m(static_cast<size_t>(2 * (N - 1)), -1);
  int loops = 0;
  if (x.partner(top_last) == bot_last) {
    loops = 1;  // the closed strand was a through-strand
    for (int p = 0; p < 2 * N; ++p) {
      if (p == top_last || p == bot_last) continue;
      m[static_cast<size_t>(relabel(p))] = relabel(x.partner(p));
    }
  } else {
    int a = x.partner(top_last), b = x.partner(bot_last);
    for (int p = 0; p < 2 * N; ++p) {
      if (p == top_last || p == bot_last) continue;
      int q = x.partner(p);
      if (p == a) q = b;
      else if (p == b) q = a;
      m[static_cast<size_t>(relabel(p))] = relabel(q);
    }
  }
  return {TLDiagram(N - 1, std::move(m)), loops};
}

std::vector<TLDiagram> tl_basis(int n, int limit) {
  if (n < 0) throw std::invalid_argument("negative strand count");
  if (n > limit) throw std::out_of_range("tl_basis: strand count exceeds limit");
  std::vector<TLDiagram> basis;
  std::vector<int> match(static_cast<size_t>(2 * n), -1);
  std::vector<int> stack;
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == 2 * n) {
      basis.emplace_back(n, match);
      return;
    }
    int p = point_at_circular(pos, n);
    int remaining = 2 * n - pos - 1;
    if (static_cast<int>(stack.size()) + 1 <= remaining) {  // open a new chord
      stack.push_back(p);
      self(self, pos + 1);
      stack.pop_back();
    }
    if (!stack.empty()) {  // close the innermost open chord
      int q = stack.back();
      stack.pop_back();
      match[static_cast<size_t>(p)] = q;
      match[static_cast<size_t>(q)] = p;
      self(self, pos + 1);
      match[static_cast<size_t>(p)] = -1;
      match[static_cast<size_t>(q)] = -1;
      stack.push_back(q);
    }
  };
  rec(rec, 0);
  return basis;
}

RationalFn quantum_int_A(long n) { return RationalFn(subst_q_to_A(quantum_int(n))); }

TLElement<RationalFn> jones_wenzl(int n) {
  if (n < 0) throw std::invalid_argument("jones_wenzl: negative n");
  TLElement<RationalFn> f = TLElement<RationalFn>::identity(0);
  for (int k = 0; k < n; ++k) {
    // f holds f^(k); the correction term vanishes for k = 0 since [0] = 0
    TLElement<RationalFn> inc = f.included();
    if (k == 0) {
      f = inc;
      continue;
    }
    RationalFn ratio = quantum_int_A(k) / quantum_int_A(k + 1);
    TLElement<RationalFn> e = TLElement<RationalFn>::generator(k + 1, k);
    f = inc - (inc * e * inc).scaled(ratio);
  }
  return f;
}

}  // namespace knotpoly
