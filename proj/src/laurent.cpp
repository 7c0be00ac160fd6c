#include "knotpoly/laurent.hpp"

#include <algorithm>
#include <sstream>
#include <utility>
#include <vector>

namespace knotpoly {

namespace {

long checked_add(long a, long b) {
  long r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::range_error("Laurent exponent overflow");
  return r;
}

Int gcd_int(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

}  // namespace

LaurentPoly::LaurentPoly(long constant) {
  if (constant != 0) terms_[0] = constant;
}

LaurentPoly::LaurentPoly(Int constant) {
  if (constant != 0) terms_[0] = std::move(constant);
}

LaurentPoly LaurentPoly::monomial(Int coeff, long exp) {
  LaurentPoly p;
  if (coeff != 0) p.terms_[exp] = std::move(coeff);
  return p;
}

LaurentPoly LaurentPoly::loop_weight() {
  LaurentPoly d;
  d.terms_[2] = -1;
  d.terms_[-2] = -1;
  return d;
}

LaurentPoly LaurentPoly::loop_weight_pow(long k) {
  if (k < 0) throw std::domain_error("negative loop weight power");
  return loop_weight().pow(static_cast<unsigned long>(k));
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

long LaurentPoly::min_exp() const {
  if (is_zero()) throw std::domain_error("min_exp of zero polynomial");
  return terms_.begin()->first;
}

long LaurentPoly::max_exp() const {
  if (is_zero()) throw std::domain_error("max_exp of zero polynomial");
  return terms_.rbegin()->first;
}

Int LaurentPoly::coeff(long exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? Int(0) : it->second;
}

Int LaurentPoly::leading_coeff() const { return terms_.rbegin()->second; }

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  if (this == &rhs) {
    for (auto& [e, c] : terms_) c *= 2;
    return *this;
  }
  for (const auto& [e, c] : rhs.terms_) {
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  if (this == &rhs) {
    terms_.clear();
    return *this;
  }
  for (const auto& [e, c] : rhs.terms_) {
    auto [it, fresh] = terms_.emplace(e, -c);
    if (!fresh) {
      it->second -= c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      long e = checked_add(ea, eb);
      auto [it, fresh] = r.terms_.emplace(e, ca * cb);
      if (!fresh) {
        it->second += ca * cb;
        if (it->second == 0) r.terms_.erase(it);
      }
    }
  }
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

LaurentPoly LaurentPoly::pow(unsigned long e) const {
  LaurentPoly r(1);
  LaurentPoly base = *this;
  while (e > 0) {
    if (e & 1) r *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return r;
}

LaurentPoly LaurentPoly::shifted(long k) const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_[checked_add(e, k)] = c;
  return r;
}

LaurentPoly LaurentPoly::mirrored() const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_[-e] = c;
  return r;
}

namespace {

// Dense ordinary-polynomial view used by division and gcd. coeffs[i] is the
// coefficient of A^i; the Laurent shift is tracked by the caller.
std::vector<Int> to_dense(const LaurentPoly& p) {
  long lo = p.min_exp(), hi = p.max_exp();
  std::vector<Int> c(static_cast<size_t>(hi - lo + 1));
  for (const auto& [e, v] : p.terms()) c[static_cast<size_t>(e - lo)] = v;
  return c;
}

LaurentPoly from_dense(const std::vector<Int>& c, long shift) {
  LaurentPoly p;
  for (size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0) p += LaurentPoly::monomial(c[i], checked_add(static_cast<long>(i), shift));
  return p;
}

size_t degree(const std::vector<Int>& c) {
  size_t d = c.size();
  while (d > 0 && c[d - 1] == 0) --d;
  return d;  // 0 means zero polynomial; otherwise degree + 1
}

Int content(const std::vector<Int>& c) {
  Int g = 0;
  for (const auto& v : c) g = gcd_int(g, v);
  return g;
}

void divexact_all(std::vector<Int>& c, const Int& g) {
  for (auto& v : c) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

// Pseudo-remainder step sequence followed by primitive-part extraction; the
// classic fraction-free gcd for Z[x].
std::vector<Int> primitive_gcd(std::vector<Int> p, std::vector<Int> q) {
  auto primitive = [](std::vector<Int>& c) {
    size_t d = degree(c);
    c.resize(d);
    if (d == 0) return;
    Int g = content(c);
    if (c.back() < 0) g = -g;
    divexact_all(c, g);
  };
  primitive(p);
  primitive(q);
  if (degree(p) < degree(q)) std::swap(p, q);
  while (degree(q) > 0) {
    // pseudo-reduce p modulo q
    while (degree(p) >= degree(q) && degree(p) > 0) {
      size_t dp = degree(p), dq = degree(q);
      Int lp = p[dp - 1], lq = q[dq - 1];
      for (auto& v : p) v *= lq;
      for (size_t i = 0; i < dq; ++i) p[dp - dq + i] -= lp * q[i];
      p.resize(degree(p));
      if (p.empty()) break;
    }
    primitive(p);
    std::swap(p, q);
  }
  return p;  // loop exits with q zero; p holds the primitive gcd
}

}  // namespace

LaurentPoly div_exact(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  if (a.is_zero()) return {};
  long shift = a.min_exp() - b.min_exp();
  std::vector<Int> num = to_dense(a);
  std::vector<Int> den = to_dense(b);
  size_t dn = degree(num), dd = degree(den);
  if (dn < dd) throw DivisibilityError("not divisible: dividend degree span too small");
  std::vector<Int> quot(dn - dd + 1);
  const Int& lead = den[dd - 1];
  for (size_t k = dn; k >= dd; --k) {
    Int& top = num[k - 1];
    if (top != 0) {
      if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()))
        throw DivisibilityError("not divisible: leading coefficient");
      Int q;
      mpz_divexact(q.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
      size_t off = k - dd;
      for (size_t i = 0; i < dd; ++i) num[off + i] -= q * den[i];
      quot[off] = std::move(q);
    }
    if (k == dd) break;
  }
  if (degree(num) != 0) throw DivisibilityError("not divisible: nonzero remainder");
  return from_dense(quot, shift);
}

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  auto canon = [](const LaurentPoly& p) {
    LaurentPoly r = p.shifted(-p.min_exp());
    if (r.leading_coeff() < 0) r = -r;
    return r;
  };
  if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd(0, 0)");
  if (a.is_zero()) return canon(b);
  if (b.is_zero()) return canon(a);
  std::vector<Int> da = to_dense(a), db = to_dense(b);
  Int cg = gcd_int(content(da), content(db));
  std::vector<Int> g = primitive_gcd(std::move(da), std::move(db));
  LaurentPoly r = from_dense(g, 0) * LaurentPoly(cg);
  if (r.leading_coeff() < 0) r = -r;
  return r;
}

LaurentPoly quantum_int(long n) {
  if (n < 0) return -quantum_int(-n);
  LaurentPoly p;
  for (long k = 0; k < n; ++k) p += LaurentPoly::monomial(1, n - 1 - 2 * k);
  return p;
}

bool quantum_identities_check(long m, long a) {
  if (!(m >= a && a >= 0)) throw std::domain_error("need m >= a >= 0");
  LaurentPoly lhs = quantum_int(2) * quantum_int(m);
  LaurentPoly rhs = quantum_int(m + 1) + quantum_int(m - 1);
  if (lhs != rhs) return false;
  LaurentPoly lhs2 = quantum_int(m - a);
  LaurentPoly rhs2 = quantum_int(m) * quantum_int(a + 1) - quantum_int(m + 1) * quantum_int(a);
  return lhs2 == rhs2;
}

LaurentPoly subst_q_to_A(const LaurentPoly& p_in_q) {
  LaurentPoly r;
  for (const auto& [e, c] : p_in_q.terms()) {
    Int v = (e % 2 == 0) ? c : -c;
    r += LaurentPoly::monomial(v, checked_add(e, e));
  }
  return r;
}

LaurentPoly to_t_half(const LaurentPoly& p_in_A) {
  LaurentPoly r;
  for (const auto& [e, c] : p_in_A.terms()) {
    if (e % 2 != 0)
      throw std::domain_error("odd A-exponent has no t^(1/2) representation");
    r += LaurentPoly::monomial(c, -e / 2);
  }
  return r;
}

namespace {

void append_term(std::ostringstream& out, bool first, const Int& c, const std::string& sym) {
  Int m = abs(c);
  if (first) {
    if (c < 0) out << '-';
  } else {
    out << (c < 0 ? " - " : " + ");
  }
  if (m != 1 || sym.empty()) out << m.get_str();
  out << sym;
}

std::string t_symbol(long u) {
  // u is the exponent in t^(1/2) units
  if (u == 0) return "";
  std::ostringstream s;
  if (u % 2 == 0) {
    s << 't';
    if (u / 2 != 1) s << '^' << u / 2;
  } else {
    s << "t^" << u << "/2";
  }
  return s.str();
}

}  // namespace

std::string to_string_A(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    std::string sym;
    if (it->first == 1) sym = "A";
    else if (it->first != 0) sym = "A^" + std::to_string(it->first);
    append_term(out, first, it->second, sym);
    first = false;
  }
  return out.str();
}

std::string to_string_t(const LaurentPoly& p_in_A) {
  if (p_in_A.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  // descending A-exponent = ascending t-exponent
  for (auto it = p_in_A.terms().rbegin(); it != p_in_A.terms().rend(); ++it) {
    if (it->first % 2 != 0)
      throw std::domain_error("odd A-exponent has no t^(1/2) representation");
    append_term(out, first, it->second, t_symbol(-it->first / 2));
    first = false;
  }
  return out.str();
}

RationalFn::RationalFn(LaurentPoly num, LaurentPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

void RationalFn::normalize() {
  if (den_.is_zero()) throw std::domain_error("zero denominator");
  if (num_.is_zero()) {
    den_ = LaurentPoly(1);
    return;
  }
  if (den_.is_one()) return;
  long dshift = den_.min_exp();
  den_ = den_.shifted(-dshift);
  num_ = num_.shifted(-dshift);
  LaurentPoly g = poly_gcd(num_, den_);
  if (!g.is_one()) {
    num_ = div_exact(num_, g);
    den_ = div_exact(den_, g);
  }
  if (den_.leading_coeff() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

RationalFn RationalFn::operator-() const {
  RationalFn r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFn& RationalFn::operator+=(const RationalFn& rhs) {
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
  } else {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ = den_ * rhs.den_;
  }
  normalize();
  return *this;
}

RationalFn& RationalFn::operator-=(const RationalFn& rhs) {
  if (den_ == rhs.den_) {
    num_ -= rhs.num_;
  } else {
    num_ = num_ * rhs.den_ - rhs.num_ * den_;
    den_ = den_ * rhs.den_;
  }
  normalize();
  return *this;
}

RationalFn& RationalFn::operator*=(const RationalFn& rhs) {
  num_ = num_ * rhs.num_;
  den_ = den_ * rhs.den_;
  normalize();
  return *this;
}

RationalFn& RationalFn::operator/=(const RationalFn& rhs) {
  if (rhs.is_zero()) throw std::domain_error("division by zero rational function");
  if (this == &rhs) {
    num_ = LaurentPoly(1);
    den_ = LaurentPoly(1);
    return *this;
  }
  num_ = num_ * rhs.den_;
  den_ = den_ * rhs.num_;
  normalize();
  return *this;
}

std::string to_string(const RationalFn& r) {
  if (r.den().is_one()) return to_string_A(r.num());
  return "(" + to_string_A(r.num()) + ") / (" + to_string_A(r.den()) + ")";
}

}  // namespace knotpoly
