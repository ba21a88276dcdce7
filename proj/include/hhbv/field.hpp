#pragma once

// Exact coefficient fields: Q (arbitrary precision) and GF(p^m).
//
// Field objects are interned and immutable; elements carry a plain pointer to
// their field and a canonical representation (mpq_class for Q, a residue in
// [0,p) for GF(p), a fixed-length coefficient vector for GF(p^m), m > 1).
// GF(p^m) is k[t]/(f) where f is the first monic irreducible of degree m when
// non-leading coefficient vectors are ordered by their base-p integer value;
// this makes element serialization reproducible across runs and platforms.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace hhbv {

struct hhbv_error : std::runtime_error {
  std::string code;
  hhbv_error(std::string c, const std::string& what)
      : std::runtime_error(what), code(std::move(c)) {}
};

class Field;
using FieldRef = const Field*;
class FieldElement;

namespace detail {

// dense int64 polynomials over GF(p), low-degree-first, for modulus selection
using ZpPoly = std::vector<std::int64_t>;

inline std::int64_t zp_norm(std::int64_t a, std::int64_t p) {
  a %= p;
  return a < 0 ? a + p : a;
}

inline std::int64_t zp_inv(std::int64_t a, std::int64_t p) {
  // extended Euclid; p prime, a != 0 mod p
  std::int64_t t = 0, nt = 1, r = p, nr = zp_norm(a, p);
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (r != 1) throw hhbv_error("internal", "zp_inv: not invertible");
  return zp_norm(t, p);
}

inline void zp_trim(ZpPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

inline ZpPoly zp_mul(const ZpPoly& a, const ZpPoly& b, std::int64_t p) {
  if (a.empty() || b.empty()) return {};
  ZpPoly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  }
  zp_trim(c);
  return c;
}

inline ZpPoly zp_mod(ZpPoly a, const ZpPoly& f, std::int64_t p) {
  // f monic
  zp_trim(a);
  const std::size_t df = f.size() - 1;
  while (a.size() >= f.size()) {
    std::int64_t c = a.back();
    std::size_t shift = a.size() - 1 - df;
    if (c != 0)
      for (std::size_t i = 0; i < f.size(); ++i)
        a[shift + i] = zp_norm(a[shift + i] - c * f[i], p);
    a.pop_back();
    zp_trim(a);
  }
  return a;
}

inline ZpPoly zp_powmod_x(const mpz_class& e, const ZpPoly& f, std::int64_t p) {
  // x^e mod f, binary exponentiation with an mpz exponent
  ZpPoly base{0, 1}, acc{1};
  base = zp_mod(base, f, p);
  mpz_class n = e;
  for (std::size_t bit = 0, nb = mpz_sizeinbase(n.get_mpz_t(), 2); bit < nb; ++bit) {
    if (mpz_tstbit(n.get_mpz_t(), bit)) acc = zp_mod(zp_mul(acc, base, p), f, p);
    base = zp_mod(zp_mul(base, base, p), f, p);
  }
  return acc;
}

inline ZpPoly zp_gcd(ZpPoly a, ZpPoly b, std::int64_t p) {
  zp_trim(a);
  zp_trim(b);
  while (!b.empty()) {
    // make b monic before reduction
    std::int64_t inv = zp_inv(b.back(), p);
    for (auto& c : b) c = zp_norm(c * inv, p);
    ZpPoly r = zp_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    std::int64_t inv = zp_inv(a.back(), p);
    for (auto& c : a) c = zp_norm(c * inv, p);
  }
  return a;
}

inline bool zp_irreducible(const ZpPoly& f, std::int64_t p) {
  // Rabin: f (monic, deg m) is irreducible over GF(p) iff x^(p^m) == x mod f
  // and gcd(x^(p^(m/q)) - x, f) = 1 for every prime divisor q of m.
  const std::size_t m = f.size() - 1;
  mpz_class pm;
  mpz_ui_pow_ui(pm.get_mpz_t(), static_cast<unsigned long>(p),
                static_cast<unsigned long>(m));
  ZpPoly xq = zp_powmod_x(pm, f, p);
  ZpPoly x = zp_mod(ZpPoly{0, 1}, f, p);
  if (xq != x) return false;
  auto coprime_at = [&](std::size_t d) {
    mpz_class e;
    mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(p),
                  static_cast<unsigned long>(d));
    ZpPoly h = zp_powmod_x(e, f, p);
    if (h.size() < 2) h.resize(2, 0);
    h[1] = zp_norm(h[1] - 1, p);  // h := x^(p^d) - x mod f
    zp_trim(h);
    return zp_gcd(h, f, p).size() == 1;
  };
  std::size_t mm = m;
  for (std::size_t q = 2; q * q <= mm; ++q) {
    if (mm % q) continue;
    while (mm % q == 0) mm /= q;
    if (!coprime_at(m / q)) return false;
  }
  if (mm > 1 && !coprime_at(m / mm)) return false;
  return true;
}

inline ZpPoly least_irreducible(std::int64_t p, int m) {
  // enumerate non-leading coefficient vectors by base-p value
  mpz_class count;
  mpz_ui_pow_ui(count.get_mpz_t(), static_cast<unsigned long>(p),
                static_cast<unsigned long>(m));
  for (mpz_class v = 0; v < count; ++v) {
    ZpPoly f(m + 1, 0);
    mpz_class rest = v;
    for (int i = 0; i < m; ++i) {
      mpz_class digit = rest % p;
      f[i] = digit.get_si();
      rest /= p;
    }
    f[m] = 1;
    if (zp_irreducible(f, p)) return f;
  }
  throw hhbv_error("internal", "no irreducible polynomial found");
}

inline bool is_prime_i64(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace detail

class Field {
 public:
  enum class Kind { Rationals, Finite };

  static FieldRef rationals();
  static FieldRef finite(std::int64_t p, int m = 1);
  // "Q" | "GF(p)" | "GF(p^m)"
  static FieldRef parse_name(const std::string& s);

  Kind kind() const { return kind_; }
  bool is_rationals() const { return kind_ == Kind::Rationals; }
  std::int64_t characteristic() const { return is_rationals() ? 0 : p_; }
  std::int64_t prime() const { return p_; }
  int extension_degree() const { return m_; }
  const detail::ZpPoly& modulus() const { return modulus_; }  // monic, deg m
  mpz_class order() const {
    mpz_class o;
    mpz_ui_pow_ui(o.get_mpz_t(), static_cast<unsigned long>(p_),
                  static_cast<unsigned long>(m_));
    return o;
  }

  std::string name() const {
    if (is_rationals()) return "Q";
    std::ostringstream os;
    os << "GF(" << p_;
    if (m_ > 1) os << "^" << m_;
    os << ")";
    return os.str();
  }

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_int(std::int64_t n) const;
  FieldElement from_mpq(const mpq_class& q) const;  // Q only
  // residue coefficients c_0..c_{m-1} (may be shorter), reduced mod p
  FieldElement from_residue(const std::vector<std::int64_t>& c) const;
  FieldElement generator() const;  // finite, m>1: the class of t
  std::vector<FieldElement> all_elements() const;  // finite only
  FieldElement parse(const std::string& s) const;

 private:
  Kind kind_;
  std::int64_t p_ = 0;
  int m_ = 1;
  detail::ZpPoly modulus_;

  Field(Kind k, std::int64_t p, int m, detail::ZpPoly mod)
      : kind_(k), p_(p), m_(m), modulus_(std::move(mod)) {}
  friend struct FieldRegistry;
};

class FieldElement {
 public:
  FieldElement() : field_(nullptr) {}

  FieldRef field() const { return field_; }

  bool is_zero() const {
    if (rat_p()) return mpq_sgn(rat().get_mpq_t()) == 0;
    if (res_p()) return res() == 0;
    for (auto c : vec())
      if (c) return false;
    return true;
  }
  bool is_one() const;

  FieldElement operator-() const;
  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
  FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }
  FieldElement inverse() const;
  FieldElement pow(const mpz_class& e) const;  // e >= 0, or e < 0 via inverse

  bool operator==(const FieldElement& o) const {
    if (field_ != o.field_) return false;
    return rep_ == o.rep_;
  }
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

  // canonical total order (Q: numeric; GF(p^m): base-p value of the residue)
  static int compare(const FieldElement& a, const FieldElement& b);
  bool operator<(const FieldElement& o) const { return compare(*this, o) < 0; }

  std::string str() const;

  const mpq_class& rational() const { return rat(); }

  // residue digits c_0..c_{m-1} of a finite-field element
  std::vector<std::int64_t> residue_digits() const {
    if (rat_p()) throw hhbv_error("bad-scalar", "rational has no residue digits");
    if (res_p()) return {res()};
    return vec();
  }

 private:
  friend class Field;
  FieldRef field_;
  std::variant<mpq_class, std::int64_t, std::vector<std::int64_t>> rep_;

  bool rat_p() const { return std::holds_alternative<mpq_class>(rep_); }
  bool res_p() const { return std::holds_alternative<std::int64_t>(rep_); }
  const mpq_class& rat() const { return std::get<mpq_class>(rep_); }
  std::int64_t res() const { return std::get<std::int64_t>(rep_); }
  const std::vector<std::int64_t>& vec() const {
    return std::get<std::vector<std::int64_t>>(rep_);
  }

  static FieldElement make_rat(FieldRef f, mpq_class q) {
    FieldElement e;
    e.field_ = f;
    e.rep_ = std::move(q);
    return e;
  }
  static FieldElement make_res(FieldRef f, std::int64_t r) {
    FieldElement e;
    e.field_ = f;
    e.rep_ = r;
    return e;
  }
  static FieldElement make_vec(FieldRef f, std::vector<std::int64_t> v) {
    FieldElement e;
    e.field_ = f;
    e.rep_ = std::move(v);
    return e;
  }
  void check_same(const FieldElement& o) const {
    if (field_ != o.field_)
      throw hhbv_error("field-mismatch", "elements from different fields");
  }
};

struct FieldRegistry {
  static const Field* get_rationals() {
    static Field q(Field::Kind::Rationals, 0, 1, {});
    return &q;
  }
  static const Field* get_finite(std::int64_t p, int m) {
    static std::mutex mu;
    static std::map<std::pair<std::int64_t, int>, std::unique_ptr<Field>> cache;
    std::lock_guard<std::mutex> lk(mu);
    auto key = std::make_pair(p, m);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second.get();
    if (p < 2 || p >= (std::int64_t(1) << 31) || !detail::is_prime_i64(p))
      throw hhbv_error("bad-field", "GF requires a prime p < 2^31");
    if (m < 1 || m > 16) throw hhbv_error("bad-field", "extension degree out of range");
    detail::ZpPoly mod =
        m == 1 ? detail::ZpPoly{0, 1} : detail::least_irreducible(p, m);
    auto f = std::unique_ptr<Field>(
        new Field(Field::Kind::Finite, p, m, std::move(mod)));
    const Field* ptr = f.get();
    cache.emplace(key, std::move(f));
    return ptr;
  }
};

inline FieldRef Field::rationals() { return FieldRegistry::get_rationals(); }
inline FieldRef Field::finite(std::int64_t p, int m) {
  return FieldRegistry::get_finite(p, m);
}

inline FieldRef Field::parse_name(const std::string& s) {
  if (s == "Q") return rationals();
  if (s.size() > 4 && s.substr(0, 3) == "GF(" && s.back() == ')') {
    std::string body = s.substr(3, s.size() - 4);
    std::size_t caret = body.find('^');
    try {
      std::int64_t p = std::stoll(caret == std::string::npos ? body
                                                             : body.substr(0, caret));
      int m = caret == std::string::npos ? 1 : std::stoi(body.substr(caret + 1));
      return finite(p, m);
    } catch (const std::logic_error&) {
      throw hhbv_error("bad-field", "cannot parse field name: " + s);
    }
  }
  throw hhbv_error("bad-field", "cannot parse field name: " + s);
}

inline FieldElement Field::zero() const { return from_int(0); }
inline FieldElement Field::one() const { return from_int(1); }

inline FieldElement Field::from_int(std::int64_t n) const {
  if (is_rationals()) return FieldElement::make_rat(this, mpq_class(n));
  std::int64_t r = detail::zp_norm(n, p_);
  if (m_ == 1) return FieldElement::make_res(this, r);
  std::vector<std::int64_t> v(m_, 0);
  v[0] = r;
  return FieldElement::make_vec(this, std::move(v));
}

inline FieldElement Field::from_mpq(const mpq_class& q) const {
  if (!is_rationals()) {
    // admit integers into a finite field; reject true fractions
    if (q.get_den() != 1)
      throw hhbv_error("bad-scalar", "rational scalar in a finite field");
    mpz_class n = q.get_num() % p_;
    return from_int(n.get_si());
  }
  mpq_class c = q;
  c.canonicalize();
  return FieldElement::make_rat(this, std::move(c));
}

inline FieldElement Field::from_residue(const std::vector<std::int64_t>& c) const {
  if (is_rationals()) throw hhbv_error("bad-scalar", "residue in Q");
  detail::ZpPoly v(c.begin(), c.end());
  for (auto& x : v) x = detail::zp_norm(x, p_);
  v = detail::zp_mod(std::move(v), modulus_, p_);
  if (m_ == 1) return FieldElement::make_res(this, v.empty() ? 0 : v[0]);
  v.resize(m_, 0);
  return FieldElement::make_vec(this, std::move(v));
}

inline FieldElement Field::generator() const {
  if (is_rationals() || m_ == 1)
    throw hhbv_error("bad-scalar", "generator requires GF(p^m), m > 1");
  return from_residue({0, 1});
}

inline std::vector<FieldElement> Field::all_elements() const {
  if (is_rationals()) throw hhbv_error("bad-scalar", "Q is infinite");
  std::vector<FieldElement> out;
  mpz_class n = order();
  for (mpz_class v = 0; v < n; ++v) {
    std::vector<std::int64_t> c(m_, 0);
    mpz_class rest = v;
    for (int i = 0; i < m_; ++i) {
      mpz_class d = rest % p_;
      c[i] = d.get_si();
      rest /= p_;
    }
    out.push_back(from_residue(c));
  }
  return out;
}

inline bool FieldElement::is_one() const {
  if (rat_p()) return rat() == 1;
  if (res_p()) return res() == 1;
  if (vec()[0] != 1) return false;
  for (std::size_t i = 1; i < vec().size(); ++i)
    if (vec()[i]) return false;
  return true;
}

inline FieldElement FieldElement::operator-() const {
  if (rat_p()) return make_rat(field_, -rat());
  std::int64_t p = field_->prime();
  if (res_p()) return make_res(field_, detail::zp_norm(-res(), p));
  auto v = vec();
  for (auto& c : v) c = detail::zp_norm(-c, p);
  return make_vec(field_, std::move(v));
}

inline FieldElement FieldElement::operator+(const FieldElement& o) const {
  check_same(o);
  if (rat_p()) return make_rat(field_, mpq_class(rat() + o.rat()));
  std::int64_t p = field_->prime();
  if (res_p()) return make_res(field_, (res() + o.res()) % p);
  auto v = vec();
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = (v[i] + o.vec()[i]) % p;
  return make_vec(field_, std::move(v));
}

inline FieldElement FieldElement::operator-(const FieldElement& o) const {
  check_same(o);
  if (rat_p()) return make_rat(field_, mpq_class(rat() - o.rat()));
  std::int64_t p = field_->prime();
  if (res_p()) return make_res(field_, detail::zp_norm(res() - o.res(), p));
  auto v = vec();
  for (std::size_t i = 0; i < v.size(); ++i)
    v[i] = detail::zp_norm(v[i] - o.vec()[i], p);
  return make_vec(field_, std::move(v));
}

inline FieldElement FieldElement::operator*(const FieldElement& o) const {
  check_same(o);
  if (rat_p()) return make_rat(field_, mpq_class(rat() * o.rat()));
  std::int64_t p = field_->prime();
  if (res_p()) return make_res(field_, (res() * o.res()) % p);
  detail::ZpPoly prod = detail::zp_mul(
      detail::ZpPoly(vec().begin(), vec().end()),
      detail::ZpPoly(o.vec().begin(), o.vec().end()), p);
  prod = detail::zp_mod(std::move(prod), field_->modulus(), p);
  prod.resize(field_->extension_degree(), 0);
  return make_vec(field_, std::move(prod));
}

inline FieldElement FieldElement::inverse() const {
  if (is_zero()) throw hhbv_error("division-by-zero", "inverse of zero");
  if (rat_p()) return make_rat(field_, mpq_class(1 / rat()));
  std::int64_t p = field_->prime();
  if (res_p()) return make_res(field_, detail::zp_inv(res(), p));
  // extended Euclid in GF(p)[t] against the modulus
  detail::ZpPoly r0 = field_->modulus(), r1(vec().begin(), vec().end());
  detail::zp_trim(r1);
  detail::ZpPoly t0{}, t1{1};
  while (!r1.empty()) {
    // division step: r0 = q*r1 + r2 with r1 scaled monic on the fly
    std::int64_t lead_inv = detail::zp_inv(r1.back(), p);
    detail::ZpPoly q;
    detail::ZpPoly rem = r0;
    detail::zp_trim(rem);
    if (rem.size() >= r1.size()) {
      q.assign(rem.size() - r1.size() + 1, 0);
      while (rem.size() >= r1.size() && !rem.empty()) {
        std::int64_t c = detail::zp_norm(rem.back() * lead_inv, p);
        std::size_t shift = rem.size() - r1.size();
        q[shift] = c;
        for (std::size_t i = 0; i < r1.size(); ++i)
          rem[shift + i] = detail::zp_norm(rem[shift + i] - c * r1[i], p);
        detail::zp_trim(rem);
      }
    }
    detail::ZpPoly t2 = t0;
    {
      detail::ZpPoly qt1 = detail::zp_mul(q, t1, p);
      if (t2.size() < qt1.size()) t2.resize(qt1.size(), 0);
      for (std::size_t i = 0; i < qt1.size(); ++i)
        t2[i] = detail::zp_norm(t2[i] - qt1[i], p);
      detail::zp_trim(t2);
    }
    r0 = std::move(r1);
    r1 = std::move(rem);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  // r0 is the gcd (a nonzero constant since modulus is irreducible)
  if (r0.size() != 1) throw hhbv_error("internal", "inverse: gcd not constant");
  std::int64_t scale = detail::zp_inv(r0[0], p);
  for (auto& c : t0) c = detail::zp_norm(c * scale, p);
  t0 = detail::zp_mod(std::move(t0), field_->modulus(), p);
  t0.resize(field_->extension_degree(), 0);
  return make_vec(field_, std::move(t0));
}

inline FieldElement FieldElement::operator/(const FieldElement& o) const {
  return *this * o.inverse();
}

inline FieldElement FieldElement::pow(const mpz_class& e) const {
  if (e < 0) return inverse().pow(-e);
  FieldElement acc = field_->one(), base = *this;
  mpz_class n = e;
  for (std::size_t bit = 0, nb = mpz_sizeinbase(n.get_mpz_t(), 2);
       bit < nb && n != 0; ++bit) {
    if (mpz_tstbit(n.get_mpz_t(), bit)) acc = acc * base;
    base = base * base;
  }
  return acc;
}

inline int FieldElement::compare(const FieldElement& a, const FieldElement& b) {
  if (a.field_ != b.field_)
    throw hhbv_error("field-mismatch", "comparing elements of different fields");
  if (a.rat_p()) return mpq_cmp(a.rat().get_mpq_t(), b.rat().get_mpq_t());
  if (a.res_p()) return a.res() < b.res() ? -1 : (a.res() > b.res() ? 1 : 0);
  // base-p value, most significant digit last in storage
  const auto &va = a.vec(), &vb = b.vec();
  for (std::size_t i = va.size(); i-- > 0;) {
    if (va[i] != vb[i]) return va[i] < vb[i] ? -1 : 1;
  }
  return 0;
}

inline std::string FieldElement::str() const {
  if (rat_p()) return rat().get_str();
  if (res_p()) return std::to_string(res());
  // polynomial in t, highest degree first; coefficients already in [0,p)
  std::ostringstream os;
  bool any = false;
  for (std::size_t i = vec().size(); i-- > 0;) {
    std::int64_t c = vec()[i];
    if (!c) continue;
    if (any) os << "+";
    if (i == 0)
      os << c;
    else {
      if (c != 1) os << c << "*";
      os << "t";
      if (i > 1) os << "^" << i;
    }
    any = true;
  }
  if (!any) return "0";
  return os.str();
}

inline FieldElement Field::parse(const std::string& s) const {
  std::string t;
  for (char c : s)
    if (!isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty()) throw hhbv_error("bad-scalar", "empty scalar");
  if (is_rationals()) {
    // "a" or "a/b", optional leading '-'
    for (std::size_t i = 0; i < t.size(); ++i) {
      char c = t[i];
      bool ok = isdigit(static_cast<unsigned char>(c)) || c == '/' ||
                (c == '-' && (i == 0 || t[i - 1] == '/'));
      if (!ok) throw hhbv_error("bad-scalar", "cannot parse rational: " + s);
    }
    try {
      mpq_class q(t);
      if (q.get_den() == 0) throw hhbv_error("bad-scalar", "zero denominator: " + s);
      q.canonicalize();
      return FieldElement::make_rat(this, std::move(q));
    } catch (const std::invalid_argument&) {
      throw hhbv_error("bad-scalar", "cannot parse rational: " + s);
    }
  }
  // finite field: sum of terms  c | c*t^k | t^k | t | c*t
  std::vector<std::int64_t> coeffs(m_, 0);
  std::size_t i = 0;
  int sign = 1;
  bool first = true;
  while (i < t.size()) {
    if (!first || t[i] == '+' || t[i] == '-') {
      if (t[i] == '+')
        sign = 1;
      else if (t[i] == '-')
        sign = -1;
      else
        throw hhbv_error("bad-scalar", "cannot parse scalar: " + s);
      ++i;
    }
    first = false;
    std::int64_t c = 1;
    bool saw_digit = false;
    std::int64_t num = 0;
    while (i < t.size() && isdigit(static_cast<unsigned char>(t[i]))) {
      num = num * 10 + (t[i] - '0');
      if (num > (std::int64_t(1) << 56)) num %= p_;
      saw_digit = true;
      ++i;
    }
    if (saw_digit) c = num;
    int deg = 0;
    if (i < t.size() && t[i] == '*') ++i;
    if (i < t.size() && t[i] == 't') {
      ++i;
      deg = 1;
      if (i < t.size() && t[i] == '^') {
        ++i;
        std::int64_t d = 0;
        bool any = false;
        while (i < t.size() && isdigit(static_cast<unsigned char>(t[i]))) {
          d = d * 10 + (t[i] - '0');
          any = true;
          ++i;
        }
        if (!any) throw hhbv_error("bad-scalar", "cannot parse scalar: " + s);
        deg = static_cast<int>(d);
      }
    } else if (!saw_digit) {
      throw hhbv_error("bad-scalar", "cannot parse scalar: " + s);
    }
    if (deg >= m_)
      throw hhbv_error("bad-scalar", "degree of t exceeds field degree in: " + s);
    coeffs[deg] = detail::zp_norm(coeffs[deg] + sign * c, p_);
  }
  return from_residue(coeffs);
}

}  // namespace hhbv
