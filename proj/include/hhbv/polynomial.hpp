#pragma once

// Univariate polynomials over an exact field: arithmetic, monic gcd,
// squarefreeness, root finding, and splitting-field degrees over GF(p^m).

#include <algorithm>
#include <functional>
#include <numeric>
#include <utility>
#include <vector>

#include "hhbv/field.hpp"

namespace hhbv {

class Polynomial {
 public:
  explicit Polynomial(FieldRef f) : field_(f) {}
  Polynomial(FieldRef f, std::vector<FieldElement> coeffs)
      : field_(f), c_(std::move(coeffs)) {
    trim();
  }
  static Polynomial zero(FieldRef f) { return Polynomial(f); }
  static Polynomial constant(FieldRef f, const FieldElement& a) {
    return Polynomial(f, {a});
  }
  static Polynomial x(FieldRef f) {
    return Polynomial(f, {f->zero(), f->one()});
  }
  // x - a
  static Polynomial linear_root(FieldRef f, const FieldElement& a) {
    return Polynomial(f, {-a, f->one()});
  }

  FieldRef field() const { return field_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for 0
  bool is_zero() const { return c_.empty(); }
  const FieldElement& operator[](std::size_t i) const { return c_[i]; }
  const std::vector<FieldElement>& coefficients() const { return c_; }
  const FieldElement& leading() const { return c_.back(); }

  bool operator==(const Polynomial& o) const { return c_ == o.c_; }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  Polynomial operator+(const Polynomial& o) const {
    std::vector<FieldElement> r(std::max(c_.size(), o.c_.size()), field_->zero());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = r[i] + c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] = r[i] + o.c_[i];
    return Polynomial(field_, std::move(r));
  }
  Polynomial operator-(const Polynomial& o) const {
    std::vector<FieldElement> r(std::max(c_.size(), o.c_.size()), field_->zero());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = r[i] + c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] = r[i] - o.c_[i];
    return Polynomial(field_, std::move(r));
  }
  Polynomial operator*(const Polynomial& o) const {
    if (is_zero() || o.is_zero()) return zero(field_);
    std::vector<FieldElement> r(c_.size() + o.c_.size() - 1, field_->zero());
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < o.c_.size(); ++j)
        r[i + j] = r[i + j] + c_[i] * o.c_[j];
    }
    return Polynomial(field_, std::move(r));
  }
  Polynomial scaled(const FieldElement& s) const {
    std::vector<FieldElement> r = c_;
    for (auto& a : r) a = a * s;
    return Polynomial(field_, std::move(r));
  }

  // quotient/remainder; divisor must be nonzero
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const {
    if (d.is_zero()) throw hhbv_error("division-by-zero", "polynomial division by zero");
    if (degree() < d.degree()) return {zero(field_), *this};
    std::vector<FieldElement> rem = c_;
    std::vector<FieldElement> q(c_.size() - d.c_.size() + 1, field_->zero());
    FieldElement lead_inv = d.leading().inverse();
    for (std::size_t k = rem.size(); k-- > 0;) {
      if (k + 1 < d.c_.size()) break;
      if (rem[k].is_zero()) continue;
      FieldElement f = rem[k] * lead_inv;
      std::size_t shift = k + 1 - d.c_.size();
      q[shift] = f;
      for (std::size_t i = 0; i < d.c_.size(); ++i)
        rem[shift + i] = rem[shift + i] - f * d.c_[i];
    }
    return {Polynomial(field_, std::move(q)), Polynomial(field_, std::move(rem))};
  }
  Polynomial operator/(const Polynomial& d) const { return divmod(d).first; }
  Polynomial operator%(const Polynomial& d) const { return divmod(d).second; }

  Polynomial monic() const {
    if (is_zero()) return *this;
    return scaled(leading().inverse());
  }

  Polynomial derivative() const {
    if (degree() < 1) return zero(field_);
    std::vector<FieldElement> r;
    r.reserve(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
      r.push_back(c_[i] * field_->from_int(static_cast<std::int64_t>(i)));
    return Polynomial(field_, std::move(r));
  }

  FieldElement eval(const FieldElement& a) const {
    FieldElement acc = field_->zero();
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * a + c_[i];
    return acc;
  }

  std::string str(const std::string& var = "x") const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
      if (c_[i].is_zero()) continue;
      if (!out.empty()) out += " + ";
      std::string cs = c_[i].str();
      if (i == 0) {
        out += cs;
      } else {
        if (cs != "1") out += "(" + cs + ")*";
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
      }
    }
    return out;
  }

 private:
  FieldRef field_;
  std::vector<FieldElement> c_;  // low degree first, trimmed
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
};

// monic gcd by the Euclidean algorithm; gcd(0,0) = 0
inline Polynomial poly_gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

inline Polynomial poly_lcm(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial::zero(a.field());
  Polynomial g = poly_gcd(a, b);
  return ((a * b) / g).monic();
}

// f is squarefree iff gcd(f, f') is constant.  In characteristic p a vanishing
// derivative (f a p-th power) correctly comes out non-squarefree.
inline bool is_squarefree(const Polynomial& f) {
  if (f.is_zero()) return false;
  if (f.degree() == 0) return true;
  Polynomial g = poly_gcd(f, f.derivative());
  return g.degree() == 0;
}

// x^e mod f by binary exponentiation
inline Polynomial poly_powmod_x(const mpz_class& e, const Polynomial& f) {
  FieldRef F = f.field();
  Polynomial base = Polynomial::x(F) % f, acc = Polynomial::constant(F, F->one());
  mpz_class n = e;
  for (std::size_t bit = 0, nb = mpz_sizeinbase(n.get_mpz_t(), 2); bit < nb; ++bit) {
    if (mpz_tstbit(n.get_mpz_t(), bit)) acc = (acc * base) % f;
    base = (base * base) % f;
  }
  return acc;
}

namespace detail {

// divisors of |n|, ascending
inline std::vector<mpz_class> mpz_divisors(mpz_class n) {
  n = abs(n);
  std::vector<mpz_class> out;
  if (n == 0) return out;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// p-th root of f in GF(q)[x], valid when f = g(x^p); coefficientwise a^(q/p)
inline Polynomial pth_root(const Polynomial& f) {
  FieldRef F = f.field();
  std::int64_t p = F->prime();
  mpz_class e = F->order() / p;
  std::vector<FieldElement> c;
  for (int i = 0; i <= f.degree(); i += static_cast<int>(p))
    c.push_back(f[static_cast<std::size_t>(i)].pow(e));
  return Polynomial(F, std::move(c));
}

// product of the distinct irreducible factors (monic), any characteristic
inline Polynomial squarefree_part(const Polynomial& f0) {
  Polynomial f = f0.monic();
  if (f.degree() <= 0) return f;
  Polynomial fp = f.derivative();
  if (fp.is_zero()) return squarefree_part(pth_root(f));
  Polynomial g = poly_gcd(f, fp);
  if (g.degree() == 0) return f;
  Polynomial w = f / g;  // factors whose multiplicity is not divisible by p
  // strip w-factors; the remainder is a p-th power
  Polynomial rest = f;
  for (;;) {
    Polynomial d = poly_gcd(rest, w);
    if (d.degree() == 0) break;
    rest = rest / d;
  }
  if (rest.degree() == 0) return w.monic();
  return (w * squarefree_part(rest)).monic();
}

}  // namespace detail

// roots in the coefficient field, with multiplicities, sorted canonically.
// Finite fields: exhaustive evaluation.  Q: rational root search on the
// primitive integer form, multiplicities by deflation.
inline std::vector<std::pair<FieldElement, int>> roots_in_field(const Polynomial& f) {
  FieldRef F = f.field();
  if (f.is_zero()) throw hhbv_error("bad-argument", "roots of the zero polynomial");
  std::vector<std::pair<FieldElement, int>> out;
  auto multiplicity = [&](const FieldElement& r) {
    Polynomial g = f, lin = Polynomial::linear_root(F, r);
    int m = 0;
    for (;;) {
      auto [q, rem] = g.divmod(lin);
      if (!rem.is_zero()) break;
      ++m;
      g = q;
    }
    return m;
  };
  if (!F->is_rationals()) {
    for (const auto& a : F->all_elements())
      if (f.eval(a).is_zero()) out.emplace_back(a, multiplicity(a));
    return out;  // all_elements is already in canonical order
  }
  // clear denominators and content
  mpz_class den = 1;
  for (int i = 0; i <= f.degree(); ++i)
    den = lcm(den, f[static_cast<std::size_t>(i)].rational().get_den());
  std::vector<mpz_class> z;
  for (int i = 0; i <= f.degree(); ++i) {
    mpq_class v = f[static_cast<std::size_t>(i)].rational() * den;
    z.push_back(v.get_num());
  }
  mpz_class content = 0;
  for (auto& a : z) content = gcd(content, a);
  if (content > 1)
    for (auto& a : z) a /= content;
  // factor out x^k
  std::size_t low = 0;
  while (low < z.size() && z[low] == 0) ++low;
  if (low > 0) out.emplace_back(F->zero(), multiplicity(F->zero()));
  if (low + 1 >= z.size()) {
    std::sort(out.begin(), out.end(),
              [](auto& a, auto& b) { return a.first < b.first; });
    return out;
  }
  const mpz_class a0 = z[low], an = z.back();
  auto nums = detail::mpz_divisors(a0);
  auto dens = detail::mpz_divisors(an);
  for (const auto& r : nums) {
    for (const auto& s : dens) {
      if (gcd(r, s) != 1) continue;
      for (int sign : {1, -1}) {
        mpq_class cand(sign * r, s);
        cand.canonicalize();
        FieldElement e = F->from_mpq(cand);
        if (f.eval(e).is_zero()) out.emplace_back(e, multiplicity(e));
      }
    }
  }
  std::sort(out.begin(), out.end(),
            [](auto& a, auto& b) { return a.first < b.first; });
  return out;
}

// Smallest extension GF(p^(m*E)) of the (finite) coefficient field over which
// f splits into linear factors; E is the lcm of the degrees of the distinct
// irreducible factors, found by distinct-degree factorization.
inline FieldRef splitting_extension(const Polynomial& f) {
  FieldRef F = f.field();
  if (F->is_rationals())
    throw hhbv_error("extension-required",
                     "splitting fields are only constructed over finite fields");
  if (f.degree() < 1) throw hhbv_error("bad-argument", "splitting field of a constant");
  Polynomial g = detail::squarefree_part(f);
  mpz_class q = F->order();
  long E = 1;
  Polynomial h = Polynomial::x(F) % g;  // x^(q^d) mod g, iterated
  for (int d = 1; g.degree() > 0 && d <= f.degree(); ++d) {
    // h := h^q mod g
    {
      Polynomial acc = Polynomial::constant(F, F->one());
      Polynomial base = h;
      mpz_class n = q;
      for (std::size_t bit = 0, nb = mpz_sizeinbase(n.get_mpz_t(), 2); bit < nb; ++bit) {
        if (mpz_tstbit(n.get_mpz_t(), bit)) acc = (acc * base) % g;
        base = (base * base) % g;
      }
      h = acc;
    }
    Polynomial diff = h - (Polynomial::x(F) % g);
    Polynomial gd = poly_gcd(diff, g);
    if (gd.degree() > 0) {
      E = std::lcm(E, static_cast<long>(d));
      g = g / gd;
      h = h % g;
    }
  }
  if (g.degree() > 0)
    throw hhbv_error("internal", "distinct-degree factorization did not terminate");
  long newdeg = static_cast<long>(F->extension_degree()) * E;
  return Field::finite(F->prime(), static_cast<int>(newdeg));
}

// does f split into linear factors over GF(order^j)? (squarefree part divides
// x^(q^j) - x)
inline bool splits_over_extension(const Polynomial& f, int j) {
  FieldRef F = f.field();
  Polynomial g = detail::squarefree_part(f);
  if (g.degree() <= 0) return true;
  mpz_class e;
  mpz_pow_ui(e.get_mpz_t(), F->order().get_mpz_t(), static_cast<unsigned long>(j));
  Polynomial xq = poly_powmod_x(e, g);
  return (xq - (Polynomial::x(F) % g)).is_zero();
}

// The canonical embedding GF(p^m) -> GF(p^(m')), m | m': send the residue
// class of t to the least root (in the canonical element order) of the source
// modulus inside the target field.  For equal fields this is the identity.
inline std::function<FieldElement(const FieldElement&)> field_embedding(
    FieldRef from, FieldRef to) {
  if (from == to)
    return [](const FieldElement& x) { return x; };
  if (from->is_rationals() || to->is_rationals())
    throw hhbv_error("bad-field", "no embedding between " + from->name() +
                                      " and " + to->name());
  if (from->prime() != to->prime() ||
      to->extension_degree() % from->extension_degree() != 0)
    throw hhbv_error("bad-field", "no embedding of " + from->name() + " into " +
                                      to->name());
  std::vector<FieldElement> lifted;
  for (std::int64_t c : from->modulus()) lifted.push_back(to->from_int(c));
  auto roots = roots_in_field(Polynomial(to, std::move(lifted)));
  if (roots.empty())
    throw hhbv_error("internal", "source modulus has no root in the target field");
  FieldElement r = roots.front().first;
  return [to, r](const FieldElement& x) {
    // x = sum c_i t^i maps to sum c_i r^i
    FieldElement acc = to->zero(), rp = to->one();
    for (std::int64_t c : x.residue_digits()) {
      if (c) acc = acc + to->from_int(c) * rp;
      rp = rp * r;
    }
    return acc;
  };
}

}  // namespace hhbv
