#pragma once
// Exact arithmetic in small finite fields GF(p^k).
//
// An element is identified by its index in 0..p^k-1: the base-p digits of the
// index, least significant first, are the coefficients of the residue
// polynomial (low degree first).  The modulus is the lexicographically
// smallest monic irreducible polynomial of degree k, coefficients compared
// low degree first, so field tables and every downstream geometry label are
// reproducible byte for byte.  Fields at play here stay below p^k = 256, so
// full multiplication tables are cheap and everything is table-driven.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace trigeom {

inline bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// q = p^e with p prime, e >= 1; returns {p, e} or {0, 0}.
inline std::pair<int, int> prime_power_decompose(int q) {
  if (q < 2) return {0, 0};
  int p = 2;
  while (q % p != 0) {
    ++p;
    if (p * p > q) { p = q; break; }
  }
  int e = 0, m = q;
  while (m % p == 0) { m /= p; ++e; }
  if (m != 1 || !is_prime(p)) return {0, 0};
  return {p, e};
}

class Field;

class FieldElement {
public:
  FieldElement() : f_(nullptr), v_(0) {}
  FieldElement(const Field* f, int v) : f_(f), v_(v) {}

  int idx() const { return v_; }
  const Field& field() const { return *f_; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement inv() const;
  FieldElement pow(long long e) const;
  FieldElement frobenius(int i) const;
  std::vector<int> coeffs() const;

  bool operator==(const FieldElement& o) const { return v_ == o.v_; }
  bool operator!=(const FieldElement& o) const { return v_ != o.v_; }
  bool is_zero() const { return v_ == 0; }

private:
  const Field* f_;
  int v_;
};

class Field {
public:
  // field_make: smallest-modulus GF(p^k).
  Field(int p, int k) : p_(p), k_(k) {
    if (!is_prime(p)) throw std::invalid_argument("field: p must be prime");
    if (k < 1) throw std::invalid_argument("field: k must be >= 1");
    q_ = 1;
    for (int i = 0; i < k; ++i) {
      if (q_ > 100000 / p) throw std::invalid_argument("field: q too large");
      q_ *= p;
    }
    modulus_ = smallest_irreducible(p, k);
    build_tables();
  }

  int p() const { return p_; }
  int k() const { return k_; }
  int q() const { return q_; }
  // Monic, length k+1, ascending degree.
  const std::vector<int>& modulus() const { return modulus_; }

  bool same(const Field& o) const {
    return p_ == o.p_ && k_ == o.k_ && modulus_ == o.modulus_;
  }

  // Index-level arithmetic.
  int add(int a, int b) const { return add_[a * q_ + b]; }
  int sub(int a, int b) const { return add_[a * q_ + neg_[b]]; }
  int neg(int a) const { return neg_[a]; }
  int mul(int a, int b) const { return mul_[a * q_ + b]; }
  int inv(int a) const {
    if (a == 0) throw std::domain_error("field: inverse of zero");
    return inv_[a];
  }
  int pow(int a, long long e) const {
    if (e < 0) return pow(inv(a), -e);
    int r = 1, base = a;
    while (e > 0) {
      if (e & 1) r = mul(r, base);
      base = mul(base, base);
      e >>= 1;
    }
    return r;
  }
  // a^(p^i); frobenius(a, k) wraps to the identity.
  int frobenius(int a, int i) const {
    long long e = 1;
    for (int j = 0; j < i % k_; ++j) e *= p_;
    return pow(a, e);
  }

  std::vector<int> coeffs(int a) const {
    std::vector<int> c(k_);
    for (int i = 0; i < k_; ++i) { c[i] = a % p_; a /= p_; }
    return c;
  }
  int from_coeffs(const std::vector<int>& c) const {
    int v = 0;
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
      int d = ((c[i] % p_) + p_) % p_;
      v = v * p_ + d;
    }
    return v;
  }

  FieldElement elem(int idx) const {
    if (idx < 0 || idx >= q_) throw std::invalid_argument("field: bad element index");
    return FieldElement(this, idx);
  }
  FieldElement zero() const { return FieldElement(this, 0); }
  FieldElement one() const { return FieldElement(this, 1); }

private:
  // Polynomials over GF(p) as coefficient vectors, low degree first.
  static std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& m, int p) {
    int dm = static_cast<int>(m.size()) - 1;
    for (int i = static_cast<int>(a.size()) - 1; i >= dm; --i) {
      int c = a[i] % p;
      if (c == 0) continue;
      for (int j = 0; j <= dm; ++j)
        a[i - dm + j] = ((a[i - dm + j] - c * m[j]) % p + p) % p;
    }
    a.resize(dm);
    for (auto& x : a) x = ((x % p) + p) % p;
    return a;
  }

  static bool poly_is_zero(const std::vector<int>& a) {
    for (int x : a)
      if (x != 0) return false;
    return true;
  }

  static bool divides(const std::vector<int>& g, const std::vector<int>& f, int p) {
    return poly_is_zero(poly_mod(f, g, p));
  }

  // Irreducibility by trial division against all monic polynomials of degree
  // <= deg(f)/2.
  static bool poly_irreducible(const std::vector<int>& f, int p) {
    int k = static_cast<int>(f.size()) - 1;
    if (k == 1) return true;
    for (int d = 1; 2 * d <= k; ++d) {
      long long count = 1;
      for (int i = 0; i < d; ++i) count *= p;
      for (long long t = 0; t < count; ++t) {
        std::vector<int> g(d + 1);
        long long v = t;
        for (int i = 0; i < d; ++i) { g[i] = static_cast<int>(v % p); v /= p; }
        g[d] = 1;
        if (divides(g, f, p)) return false;
      }
    }
    return true;
  }

  static std::vector<int> smallest_irreducible(int p, int k) {
    long long count = 1;
    for (int i = 0; i < k; ++i) count *= p;
    // Low-degree-first comparison: c0 is the most significant digit of the
    // enumeration counter, so candidates appear in the required lex order.
    for (long long t = 0; t < count; ++t) {
      std::vector<int> f(k + 1);
      long long v = t;
      for (int i = k - 1; i >= 0; --i) { f[i] = static_cast<int>(v % p); v /= p; }
      f[k] = 1;
      if (poly_irreducible(f, p)) return f;
    }
    throw std::logic_error("field: no irreducible polynomial found");
  }

  void build_tables() {
    add_.resize(static_cast<size_t>(q_) * q_);
    mul_.resize(static_cast<size_t>(q_) * q_);
    neg_.resize(q_);
    inv_.assign(q_, 0);
    for (int a = 0; a < q_; ++a) {
      std::vector<int> ca = coeffs(a);
      {
        std::vector<int> cn(k_);
        for (int i = 0; i < k_; ++i) cn[i] = (p_ - ca[i]) % p_;
        neg_[a] = from_coeffs(cn);
      }
      for (int b = 0; b < q_; ++b) {
        std::vector<int> cb = coeffs(b);
        std::vector<int> cs(k_);
        for (int i = 0; i < k_; ++i) cs[i] = (ca[i] + cb[i]) % p_;
        add_[static_cast<size_t>(a) * q_ + b] = from_coeffs(cs);
        std::vector<int> prod(2 * k_ - 1, 0);
        for (int i = 0; i < k_; ++i)
          for (int j = 0; j < k_; ++j)
            prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p_;
        mul_[static_cast<size_t>(a) * q_ + b] =
            from_coeffs(poly_mod(prod, modulus_, p_));
      }
    }
    for (int a = 1; a < q_; ++a)
      for (int b = 1; b < q_; ++b)
        if (mul_[static_cast<size_t>(a) * q_ + b] == 1) { inv_[a] = b; break; }
  }

  int p_, k_, q_;
  std::vector<int> modulus_;
  std::vector<int> add_, mul_, neg_, inv_;
};

inline Field field_make(int p, int k) { return Field(p, k); }

inline void check_same_field(const Field& a, const Field& b) {
  if (!a.same(b)) throw std::invalid_argument("field: mixed-field operands");
}

inline FieldElement FieldElement::operator+(const FieldElement& o) const {
  check_same_field(*f_, *o.f_);
  return FieldElement(f_, f_->add(v_, o.v_));
}
inline FieldElement FieldElement::operator-(const FieldElement& o) const {
  check_same_field(*f_, *o.f_);
  return FieldElement(f_, f_->sub(v_, o.v_));
}
inline FieldElement FieldElement::operator-() const {
  return FieldElement(f_, f_->neg(v_));
}
inline FieldElement FieldElement::operator*(const FieldElement& o) const {
  check_same_field(*f_, *o.f_);
  return FieldElement(f_, f_->mul(v_, o.v_));
}
inline FieldElement FieldElement::inv() const {
  return FieldElement(f_, f_->inv(v_));
}
inline FieldElement FieldElement::pow(long long e) const {
  return FieldElement(f_, f_->pow(v_, e));
}
inline FieldElement FieldElement::frobenius(int i) const {
  return FieldElement(f_, f_->frobenius(v_, i));
}
inline std::vector<int> FieldElement::coeffs() const { return f_->coeffs(v_); }

}  // namespace trigeom
