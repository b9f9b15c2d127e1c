#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <vector>

#include "trigeom/gf.hpp"

using trigeom::Field;
using trigeom::FieldElement;
using trigeom::field_make;

namespace {

// Independent irreducibility oracle: a monic polynomial over GF(p) is
// reducible iff it equals g*h for monic g,h of positive degree.  Enumerates
// all factor pairs directly, no shared code with the library.
bool oracle_irreducible(const std::vector<int>& f, int p) {
  int k = static_cast<int>(f.size()) - 1;
  auto mul = [&](const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
      for (size_t j = 0; j < b.size(); ++j)
        c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    return c;
  };
  auto enumerate = [&](int d) {
    std::vector<std::vector<int>> out;
    long long n = 1;
    for (int i = 0; i < d; ++i) n *= p;
    for (long long t = 0; t < n; ++t) {
      std::vector<int> g(d + 1);
      long long v = t;
      for (int i = 0; i < d; ++i) { g[i] = static_cast<int>(v % p); v /= p; }
      g[d] = 1;
      out.push_back(g);
    }
    return out;
  };
  for (int dg = 1; dg < k; ++dg) {
    for (const auto& g : enumerate(dg))
      for (const auto& h : enumerate(k - dg))
        if (mul(g, h) == f) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("prime power decomposition") {
  CHECK(trigeom::prime_power_decompose(2) == std::pair<int, int>(2, 1));
  CHECK(trigeom::prime_power_decompose(4) == std::pair<int, int>(2, 2));
  CHECK(trigeom::prime_power_decompose(9) == std::pair<int, int>(3, 2));
  CHECK(trigeom::prime_power_decompose(16) == std::pair<int, int>(2, 4));
  CHECK(trigeom::prime_power_decompose(25) == std::pair<int, int>(5, 2));
  CHECK(trigeom::prime_power_decompose(6) == std::pair<int, int>(0, 0));
  CHECK(trigeom::prime_power_decompose(12) == std::pair<int, int>(0, 0));
  CHECK(trigeom::prime_power_decompose(1) == std::pair<int, int>(0, 0));
}

TEST_CASE("field construction picks the smallest irreducible modulus") {
  CHECK(Field(2, 1).modulus() == std::vector<int>{0, 1});  // x
  CHECK(Field(3, 1).modulus() == std::vector<int>{0, 1});
  // GF(4): the only irreducible monic quadratic over GF(2) is x^2+x+1.
  CHECK(Field(2, 2).modulus() == std::vector<int>{1, 1, 1});
  // Frozen from the oracle: first irreducible with coefficients compared
  // low degree first.
  CHECK(Field(2, 3).modulus() == std::vector<int>{1, 0, 1, 1});    // x^3+x^2+1
  CHECK(Field(2, 4).modulus() == std::vector<int>{1, 0, 0, 1, 1}); // x^4+x^3+1
  CHECK(Field(3, 2).modulus() == std::vector<int>{1, 0, 1});       // x^2+1
  CHECK(Field(5, 2).modulus() == std::vector<int>{1, 1, 1});       // x^2+x+1

  for (auto [p, k] : {std::pair<int, int>{2, 2}, {2, 3}, {2, 4}, {3, 2}, {5, 2}}) {
    Field f(p, k);
    INFO("p=" << p << " k=" << k);
    CHECK(oracle_irreducible(f.modulus(), p));
    // Nothing lexicographically smaller is irreducible.  The counter treats
    // c0 as its most significant digit, mirroring the comparison order.
    std::vector<int> mod = f.modulus();
    mod.pop_back();  // drop leading 1
    long long modidx = 0;
    for (int i = 0; i < k; ++i) modidx = modidx * p + mod[i];
    for (long long t = 0; t < modidx; ++t) {
      std::vector<int> g(k + 1);
      long long v = t;
      for (int i = k - 1; i >= 0; --i) { g[i] = static_cast<int>(v % p); v /= p; }
      g[k] = 1;
      CHECK_FALSE(oracle_irreducible(g, p));
    }
  }
}

TEST_CASE("field rejects bad parameters") {
  CHECK_THROWS_AS(Field(4, 1), std::invalid_argument);
  CHECK_THROWS_AS(Field(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(Field(0, 2), std::invalid_argument);
  CHECK_THROWS_AS(Field(2, 0), std::invalid_argument);
}

TEST_CASE("basic arithmetic examples") {
  Field f3(3, 1);
  CHECK(f3.add(2, 2) == 1);  // 2+2 = 1 mod 3
  Field f4(2, 2);
  // In GF(4) with modulus x^2+x+1: index 2 = x, and x*x = x+1 = index 3.
  CHECK(f4.mul(2, 2) == 3);
  CHECK(f4.inv(1) == 1);
  CHECK(f4.frobenius(2, 1) == 3);  // x^2 = x+1
  CHECK(f4.frobenius(2, 0) == 2);
  CHECK(f3.frobenius(2, 0) == 2);
  CHECK_THROWS_AS(f4.inv(0), std::domain_error);
}

TEST_CASE("element wrapper enforces matching fields") {
  Field f4(2, 2);
  Field f3(3, 1);
  FieldElement a = f4.elem(2), b = f4.elem(3);
  CHECK((a * b).idx() == 1);  // x*(x+1) = x^2+x = 1
  CHECK((a + a).is_zero());
  CHECK(a.coeffs() == std::vector<int>{0, 1});
  CHECK_THROWS_AS(a + f3.elem(1), std::invalid_argument);
  CHECK_THROWS_AS(a * f3.elem(2), std::invalid_argument);
}

TEST_CASE("field axioms hold exhaustively up to q = 256") {
  for (auto [p, k] : {std::pair<int, int>{2, 1}, {2, 2}, {2, 3}, {2, 4}, {2, 8},
                      {3, 1}, {3, 2}, {5, 1}, {5, 2}, {7, 1}, {13, 1}}) {
    Field f(p, k);
    INFO("GF(" << f.q() << ")");
    int q = f.q();
    for (int a = 0; a < q; ++a) {
      CHECK(f.add(a, f.neg(a)) == 0);
      if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
      CHECK(f.mul(a, 1) == a);
      CHECK(f.add(a, 0) == a);
    }
    // Spot associativity/distributivity on a grid (full loop is q^3).
    for (int a = 0; a < q; a += 3)
      for (int b = 0; b < q; b += 5)
        for (int c = 0; c < q; c += 7) {
          CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
          CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
        }
  }
}

TEST_CASE("frobenius iterated k times is the identity") {
  for (auto [p, k] : {std::pair<int, int>{2, 2}, {2, 3}, {2, 4}, {3, 2}, {5, 2}}) {
    Field f(p, k);
    for (int a = 0; a < f.q(); ++a) {
      int x = a;
      for (int i = 0; i < k; ++i) x = f.frobenius(x, 1);
      CHECK(x == a);
      CHECK(f.frobenius(a, k) == a);
      // Frobenius is a field automorphism.
      for (int b = 0; b < f.q(); b += 3) {
        CHECK(f.frobenius(f.mul(a, b), 1) == f.mul(f.frobenius(a, 1), f.frobenius(b, 1)));
        CHECK(f.frobenius(f.add(a, b), 1) == f.add(f.frobenius(a, 1), f.frobenius(b, 1)));
      }
    }
  }
}

TEST_CASE("multiplicative group is cyclic for q <= 64") {
  for (auto [p, k] : {std::pair<int, int>{2, 1}, {2, 2}, {2, 3}, {2, 4}, {2, 5},
                      {2, 6}, {3, 1}, {3, 2}, {3, 3}, {5, 1}, {5, 2}, {7, 2},
                      {61, 1}}) {
    Field f(p, k);
    INFO("GF(" << f.q() << ")");
    bool found = false;
    for (int g = 1; g < f.q() && !found; ++g) {
      std::set<int> powers;
      int x = 1;
      do {
        powers.insert(x);
        x = f.mul(x, g);
      } while (x != 1);
      if (static_cast<int>(powers.size()) == f.q() - 1) found = true;
    }
    CHECK(found);
  }
}
