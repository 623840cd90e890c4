#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "lieprobe/error.hpp"

namespace lieprobe {

using Elem = std::uint8_t;

/// Arithmetic of a finite field F_q, q = p^e <= 9, by lookup tables.
///
/// Elements are encoded as integers 0..q-1 whose base-p digits are the
/// coefficients of a polynomial in x (lowest degree first) reduced modulo
/// the Conway polynomial for (p, e). So 0 and 1 are the field's zero and
/// one, and for e > 1 the value p is the residue class of x.
class FieldTable {
 public:
  static constexpr int kMaxOrder = 9;

  FieldTable(int p, int e) : p_(p), e_(e) {
    if (p < 2 || !is_prime(p)) {
      throw Error(ErrorCode::NonPrimeCharacteristic, "characteristic " + std::to_string(p) + " is not prime");
    }
    if (e < 1) throw Error(ErrorCode::OrderTooLarge, "extension degree must be positive");
    long long q = 1;
    for (int i = 0; i < e; ++i) {
      q *= p;
      if (q > kMaxOrder) {
        throw Error(ErrorCode::OrderTooLarge, "field order exceeds " + std::to_string(kMaxOrder));
      }
    }
    q_ = static_cast<int>(q);
    modulus_ = conway(p, e);
    build_tables();
    verify_axioms();
    primitive_ = find_primitive();
  }

  /// Field of order q (q must be a prime power <= 9).
  static FieldTable of_order(int q) {
    for (int p = 2; p <= q; ++p) {
      if (q % p != 0) continue;
      int e = 0;
      int r = q;
      while (r % p == 0) {
        r /= p;
        ++e;
      }
      if (r != 1) break;
      return FieldTable(p, e);
    }
    throw Error(ErrorCode::NonPrimeCharacteristic, std::to_string(q) + " is not a prime power");
  }

  int p() const { return p_; }
  int e() const { return e_; }
  int q() const { return q_; }
  Elem primitive_element() const { return primitive_; }

  /// Coefficients (lowest degree first, monic) of the modulus; empty for e = 1.
  const std::vector<int>& modulus() const { return modulus_; }

  Elem add(Elem a, Elem b) const { return add_[a * q_ + b]; }
  Elem sub(Elem a, Elem b) const { return add_[a * q_ + neg_[b]]; }
  Elem mul(Elem a, Elem b) const { return mul_[a * q_ + b]; }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem inv(Elem a) const {
    if (a == 0) throw Error(ErrorCode::InvalidParameters, "inverse of zero");
    return inv_[a];
  }

  bool operator==(const FieldTable& other) const { return p_ == other.p_ && e_ == other.e_; }

 private:
  static bool is_prime(int n) {
    for (int d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }

  static std::vector<int> conway(int p, int e) {
    if (e == 1) return {};
    if (p == 2 && e == 2) return {1, 1, 1};     // x^2 + x + 1
    if (p == 2 && e == 3) return {1, 1, 0, 1};  // x^3 + x + 1
    if (p == 3 && e == 2) return {2, 2, 1};     // x^2 + 2x + 2
    throw Error(ErrorCode::OrderTooLarge, "no modulus for this order");
  }

  std::vector<int> digits(int a) const {
    std::vector<int> d(e_);
    for (int i = 0; i < e_; ++i) {
      d[i] = a % p_;
      a /= p_;
    }
    return d;
  }

  int encode(const std::vector<int>& d) const {
    int a = 0;
    for (int i = e_ - 1; i >= 0; --i) a = a * p_ + d[i];
    return a;
  }

  void build_tables() {
    add_.assign(q_ * q_, 0);
    mul_.assign(q_ * q_, 0);
    neg_.assign(q_, 0);
    inv_.assign(q_, 0);
    for (int a = 0; a < q_; ++a) {
      auto da = digits(a);
      for (int b = 0; b < q_; ++b) {
        auto db = digits(b);
        std::vector<int> s(e_);
        for (int i = 0; i < e_; ++i) s[i] = (da[i] + db[i]) % p_;
        add_[a * q_ + b] = static_cast<Elem>(encode(s));

        std::vector<int> prod(2 * e_, 0);
        for (int i = 0; i < e_; ++i)
          for (int j = 0; j < e_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
        // Reduce degrees >= e using x^e = -(m_0 + ... + m_{e-1} x^{e-1}).
        for (int deg = 2 * e_ - 1; deg >= e_; --deg) {
          int c = prod[deg];
          if (c == 0) continue;
          prod[deg] = 0;
          for (int i = 0; i < e_; ++i) {
            prod[deg - e_ + i] = ((prod[deg - e_ + i] - c * modulus_[i]) % p_ + p_) % p_;
          }
        }
        prod.resize(e_);
        mul_[a * q_ + b] = static_cast<Elem>(encode(prod));
      }
    }
    for (int a = 0; a < q_; ++a) {
      for (int b = 0; b < q_; ++b) {
        if (add_[a * q_ + b] == 0) neg_[a] = static_cast<Elem>(b);
        if (mul_[a * q_ + b] == 1) inv_[a] = static_cast<Elem>(b);
      }
    }
  }

  void verify_axioms() const {
    for (int a = 0; a < q_; ++a) {
      if (add(a, 0) != a || mul(a, 1) != a) fail("identity");
      if (add(a, neg_[a]) != 0) fail("additive inverse");
      if (a != 0 && mul(a, inv_[a]) != 1) fail("multiplicative inverse");
      for (int b = 0; b < q_; ++b) {
        if (add(a, b) != add(b, a) || mul(a, b) != mul(b, a)) fail("commutativity");
        for (int c = 0; c < q_; ++c) {
          if (add(add(a, b), c) != add(a, add(b, c))) fail("additive associativity");
          if (mul(mul(a, b), c) != mul(a, mul(b, c))) fail("multiplicative associativity");
          if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c))) fail("distributivity");
        }
      }
    }
  }

  [[noreturn]] static void fail(const char* what) {
    throw Error(ErrorCode::InvalidParameters, std::string("field axiom violated: ") + what);
  }

  Elem find_primitive() const {
    if (q_ == 2) return 1;
    int start = e_ == 1 ? 2 : p_;
    for (int g = start; g < q_; ++g) {
      int x = 1;
      int order = 0;
      do {
        x = mul(static_cast<Elem>(x), static_cast<Elem>(g));
        ++order;
      } while (x != 1);
      if (order == q_ - 1) return static_cast<Elem>(g);
    }
    fail("no primitive element");
  }

  int p_;
  int e_;
  int q_ = 0;
  Elem primitive_ = 1;
  std::vector<int> modulus_;
  std::vector<Elem> add_, mul_, neg_, inv_;
};

}  // namespace lieprobe
