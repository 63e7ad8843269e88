#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gtg {

// Signed arbitrary-precision integer with an inline fast path for values that
// fit in int64. Polynomial coefficients of trace computations stay on the
// inline path for every word within the search bounds; the limb representation
// only kicks in for integer evaluation at large arguments or oversized words.
class BigInt {
 public:
  BigInt() = default;
  BigInt(long long v) : small_(v) {}  // NOLINT: implicit by design
  BigInt(long v) : small_(v) {}       // NOLINT
  BigInt(int v) : small_(v) {}        // NOLINT

  bool is_zero() const { return limbs_.empty() && small_ == 0; }
  int sign() const;

  bool fits_int64() const { return limbs_.empty(); }
  int64_t to_int64() const;        // requires fits_int64()
  uint64_t to_uint64_wrap() const; // value mod 2^64, two's complement

  BigInt& operator+=(const BigInt& o);
  BigInt& operator-=(const BigInt& o);
  BigInt& operator*=(const BigInt& o);
  BigInt operator-() const;

  friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
  friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
  friend BigInt operator*(BigInt a, const BigInt& b) { return a *= b; }

  bool operator==(const BigInt& o) const;
  bool operator!=(const BigInt& o) const { return !(*this == o); }
  bool operator<(const BigInt& o) const { return cmp(o) < 0; }
  bool operator>(const BigInt& o) const { return cmp(o) > 0; }
  bool operator<=(const BigInt& o) const { return cmp(o) <= 0; }
  bool operator>=(const BigInt& o) const { return cmp(o) >= 0; }

  // -1, 0, +1 against another value
  int cmp(const BigInt& o) const;

  std::string to_string() const;
  static BigInt from_string(const std::string& s);

 private:
  // limbs_ empty: value == small_. Otherwise sign_*sum(limbs_[i]*2^(64i)),
  // top limb nonzero, and the value does not fit in int64 (normalized).
  int64_t small_ = 0;
  int sign_ = 0;
  std::vector<uint64_t> limbs_;

  void promote();
  void normalize();
  static int cmp_mag(const std::vector<uint64_t>& a, const std::vector<uint64_t>& b);
  static void add_mag(std::vector<uint64_t>& a, const std::vector<uint64_t>& b);
  // requires |a| >= |b|
  static void sub_mag(std::vector<uint64_t>& a, const std::vector<uint64_t>& b);
  static std::vector<uint64_t> mul_mag(const std::vector<uint64_t>& a,
                                       const std::vector<uint64_t>& b);
  void add_signed(int osign, const std::vector<uint64_t>& omag);
};

}  // namespace gtg
