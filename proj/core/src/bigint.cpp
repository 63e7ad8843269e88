#include "gtg/bigint.hpp"

#include <algorithm>
#include <stdexcept>

namespace gtg {

namespace {

std::vector<uint64_t> mag_of_int64(int64_t v) {
  // magnitude of v; handles INT64_MIN
  uint64_t m = v < 0 ? ~static_cast<uint64_t>(v) + 1 : static_cast<uint64_t>(v);
  return {m};
}

}  // namespace

int BigInt::sign() const {
  if (!limbs_.empty()) return sign_;
  return small_ < 0 ? -1 : (small_ > 0 ? 1 : 0);
}

int64_t BigInt::to_int64() const {
  if (!limbs_.empty()) throw std::overflow_error("BigInt: value exceeds int64");
  return small_;
}

uint64_t BigInt::to_uint64_wrap() const {
  if (limbs_.empty()) return static_cast<uint64_t>(small_);
  uint64_t low = limbs_[0];
  return sign_ < 0 ? ~low + 1 : low;
}

void BigInt::promote() {
  if (!limbs_.empty()) return;
  sign_ = small_ < 0 ? -1 : 1;
  limbs_ = mag_of_int64(small_);
  small_ = 0;
}

void BigInt::normalize() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
  if (limbs_.empty()) {
    small_ = 0;
    sign_ = 0;
    return;
  }
  if (limbs_.size() == 1) {
    uint64_t m = limbs_[0];
    if (sign_ > 0 && m <= static_cast<uint64_t>(INT64_MAX)) {
      small_ = static_cast<int64_t>(m);
      limbs_.clear();
      sign_ = 0;
    } else if (sign_ < 0 && m <= static_cast<uint64_t>(INT64_MAX) + 1) {
      small_ = static_cast<int64_t>(~m + 1);
      limbs_.clear();
      sign_ = 0;
    }
  }
}

int BigInt::cmp_mag(const std::vector<uint64_t>& a, const std::vector<uint64_t>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

void BigInt::add_mag(std::vector<uint64_t>& a, const std::vector<uint64_t>& b) {
  if (b.size() > a.size()) a.resize(b.size(), 0);
  unsigned char carry = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    uint64_t bi = i < b.size() ? b[i] : 0;
    if (bi == 0 && carry == 0) continue;
    uint64_t s = a[i] + bi;
    unsigned char c1 = s < bi;
    uint64_t s2 = s + carry;
    unsigned char c2 = s2 < s;
    a[i] = s2;
    carry = static_cast<unsigned char>(c1 | c2);
  }
  if (carry) a.push_back(1);
}

void BigInt::sub_mag(std::vector<uint64_t>& a, const std::vector<uint64_t>& b) {
  unsigned char borrow = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    uint64_t bi = i < b.size() ? b[i] : 0;
    if (bi == 0 && borrow == 0) continue;
    uint64_t d = a[i] - bi;
    unsigned char b1 = a[i] < bi;
    uint64_t d2 = d - borrow;
    unsigned char b2 = d < static_cast<uint64_t>(borrow);
    a[i] = d2;
    borrow = static_cast<unsigned char>(b1 | b2);
  }
}

std::vector<uint64_t> BigInt::mul_mag(const std::vector<uint64_t>& a,
                                      const std::vector<uint64_t>& b) {
  std::vector<uint64_t> r(a.size() + b.size(), 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    uint64_t carry = 0;
    for (size_t j = 0; j < b.size(); ++j) {
      unsigned __int128 t =
          static_cast<unsigned __int128>(a[i]) * b[j] + r[i + j] + carry;
      r[i + j] = static_cast<uint64_t>(t);
      carry = static_cast<uint64_t>(t >> 64);
    }
    size_t k = i + b.size();
    while (carry) {
      unsigned __int128 t = static_cast<unsigned __int128>(r[k]) + carry;
      r[k] = static_cast<uint64_t>(t);
      carry = static_cast<uint64_t>(t >> 64);
      ++k;
    }
  }
  return r;
}

void BigInt::add_signed(int osign, const std::vector<uint64_t>& omag) {
  promote();
  if (osign == 0) {
    normalize();
    return;
  }
  if (sign_ == osign) {
    add_mag(limbs_, omag);
  } else {
    int c = cmp_mag(limbs_, omag);
    if (c >= 0) {
      sub_mag(limbs_, omag);
    } else {
      std::vector<uint64_t> tmp = omag;
      sub_mag(tmp, limbs_);
      limbs_ = std::move(tmp);
      sign_ = osign;
    }
  }
  normalize();
}

BigInt& BigInt::operator+=(const BigInt& o) {
  if (limbs_.empty() && o.limbs_.empty()) {
    int64_t r;
    if (!__builtin_add_overflow(small_, o.small_, &r)) {
      small_ = r;
      return *this;
    }
  }
  if (o.limbs_.empty()) {
    add_signed(o.small_ < 0 ? -1 : (o.small_ > 0 ? 1 : 0), mag_of_int64(o.small_));
  } else {
    add_signed(o.sign_, o.limbs_);
  }
  return *this;
}

BigInt& BigInt::operator-=(const BigInt& o) {
  if (limbs_.empty() && o.limbs_.empty()) {
    int64_t r;
    if (!__builtin_sub_overflow(small_, o.small_, &r)) {
      small_ = r;
      return *this;
    }
  }
  if (o.limbs_.empty()) {
    add_signed(o.small_ < 0 ? 1 : (o.small_ > 0 ? -1 : 0), mag_of_int64(o.small_));
  } else {
    add_signed(-o.sign_, o.limbs_);
  }
  return *this;
}

BigInt& BigInt::operator*=(const BigInt& o) {
  if (limbs_.empty() && o.limbs_.empty()) {
    int64_t r;
    if (!__builtin_mul_overflow(small_, o.small_, &r)) {
      small_ = r;
      return *this;
    }
  }
  int s1 = sign();
  int s2 = o.sign();
  if (s1 == 0 || s2 == 0) {
    *this = BigInt();
    return *this;
  }
  std::vector<uint64_t> m1 = limbs_.empty() ? mag_of_int64(small_) : limbs_;
  std::vector<uint64_t> m2 = o.limbs_.empty() ? mag_of_int64(o.small_) : o.limbs_;
  limbs_ = mul_mag(m1, m2);
  sign_ = s1 * s2;
  small_ = 0;
  normalize();
  return *this;
}

BigInt BigInt::operator-() const {
  BigInt r = *this;
  if (r.limbs_.empty()) {
    if (r.small_ != INT64_MIN) {
      r.small_ = -r.small_;
      return r;
    }
    r.promote();
  }
  r.sign_ = -r.sign_;
  r.normalize();
  return r;
}

bool BigInt::operator==(const BigInt& o) const {
  // both normalized, so representations are canonical
  return small_ == o.small_ && sign_ == o.sign_ && limbs_ == o.limbs_;
}

int BigInt::cmp(const BigInt& o) const {
  int s1 = sign();
  int s2 = o.sign();
  if (s1 != s2) return s1 < s2 ? -1 : 1;
  if (s1 == 0) return 0;
  if (limbs_.empty() && o.limbs_.empty()) {
    return small_ < o.small_ ? -1 : (small_ > o.small_ ? 1 : 0);
  }
  std::vector<uint64_t> m1 = limbs_.empty() ? mag_of_int64(small_) : limbs_;
  std::vector<uint64_t> m2 = o.limbs_.empty() ? mag_of_int64(o.small_) : o.limbs_;
  int c = cmp_mag(m1, m2);
  return s1 > 0 ? c : -c;
}

std::string BigInt::to_string() const {
  if (limbs_.empty()) return std::to_string(small_);
  constexpr uint64_t kChunk = 1000000000000000000ull;  // 10^18
  std::vector<uint64_t> mag = limbs_;
  std::vector<uint64_t> parts;
  while (!mag.empty()) {
    unsigned __int128 rem = 0;
    for (size_t i = mag.size(); i-- > 0;) {
      unsigned __int128 cur = (rem << 64) | mag[i];
      mag[i] = static_cast<uint64_t>(cur / kChunk);
      rem = cur % kChunk;
    }
    while (!mag.empty() && mag.back() == 0) mag.pop_back();
    parts.push_back(static_cast<uint64_t>(rem));
  }
  std::string out = sign_ < 0 ? "-" : "";
  out += std::to_string(parts.back());
  for (size_t i = parts.size() - 1; i-- > 0;) {
    std::string p = std::to_string(parts[i]);
    out += std::string(18 - p.size(), '0') + p;
  }
  return out;
}

BigInt BigInt::from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("BigInt: empty string");
  size_t i = 0;
  bool neg = false;
  if (s[0] == '-' || s[0] == '+') {
    neg = s[0] == '-';
    i = 1;
  }
  if (i == s.size()) throw std::invalid_argument("BigInt: no digits");
  BigInt r;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("BigInt: bad digit");
    r *= 10;
    r += s[i] - '0';
  }
  return neg ? -r : r;
}

}  // namespace gtg
