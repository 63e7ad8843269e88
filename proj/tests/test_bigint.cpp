#include <doctest.h>

#include <cstdint>
#include <random>

#include "gtg/bigint.hpp"

using gtg::BigInt;

TEST_CASE("small arithmetic stays inline") {
  BigInt a(7), b(-3);
  CHECK((a + b).to_int64() == 4);
  CHECK((a - b).to_int64() == 10);
  CHECK((a * b).to_int64() == -21);
  CHECK((-a).to_int64() == -7);
  CHECK(BigInt(0).is_zero());
  CHECK(a.sign() == 1);
  CHECK(b.sign() == -1);
  CHECK(a > b);
  CHECK(b < a);
  CHECK(a == BigInt(7));
}

TEST_CASE("promotion across the int64 boundary") {
  BigInt x(INT64_MAX);
  BigInt y = x + 1;
  CHECK(!y.fits_int64());
  CHECK(y.to_string() == "9223372036854775808");
  CHECK((y - 1) == x);
  CHECK((y - 1).fits_int64());

  BigInt z(INT64_MIN);
  CHECK(z.to_string() == "-9223372036854775808");
  CHECK((-z).to_string() == "9223372036854775808");
  CHECK((z - 1).to_string() == "-9223372036854775809");
}

TEST_CASE("powers of two round trip through strings") {
  BigInt v(1);
  for (int i = 0; i < 200; ++i) v *= 2;
  CHECK(v.to_string() == "1606938044258990275541962092341162602522202993782792835301376");
  CHECK(BigInt::from_string(v.to_string()) == v);
  CHECK(BigInt::from_string("-123") == BigInt(-123));
}

TEST_CASE("random ops agree with __int128 reference") {
  std::mt19937_64 rng(12345);
  for (int iter = 0; iter < 2000; ++iter) {
    int64_t a = static_cast<int64_t>(rng()) >> (rng() % 32);
    int64_t b = static_cast<int64_t>(rng()) >> (rng() % 32);
    __int128 s = static_cast<__int128>(a) + b;
    __int128 d = static_cast<__int128>(a) - b;
    __int128 p = static_cast<__int128>(a) * b;
    auto to_str = [](__int128 v) {
      if (v == 0) return std::string("0");
      bool neg = v < 0;
      unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
      std::string out;
      while (u) {
        out.insert(out.begin(), static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
      }
      return neg ? "-" + out : out;
    };
    CHECK((BigInt(a) + BigInt(b)).to_string() == to_str(s));
    CHECK((BigInt(a) - BigInt(b)).to_string() == to_str(d));
    CHECK((BigInt(a) * BigInt(b)).to_string() == to_str(p));
    CHECK((BigInt(a).cmp(BigInt(b))) == (a < b ? -1 : (a > b ? 1 : 0)));
  }
}

TEST_CASE("wrap to uint64") {
  CHECK(BigInt(5).to_uint64_wrap() == 5u);
  CHECK(BigInt(-1).to_uint64_wrap() == ~0ull);
  BigInt big = BigInt(INT64_MAX) * 4 + 3;  // 2^65 - 1
  CHECK(big.to_string() == "36893488147419103231");
  CHECK(big.to_uint64_wrap() == ~0ull);
}
