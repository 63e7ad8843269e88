#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "gtg/bigint.hpp"
#include "gtg/word.hpp"

namespace gtg {

// Dense integer polynomial, constant term first, no trailing zeros
// (the zero polynomial is the empty coefficient list).
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }
  static IntPoly constant(BigInt v);
  static IntPoly from_int_coeffs(const std::vector<long long>& coeffs);

  const std::vector<BigInt>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const { return !c_.empty() && c_.back() == BigInt(1); }
  const BigInt& coeff(size_t i) const;  // 0 beyond degree

  IntPoly operator+(const IntPoly& o) const;
  IntPoly operator-(const IntPoly& o) const;
  IntPoly operator*(const IntPoly& o) const;
  IntPoly operator-() const;
  bool operator==(const IntPoly& o) const { return c_ == o.c_; }
  bool operator!=(const IntPoly& o) const { return c_ != o.c_; }
  bool operator<(const IntPoly& o) const;  // degree, then coefficients from top

  BigInt eval(const BigInt& x) const;
  double eval_double(double x) const;
  uint64_t eval_wrap(uint64_t x) const;  // value mod 2^64

  IntPoly pow(unsigned e) const;

  // Exact division by a monic divisor; nullopt when a nonzero remainder occurs.
  std::optional<IntPoly> divide_exact(const IntPoly& divisor) const;

  std::string to_string() const;  // e.g. "l^4-3*l^2+1"

 private:
  void trim();
  std::vector<BigInt> c_;
};

// Element of Z[w][l] with w^2 = w - 1, i.e. w a primitive sixth root of unity.
// Exact carrier for the generator matrices whose traces are 0 and 1.
struct EisPoly {
  IntPoly re;
  IntPoly om;

  EisPoly operator+(const EisPoly& o) const { return {re + o.re, om + o.om}; }
  EisPoly operator-(const EisPoly& o) const { return {re - o.re, om - o.om}; }
  // (a+bw)(c+dw) = (ac - bd) + (ad + bc + bd)w
  EisPoly operator*(const EisPoly& o) const;
  bool operator==(const EisPoly& o) const { return re == o.re && om == o.om; }
};

struct Mat2 {
  std::array<EisPoly, 4> e;  // row-major

  static Mat2 identity();
  Mat2 operator*(const Mat2& o) const;
  EisPoly trace() const { return e[0] + e[3]; }
  EisPoly det() const;
};

// Fixed SL(2) generator images; consistency (trace, det, tr(XY) = l) is
// checked once at startup and on first use.
Mat2 generator_matrix(Case c, Factor f, int exponent);

// Target shape of a trace polynomial:
//   332: l^a (l-1)^b (l^2-l-1)^c
//   232: (l^2-1)^a (l^2-2)^b (l^4-3l^2+1)^c
// with a,b <= 1 and c <= 3(a+b+1).
struct TargetForm {
  Case kase = Case::C232;
  int a = 0;
  int b = 0;
  int c = 0;

  int degree() const {
    int d = a + b + 2 * c;
    return kase == Case::C332 ? d : 2 * d;
  }
  bool operator==(const TargetForm& o) const {
    return kase == o.kase && a == o.a && b == o.b && c == o.c;
  }
  bool operator<(const TargetForm& o) const;
  std::string factored_string() const;  // e.g. "l*(l^2-l-1)^3"
  std::string abc_string() const;       // "a,b,c"
};

// Trace of W(X,Y) as a polynomial in l = tr(XY); monic of degree pair_length
// with integer coefficients. Internal consistency (vanishing w-component,
// monic, degree) is verified and violations abort with std::logic_error.
IntPoly trace_polynomial(const Word& w);

// Same matrix product with l fixed to an integer, over pairs of
// arbitrary-precision integers; no polynomial arithmetic involved.
BigInt eval_trace_int(const Word& w, long long lambda0);

IntPoly expand_target(const TargetForm& f);

// Exact factorization against the case's target form by repeated exact
// division; nullopt when the polynomial is not of the form (including
// multiplicities above the a,b <= 1, c <= 3(a+b+1) bounds).
std::optional<TargetForm> match_target(const IntPoly& p, Case c);

// tau_Z(l) = (-1)^k tau_W(2 - l^2) for Z(u,v) = W(uvu,v).
IntPoly transfer_332_to_232(const IntPoly& p, int k);

// (-1)^k p(1-l): the effect of y -> y^2 on a (3,3) trace polynomial of a
// length-k word. Swaps the roles of the l and (l-1) factors.
IntPoly twist_332(const IntPoly& p, int k);

// Coefficient of l^(k-2): -(k-m) for a list with m pairs summing to k.
long long second_coefficient(const PairList& list, int k);

// All valid forms for the case, excluding (0,0,0).
std::vector<TargetForm> target_forms(Case c);

}  // namespace gtg
