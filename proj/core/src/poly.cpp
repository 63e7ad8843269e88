#include "gtg/poly.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

#include "trace_kernel.hpp"

namespace gtg {

// ---------------------------------------------------------------------------
// IntPoly

IntPoly IntPoly::constant(BigInt v) {
  IntPoly p;
  if (!v.is_zero()) p.c_.push_back(std::move(v));
  return p;
}

IntPoly IntPoly::from_int_coeffs(const std::vector<long long>& coeffs) {
  std::vector<BigInt> c;
  c.reserve(coeffs.size());
  for (long long v : coeffs) c.push_back(BigInt(static_cast<int64_t>(v)));
  return IntPoly(std::move(c));
}

void IntPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const BigInt& IntPoly::coeff(size_t i) const {
  static const BigInt kZero(0);
  return i < c_.size() ? c_[i] : kZero;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
  std::vector<BigInt> r(std::max(c_.size(), o.c_.size()));
  for (size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) + o.coeff(i);
  return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
  std::vector<BigInt> r(std::max(c_.size(), o.c_.size()));
  for (size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) - o.coeff(i);
  return IntPoly(std::move(r));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
  if (is_zero() || o.is_zero()) return IntPoly();
  std::vector<BigInt> r(c_.size() + o.c_.size() - 1, BigInt(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) {
      r[i + j] += c_[i] * o.c_[j];
    }
  }
  return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-() const {
  std::vector<BigInt> r;
  r.reserve(c_.size());
  for (const auto& v : c_) r.push_back(-v);
  return IntPoly(std::move(r));
}

bool IntPoly::operator<(const IntPoly& o) const {
  if (c_.size() != o.c_.size()) return c_.size() < o.c_.size();
  for (size_t i = c_.size(); i-- > 0;) {
    int c = c_[i].cmp(o.c_[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

BigInt IntPoly::eval(const BigInt& x) const {
  BigInt r(0);
  for (size_t i = c_.size(); i-- > 0;) {
    r *= x;
    r += c_[i];
  }
  return r;
}

double IntPoly::eval_double(double x) const {
  double r = 0;
  for (size_t i = c_.size(); i-- > 0;) {
    // coefficients in practice fit int64; fall back via string otherwise
    double c = c_[i].fits_int64() ? static_cast<double>(c_[i].to_int64())
                                  : std::stod(c_[i].to_string());
    r = r * x + c;
  }
  return r;
}

uint64_t IntPoly::eval_wrap(uint64_t x) const {
  uint64_t r = 0;
  for (size_t i = c_.size(); i-- > 0;) {
    r = r * x + c_[i].to_uint64_wrap();
  }
  return r;
}

IntPoly IntPoly::pow(unsigned e) const {
  IntPoly r = IntPoly::constant(1);
  for (unsigned i = 0; i < e; ++i) r = r * *this;
  return r;
}

std::optional<IntPoly> IntPoly::divide_exact(const IntPoly& d) const {
  if (d.is_zero() || !d.is_monic()) throw std::invalid_argument("divisor must be monic");
  if (is_zero()) return IntPoly();
  if (degree() < d.degree()) return std::nullopt;
  std::vector<BigInt> rem = c_;
  int dn = d.degree();
  std::vector<BigInt> q(static_cast<size_t>(degree() - dn) + 1, BigInt(0));
  for (int i = degree() - dn; i >= 0; --i) {
    BigInt f = rem[static_cast<size_t>(i + dn)];
    if (f.is_zero()) continue;
    q[static_cast<size_t>(i)] = f;
    for (int j = 0; j <= dn; ++j) {
      rem[static_cast<size_t>(i + j)] -= f * d.c_[static_cast<size_t>(j)];
    }
  }
  for (const auto& v : rem) {
    if (!v.is_zero()) return std::nullopt;
  }
  return IntPoly(std::move(q));
}

std::string IntPoly::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  for (size_t i = c_.size(); i-- > 0;) {
    const BigInt& cf = c_[i];
    if (cf.is_zero()) continue;
    bool neg = cf.sign() < 0;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? "-" : "+";
    }
    BigInt mag = neg ? -cf : cf;
    bool unit = mag == BigInt(1);
    if (i == 0) {
      out += mag.to_string();
    } else {
      if (!unit) out += mag.to_string() + "*";
      out += i == 1 ? "l" : "l^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------------------
// EisPoly / Mat2

EisPoly EisPoly::operator*(const EisPoly& o) const {
  return {re * o.re - om * o.om, re * o.om + om * o.re + om * o.om};
}

Mat2 Mat2::identity() {
  Mat2 m;
  m.e[0].re = IntPoly::constant(1);
  m.e[3].re = IntPoly::constant(1);
  return m;
}

Mat2 Mat2::operator*(const Mat2& o) const {
  Mat2 r;
  r.e[0] = e[0] * o.e[0] + e[1] * o.e[2];
  r.e[1] = e[0] * o.e[1] + e[1] * o.e[3];
  r.e[2] = e[2] * o.e[0] + e[3] * o.e[2];
  r.e[3] = e[2] * o.e[1] + e[3] * o.e[3];
  return r;
}

EisPoly Mat2::det() const { return e[0] * e[3] - e[1] * e[2]; }

namespace {

EisPoly eis(std::vector<long long> re, std::vector<long long> om) {
  return {IntPoly::from_int_coeffs(re), IntPoly::from_int_coeffs(om)};
}

struct GenSet {
  Mat2 x[3];  // x[e] = X^e, e in 1..2 (x[0] unused)
  Mat2 y[3];
};

Mat2 base_x(Case c) {
  Mat2 m;
  if (c == Case::C232) {
    m.e[0] = eis({0}, {});
    m.e[1] = eis({1}, {});
    m.e[2] = eis({-1}, {});
    m.e[3] = eis({0}, {});
  } else {
    m.e[0] = eis({}, {1});      // w
    m.e[1] = eis({1}, {});
    m.e[2] = eis({0}, {});
    m.e[3] = eis({1}, {-1});    // 1-w
  }
  return m;
}

Mat2 base_y(Case c) {
  Mat2 m;
  m.e[0] = eis({}, {1});
  m.e[1] = eis({0}, {});
  m.e[2] = c == Case::C232 ? eis({0, 1}, {}) : eis({1, 1}, {});  // l resp. l+1
  m.e[3] = eis({1}, {-1});
  return m;
}

void verify_generators(const GenSet& g, Case c) {
  auto expect = [](bool ok, const char* what) {
    if (!ok) throw std::logic_error(std::string("generator matrix check failed: ") + what);
  };
  const IntPoly one = IntPoly::constant(1);
  const IntPoly zero;
  // determinants
  expect(g.x[1].det() == EisPoly{one, zero}, "det X");
  expect(g.y[1].det() == EisPoly{one, zero}, "det Y");
  // traces: tr X = 2cos(pi/p) in {0,1}, tr Y = 1
  EisPoly tx = g.x[1].trace();
  expect(tx.om == zero && tx.re == (c == Case::C232 ? zero : one), "tr X");
  EisPoly ty = g.y[1].trace();
  expect(ty.om == zero && ty.re == one, "tr Y");
  // tr XY = l
  EisPoly txy = (g.x[1] * g.y[1]).trace();
  expect(txy.om == zero && txy.re == IntPoly::from_int_coeffs({0, 1}), "tr XY");
  // orders: X^p = -1, Y^3 = -1 in SL(2)
  Mat2 xp = c == Case::C232 ? g.x[1] * g.x[1] : g.x[2] * g.x[1];
  Mat2 y3 = g.y[2] * g.y[1];
  const EisPoly mone{-one, zero};
  expect(xp.e[0] == mone && xp.e[3] == mone && xp.e[1].re == zero && xp.e[2].re == zero &&
             xp.e[1].om == zero && xp.e[2].om == zero,
         "X^p");
  expect(y3.e[0] == mone && y3.e[3] == mone && y3.e[1].re == zero && y3.e[2].re == zero &&
             y3.e[1].om == zero && y3.e[2].om == zero,
         "Y^3");
}

const GenSet& generators(Case c) {
  static GenSet sets[2];
  static std::once_flag flags[2];
  int i = c == Case::C332 ? 0 : 1;
  std::call_once(flags[i], [&, c] {
    GenSet& g = sets[i];
    g.x[1] = base_x(c);
    g.y[1] = base_y(c);
    g.x[2] = g.x[1] * g.x[1];
    g.y[2] = g.y[1] * g.y[1];
    verify_generators(g, c);
  });
  return sets[i];
}

std::vector<uint8_t> pair_codes(const Word& w) {
  if (!w.is_alternating_pairs()) {
    throw std::invalid_argument("trace: word must be an alternating pair word");
  }
  const auto& s = w.syllables();
  std::vector<uint8_t> codes(s.size() / 2);
  if (w.spec().p == 2) {
    for (size_t i = 0; i < codes.size(); ++i) codes[i] = static_cast<uint8_t>(s[2 * i + 1].exponent - 1);
  } else {
    for (size_t i = 0; i < codes.size(); ++i) {
      codes[i] = static_cast<uint8_t>((s[2 * i].exponent - 1) * 2 + (s[2 * i + 1].exponent - 1));
    }
  }
  return codes;
}

void check_trace_result(const IntPoly& om, const IntPoly& re, size_t k) {
  if (!om.is_zero()) throw std::logic_error("trace: nonzero w-component");
  if (!re.is_monic() || re.degree() != static_cast<int>(k)) {
    throw std::logic_error("trace: result not monic of degree k");
  }
}

}  // namespace

Mat2 generator_matrix(Case c, Factor f, int exponent) {
  const GenSet& g = generators(c);
  int ord = f == Factor::First ? (c == Case::C232 ? 2 : 3) : 3;
  if (exponent < 1 || exponent >= ord) throw std::invalid_argument("bad generator exponent");
  return f == Factor::First ? g.x[exponent] : g.y[exponent];
}

IntPoly trace_polynomial(const Word& w) {
  Case c = w.spec().to_case();
  auto codes = pair_codes(w);
  int k = static_cast<int>(codes.size());

  if (kernel::eligible(c, k)) {
    kernel::EPoly t;
    kernel::trace_fold(c, codes.data(), k, t);
    std::vector<BigInt> re(static_cast<size_t>(t.n));
    IntPoly om_check;
    {
      std::vector<BigInt> om(static_cast<size_t>(t.n));
      for (int i = 0; i < t.n; ++i) {
        re[static_cast<size_t>(i)] = BigInt(t.re[i]);
        om[static_cast<size_t>(i)] = BigInt(t.om[i]);
      }
      om_check = IntPoly(std::move(om));
    }
    IntPoly p(std::move(re));
    check_trace_result(om_check, p, codes.size());
    return p;
  }

  // general path over arbitrary-precision coefficients
  generators(c);
  Mat2 m = Mat2::identity();
  for (const auto& s : w.syllables()) {
    m = m * generator_matrix(c, s.factor, s.exponent);
  }
  EisPoly t = m.trace();
  check_trace_result(t.om, t.re, codes.size());
  return t.re;
}

BigInt eval_trace_int(const Word& w, long long lambda0) {
  Case c = w.spec().to_case();
  if (!w.is_alternating_pairs()) {
    throw std::invalid_argument("eval_trace_int: word must be an alternating pair word");
  }
  generators(c);

  struct EI {
    BigInt re, om;
  };
  auto mul = [](const EI& a, const EI& b) -> EI {
    return {a.re * b.re - a.om * b.om, a.re * b.om + a.om * b.re + a.om * b.om};
  };
  struct MatI {
    EI e[4];
  };

  BigInt lam(static_cast<int64_t>(lambda0));
  auto matify = [&](const Mat2& m) {
    MatI r;
    for (int i = 0; i < 4; ++i) r.e[i] = {m.e[i].re.eval(lam), m.e[i].om.eval(lam)};
    return r;
  };
  MatI gen[2][2];
  for (int f = 0; f < 2; ++f) {
    int ord = f == 0 ? w.spec().p : w.spec().q;
    for (int e = 1; e < ord; ++e) {
      gen[f][e - 1] = matify(generator_matrix(c, static_cast<Factor>(f), e));
    }
  }

  MatI m;
  m.e[0] = {BigInt(1), BigInt(0)};
  m.e[1] = {BigInt(0), BigInt(0)};
  m.e[2] = {BigInt(0), BigInt(0)};
  m.e[3] = {BigInt(1), BigInt(0)};
  for (const auto& s : w.syllables()) {
    const MatI& g = gen[static_cast<int>(s.factor)][s.exponent - 1];
    MatI r;
    r.e[0] = mul(m.e[0], g.e[0]);
    {
      EI t = mul(m.e[1], g.e[2]);
      r.e[0].re += t.re;
      r.e[0].om += t.om;
    }
    r.e[1] = mul(m.e[0], g.e[1]);
    {
      EI t = mul(m.e[1], g.e[3]);
      r.e[1].re += t.re;
      r.e[1].om += t.om;
    }
    r.e[2] = mul(m.e[2], g.e[0]);
    {
      EI t = mul(m.e[3], g.e[2]);
      r.e[2].re += t.re;
      r.e[2].om += t.om;
    }
    r.e[3] = mul(m.e[2], g.e[1]);
    {
      EI t = mul(m.e[3], g.e[3]);
      r.e[3].re += t.re;
      r.e[3].om += t.om;
    }
    m = r;
  }
  BigInt om = m.e[0].om + m.e[3].om;
  if (!om.is_zero()) throw std::logic_error("eval_trace_int: nonzero w-component");
  return m.e[0].re + m.e[3].re;
}

// ---------------------------------------------------------------------------
// target forms

bool TargetForm::operator<(const TargetForm& o) const {
  auto family = [](const TargetForm& f) { return f.a * 1 + f.b * 2; };  // 00,10,01,11
  if (kase != o.kase) return kase < o.kase;
  if (family(*this) != family(o)) return family(*this) < family(o);
  return c < o.c;
}

std::string TargetForm::abc_string() const {
  return std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c);
}

std::string TargetForm::factored_string() const {
  std::string out;
  auto add = [&out](const std::string& base, int e) {
    if (e == 0) return;
    if (!out.empty()) out += "*";
    out += base;
    if (e > 1) out += "^" + std::to_string(e);
  };
  if (kase == Case::C332) {
    add("l", a);
    add("(l-1)", b);
    add("(l^2-l-1)", c);
  } else {
    add("(l^2-1)", a);
    add("(l^2-2)", b);
    add("(l^4-3*l^2+1)", c);
  }
  return out.empty() ? "1" : out;
}

namespace {

IntPoly form_factor(Case kase, int which) {
  if (kase == Case::C332) {
    switch (which) {
      case 0: return IntPoly::from_int_coeffs({0, 1});        // l
      case 1: return IntPoly::from_int_coeffs({-1, 1});       // l-1
      default: return IntPoly::from_int_coeffs({-1, -1, 1});  // l^2-l-1
    }
  }
  switch (which) {
    case 0: return IntPoly::from_int_coeffs({-1, 0, 1});          // l^2-1
    case 1: return IntPoly::from_int_coeffs({-2, 0, 1});          // l^2-2
    default: return IntPoly::from_int_coeffs({1, 0, -3, 0, 1});   // l^4-3l^2+1
  }
}

void check_form(const TargetForm& f) {
  if (f.a < 0 || f.a > 1 || f.b < 0 || f.b > 1 || f.c < 0 || f.c > 3 * (f.a + f.b + 1)) {
    throw std::invalid_argument("invalid target form");
  }
}

}  // namespace

IntPoly expand_target(const TargetForm& f) {
  check_form(f);
  return form_factor(f.kase, 0).pow(static_cast<unsigned>(f.a)) *
         form_factor(f.kase, 1).pow(static_cast<unsigned>(f.b)) *
         form_factor(f.kase, 2).pow(static_cast<unsigned>(f.c));
}

std::optional<TargetForm> match_target(const IntPoly& p, Case c) {
  if (p.is_zero() || !p.is_monic()) return std::nullopt;
  IntPoly rem = p;
  int mult[3] = {0, 0, 0};
  for (int which = 0; which < 3; ++which) {
    IntPoly f = form_factor(c, which);
    int cap = which == 2 ? 10 : 2;
    while (mult[which] < cap) {
      auto q = rem.divide_exact(f);
      if (!q) break;
      rem = std::move(*q);
      ++mult[which];
    }
    if (which < 2 && mult[which] > 1) return std::nullopt;
    if (which == 2 && mult[which] > 9) return std::nullopt;
  }
  if (rem != IntPoly::constant(1)) return std::nullopt;
  TargetForm f{c, mult[0], mult[1], mult[2]};
  if (f.c > 3 * (f.a + f.b + 1)) return std::nullopt;
  return f;
}

IntPoly transfer_332_to_232(const IntPoly& p, int k) {
  const IntPoly t = IntPoly::from_int_coeffs({2, 0, -1});  // 2 - l^2
  IntPoly r;
  for (int i = p.degree(); i >= 0; --i) {
    r = r * t + IntPoly::constant(p.coeff(static_cast<size_t>(i)));
  }
  return k % 2 ? -r : r;
}

IntPoly twist_332(const IntPoly& p, int k) {
  const IntPoly t = IntPoly::from_int_coeffs({1, -1});  // 1 - l
  IntPoly r;
  for (int i = p.degree(); i >= 0; --i) {
    r = r * t + IntPoly::constant(p.coeff(static_cast<size_t>(i)));
  }
  return k % 2 ? -r : r;
}

long long second_coefficient(const PairList& list, int k) {
  if (list.sum() != k) throw std::invalid_argument("pair list does not sum to k");
  return -(k - static_cast<long long>(list.pair_count()));
}

std::vector<TargetForm> target_forms(Case c) {
  // family order matches the search's grouping: (0,0), (1,0), (0,1), (1,1)
  static constexpr int kFam[4][2] = {{0, 0}, {1, 0}, {0, 1}, {1, 1}};
  std::vector<TargetForm> out;
  for (auto [a, b] : kFam) {
    for (int cc = 0; cc <= 3 * (a + b + 1); ++cc) {
      if (a == 0 && b == 0 && cc == 0) continue;
      out.push_back(TargetForm{c, a, b, cc});
    }
  }
  return out;
}

}  // namespace gtg
