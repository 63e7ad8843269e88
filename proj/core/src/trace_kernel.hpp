#pragma once

// Internal fixed-width trace computation. One step multiplies the running
// 2x2 matrix over Z[w][l] (w^2 = w - 1) by a constant pair matrix
// X^a Y^b whose entries have degree <= 1. Row norms (sum of complex absolute
// values of all entry coefficients) multiply along products and are 2 per
// (2,3) pair matrix and 3 per (3,3) pair matrix, so every intermediate int64
// component stays below 4 * 2^k (resp. 4 * 3^k) in magnitude. The eligible()
// limits keep that under 2^63; longer words take the BigInt path in poly.cpp.

#include <array>
#include <cstdint>
#include <cstring>

#include "gtg/word.hpp"

namespace gtg::kernel {

constexpr int kMaxDeg = 64;

struct EPoly {
  int n = 0;  // coefficient count; arrays are meaningful on [0, n)
  std::array<int64_t, kMaxDeg + 2> re{};
  std::array<int64_t, kMaxDeg + 2> om{};
};

struct EMat {
  EPoly e[4];  // row-major
};

// Eisenstein-linear constant: (re0 + om0*w) + (re1 + om1*w) * l
struct SEntry {
  int64_t re0, om0, re1, om1;
};

struct SMat {
  SEntry m[4];
};

// (2,3): code 0 is UV, code 1 is UV^2.
inline constexpr SMat kPair232[2] = {
    {{{0, 0, 1, 0}, {1, -1, 0, 0}, {0, -1, 0, 0}, {0, 0, 0, 0}}},
    {{{0, 0, 1, 0}, {0, -1, 0, 0}, {1, -1, 0, 0}, {0, 0, 0, 0}}},
};

// (3,3): code (a-1)*2 + (b-1) is X^a Y^b.
inline constexpr SMat kPair332[4] = {
    // XY   = [[l+w, 1-w], [(1-w)l+(1-w), -w]]
    {{{0, 1, 1, 0}, {1, -1, 0, 0}, {1, -1, 1, -1}, {0, -1, 0, 0}}},
    // XY^2 = [[l, -w], [(1-w)l+(1-w), -1]]
    {{{0, 0, 1, 0}, {0, -1, 0, 0}, {1, -1, 1, -1}, {-1, 0, 0, 0}}},
    // X^2Y = [[l, 1-w], [-wl-w, -1]]
    {{{0, 0, 1, 0}, {1, -1, 0, 0}, {0, -1, 0, -1}, {-1, 0, 0, 0}}},
    // X^2Y^2 = [[l+1-w, -w], [-wl-w, w-1]]
    {{{1, -1, 1, 0}, {0, -1, 0, 0}, {0, -1, 0, -1}, {-1, 1, 0, 0}}},
};

inline const SMat* pair_matrices(Case c) {
  return c == Case::C232 ? kPair232 : kPair332;
}

inline bool eligible(Case c, int k) {
  return c == Case::C232 ? k <= 60 : k <= 38;
}

inline void mul_entry_acc(EPoly& dst, const EPoly& a, const SEntry& s) {
  if (a.n == 0) return;
  if (s.re0 != 0 || s.om0 != 0) {
    for (int i = 0; i < a.n; ++i) {
      int64_t ar = a.re[i], ao = a.om[i];
      dst.re[i] += ar * s.re0 - ao * s.om0;
      dst.om[i] += ar * s.om0 + ao * s.re0 + ao * s.om0;
    }
    if (a.n > dst.n) dst.n = a.n;
  }
  if (s.re1 != 0 || s.om1 != 0) {
    for (int i = 0; i < a.n; ++i) {
      int64_t ar = a.re[i], ao = a.om[i];
      dst.re[i + 1] += ar * s.re1 - ao * s.om1;
      dst.om[i + 1] += ar * s.om1 + ao * s.re1 + ao * s.om1;
    }
    if (a.n + 1 > dst.n) dst.n = a.n + 1;
  }
}

inline void mat_init_identity(EMat& m) {
  for (auto& p : m.e) p.n = 0;
  m.e[0].n = 1;
  m.e[0].re[0] = 1;
  m.e[0].om[0] = 0;
  m.e[3].n = 1;
  m.e[3].re[0] = 1;
  m.e[3].om[0] = 0;
}

inline void mat_step(EMat& dst, const EMat& src, const SMat& s) {
  for (int r = 0; r < 2; ++r) {
    const EPoly& a0 = src.e[r * 2];
    const EPoly& a1 = src.e[r * 2 + 1];
    int need = (a0.n > a1.n ? a0.n : a1.n) + 1;
    for (int c = 0; c < 2; ++c) {
      EPoly& d = dst.e[r * 2 + c];
      d.n = 0;
      std::memset(d.re.data(), 0, sizeof(int64_t) * static_cast<size_t>(need));
      std::memset(d.om.data(), 0, sizeof(int64_t) * static_cast<size_t>(need));
      mul_entry_acc(d, a0, s.m[c]);
      mul_entry_acc(d, a1, s.m[2 + c]);
    }
  }
}

inline void trace_into(const EMat& m, EPoly& out) {
  int n = m.e[0].n > m.e[3].n ? m.e[0].n : m.e[3].n;
  out.n = n;
  for (int i = 0; i < n; ++i) {
    int64_t r0 = i < m.e[0].n ? m.e[0].re[i] : 0;
    int64_t o0 = i < m.e[0].n ? m.e[0].om[i] : 0;
    int64_t r3 = i < m.e[3].n ? m.e[3].re[i] : 0;
    int64_t o3 = i < m.e[3].n ? m.e[3].om[i] : 0;
    out.re[i] = r0 + r3;
    out.om[i] = o0 + o3;
  }
  while (out.n > 0 && out.re[out.n - 1] == 0 && out.om[out.n - 1] == 0) --out.n;
}

// Full fold. codes has k entries: (2,3) gamma-1, (3,3) (a-1)*2+(b-1).
inline void trace_fold(Case cs, const uint8_t* codes, int k, EPoly& out) {
  const SMat* pm = pair_matrices(cs);
  EMat buf[2];
  mat_init_identity(buf[0]);
  int cur = 0;
  for (int i = 0; i < k; ++i) {
    mat_step(buf[1 - cur], buf[cur], pm[codes[i]]);
    cur = 1 - cur;
  }
  trace_into(buf[cur], out);
}

// --- evaluation at an integer point, mod 2^64 ------------------------------

struct EW {
  uint64_t re, om;
};

inline EW ew_mul(EW a, EW b) {
  return {a.re * b.re - a.om * b.om, a.re * b.om + a.om * b.re + a.om * b.om};
}

inline EW ew_add(EW a, EW b) { return {a.re + b.re, a.om + b.om}; }

struct EWMat {
  EW e[4];
};

inline EWMat ewmat_of(const SMat& s, uint64_t lam) {
  EWMat m;
  for (int i = 0; i < 4; ++i) {
    m.e[i].re = static_cast<uint64_t>(s.m[i].re0) + static_cast<uint64_t>(s.m[i].re1) * lam;
    m.e[i].om = static_cast<uint64_t>(s.m[i].om0) + static_cast<uint64_t>(s.m[i].om1) * lam;
  }
  return m;
}

// trace (re component) of the word's matrix image at l = lam, mod 2^64;
// the om component of the exact trace vanishes identically, hence so does
// its image here.
inline uint64_t eval_fold_wrap(Case cs, const uint8_t* codes, int k, uint64_t lam) {
  const SMat* pm = pair_matrices(cs);
  EWMat step[4];
  int nmat = cs == Case::C232 ? 2 : 4;
  for (int i = 0; i < nmat; ++i) step[i] = ewmat_of(pm[i], lam);
  EWMat m = step[codes[0]];
  for (int i = 1; i < k; ++i) {
    const EWMat& s = step[codes[i]];
    EWMat r;
    r.e[0] = ew_add(ew_mul(m.e[0], s.e[0]), ew_mul(m.e[1], s.e[2]));
    r.e[1] = ew_add(ew_mul(m.e[0], s.e[1]), ew_mul(m.e[1], s.e[3]));
    r.e[2] = ew_add(ew_mul(m.e[2], s.e[0]), ew_mul(m.e[3], s.e[2]));
    r.e[3] = ew_add(ew_mul(m.e[2], s.e[1]), ew_mul(m.e[3], s.e[3]));
    m = r;
  }
  return m.e[0].re + m.e[3].re;
}

}  // namespace gtg::kernel
