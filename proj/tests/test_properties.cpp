#include <doctest.h>

#include <cmath>
#include <random>

#include "gtg/catalog.hpp"
#include "gtg/poly.hpp"
#include "gtg/search.hpp"
#include "gtg/smallcancel.hpp"
#include "gtg/word.hpp"

using namespace gtg;

namespace {

Word random_word(std::mt19937& rng, FactorSpec spec, int k) {
  std::vector<uint8_t> exps;
  for (int i = 0; i < k; ++i) {
    exps.push_back(spec.p == 2 ? 1 : static_cast<uint8_t>(1 + rng() % 2));
    exps.push_back(static_cast<uint8_t>(1 + rng() % 2));
  }
  return word_from_exponents(exps, spec);
}

}  // namespace

TEST_CASE("trace polynomials are constant on (2,3) orbits") {
  std::mt19937 rng(101);
  for (int iter = 0; iter < 500; ++iter) {
    Word w = random_word(rng, FactorSpec::z2z3(), 1 + static_cast<int>(rng() % 10));
    IntPoly tau = trace_polynomial(w);
    for (const auto& m : equivalence_orbit(w)) {
      CHECK(trace_polynomial(m) == tau);
    }
  }
}

TEST_CASE("on (3,3) orbits the trace polynomial varies by the twist only") {
  std::mt19937 rng(103);
  for (int iter = 0; iter < 500; ++iter) {
    Word w = random_word(rng, FactorSpec::z3z3(), 1 + static_cast<int>(rng() % 8));
    int k = static_cast<int>(w.pair_length());
    IntPoly tau = trace_polynomial(w);
    IntPoly twisted = twist_332(tau, k);
    for (const auto& m : equivalence_orbit(w)) {
      IntPoly mt = trace_polynomial(m);
      CHECK((mt == tau || mt == twisted));
    }
  }
}

TEST_CASE("transfer identity: trace of the push equals the transferred trace") {
  std::mt19937 rng(107);
  for (int iter = 0; iter < 500; ++iter) {
    Word w = random_word(rng, FactorSpec::z3z3(), 1 + static_cast<int>(rng() % 10));
    int k = static_cast<int>(w.pair_length());
    CHECK(trace_polynomial(push_332_to_232(w)) == transfer_332_to_232(trace_polynomial(w), k));
  }
}

TEST_CASE("trace polynomials are monic of degree k with the right parity") {
  std::mt19937 rng(109);
  for (int iter = 0; iter < 500; ++iter) {
    FactorSpec spec = iter % 2 ? FactorSpec::z3z3() : FactorSpec::z2z3();
    Word w = random_word(rng, spec, 1 + static_cast<int>(rng() % 12));
    int k = static_cast<int>(w.pair_length());
    IntPoly tau = trace_polynomial(w);
    CHECK(tau.is_monic());
    CHECK(tau.degree() == k);
    if (spec.p == 2) {
      // only terms of k's parity appear
      for (int i = 0; i <= tau.degree(); ++i) {
        if ((i % 2) != (k % 2)) CHECK(tau.coeff(static_cast<size_t>(i)).is_zero());
      }
    }
  }
}

TEST_CASE("|tau| is bounded by 2 on the compact window") {
  std::mt19937 rng(113);
  for (int iter = 0; iter < 500; ++iter) {
    Word w = random_word(rng, FactorSpec::z3z3(), 1 + static_cast<int>(rng() % 10));
    IntPoly tau = trace_polynomial(w);
    for (int j = 0; j < 50; ++j) {
      double x = -1.0 + 3.0 * j / 49.0;
      CHECK(std::abs(tau.eval_double(x)) <= 2.0 + 1e-9);
    }
  }
  // via the transfer law, even-length (2,3) words are bounded on [-sqrt3, sqrt3]
  for (int iter = 0; iter < 500; ++iter) {
    Word w = random_word(rng, FactorSpec::z2z3(), 2 * (1 + static_cast<int>(rng() % 5)));
    IntPoly tau = trace_polynomial(w);
    double s3 = std::sqrt(3.0);
    for (int j = 0; j < 50; ++j) {
      double x = -s3 + 2 * s3 * j / 49.0;
      CHECK(std::abs(tau.eval_double(x)) <= 2.0 + 1e-9);
    }
  }
}

TEST_CASE("second coefficient equals the run-length count") {
  std::mt19937 rng(127);
  for (int iter = 0; iter < 500; ++iter) {
    // random standard pair list
    int m = 1 + static_cast<int>(rng() % 5);
    std::vector<int> runs;
    int k = 0;
    for (int i = 0; i < 2 * m; ++i) {
      int r = 1 + static_cast<int>(rng() % 3);
      runs.push_back(r);
      k += r;
    }
    PairList l{PairList::Kind::Standard, runs};
    Word w = word_of_pairlist(l, FactorSpec::z2z3());
    IntPoly tau = trace_polynomial(w);
    BigInt actual = tau.coeff(static_cast<size_t>(k - 2));
    CHECK(actual == BigInt(second_coefficient(l, k)));
  }
}

TEST_CASE("matching forms satisfy m = a + c") {
  // for every oracle class with a standard pair list, the pair count of the
  // rotation-normal form equals a + c
  for (const auto& [key, tau] : brute_force_oracle(Case::C232, 10)) {
    auto form = match_target(tau, Case::C232);
    REQUIRE(form.has_value());
    Word norm = rotate_to_pair_normal(key.word());
    PairList l = pairlist_of_word(norm);
    if (l.kind != PairList::Kind::Standard) continue;
    CHECK(static_cast<int>(l.pair_count()) == form->a + form->c);
  }
}

TEST_CASE("certificates survive the independent checker") {
  for (const char* id : {"9", "13", "16"}) {
    auto cert = certify(find_by_id(Case::C332, id)->word(), Case::C332);
    REQUIRE(cert.has_value());
    CHECK(verify_certificate(*cert).empty());
  }
  auto cert = certify(find_by_id(Case::C232, "9b")->word(), Case::C232);
  REQUIRE(cert.has_value());
  CHECK(verify_certificate(*cert).empty());
}

TEST_CASE("integer evaluation agrees with the polynomial on a window") {
  std::mt19937 rng(131);
  for (int iter = 0; iter < 500; ++iter) {
    FactorSpec spec = iter % 2 ? FactorSpec::z3z3() : FactorSpec::z2z3();
    Word w = random_word(rng, spec, 1 + static_cast<int>(rng() % 12));
    IntPoly tau = trace_polynomial(w);
    for (long long x = -3; x <= 3; ++x) {
      CHECK(eval_trace_int(w, x) == tau.eval(BigInt(static_cast<int64_t>(x))));
    }
  }
}
