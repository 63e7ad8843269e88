#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gtg/poly.hpp"
#include "gtg/word.hpp"

namespace gtg {

enum class FinGroup : uint8_t { A4, S4, A5 };

const char* fin_group_name(FinGroup g);

// A finite image forced by one factor of a matching trace polynomial: the
// group together with the required order of the image of xy.
struct RepRequirement {
  FinGroup group;
  int xy_order;

  bool operator==(const RepRequirement& o) const {
    return group == o.group && xy_order == o.xy_order;
  }
  bool operator<(const RepRequirement& o) const {
    if (group != o.group) return group < o.group;
    return xy_order < o.xy_order;
  }
};

using Perm = std::array<uint8_t, 5>;

std::string cycle_string(const Perm& p);

// Element and multiplication tables for A4, S4, A5 as permutations of at most
// 5 points, built once at startup. Elements are sorted by one-line notation,
// so index 0 is the identity.
class GroupTable {
 public:
  static const GroupTable& get(FinGroup g);

  FinGroup group() const { return group_; }
  int order() const { return static_cast<int>(perms_.size()); }
  const Perm& perm(uint16_t i) const { return perms_[i]; }
  const uint16_t* raw_table() const { return table_.data(); }
  uint16_t mul(uint16_t a, uint16_t b) const {
    return table_[static_cast<size_t>(a) * perms_.size() + b];
  }
  int element_order(uint16_t a) const { return orders_[a]; }
  const std::vector<uint16_t>& elements_of_order(int n) const;

 private:
  explicit GroupTable(FinGroup g);
  FinGroup group_;
  std::vector<Perm> perms_;
  std::vector<uint16_t> table_;
  std::vector<int> orders_;
  std::vector<std::vector<uint16_t>> by_order_;
};

// Which finite images a matching trace polynomial forces.
//   232: a -> (A4, xy of order 3), b -> (S4, 4), c>=1 -> (A5, 5)
//   332: a -> (A4, xy of order 2), b -> (A4, 3), c>=1 -> (A5, 5)
std::vector<RepRequirement> requirements_of(const TargetForm& f);

struct RepWitness {
  RepRequirement req;
  Perm x, y;
};

// True iff for every requirement there are elements X (of order p), Y (of
// order q) with XY of the required order and W(X,Y) of order exactly 2.
// Witnesses are the lexicographically first passing pairs.
std::optional<std::vector<RepWitness>> passes_filter(const Word& w,
                                                     const std::vector<RepRequirement>& reqs);

// Precompiled boolean-only filter for the (2,3) search loop: pair images are
// reduced modulo simultaneous conjugation, which preserves the answer.
class RepFilter {
 public:
  explicit RepFilter(const std::vector<RepRequirement>& reqs);

  // gamma codes: gamma[i] in {0,1} meaning v-exponent 1 resp. 2
  bool passes_codes(const uint8_t* codes, int k) const;
  bool trivial() const { return reqs_.empty(); }

  // representative pair count after symmetry reduction (for tests)
  std::vector<size_t> pair_counts() const;

 private:
  bool passes_codes_general(const uint8_t* codes, int k) const;

  struct PairStep {
    // step[c][m]: product so far m times the image of uv^(c+1)
    std::vector<uint8_t> step[2];
    uint8_t involution_bit[256 / 8];  // elements of order exactly 2
  };
  struct CompiledReq {
    const GroupTable* table;
    std::vector<PairStep> pairs;
  };
  std::vector<CompiledReq> reqs_;
};

}  // namespace gtg
