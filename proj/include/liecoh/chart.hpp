#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "liecoh/cohomology.hpp"
#include "liecoh/ppoly.hpp"

namespace liecoh {

// One additive generator of a cohomology ring, with every graded invariant
// stated uniformly in the prime p.
struct ChartRow {
  std::string name;
  std::string expr;      // cocycle in the expression grammar of Dga::parse
  int s = 0;             // exterior (cohomological) degree
  PPoly internal;        // internal degree, compared modulo the period
  PPoly ravenel;         // filtration weight of the class
  std::string sigma;     // image under the cyclic shift, as an expression
  std::optional<PPoly> lift;  // integer lift of the internal degree, if any
};

// A frozen description of the cohomology of one cochain algebra: parameters,
// Poincare series, a self-dual tensor factor, exterior classes, and one row
// per ring generator.
struct ChartFixture {
  int schema_version = 0;
  std::string id;
  std::string description;
  uint64_t min_p = 0;
  LieParams params;  // the prime field is chosen at verification time
  std::vector<int64_t> poincare;
  std::vector<std::string> a_factor;   // row names of the self-dual factor
  std::vector<std::string> exterior;   // row names of the exterior classes
  std::string duality_class;           // row name of the top class
  std::vector<ChartRow> rows;

  // Parses and validates a fixture file; throws std::runtime_error with the
  // offending key on malformed input (including dangling row references).
  static ChartFixture load(const std::string& path);
  const ChartRow& row(const std::string& name) const;
};

struct ChartCheck {
  std::string name;
  bool pass = false;
  std::string detail;  // empty when passing
};

struct ChartReport {
  std::string id;
  uint64_t p = 0;
  bool pass = false;
  std::vector<ChartCheck> checks;

  size_t failures() const;
  std::string str() const;  // one line per failing check plus a summary
};

// Rebuilds the complex at the given prime and verifies, exactly:
//   - every row is a cocycle of the stated bidegree and filtration weight,
//   - the cyclic shift sends each row to the stated image in cohomology,
//   - stated integer lifts agree with the internal degree modulo the period,
//   - the products (self-dual factor) x (exterior subsets) form a basis of
//     the full cohomology,
//   - the cup-product pairing into the top class is supported exactly on
//     mirror-image pairs of the self-dual factor and is nondegenerate,
//   - the Poincare series matches both the engine and the row inventory.
// Throws std::invalid_argument when p is not a prime >= the fixture minimum.
ChartReport verify_chart(const ChartFixture& fx, uint64_t p);

}  // namespace liecoh
