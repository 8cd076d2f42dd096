#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "liecoh/chart.hpp"
#include "liecoh/ppoly.hpp"

namespace liecoh {

// One generator of the regraded answer.  `lift` is the unreduced internal
// degree of the representing class, `s` its filtration, and `top` the
// resulting topological degree; the table must satisfy top = lift - s.
struct TopRow {
  std::string name;
  std::string role;  // "module", "exterior", or "periodicity"
  int s = 0;
  PPoly lift;
  PPoly top;
};

// A term coeff * s^{exp(p)} of a stated Poincare series.
struct SeriesTerm {
  int64_t coeff = 0;
  PPoly exp;
};

// Verbatim record of the degree table and the stated series, plus the path
// of the cohomology chart the table is cross-referenced against.
struct RegradeFixture {
  int schema_version = 1;
  std::string id;
  std::string description;
  uint64_t min_p = 5;
  std::string chart_path;
  PPoly period_default;  // degree of the periodicity generator
  PPoly period_paper;    // repeat degree the stated series uses
  std::vector<TopRow> rows;
  std::vector<SeriesTerm> display;        // the series as stated
  std::vector<SeriesTerm> known_missing;  // terms found absent from it

  static RegradeFixture load(const std::string& path);
  const TopRow* row(const std::string& name) const;
};

struct RegradeCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Result of verifying the table and expanding the series on a degree window.
// `checks` are conditions that must hold; `discrepancies` are differences
// between the stated series and the computed one, reported rather than
// corrected.  `pass` reflects the checks only.
struct RegradeReport {
  std::string id;
  uint64_t p = 0;
  int64_t window_lo = 0;
  int64_t window_hi = 0;
  bool pass = false;
  std::vector<RegradeCheck> checks;
  std::vector<std::string> discrepancies;
  std::map<int64_t, int64_t> computed_default;  // expansion, periodicity degree
  std::map<int64_t, int64_t> computed_paper;    // expansion, stated repeat degree
  std::map<int64_t, int64_t> display_paper;     // stated series, stated repeat

  size_t failures() const;
  std::string str() const;
};

// Verifies top = lift - s for every row, cross-checks filtration and lift of
// chart-backed rows against the chart fixture, checks the periodicity degree,
// expands both the computed and the stated series over [window_lo, window_hi],
// and records every difference as a discrepancy.  The reconciliation check
// requires stated + known_missing to equal the computed expansion exactly.
// Throws std::invalid_argument if p is not a prime >= min_p or the window is
// empty.
RegradeReport verify_regrade(const RegradeFixture& fx, uint64_t p,
                             int64_t window_lo, int64_t window_hi);

}  // namespace liecoh
