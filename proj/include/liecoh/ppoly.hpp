#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace liecoh {

// Integer polynomial in a prime symbol p, used for degree entries that are
// stated uniformly in p ("2p^2-2p", "1+p", "-6").  Grammar: a signed sum of
// terms `coeff`, `coeff p`, `coeff p^k`, `p`, `p^k`; coefficient defaults to
// 1 and exponent to 1 when `p` is present; whitespace is ignored.
struct PPoly {
  std::vector<int64_t> c;  // c[k] is the coefficient of p^k

  static PPoly parse(const std::string& s);
  int64_t eval(uint64_t p) const;
  std::string str() const;  // canonical: descending powers, "0" for zero
};

}  // namespace liecoh
