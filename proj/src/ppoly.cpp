#include "liecoh/ppoly.hpp"

#include <cctype>
#include <stdexcept>

namespace liecoh {

PPoly PPoly::parse(const std::string& s) {
  PPoly out;
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  auto read_uint = [&]() -> int64_t {
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
      throw std::invalid_argument("degree polynomial: expected a number in '" + s + "'");
    int64_t v = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      v = v * 10 + (s[i] - '0');
      ++i;
    }
    return v;
  };

  skip_ws();
  if (i >= s.size()) throw std::invalid_argument("degree polynomial: empty input");
  bool first = true;
  while (true) {
    skip_ws();
    if (i >= s.size()) {
      if (first) throw std::invalid_argument("degree polynomial: empty input");
      break;
    }
    int64_t sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = (s[i] == '-') ? -1 : 1;
      ++i;
      skip_ws();
    } else if (!first) {
      throw std::invalid_argument("degree polynomial: expected '+' or '-' in '" + s + "'");
    }
    int64_t coeff = 1;
    bool have_coeff = i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]));
    if (have_coeff) coeff = read_uint();
    skip_ws();
    int64_t exp = 0;
    if (i < s.size() && s[i] == 'p') {
      ++i;
      exp = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        exp = read_uint();
      }
    } else if (!have_coeff) {
      throw std::invalid_argument("degree polynomial: stray sign in '" + s + "'");
    }
    if (i < s.size() && s[i] == '^')
      throw std::invalid_argument("degree polynomial: repeated exponent in '" + s + "'");
    if (out.c.size() <= size_t(exp)) out.c.resize(size_t(exp) + 1, 0);
    out.c[size_t(exp)] += sign * coeff;
    first = false;
    skip_ws();
    if (i < s.size() && s[i] != '+' && s[i] != '-')
      throw std::invalid_argument("degree polynomial: unexpected character in '" + s + "'");
  }
  while (!out.c.empty() && out.c.back() == 0) out.c.pop_back();
  return out;
}

int64_t PPoly::eval(uint64_t p) const {
  int64_t acc = 0;
  for (size_t k = c.size(); k-- > 0;) acc = acc * int64_t(p) + c[k];
  return acc;
}

std::string PPoly::str() const {
  if (c.empty()) return "0";
  std::string s;
  for (size_t k = c.size(); k-- > 0;) {
    int64_t v = c[k];
    if (v == 0) continue;
    if (!s.empty())
      s += (v > 0) ? "+" : "-";
    else if (v < 0)
      s += "-";
    int64_t a = v < 0 ? -v : v;
    if (a != 1 || k == 0) s += std::to_string(a);
    if (k >= 1) {
      s += "p";
      if (k >= 2) s += "^" + std::to_string(k);
    }
  }
  return s;
}

}  // namespace liecoh
