// Acceptance harness: one line per criterion, exit 0 iff every criterion
// passes. Run from the repository root so the fixture paths resolve.
#include <chrono>
#include <cstdio>
#include <exception>
#include <sstream>
#include <string>
#include <vector>

#include "liecoh/chart.hpp"
#include "liecoh/cli.hpp"
#include "liecoh/cobar.hpp"
#include "liecoh/cohomology.hpp"
#include "liecoh/dga.hpp"
#include "liecoh/regrade.hpp"

using namespace liecoh;

namespace {

using Clock = std::chrono::steady_clock;

struct Criterion {
  std::string name;
  double limit_s;
  bool pass = false;
  double elapsed_s = 0.0;
  std::string detail;
};

LieParams quad_module(uint64_t p, uint32_t m) {
  LieParams P;
  P.p = p;
  P.n = 2;
  P.m = m;
  P.e = 2;
  P.f = 1;
  P.omega_exp = 0;
  P.family = LieFamily::FormalModule;
  return P;
}

std::vector<int64_t> series(uint64_t p, uint32_t m) {
  Dga K(DgaParams{quad_module(p, m)});
  Complex C(K);
  return C.poincare();
}

template <typename F>
void run(Criterion& c, F&& body) {
  auto t0 = Clock::now();
  try {
    c.pass = body(c);
  } catch (const std::exception& e) {
    c.pass = false;
    c.detail = e.what();
  }
  c.elapsed_s = std::chrono::duration<double>(Clock::now() - t0).count();
  if (c.pass && c.elapsed_s > c.limit_s) {
    c.pass = false;
    c.detail = "time limit exceeded";
  }
}

std::string join(const std::vector<int64_t>& v) {
  std::string s;
  for (auto x : v) s += (s.empty() ? "" : " ") + std::to_string(x);
  return s;
}

}  // namespace

int main() {
  std::vector<Criterion> cs;

  cs.push_back({"1/7 dimension series [1 4 9 16 20 16 9 4 1], total 80, at m=4 for p=7 and p=11", 20.0});
  run(cs.back(), [](Criterion& c) {
    const std::vector<int64_t> want{1, 4, 9, 16, 20, 16, 9, 4, 1};
    for (uint64_t p : {uint64_t(7), uint64_t(11)}) {
      auto t0 = Clock::now();
      auto got = series(p, 4);
      double dt = std::chrono::duration<double>(Clock::now() - t0).count();
      int64_t total = 0;
      for (auto x : got) total += x;
      if (got != want || total != 80) {
        c.detail = "p=" + std::to_string(p) + " gave " + join(got);
        return false;
      }
      if (dt > 10.0) {
        c.detail = "p=" + std::to_string(p) + " exceeded 10s";
        return false;
      }
    }
    return true;
  });

  cs.push_back({"2/7 dimension series [1 3 4 3 1] at m=2, p=7", 5.0});
  run(cs.back(), [](Criterion& c) {
    auto got = series(7, 2);
    if (got != std::vector<int64_t>{1, 3, 4, 3, 1}) {
      c.detail = "got " + join(got);
      return false;
    }
    return true;
  });

  cs.push_back({"3/7 chart fixtures K_2_2, K_2_3, K_2_4 verify at p=7", 30.0});
  run(cs.back(), [](Criterion& c) {
    for (const char* path : {"charts/K_2_2.json", "charts/K_2_3.json", "charts/K_2_4.json"}) {
      auto rep = verify_chart(ChartFixture::load(path), 7);
      if (!rep.pass) {
        c.detail = std::string(path) + ": " + std::to_string(rep.failures()) + " failed checks";
        return false;
      }
    }
    return true;
  });

  cs.push_back({"4/7 cochain fixture verifies at p=7 and p=11", 5.0});
  run(cs.back(), [](Criterion& c) {
    auto fx = CobarFixture::load("cobar/quad_module_cobar.json");
    for (uint64_t p : {uint64_t(7), uint64_t(11)}) {
      auto rep = verify_cobar(fx, p);
      if (!rep.pass) {
        c.detail = "p=" + std::to_string(p) + ": " + std::to_string(rep.failures()) + " failed checks";
        return false;
      }
    }
    return true;
  });

  cs.push_back({"5/7 regrading table, both periods, and the four known discrepancies at p=7", 5.0});
  run(cs.back(), [](Criterion& c) {
    auto fx = RegradeFixture::load("regrade/v3_top_table.json");
    if (fx.rows.size() != 23) {
      c.detail = "expected 23 table rows, found " + std::to_string(fx.rows.size());
      return false;
    }
    auto rep = verify_regrade(fx, 7, -30, 30);
    if (!rep.pass) {
      c.detail = std::to_string(rep.failures()) + " failed checks";
      return false;
    }
    const std::vector<std::string> want_frag = {
        "stated repeat",
        "degree -14: computed coefficient 2, stated 1",
        "degree -13: computed coefficient 3, stated 1",
        "degree -12: computed coefficient 3, stated 2",
    };
    if (rep.discrepancies.size() != want_frag.size()) {
      c.detail = "expected 4 discrepancy flags, found " + std::to_string(rep.discrepancies.size());
      return false;
    }
    for (size_t i = 0; i < want_frag.size(); ++i)
      if (rep.discrepancies[i].find(want_frag[i]) == std::string::npos) {
        c.detail = "flag " + std::to_string(i) + " reads: " + rep.discrepancies[i];
        return false;
      }
    return true;
  });

  cs.push_back({"6/7 property sweep over the parameter grid, zero failures", 60.0});
  run(cs.back(), [](Criterion& c) {
    std::ostringstream out, err;
    int code = run_cli({"sweep"}, out, err);
    if (code != 0) {
      auto text = out.str();
      auto pos = text.rfind("sweep:");
      c.detail = pos == std::string::npos ? err.str() : text.substr(pos);
      return false;
    }
    return true;
  });

  cs.push_back({"7/7 bigraded dimensions summed over t match whole-complex dimensions (m=2,3,4; p=7)", 30.0});
  run(cs.back(), [](Criterion& c) {
    for (uint32_t m : {2u, 3u, 4u}) {
      Dga K(DgaParams{quad_module(7, m)});
      Complex C(K);
      if (C.poincare() != C.whole_dims()) {
        c.detail = "m=" + std::to_string(m) + ": " + join(C.poincare()) + " vs " + join(C.whole_dims());
        return false;
      }
    }
    return true;
  });

  bool all = true;
  for (const auto& c : cs) {
    all = all && c.pass;
    std::printf("%s %s (%.2fs)%s%s\n", c.pass ? "PASS" : "FAIL", c.name.c_str(), c.elapsed_s,
                c.detail.empty() ? "" : " — ", c.detail.c_str());
  }
  std::printf("acceptance: %s\n", all ? "PASS" : "FAIL");
  return all ? 0 : 1;
}
