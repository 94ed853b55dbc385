// Runs each acceptance criterion and prints one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <string>

#include "softtop/golden_corpus.hpp"

using namespace softtop;

namespace {

using Clock = std::chrono::steady_clock;

double millis_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass;
  std::string detail;
};

Outcome item(const std::string& id, double limit_ms = 0) {
  for (const auto& it : corpus::items()) {
    if (it.id != id) continue;
    const corpus::ItemResult r = corpus::run_item(it);
    const bool in_time = limit_ms == 0 || r.millis < limit_ms;
    std::string detail = r.detail + ", " + std::to_string(static_cast<long>(r.millis)) + " ms";
    if (!in_time) detail += " (limit " + std::to_string(static_cast<long>(limit_ms)) + " ms)";
    return {r.pass && in_time, detail};
  }
  return {false, "no corpus item " + id};
}

Outcome all_of(std::initializer_list<Outcome> parts) {
  Outcome out{true, ""};
  for (const auto& p : parts) {
    out.pass = out.pass && p.pass;
    out.detail += (out.detail.empty() ? "" : "; ") + p.detail;
  }
  return out;
}

Outcome verify_paper_cli() {
  const auto t0 = Clock::now();
  const std::string cmd = std::string("\"") + SOFTTOP_CLI_PATH + "\" --format machine verify-paper > /dev/null";
  const int status = std::system(cmd.c_str());
  const double ms = millis_since(t0);
  const bool ok = status == 0 && ms < 120000;
  return {ok, "exit status " + std::to_string(status) + ", " + std::to_string(static_cast<long>(ms)) + " ms"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"pre-open not alpha-open example", [] { return item("ex33-pre-not-alpha", 10); }},
      {"beta-open intersection example", [] { return item("ex36-beta-open-intersection"); }},
      {"beta-closed union example", [] { return item("ex38-beta-closed-union"); }},
      {"beta-continuous not semi-continuous example", [] { return item("ex43-beta-not-semi-continuous"); }},
      {"beta-continuous not pre-continuous example", [] { return item("ex44-beta-not-pre-continuous"); }},
      {"composition of beta-continuous maps example", [] { return item("ex47-composition"); }},
      {"hierarchy implications on the random corpus", [] { return item("hierarchy", 30000); }},
      {"theorem suite on the random corpus",
       [] {
         return all_of({item("beta-open-supratopology"), item("beta-closed-intersections"),
                        item("semi-closed-beta-open"), item("indiscrete-beta-is-pre"),
                        item("beta-closed-characterization"), item("beta-open-alpha-closed")});
       }},
      {"beta-continuity criteria agree", [] { return item("beta-continuity-criteria", 60000); }},
      {"homeomorphism groups", [] { return item("homeomorphism-groups"); }},
      {"operator oracles agree", [] { return item("operator-oracles"); }},
      {"verify-paper end to end", verify_paper_cli},
  };
  std::size_t failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o{false, ""};
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += o.pass ? 0 : 1;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << (i + 1) << ": " << criteria[i].first << " ("
              << o.detail << ")\n";
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
