// Acceptance suite: one pass/fail line per criterion, exit 0 only if all
// pass. Criteria mirror the verification suites plus codec and isomorphism
// anchors; every tolerance is exact.

#include <chrono>
#include <iostream>
#include <random>

#include "cis/families.hpp"
#include "cis/graph6.hpp"
#include "cis/report.hpp"
#include "cis/suites.hpp"

using namespace cis;

namespace {

int failures = 0;

void criterion(int number, const std::string& what, const std::function<bool(std::string&)>& body) {
    auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (ok ? "PASS" : "FAIL") << " criterion-" << number << ": " << what;
    if (!detail.empty()) std::cout << " [" << detail << "]";
    std::cout << " (" << secs << " s)" << std::endl;
    if (!ok) ++failures;
}

bool suite_ok(const SuiteResult& r, std::string& detail) {
    detail = std::to_string(r.cases_passed) + "/" + std::to_string(r.cases_run) + " cases";
    for (std::size_t i = 0; i < r.counterexamples.size() && i < 3; ++i)
        detail += "; counterexample " + r.counterexamples[i].first + " " + r.counterexamples[i].second;
    return r.passed() && r.cases_run > 0;
}

} // namespace

int main() {
    SuiteOptions opt; // seed 0 everywhere; jobs tuned per scan below
    opt.jobs = 4;

    criterion(1, "families suite: L(K_{n,n}) n=1..8, Q_n n=4..16, Q_3 not CIS, R_n n=2..6, S_n n=2..5",
              [&](std::string& d) { return suite_ok(suite_families(opt), d); });

    criterion(2, "isomorphism anchor: R_2 = Q_4 = complement(S_2) by canonical form",
              [&](std::string& d) {
                  std::string a = canonical_form(r_graph(2));
                  std::string b = canonical_form(q_graph(4));
                  std::string c = canonical_form(complement(s_graph(2)));
                  d = "canonical forms " + std::string(a == b && b == c ? "agree" : "differ");
                  return a == b && b == c;
              });

    criterion(3, "locals suite: extremal counts 1,1,2,1 and Q_5 local graphs",
              [&](std::string& d) { return suite_ok(suite_locals(opt), d); });

    criterion(4, "valency-7 positive list: connected, vertex-transitive, valency <= 7, CIS",
              [&](std::string& d) { return suite_ok(suite_valency7_positive(opt), d); });

    criterion(5, "vt_cis_check agrees with is_cis over the vertex-transitive corpus",
              [&](std::string& d) { return suite_ok(suite_vt_cis_equivalence(opt), d); });

    criterion(6, "closure laws: complement, union, product, irreducible quotient (seeded, 500 each)",
              [&](std::string& d) {
                  std::string d1, d2;
                  bool a = suite_ok(suite_lex_product(opt), d1);
                  bool b = suite_ok(suite_quotient(opt), d2);
                  d = d1 + " + " + d2;
                  return a && b;
              });

    criterion(7, "exhaustive n<=7 theorems: triangle-free, omega<=3, coollemma+P4, alpha*omega>=n",
              [&](std::string& d) {
                  std::string parts[4];
                  bool a = suite_ok(suite_triangle_free(opt), parts[0]);
                  bool b = suite_ok(suite_omega3_small(opt), parts[1]);
                  bool c = suite_ok(suite_coollemma(opt), parts[2]);
                  bool e = suite_ok(explore_q1(7, opt), parts[3]);
                  d = parts[0] + " + " + parts[1] + " + " + parts[2] + " + " + parts[3];
                  return a && b && c && e;
              });

    criterion(8, "non-Cayley check: Aut(Q_5) has no regular subgroup; C_5 and K_4 do",
              [&](std::string& d) { return suite_ok(suite_q_noncayley(opt), d); });

    criterion(9, "open-question scans: q1 and q3 empty, q2 reports chi=omega=4 for Q_4..Q_8",
              [&](std::string& d) { return suite_ok(suite_open_questions(opt), d); });

    criterion(10, "graph6 codec: round trip over corpus plus 1000 random graphs, K_4 <-> C~",
              [&](std::string& d) {
                  long cases = 0;
                  if (graph6_encode(complete_graph(4)) != "C~") return false;
                  if (!(graph6_decode("C~") == complete_graph(4))) return false;
                  ++cases;
                  for (const auto& [name, g] : valency7_list()) {
                      if (!(graph6_decode(graph6_encode(g)) == g)) {
                          d = "corpus round trip failed on " + name;
                          return false;
                      }
                      ++cases;
                  }
                  for (int n = 2; n <= 6; ++n) {
                      Graph g = r_graph(n);
                      if (!(graph6_decode(graph6_encode(g)) == g)) return false;
                      ++cases;
                  }
                  std::mt19937 rng(0);
                  for (int i = 0; i < 1000; ++i) {
                      int n = 1 + static_cast<int>(rng() % 100);
                      std::bernoulli_distribution edge(0.1 + 0.8 * (rng() % 100) / 100.0);
                      std::vector<std::pair<int, int>> edges;
                      for (int u = 0; u < n; ++u)
                          for (int v = u + 1; v < n; ++v)
                              if (edge(rng)) edges.emplace_back(u, v);
                      Graph g = Graph::from_edges(n, edges);
                      if (!(graph6_decode(graph6_encode(g)) == g)) {
                          d = "random round trip failed at case " + std::to_string(i);
                          return false;
                      }
                      ++cases;
                  }
                  d = std::to_string(cases) + " round trips";
                  return true;
              });

    std::cout << (failures == 0 ? "ALL CRITERIA PASSED" : std::to_string(failures) + " CRITERIA FAILED")
              << std::endl;
    return failures == 0 ? 0 : 1;
}
