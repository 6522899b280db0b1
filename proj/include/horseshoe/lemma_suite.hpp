#ifndef HORSESHOE_LEMMA_SUITE_HPP
#define HORSESHOE_LEMMA_SUITE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "horseshoe/arrangement.hpp"

namespace horseshoe {

// Randomized verification of the separation-toolkit invariants. Each
// check draws instances that satisfy the hypotheses of the statement
// under test (rejection sampling backed by exact validity predicates)
// and confronts the fast-path computation with a brute-force oracle
// plus the statement's own inequality.
struct LemmaReport {
    std::string name;
    long long checked = 0;     // instances satisfying all hypotheses
    long long discarded = 0;   // draws rejected before checking
    long long violations = 0;  // inequality / structure failures
    long long mismatches = 0;  // fast path vs oracle disagreements
    int min_slack = -1;        // tightest inequality margin seen (-1: n/a)
    double seconds = 0.0;
    std::string note;          // first failure description, if any
};

int default_thread_count();

// offsets {i : A cap (B+(i,0)) != empty} form an integer interval for
// arcs whose projections are embedded
LemmaReport check_theta_interval(std::uint64_t seed, long long count, int threads);
// |nu(A,K) - nu(B,K)| <= 2*theta(A,B) + 1 for arcs A,B sharing endpoints
LemmaReport check_nu_theta(std::uint64_t seed, long long count, int threads);
// sep+ + sep- >= |nu(gamma, A)| on essential staircase configurations
LemmaReport check_sep_inequality(std::uint64_t seed, long long count, int threads);
// qualifying mu-offsets form an integer interval for embedded arcs
LemmaReport check_mu_interval(std::uint64_t seed, long long count, int threads);

std::vector<LemmaReport> check_all(std::uint64_t seed, long long count, int threads);
std::string format_report(const LemmaReport& r);

} // namespace horseshoe

#endif
