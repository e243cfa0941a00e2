#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ncprob {

/// One verified identity or property. `detail` carries the first observed
/// counterexample when the check fails (and is empty otherwise).
struct CheckResult {
    std::string name;
    bool pass = true;
    std::string detail;
};

struct SuiteResult {
    std::string suite;
    std::vector<CheckResult> checks;
    bool ok() const;
};

/// Exhaustive lattice checks: enumeration counts against Catalan numbers,
/// the complement block-count identity, the relative-complement cardinality
/// identity, and the two-sided order anti-isomorphism of the complement map.
/// Depths are min(max_n, per-check cap); the count check caps at 10, the
/// exhaustive ones at 6.
SuiteResult lattice_suite(int max_n);

/// Randomized functional checks (200 draws, fixed seed): moment/cumulant
/// round trips, the Leibniz route for the infinitesimal cumulant layer
/// against the Moebius route, and the projection cumulant-sum identity
/// sum_{pi <= sigma} kappa'_pi[p,...,p] = -|sigma| for every sigma in NC(n),
/// n <= min(max_n, 7).
SuiteResult cumulant_suite(int max_n, std::uint64_t seed = 1);

/// Independence-engine closure (every engine's joint passes its own law
/// checker to word length min(max_n, 6)), the two equivalence theorems on
/// constructed scenarios to length min(max_n, 5), and the convolution
/// calculus: dual-route free convolution to order 10, the c-free
/// degenerations, and the two perturbation identities to order 8.
SuiteResult engine_suite(int max_n);

/// Compression checks on randomized free inputs (fixed seed): the compressed
/// phi' of a word computed by direct expansion, by the complement-weighted
/// cumulant formula, and by the unit-slot expansion; the product-vs-
/// interleaved cumulant-sum identity; and the anti-commutator values (4, 6).
SuiteResult bprime_suite(int max_n, std::uint64_t seed = 2);

/// Transform checks: the semicircle transform by the coefficient recursion
/// and by the partition formula (t2 = 2, t4 = 6), and agreement of the two
/// routes on the diagonal to order min(max_n, 10).
SuiteResult mk_suite(int max_n);

/// Monte Carlo acceptance run over N in {64, 128, 256} with the given sample
/// count and seed: exact corner-projection traces, main words of degree <= 4
/// and perturbation words of degree <= 3 within 3*stderr + 5/N of the engine
/// predictions, and no error growth across the size grid beyond noise.
SuiteResult rmt_suite(int samples = 200, std::uint64_t seed = 5);

/// `which` in {lattice, cumulants, engines, bprime, mk, all}; throws
/// std::invalid_argument on anything else. `all` runs the five exact suites
/// (the Monte Carlo suite is separate; it is statistical, not exact).
std::vector<SuiteResult> run_suites(const std::string& which, int max_n);

}  // namespace ncprob
