#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ratpow/ideal.hpp"
#include "ratpow/numeric.hpp"

namespace ratpow {

// Identifies which identity a CheckReport exercised.
enum class TheoremId {
    containment,
    symbolic_primary_decomposition,
    binomial_rational,
    binomial_symbolic,
    ass_star_stabilization,
    splitting_stability,
};

// Kebab-case name, e.g. "binomial-rational".
std::string theorem_name(TheoremId id);
// Inverse of theorem_name; throws PreconditionError on an unknown name.
TheoremId theorem_from_name(const std::string& name);

// Outcome of checking one identity on one concrete instance.  Every check
// recomputes both sides of its identity through distinct code paths, so a
// pass is a genuine cross-validation and a fail carries a concrete monomial
// or prime witnessing the discrepancy.
struct CheckReport {
    TheoremId theorem;
    std::string instance;  // serialized inputs, enough to reproduce the run
    bool pass = false;
    std::optional<std::string> witness;  // present on every fail
    std::vector<std::string> notes;      // extra observations; never failures
};

// Structured text with one "field: value" line per field.
std::string report_to_text(const CheckReport& report);
// JSON object mirroring report_to_text.
std::string report_to_json(const CheckReport& report);

// With h the big height of I, verifies closure(I^{(h*u)}) subseteq
// closure(I^u) generator by generator.  Witness: a violating generator.
CheckReport check_containment(const MonomialIdeal& I, const Rational& u);

// Verifies closure(I^{(u)}) = intersection of closure(Q_i^{(u)}) over the
// minimal primary components (p_i, Q_i) of I, and that the associated primes
// of closure(I^{(u)}) are exactly the minimal primes of I.  Requires
// Ass(I) = Min(I); an embedded prime raises PreconditionError.
CheckReport check_symbolic_primary_decomposition(const MonomialIdeal& I, const Rational& u);

// For ideals I, J on disjoint variable blocks: with e the least common
// denominator realizing both filtrations and u = s/e, verifies
//   closure((I+J)^u) = sum_{i=0..s} closure(I^{i/e}) * closure(J^{(s-i)/e})
// inside the joined ring.  Witness: a generator in the symmetric difference.
CheckReport check_binomial_rational(const MonomialIdeal& I, const MonomialIdeal& J,
                                    const Rational& u);

// Symbolic counterpart over the common-denominator grid, both ideals
// squarefree.  Also verifies the saturated expansion with the per-power
// auxiliary radicals K, L; a mismatch between the saturated sum and the
// symbolic power itself is reported as a note, not a failure.
CheckReport check_binomial_symbolic(const MonomialIdeal& I, const MonomialIdeal& J,
                                    const Rational& u);

// Computes Ass(closure(I^{k/e})) for k = 1..k_max (e the stability
// denominator; k_max = 3e when 0 is passed) and reports the union and the
// last k that contributed a new prime.  Pass iff that k is strictly below
// k_max, i.e. at least one later step added nothing new.
CheckReport check_ass_star_stabilization(const MonomialIdeal& I, std::size_t k_max = 0);

// For a squarefree I, samples (k, m, j) triples with k <= 3, m in {2,3,5},
// 1 <= j <= m (in increasing cost order; `samples` = 0 means the full grid of
// 40) and verifies both splitting-compatibility conditions at each triple:
//   (a) every generator b of closure(I^{((k+1)/e)}) has m*b in
//       closure(I^{((k*m+j)/e)}), and
//   (b) closure(I^{((k*m+j)/(e*m))}) subseteq closure(I^{((k+1)/e)}),
// together with spot checks splitting the m-divisible generators.
CheckReport check_splitting_stability(const MonomialIdeal& I, std::size_t samples = 0);

// Random instances for the standard suite.  Both always return nonzero
// proper ideals; variable names are drawn from x, y, z, w, v.
MonomialIdeal random_squarefree_ideal(std::mt19937& rng, std::size_t max_vars = 5,
                                      std::size_t max_gens = 6);
MonomialIdeal random_monomial_ideal(std::mt19937& rng, std::size_t max_vars = 4,
                                    unsigned max_exp = 4, std::size_t max_gens = 5);

struct SuiteOptions {
    std::size_t instances_per_theorem = 200;
    std::uint64_t seed = 20260819;
};

// Runs every check on `instances_per_theorem` random instances per theorem
// and returns the reports sorted by theorem id, then instance hash.
std::vector<CheckReport> run_standard_suite(const SuiteOptions& options = {});

} // namespace ratpow
