#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace skein {

// one property line of a check run
struct CheckResult {
  std::string property;
  long long cases = 0;
  long long failures = 0;
};

// The individual properties, parameterized so the CLI suites and the full
// acceptance run share one implementation at different scales. Every check
// is deterministic in (parameters, seed).

// the three skein relations at every crossing of random classical diagrams
CheckResult check_skein_relations(int diagrams, int max_crossings, std::uint32_t seed);
// jones(unknot), conway(2-unlink), homfly(2-unlink)
CheckResult check_normalizations();
// homfly -> conway and homfly -> jones substitutions against the direct
// computations, over the whole classical table
CheckResult check_specializations(int max_arrows);
// random r-move applications leave every implemented invariant unchanged
CheckResult check_rmove_invariance(int applications, std::uint32_t seed);
// one rule's registered preserves-list, over random carriers with sites
CheckResult check_move_preservation(const std::string& rule, int applications,
                                    std::uint32_t seed);
// J = 0 and W = 0 across the classical table, J(virtual trefoil) = 2
CheckResult check_classicality(int max_arrows);
// arf and J are additive under connected sum
CheckResult check_additivity();
// decide_quotient never contradicts a quotient-preserved invariant
CheckResult check_quotient_consistency(int pairs, std::uint32_t seed);
// equivalent_mod never says Equivalent across a preserved-invariant gap
CheckResult check_search_soundness(int pairs, std::uint32_t seed);

// suite in {skein, rmoves, preservation, quotients, all}; bad_input otherwise
std::vector<CheckResult> run_check_suite(const std::string& suite, std::uint32_t seed);

}  // namespace skein
