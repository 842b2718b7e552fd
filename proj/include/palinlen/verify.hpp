#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace palinlen {

/// Outcome of one property check: how many cases were examined and, on
/// failure, the first counterexample in printable form.
struct PropertyResult {
  std::string name;
  bool pass = false;
  std::uint64_t checked = 0;
  std::string detail;
};

/// Knobs for the property suites.  The deep sweeps run to `horizon`;
/// the quadratic oracle comparisons keep their own smaller ranges.
struct VerifyOptions {
  std::uint64_t horizon = 59049;       // 3^10
  std::uint64_t oracle_p_max = 2000;   // oracle vs recursion for p
  std::uint64_t oracle_q_max = 1000;   // oracle vs recursion for q
  std::uint64_t oracle_qj_j_max = 27;  // oracle vs recursion grid for q_j
  std::uint64_t oracle_qj_n_max = 729;
  unsigned fibonacci_k_max = 16;
  std::uint64_t product_range = 6561;  // 3^8
  std::size_t oracle_limit = 20000;    // hard cap on oracle word length
  std::uint32_t random_seed = 20260822;
};

// Individual properties.  Each returns a self-describing result and never
// throws on mere failure; genuine misuse (limits) still raises.

// Ground truth and the word itself.
PropertyResult prop_sierpinski_structure(const VerifyOptions& opt);
PropertyResult prop_pl_steps_and_palindromes(const VerifyOptions& opt);
PropertyResult prop_pl_mirror_invariance(const VerifyOptions& opt);
PropertyResult prop_pl_concat_bound(const VerifyOptions& opt);
PropertyResult prop_oracle_p_agreement(const VerifyOptions& opt);
PropertyResult prop_oracle_q_agreement(const VerifyOptions& opt);
PropertyResult prop_oracle_qj_agreement(const VerifyOptions& opt);
PropertyResult prop_qj_unit_band(const VerifyOptions& opt);
PropertyResult prop_oracle_reflection(const VerifyOptions& opt);
PropertyResult prop_q_minimum_attained(const VerifyOptions& opt);

// Recurrences against each other.
PropertyResult prop_reflection_bound(const VerifyOptions& opt);
PropertyResult prop_step_bounds(const VerifyOptions& opt);
PropertyResult prop_q_is_min_over_qj(const VerifyOptions& opt);
PropertyResult prop_unit_values(const VerifyOptions& opt);
PropertyResult prop_split_point_consistency(const VerifyOptions& opt);
PropertyResult prop_t_is_zero_or_one(const VerifyOptions& opt);
PropertyResult prop_q_ternary_agreement(const VerifyOptions& opt);

// Digit closed forms.
PropertyResult prop_ternary_complement(const VerifyOptions& opt);
PropertyResult prop_group_structure(const VerifyOptions& opt);
PropertyResult prop_cf_q_agreement(const VerifyOptions& opt);
PropertyResult prop_cf_t_agreement(const VerifyOptions& opt);
PropertyResult prop_q_vs_complement(const VerifyOptions& opt);
PropertyResult prop_s_membership(const VerifyOptions& opt);
PropertyResult prop_cf_dq_agreement(const VerifyOptions& opt);
PropertyResult prop_cf_dt_agreement(const VerifyOptions& opt);
PropertyResult prop_cf_dp_agreement(const VerifyOptions& opt);

// Automata and morphic systems.
PropertyResult prop_dfao_leading_zeros(const VerifyOptions& opt);
PropertyResult prop_dfao_reachability(const VerifyOptions& opt);
PropertyResult prop_descent_vs_buffer(const VerifyOptions& opt);
PropertyResult prop_dfao_vs_morphic(const VerifyOptions& opt);
PropertyResult prop_automata_vs_recursion(const VerifyOptions& opt);

// Product construction.
PropertyResult prop_product_pair_count(const VerifyOptions& opt);
PropertyResult prop_product_reconstruction(const VerifyOptions& opt);
PropertyResult prop_product_output(const VerifyOptions& opt);
PropertyResult prop_product_diagonal(const VerifyOptions& opt);

// Counting.
PropertyResult prop_fibonacci_count(const VerifyOptions& opt);

// Named suites, as exposed by the command line tool.
std::vector<PropertyResult> verify_oracle(const VerifyOptions& opt = {});
std::vector<PropertyResult> verify_symmetry(const VerifyOptions& opt = {});
std::vector<PropertyResult> verify_closed_form(const VerifyOptions& opt = {});
std::vector<PropertyResult> verify_automata(const VerifyOptions& opt = {});
std::vector<PropertyResult> verify_product(const VerifyOptions& opt = {});
std::vector<PropertyResult> verify_fibonacci(const VerifyOptions& opt = {});
std::vector<PropertyResult> verify_all(const VerifyOptions& opt = {});

/// Suite lookup by name ("oracle", "symmetry", "closed-form", "automata",
/// "product", "fibonacci", "all"); DomainError for anything else.
std::vector<PropertyResult> verify_suite(std::string_view suite,
                                         const VerifyOptions& opt = {});

}  // namespace palinlen
