#pragma once

#include <cstdint>
#include <string_view>

namespace palinlen {

/// q read off the ternary digits alone: normalize the expansion (replace
/// everything from the first 1 on by a single 2, else strip trailing
/// zeros), then count small groups plus dense large groups.
int cf_q(std::string_view x);

/// q(x) - q(overline(x)) for x over {0, 2} ending in 2: 1 when the first
/// large group of x is dense, else 0.  DomainError off that domain.
int cf_q_vs_overline(std::string_view x);

/// Why a ternary expansion belongs to the set where p and q agree.
enum class SReason { kEmpty, kPowerOfThree, kBlockPattern, kRejected };

struct SMembership {
  bool value = false;
  SReason reason = SReason::kRejected;
};

/// Membership in the set of expansions with p = q: the empty expansion,
/// powers of three (1 0^j), and chains of dense blocks 22+ separated by
/// 00+ with an optional trailing 0+ 1 0* or 0* tail.
SMembership in_S(std::string_view x);

const char* to_string(SReason reason);

/// t = p - q from the digits: 0 on members of the set above, 1 otherwise.
int cf_t(std::string_view x);

/// First differences q(n+1) - q(n), t(n+1) - t(n) and p(n+1) - p(n),
/// each decided by a digit pattern of n; values are always in {-1, 0, 1}
/// and the third is the sum of the first two.
int cf_dq(std::uint64_t n);
int cf_dt(std::uint64_t n);
int cf_dp(std::uint64_t n);

inline constexpr unsigned kDefaultCountSMax = 16;

/// Number of n in [0, 3^k] with p(n) = q(n): direct enumeration for
/// k <= 10, continued by the Fibonacci recurrence the counts satisfy.
/// Throws ResourceLimitError beyond max_k.
std::uint64_t count_S(unsigned k, unsigned max_k = kDefaultCountSMax);

}  // namespace palinlen
