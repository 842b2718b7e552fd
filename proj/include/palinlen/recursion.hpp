#pragma once

#include <cstdint>
#include <string_view>
#include <unordered_map>

namespace palinlen {

/// Memoized evaluation of p, q and q_j through their self-similar
/// recurrences over powers of three.  Instances are cheap and independent;
/// results are plain values.  Not safe for concurrent use — give each
/// thread its own instance.
class Recursion {
 public:
  /// Palindromic length of s[1..n].
  int p(std::uint64_t n);

  /// min over j of the palindromic length of b^j s[1..n].
  int q(std::uint64_t n);

  /// Palindromic length of b^j s[1..n].
  int qj(std::uint64_t j, std::uint64_t n);

  /// q evaluated on a ternary expansion by digit surgery: strip a leading 1,
  /// or branch on the tail and the ternary complement under a leading 2.
  /// Shares no logic or cache with q(n); the two routes check each other.
  int q_ternary(std::string_view x);

  /// p(n) - q(n); always 0 or 1.
  int t(std::uint64_t n) { return p(n) - q(n); }

 private:
  std::unordered_map<std::uint64_t, int> p_cache_;
  std::unordered_map<std::uint64_t, int> q_cache_;
  std::unordered_map<std::uint64_t, int> qj_cache_;
  std::unordered_map<std::uint64_t, int> q3_cache_;
};

}  // namespace palinlen
