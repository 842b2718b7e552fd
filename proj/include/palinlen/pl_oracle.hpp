#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace palinlen {

inline constexpr std::size_t kDefaultOracleMax = 20000;

/// Palindromic lengths of all prefixes of a word: pl[i] is the smallest
/// number of palindromes whose concatenation equals w[1..i], with pl[0] = 0.
/// Consecutive entries differ by at most 1 and pl[i] == 1 exactly when the
/// prefix is a nonempty palindrome.
struct PlTable {
  std::string word;
  std::vector<std::int32_t> pl;
};

/// Dynamic program over palindromic suffixes, quadratic in |w|.  Throws
/// ResourceLimitError when |w| exceeds the limit.
PlTable pl_table(std::string_view w, std::size_t limit = kDefaultOracleMax);

/// Palindromic length of a whole word.
std::int32_t pl(std::string_view w, std::size_t limit = kDefaultOracleMax);

/// Ground-truth values on the Sierpinski word, all computed letter by
/// letter through pl_table with no use of the structural shortcuts they
/// exist to check.  The _row variants return values for every argument up
/// to n_max at the cost of a single table.
std::int32_t oracle_p(std::uint64_t n, std::size_t limit = kDefaultOracleMax);
std::vector<std::int32_t> oracle_p_row(std::uint64_t n_max,
                                       std::size_t limit = kDefaultOracleMax);

/// Palindromic length of b^j s[1..n].
std::int32_t oracle_qj(std::uint64_t j, std::uint64_t n,
                       std::size_t limit = kDefaultOracleMax);
std::vector<std::int32_t> oracle_qj_row(std::uint64_t j, std::uint64_t n_max,
                                        std::size_t limit = kDefaultOracleMax);

/// Minimum of oracle_qj(j, n) over j from 0 to the smallest power of three
/// that is >= n, the range on which the minimum is always attained.
std::int32_t oracle_q(std::uint64_t n, std::size_t limit = kDefaultOracleMax);
std::vector<std::int32_t> oracle_q_row(std::uint64_t n_max,
                                       std::size_t limit = kDefaultOracleMax);

}  // namespace palinlen
