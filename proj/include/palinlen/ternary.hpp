#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace palinlen {

/// 3^k; defined for k <= 40 (the largest power of three below 2^64).
std::uint64_t pow3(unsigned k);

/// Largest k with 3^k <= n.  Requires n >= 1.
unsigned floor_log3(std::uint64_t n);

/// Smallest power of three >= n (so 1 for n in {0, 1}).
std::uint64_t smallest_pow3_geq(std::uint64_t n);

/// Ternary expansion, most significant digit first; 0 maps to the empty
/// string and every other value starts with a nonzero digit.
std::string to_ternary(std::uint64_t n);

/// Value of a digit string.  Leading zeros are accepted; anything that is
/// not a ternary digit, or a value beyond 64 bits, raises DomainError.
std::uint64_t from_ternary(std::string_view x);

/// True when x is the canonical expansion of some value: empty, or ternary
/// digits with a nonzero leading digit.
bool is_canonical_ternary(std::string_view x);

/// Ternary complement: the expansion of 3^k - n where k is the unique
/// exponent with 2 * 3^(k-1) <= n <= 3^k.  Defined exactly for canonical
/// expansions of the form 1 0^j (giving the empty string) or those starting
/// with digit 2 (giving the expansion of 3^|x| - n); DomainError otherwise.
std::string overline(std::string_view x);

/// Maximal run of the digit 2.  Positions are 0-based offsets into the
/// input string.
struct SmallGroup {
  std::size_t start = 0;
  std::size_t length = 0;
};

/// Maximal block of 2-runs separated by single zeros; it starts and ends
/// with digit 2 and is dense when some run inside has length >= 2.
struct LargeGroup {
  std::size_t start = 0;
  std::size_t length = 0;
  bool dense = false;
};

struct GroupDecomposition {
  std::vector<SmallGroup> small_groups;
  std::vector<LargeGroup> large_groups;
  std::size_t dense_count() const;
};

/// Group structure of a string over the digits {0, 2}.  Every small group
/// lies inside exactly one large group; DomainError if any other character
/// (including the digit 1) appears.
GroupDecomposition decompose_groups(std::string_view x);

}  // namespace palinlen
