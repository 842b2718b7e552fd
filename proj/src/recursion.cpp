#include "palinlen/recursion.hpp"

#include <algorithm>
#include <limits>

#include "palinlen/errors.hpp"
#include "palinlen/ternary.hpp"

namespace palinlen {

namespace {

std::uint64_t qj_key(std::uint64_t j, std::uint64_t n) {
  // Arguments stay far below 2^32 in practice; the packing just needs to
  // be collision-free.
  return (j << 32) | n;
}

}  // namespace

int Recursion::p(std::uint64_t n) {
  if (n == 0) return 0;
  if (auto it = p_cache_.find(n); it != p_cache_.end()) return it->second;
  const std::uint64_t low = pow3(floor_log3(n));
  int value;
  if (n == low) {
    value = 1;  // the prefix of length 3^k is itself a palindrome
  } else if (n <= 2 * low) {
    value = 2;
  } else {
    // Split after the central b-block, or reflect inside s[1..3^(k+1)].
    value = std::min(2 + q(n - 2 * low), 1 + p(3 * low - n));
  }
  p_cache_.emplace(n, value);
  return value;
}

int Recursion::q(std::uint64_t n) {
  if (n == 0) return 0;
  if (auto it = q_cache_.find(n); it != q_cache_.end()) return it->second;
  const std::uint64_t low = pow3(floor_log3(n));
  int value;
  if (n <= 2 * low) {
    value = 1;  // some b-padding turns the prefix into one palindrome
  } else {
    value = 1 + std::min(q(n - 2 * low), q(3 * low - n));
  }
  q_cache_.emplace(n, value);
  return value;
}

int Recursion::qj(std::uint64_t j, std::uint64_t n) {
  if (n == 0) return j == 0 ? 0 : 1;
  if (n == 1) return j == 0 ? 1 : 2;
  const std::uint64_t key = qj_key(j, n);
  if (auto it = qj_cache_.find(key); it != qj_cache_.end()) return it->second;
  const std::uint64_t low = pow3(floor_log3(n));
  int value;
  if (n <= 2 * low) {
    // Inside the band [3^k, 2*3^k] the padded word is a palindrome exactly
    // when the padding matches the prefix overhang.
    value = (n == low + j) ? 1 : 2;
  } else if (j <= low) {
    value = 1 + std::min(qj(low - j, n - 2 * low), qj(j, 3 * low - n));
  } else {
    // Padding longer than 3^k: the first palindrome of an optimal
    // factorization swallows the padding, leaving a shorter-padded rest.
    int best = std::numeric_limits<int>::max();
    for (std::uint64_t m = 0; m <= low; ++m) {
      best = std::min(best, qj(m, n));
    }
    value = 1 + best;
  }
  qj_cache_.emplace(key, value);
  return value;
}

int Recursion::q_ternary(std::string_view x) {
  const std::size_t first = x.find_first_not_of('0');
  if (first == std::string_view::npos) return 0;
  x.remove_prefix(first);
  if (x.front() == '1') return 1;
  if (x.front() != '2') {
    throw DomainError(std::string("'") + x.front() + "' is not a ternary digit");
  }
  const std::uint64_t key = from_ternary(x);
  if (auto it = q3_cache_.find(key); it != q3_cache_.end()) return it->second;
  // Leading digit 2: drop it, or complement the whole expansion.
  const std::string comp = overline(x);
  const int value = 1 + std::min(q_ternary(x.substr(1)), q_ternary(comp));
  q3_cache_.emplace(key, value);
  return value;
}

}  // namespace palinlen
