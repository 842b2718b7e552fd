#include "palinlen/closed_form.hpp"

#include <string>

#include "palinlen/errors.hpp"
#include "palinlen/ternary.hpp"

namespace palinlen {

namespace {

void check_ternary_digits(std::string_view x) {
  for (char c : x) {
    if (c != '0' && c != '1' && c != '2') {
      throw DomainError(std::string("'") + c + "' is not a ternary digit");
    }
  }
}

bool all_zeros(std::string_view x) {
  return x.find_first_not_of('0') == std::string_view::npos;
}

bool all_twos(std::string_view x) {
  return x.find_first_not_of('2') == std::string_view::npos;
}

// Matches (22+00+)* 22+ (0* | 0+ 1 0*): dense 2-runs separated by zero
// runs of length >= 2, with an optional tail of zeros and at most one 1
// preceded by at least one zero.
bool matches_dense_chain(std::string_view x) {
  std::size_t i = 0;
  const std::size_t n = x.size();
  while (true) {
    std::size_t twos = 0;
    while (i + twos < n && x[i + twos] == '2') ++twos;
    if (twos < 2) return false;
    i += twos;
    if (i == n) return true;
    std::size_t zeros = 0;
    while (i + zeros < n && x[i + zeros] == '0') ++zeros;
    i += zeros;
    if (i == n) return true;
    if (x[i] == '1') return zeros >= 1 && all_zeros(x.substr(i + 1));
    if (zeros < 2) return false;  // blocks need a separator of >= 2 zeros
  }
}

// Matches (22+00+)* (2 | 2+ 1 2*): the dense chains truncated to either a
// final lone 2 or a 2-run carrying a 1 followed only by 2s.
bool matches_chain_with_unit_tail(std::string_view x) {
  std::size_t i = 0;
  const std::size_t n = x.size();
  while (true) {
    std::size_t twos = 0;
    while (i + twos < n && x[i + twos] == '2') ++twos;
    if (twos == 0) return false;
    i += twos;
    if (i == n) return twos == 1;
    if (x[i] == '1') return all_twos(x.substr(i + 1));
    std::size_t zeros = 0;
    while (i + zeros < n && x[i + zeros] == '0') ++zeros;
    i += zeros;
    if (i == n) return false;
    if (x[i] == '1') return false;
    if (twos < 2 || zeros < 2) return false;
  }
}

}  // namespace

int cf_q(std::string_view x) {
  check_ternary_digits(x);
  std::string normalized;
  std::string_view v = x;
  const std::size_t one = x.find('1');
  if (one != std::string_view::npos) {
    // Everything from the first 1 on collapses to a single closing 2.
    normalized.assign(x.substr(0, one));
    normalized += '2';
    v = normalized;
  } else {
    const std::size_t last = x.find_last_of('2');
    if (last == std::string_view::npos) return 0;
    v = x.substr(0, last + 1);
  }
  const GroupDecomposition g = decompose_groups(v);
  return static_cast<int>(g.small_groups.size() + g.dense_count());
}

int cf_q_vs_overline(std::string_view x) {
  if (x.empty() || x.front() != '2' || x.back() != '2') {
    throw DomainError("q-versus-complement expects a {0,2} string that starts "
                      "and ends with 2, got \"" +
                      std::string(x) + "\"");
  }
  const GroupDecomposition g = decompose_groups(x);  // rejects 1s
  return g.large_groups.front().dense ? 1 : 0;
}

SMembership in_S(std::string_view x) {
  check_ternary_digits(x);
  if (x.empty()) return {true, SReason::kEmpty};
  if (x.front() == '1' && all_zeros(x.substr(1))) {
    return {true, SReason::kPowerOfThree};
  }
  if (matches_dense_chain(x)) return {true, SReason::kBlockPattern};
  return {false, SReason::kRejected};
}

const char* to_string(SReason reason) {
  switch (reason) {
    case SReason::kEmpty: return "empty";
    case SReason::kPowerOfThree: return "power-of-three";
    case SReason::kBlockPattern: return "block-pattern";
    case SReason::kRejected: return "rejected";
  }
  return "unknown";
}

int cf_t(std::string_view x) { return in_S(x).value ? 0 : 1; }

int cf_dq(std::uint64_t n) {
  if (n == 0) return 1;
  const std::string x = to_ternary(n);
  if (x.find('1') != std::string::npos) return 0;
  const GroupDecomposition g = decompose_groups(x);
  const LargeGroup& last = g.large_groups.back();
  if (x.back() == '0') {
    if (x[x.size() - 2] == '0') return 1;
    return last.dense ? 0 : 1;
  }
  return last.dense ? -1 : 0;
}

int cf_dt(std::uint64_t n) {
  const std::string x = to_ternary(n);
  const SMembership m = in_S(x);
  if (m.value) {
    if (x.find('1') != std::string::npos) return 1;
    if (x.size() >= 2 && x[x.size() - 1] == '0' && x[x.size() - 2] == '2') {
      return 1;  // chain closed by exactly one zero so far
    }
    return 0;
  }
  return matches_chain_with_unit_tail(x) ? -1 : 0;
}

int cf_dp(std::uint64_t n) {
  const int value = cf_dq(n) + cf_dt(n);
  if (value < -1 || value > 1) {
    throw InternalError("difference of p out of range at n = " +
                        std::to_string(n));
  }
  return value;
}

std::uint64_t count_S(unsigned k, unsigned max_k) {
  if (k > max_k) {
    throw ResourceLimitError("count up to 3^" + std::to_string(k) +
                             " exceeds the configured maximum exponent " +
                             std::to_string(max_k));
  }
  const auto enumerate = [](unsigned kk) {
    std::uint64_t count = 0;
    const std::uint64_t top = pow3(kk);
    for (std::uint64_t n = 0; n <= top; ++n) {
      if (in_S(to_ternary(n)).value) ++count;
    }
    return count;
  };
  if (k <= 10) return enumerate(k);
  // The counts obey the Fibonacci recurrence; continue it from the last
  // two enumerable exponents.
  std::uint64_t a = enumerate(9);
  std::uint64_t b = enumerate(10);
  for (unsigned i = 11; i <= k; ++i) {
    const std::uint64_t next = a + b;
    a = b;
    b = next;
  }
  return b;
}

}  // namespace palinlen
