#include "palinlen/pl_oracle.hpp"

#include <algorithm>
#include <utility>

#include "palinlen/errors.hpp"
#include "palinlen/ternary.hpp"
#include "palinlen/words.hpp"

namespace palinlen {

namespace {

// Penalty added to candidates whose suffix is not palindromic; larger than
// any reachable palindromic length, so they never win the minimum.
constexpr std::int32_t kInfeasible = std::int32_t{1} << 24;

void check_limit(std::size_t length, std::size_t limit, const char* what) {
  if (length > limit) {
    throw ResourceLimitError(std::string(what) + " of length " +
                             std::to_string(length) +
                             " exceeds the oracle limit of " +
                             std::to_string(limit));
  }
}

}  // namespace

PlTable pl_table(std::string_view w, std::size_t limit) {
  check_limit(w.size(), limit, "word");
  PlTable t;
  t.word.assign(w);
  const std::size_t n = w.size();
  t.pl.assign(n + 1, 0);
  if (n == 0) return t;

  // prev[j] says whether w[j..i-1] is a palindrome (1-based positions);
  // one pass per end position i updates the flags in place and folds the
  // minimum over factorizations into the same loop.
  std::vector<std::uint8_t> prev(n + 2, 0);
  std::vector<std::uint8_t> cur(n + 2, 0);
  const char* letters = t.word.data();
  for (std::size_t i = 1; i <= n; ++i) {
    const char c = letters[i - 1];
    prev[i] = 1;      // empty suffix w[i..i-1]
    prev[i + 1] = 1;  // stands in for w[i+1..i-1] when j = i
    std::int32_t best = kInfeasible;
    for (std::size_t j = 1; j <= i; ++j) {
      const std::uint8_t ok =
          static_cast<std::uint8_t>(letters[j - 1] == c) & prev[j + 1];
      cur[j] = ok;
      const std::int32_t gap = (1 - static_cast<std::int32_t>(ok)) * kInfeasible;
      best = std::min(best, t.pl[j - 1] + gap);
    }
    t.pl[i] = best + 1;
    std::swap(prev, cur);
  }
  return t;
}

std::int32_t pl(std::string_view w, std::size_t limit) {
  return pl_table(w, limit).pl.back();
}

std::int32_t oracle_p(std::uint64_t n, std::size_t limit) {
  check_limit(n, limit, "prefix");
  return pl(shared_sierpinski().prefix(n), limit);
}

std::vector<std::int32_t> oracle_p_row(std::uint64_t n_max, std::size_t limit) {
  check_limit(n_max, limit, "prefix");
  return pl_table(shared_sierpinski().prefix(n_max), limit).pl;
}

std::int32_t oracle_qj(std::uint64_t j, std::uint64_t n, std::size_t limit) {
  check_limit(j + n, limit, "padded word");
  std::string w(j, 'b');
  w += shared_sierpinski().prefix(n);
  return pl(w, limit);
}

std::vector<std::int32_t> oracle_qj_row(std::uint64_t j, std::uint64_t n_max,
                                        std::size_t limit) {
  check_limit(j + n_max, limit, "padded word");
  std::string w(j, 'b');
  w += shared_sierpinski().prefix(n_max);
  PlTable t = pl_table(w, limit);
  // Drop the first j entries so row[n] covers b^j s[1..n].
  return std::vector<std::int32_t>(t.pl.begin() + static_cast<std::ptrdiff_t>(j),
                                   t.pl.end());
}

std::int32_t oracle_q(std::uint64_t n, std::size_t limit) {
  const std::uint64_t j_max = smallest_pow3_geq(n);
  std::int32_t best = oracle_qj(0, n, limit);
  for (std::uint64_t j = 1; j <= j_max; ++j) {
    best = std::min(best, oracle_qj(j, n, limit));
  }
  return best;
}

std::vector<std::int32_t> oracle_q_row(std::uint64_t n_max, std::size_t limit) {
  const std::uint64_t j_max = smallest_pow3_geq(n_max);
  check_limit(j_max + n_max, limit, "padded word");
  std::vector<std::int32_t> row(n_max + 1, 0);
  std::vector<std::int32_t> bound(n_max + 1, 0);
  for (std::uint64_t n = 0; n <= n_max; ++n) {
    bound[n] = static_cast<std::int32_t>(smallest_pow3_geq(n));
  }
  bool first = true;
  for (std::uint64_t j = 0; j <= j_max; ++j) {
    const std::vector<std::int32_t> qj = oracle_qj_row(j, n_max, limit);
    for (std::uint64_t n = 0; n <= n_max; ++n) {
      if (static_cast<std::int32_t>(j) > bound[n]) continue;
      if (first) {
        row[n] = qj[n];
      } else {
        row[n] = std::min(row[n], qj[n]);
      }
    }
    first = false;
  }
  return row;
}

}  // namespace palinlen
