#include "palinlen/verify.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "palinlen/automata.hpp"
#include "palinlen/closed_form.hpp"
#include "palinlen/errors.hpp"
#include "palinlen/pl_oracle.hpp"
#include "palinlen/recursion.hpp"
#include "palinlen/ternary.hpp"
#include "palinlen/words.hpp"

namespace palinlen {

namespace {

PropertyResult pass(std::string name, std::uint64_t checked) {
  return {std::move(name), true, checked, ""};
}

PropertyResult fail(std::string name, std::uint64_t checked,
                    std::string detail) {
  return {std::move(name), false, checked, std::move(detail)};
}

std::string at_n(std::uint64_t n) { return "n = " + std::to_string(n); }

std::string versus(long long lhs, long long rhs) {
  return std::to_string(lhs) + " vs " + std::to_string(rhs);
}

std::string random_ab_word(std::mt19937& rng, std::size_t length) {
  std::string w(length, 'a');
  for (char& c : w) c = (rng() & 1u) ? 'b' : 'a';
  return w;
}

// All strings over {0, 2} of the given length, by binary counter.
std::string zero_two_string(std::size_t length, std::uint64_t bits) {
  std::string x(length, '0');
  for (std::size_t i = 0; i < length; ++i) {
    if ((bits >> i) & 1u) x[i] = '2';
  }
  return x;
}

}  // namespace

PropertyResult prop_sierpinski_structure(const VerifyOptions& opt) {
  const std::string name = "sierpinski word: substitution structure";
  (void)opt;
  SierpinskiWord word;
  std::uint64_t checked = 0;
  if (word.prefix(9) != "ababbbaba") {
    return fail(name, checked, "prefix of length 9 is wrong");
  }
  ++checked;
  if (word.prefix(27) != "ababbbababbbbbbbbbababbbaba") {
    return fail(name, checked, "prefix of length 27 is wrong");
  }
  ++checked;
  for (unsigned k = 1; k <= 9; ++k) {
    const std::uint64_t third = pow3(k - 1);
    const std::string whole = word.prefix(3 * third);
    const std::string part = word.prefix(third);
    if (whole != part + std::string(third, 'b') + part) {
      return fail(name, checked,
                  "prefix of length 3^" + std::to_string(k) +
                      " is not wing + b-block + wing");
    }
    ++checked;
    if (!is_palindrome(whole)) {
      return fail(name, checked,
                  "prefix of length 3^" + std::to_string(k) +
                      " is not a palindrome");
    }
    ++checked;
  }
  for (unsigned k = 0; k <= 7; ++k) {
    const std::uint64_t third = pow3(k);
    const std::string whole = word.prefix(3 * third);
    for (std::uint64_t i = 0; i < third; ++i) {
      if (whole[2 * third + i] != whole[i]) {
        return fail(name, checked,
                    "position " + std::to_string(2 * third + i + 1) +
                        " does not repeat position " + std::to_string(i + 1));
      }
      ++checked;
    }
  }
  return pass(name, checked);
}

PropertyResult prop_pl_steps_and_palindromes(const VerifyOptions& opt) {
  const std::string name = "palindromic length table: unit steps, 1 iff palindrome";
  const std::uint64_t n_max = opt.oracle_p_max;
  const std::vector<std::int32_t> row = oracle_p_row(n_max, opt.oracle_limit);
  const std::string w = shared_sierpinski().prefix(n_max);
  std::uint64_t checked = 0;
  for (std::uint64_t i = 1; i <= n_max; ++i) {
    if (std::abs(row[i] - row[i - 1]) > 1) {
      return fail(name, checked, at_n(i) + ": step larger than 1");
    }
    const bool unit = row[i] == 1;
    const bool pal = is_palindrome(std::string_view(w).substr(0, i));
    if (unit != pal) {
      return fail(name, checked, at_n(i) + ": value 1 and palindromy disagree");
    }
    checked += 2;
  }
  return pass(name, checked);
}

PropertyResult prop_pl_mirror_invariance(const VerifyOptions& opt) {
  const std::string name = "palindromic length: mirror invariance";
  std::mt19937 rng(opt.random_seed);
  std::uint64_t checked = 0;
  for (int sample = 0; sample < 40; ++sample) {
    const std::size_t length = 1 + rng() % 400;
    const std::string w = random_ab_word(rng, length);
    const std::int32_t lhs = pl(w, opt.oracle_limit);
    const std::int32_t rhs = pl(mirror(w), opt.oracle_limit);
    if (lhs != rhs) {
      return fail(name, checked, "word \"" + w + "\": " + versus(lhs, rhs));
    }
    ++checked;
  }
  return pass(name, checked);
}

PropertyResult prop_pl_concat_bound(const VerifyOptions& opt) {
  const std::string name = "palindromic length: concatenation bounds";
  std::mt19937 rng(opt.random_seed + 1);
  std::uint64_t checked = 0;
  for (int sample = 0; sample < 60; ++sample) {
    const std::string u = random_ab_word(rng, 1 + rng() % 250);
    const std::string v = random_ab_word(rng, 1 + rng() % 250);
    const std::int32_t pu = pl(u, opt.oracle_limit);
    const std::int32_t pv = pl(v, opt.oracle_limit);
    const std::int32_t puv = pl(u + v, opt.oracle_limit);
    if (std::abs(pu - pv) > puv || puv > pu + pv) {
      return fail(name, checked,
                  "words \"" + u + "\", \"" + v + "\": |" +
                      std::to_string(pu) + " - " + std::to_string(pv) +
                      "| <= " + std::to_string(puv) + " <= " +
                      std::to_string(pu + pv) + " violated");
    }
    ++checked;
  }
  return pass(name, checked);
}

PropertyResult prop_oracle_p_agreement(const VerifyOptions& opt) {
  const std::string name = "p: recurrence matches letter-level oracle";
  const std::vector<std::int32_t> row =
      oracle_p_row(opt.oracle_p_max, opt.oracle_limit);
  Recursion rec;
  std::uint64_t checked = 0;
  for (std::uint64_t n = 0; n <= opt.oracle_p_max; ++n) {
    if (row[n] != rec.p(n)) {
      return fail(name, checked, at_n(n) + ": " + versus(row[n], rec.p(n)));
    }
    ++checked;
  }
  return pass(name, checked);
}

PropertyResult prop_oracle_q_agreement(const VerifyOptions& opt) {
  const std::string name = "q: recurrence matches letter-level oracle";
  const std::vector<std::int32_t> row =
      oracle_q_row(opt.oracle_q_max, opt.oracle_limit);
  Recursion rec;
  std::uint64_t checked = 0;
  for (std::uint64_t n = 0; n <= opt.oracle_q_max; ++n) {
    if (row[n] != rec.q(n)) {
      return fail(name, checked, at_n(n) + ": " + versus(row[n], rec.q(n)));
    }
    ++checked;
  }
  return pass(name, checked);
}

PropertyResult prop_oracle_qj_agreement(const VerifyOptions& opt) {
  const std::string name = "q_j: recurrence matches letter-level oracle";
  Recursion rec;
  std::uint64_t checked = 0;
  for (std::uint64_t j = 0; j <= opt.oracle_qj_j_max; ++j) {
    const std::vector<std::int32_t> row =
        oracle_qj_row(j, opt.oracle_qj_n_max, opt.oracle_limit);
    for (std::uint64_t n = 0; n <= opt.oracle_qj_n_max; ++n) {
      const int expected = rec.qj(j, n);
      if (row[n] != expected) {
        return fail(name, checked,
                    "j = " + std::to_string(j) + ", " + at_n(n) + ": " +
                        versus(row[n], expected));
      }
      ++checked;
    }
  }
  return pass(name, checked);
}

PropertyResult prop_qj_unit_band(const VerifyOptions& opt) {
  const std::string name = "q_j: value on the bands [3^k, 2*3^k] is 1 exactly "
                           "at n = 3^k + j, else 2";
  std::uint64_t checked = 0;
  for (std::uint64_t j = 0; j <= opt.oracle_qj_j_max; ++j) {
    const std::vector<std::int32_t> row =
        oracle_qj_row(j, opt.oracle_qj_n_max, opt.oracle_limit);
    for (unsigned k = 0; pow3(k) <= opt.oracle_qj_n_max; ++k) {
      const std::uint64_t low = pow3(k);
      const std::uint64_t high = std::min(2 * low, opt.oracle_qj_n_max);
      for (std::uint64_t n = low; n <= high; ++n) {
        const std::int32_t expected = (n == low + j) ? 1 : 2;
        if (row[n] != expected) {
          return fail(name, checked,
                      "j = " + std::to_string(j) + ", " + at_n(n) + ": " +
                          versus(row[n], expected));
        }
        ++checked;
      }
    }
  }
  return pass(name, checked);
}

PropertyResult prop_oracle_reflection(const VerifyOptions& opt) {
  const std::string name = "q_j oracle: reflection across 3^k moves the value "
                           "by at most 1";
  std::uint64_t checked = 0;
  const unsigned k_max = floor_log3(opt.oracle_qj_n_max);
  for (std::uint64_t j = 0; j <= opt.oracle_qj_j_max; ++j) {
    const std::vector<std::int32_t> row =
        oracle_qj_row(j, pow3(k_max), opt.oracle_limit);
    for (unsigned k = 0; k <= k_max; ++k) {
      const std::uint64_t top = pow3(k);
      for (std::uint64_t n = 0; n <= top; ++n) {
        if (std::abs(row[n] - row[top - n]) > 1) {
          return fail(name, checked,
                      "j = " + std::to_string(j) + ", k = " + std::to_string(k) +
                          ", " + at_n(n));
        }
        ++checked;
      }
    }
  }
  return pass(name, checked);
}

PropertyResult prop_q_minimum_attained(const VerifyOptions& opt) {
  const std::string name = "q: minimum over paddings is reached by j <= "
                           "smallest power of three >= n";
  const std::uint64_t n_max = 243;
  const std::uint64_t slack = 27;
  const std::uint64_t j_top = smallest_pow3_geq(n_max) + slack;
  std::vector<std::vector<std::int32_t>> rows;
  rows.reserve(j_top + 1);
  for (std::uint64_t j = 0; j <= j_top; ++j) {
    rows.push_back(oracle_qj_row(j, n_max, opt.oracle_limit));
  }
  std::uint64_t checked = 0;
  for (std::uint64_t n = 0; n <= n_max; ++n) {
    const std::uint64_t bound = smallest_pow3_geq(n);
    std::int32_t within = rows[0][n];
    for (std::uint64_t j = 1; j <= bound; ++j) {
      within = std::min(within, rows[j][n]);
    }
    std::int32_t beyond = within;
    for (std::uint64_t j = bound + 1; j <= j_top; ++j) {
      beyond = std::min(beyond, rows[j][n]);
    }
    if (within != beyond) {
      return fail(name, checked, at_n(n) + ": " + versus(within, beyond));
    }
    ++checked;
  }
  return pass(name, checked);
}

PropertyResult prop_reflection_bound(const VerifyOptions& opt) {
  const std::string name = "recurrences: reflection across 3^k moves q and "
                           "q_j by at most 1";
  Recursion rec;
  std::uint64_t checked = 0;
  const unsigned k_max = std::min(10u, floor_log3(std::max<std::uint64_t>(
                                           opt.horizon, 3)));
  for (unsigned k = 0; k <= k_max; ++k) {
    const std::uint64_t top = pow3(k);
    for (std::uint64_t n = 0; n <= top; ++n) {
      if (std::abs(rec.q(n) - rec.q(top - n)) > 1) {
        return fail(name, checked, "q, k = " + std::to_string(k) + ", " + at_n(n));
      }
      ++checked;
    }
  }
  for (std::uint64_t j = 0; j <= 27; ++j) {
    for (unsigned k = 0; k <= 6; ++k) {
      const std::uint64_t top = pow3(k);
      for (std::uint64_t n = 0; n <= top; ++n) {
        if (std::abs(rec.qj(j, n) - rec.qj(j, top - n)) > 1) {
          return fail(name, checked,
                      "q_j, j = " + std::to_string(j) + ", k = " +
                          std::to_string(k) + ", " + at_n(n));
        }
        ++checked;
      }
    }
  }
  return pass(name, checked);
}

PropertyResult prop_step_bounds(const VerifyOptions& opt) {
  const std::string name = "recurrences: consecutive p and q values differ by "
                           "at most 1";
  Recursion rec;
  std::uint64_t checked = 0;
  int prev_p = rec.p(0);
  int prev_q = rec.q(0);
  for (std::uint64_t n = 1; n <= opt.horizon; ++n) {
    const int cur_p = rec.p(n);
    const int cur_q = rec.q(n);
    if (std::abs(cur_p - prev_p) > 1 || std::abs(cur_q - prev_q) > 1) {
      return fail(name, checked, at_n(n));
    }
    prev_p = cur_p;
    prev_q = cur_q;
    ++checked;
  }
  return pass(name, checked);
}

PropertyResult prop_q_is_min_over_qj(const VerifyOptions& opt) {
  const std::string name = "q equals the minimum of q_j over its padding range";
  (void)opt;
  Recursion rec;
  std::uint64_t checked = 0;
  for (std::uint64_t n = 0; n <= 729; ++n) {
    int best = rec.qj(0, n);
    const std::uint64_t bound = smallest_pow3_geq(n);
    for (std::uint64_t j = 1; j <= bound; ++j) {
      best = std::min(best, rec.qj(j, n));
    }
    if (best != rec.q(n)) {
      return fail(name, checked, at_n(n) + ": " + versus(best, rec.q(n)));
    }
    ++checked;
  }
  return pass(name, checked);
}

PropertyResult prop_unit_values(const VerifyOptions& opt) {
  const std::string name = "unit values: q = 1 exactly on bands, p = 1 exactly "
                           "at powers of three";
  Recursion rec;
  std::uint64_t checked = 0;
  const std::uint64_t n_max = std::min<std::uint64_t>(opt.horizon, 59049);
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    const unsigned k = floor_log3(n);
    const bool in_band = n <= 2 * pow3(k);
    if ((rec.q(n) == 1) != in_band) {
      return fail(name, checked, "q, " + at_n(n));
    }
    const bool is_power = n == pow3(k);
    if ((rec.p(n) == 1) != is_power) {
      return fail(name, checked, "p, " + at_n(n));
    }
    checked += 2;
  }
  return pass(name, checked);
}

PropertyResult prop_split_point_consistency(const VerifyOptions& opt) {
  const std::string name = "recurrences: band case and recursive case agree at "
                           "n = 2*3^k";
  (void)opt;
  Recursion rec;
  std::uint64_t checked = 0;
  for (unsigned k = 0; k <= 8; ++k) {
    const std::uint64_t low = pow3(k);
    const std::uint64_t n = 2 * low;
    const int q_band = rec.q(n);
    const int q_rec = 1 + std::min(rec.q(0), rec.q(low));
    if (q_band != q_rec) {
      return fail(name, checked, "q, k = " + std::to_string(k));
    }
    const int p_band = rec.p(n);
    const int p_rec = std::min(2 + rec.q(0), 1 + rec.p(low));
    if (p_band != p_rec) {
      return fail(name, checked, "p, k = " + std::to_string(k));
    }
    checked += 2;
    for (std::uint64_t j = 0; j <= std::min<std::uint64_t>(27, low); ++j) {
      const int band = rec.qj(j, n);
      const int recursive =
          1 + std::min(rec.qj(low - j, 0), rec.qj(j, 3 * low - n));
      if (band != recursive) {
        return fail(name, checked,
                    "q_j, k = " + std::to_string(k) + ", j = " +
                        std::to_string(j) + ": " + versus(band, recursive));
      }
      ++checked;
    }
  }
  return pass(name, checked);
}

PropertyResult prop_t_is_zero_or_one(const VerifyOptions& opt) {
  const std::string name = "t = p - q is always 0 or 1";
  Recursion rec;
  std::uint64_t checked = 0;
  for (std::uint64_t n = 0; n <= opt.horizon; ++n) {
    const int t = rec.t(n);
    if (t < 0 || t > 1) {
      return fail(name, checked, at_n(n) + ": t = " + std::to_string(t));
    }
    ++checked;
  }
  return pass(name, checked);
}

PropertyResult prop_q_ternary_agreement(const VerifyOptions& opt) {
  const std::string name = "q: digit recursion matches numeric recursion";
  Recursion rec;
  std::uint64_t checked = 0;
  for (std::uint64_t n = 0; n <= opt.horizon; ++n) {
    const int lhs = rec.q_ternary(to_ternary(n));
    const int rhs = rec.q(n);
    if (lhs != rhs) {
      return fail(name, checked, at_n(n) + ": " + versus(lhs, rhs));
    }
    ++checked;
  }
  return pass(name, checked);
}

PropertyResult prop_ternary_complement(const VerifyOptions& opt) {
  const std::string name = "ternary complement: value, stability under an "
                           "extra leading 2";
  std::uint64_t checked = 0;
  for (unsigned k = 1; k <= 8; ++k) {
    const std::uint64_t top = pow3(k);
    for (std::uint64_t n = 2 * pow3(k - 1); n <= top; ++n) {
      const std::uint64_t value = from_ternary(overline(to_ternary(n)));
      if (value != top - n) {
        return fail(name, checked,
                    at_n(n) + ": complement value " + versus(
                        static_cast<long long>(value),
                        static_cast<long long>(top - n)));
      }
      ++checked;
    }
  }
  std::mt19937 rng(opt.random_seed + 2);
  for (int sample = 0; sample < 200; ++sample) {
    // Expansions starting with 2, where prepending another 2 keeps the
    // complement unchanged.
    const std::uint64_t n = 2 * pow3(11) + rng() % (pow3(12) - 2 * pow3(11));
    const std::string x = to_ternary(n);
    if (overline("2" + x) != overline(x)) {
      return fail(name, checked, at_n(n) + ": extra leading 2 changed the "
                                           "complement");
    }
    ++checked;
  }
  return pass(name, checked);
}

PropertyResult prop_group_structure(const VerifyOptions& opt) {
  const std::string name = "group decomposition: structure invariants";
  std::uint64_t checked = 0;
  const auto examine = [&](const std::string& x) -> std::string {
    const GroupDecomposition g = decompose_groups(x);
    // Small groups are exactly the maximal runs of 2.
    std::size_t at = 0;
    std::size_t runs = 0;
    while (at < x.size()) {
      if (x[at] != '2') {
        ++at;
        continue;
      }
      std::size_t run = 0;
      while (at + run < x.size() && x[at + run] == '2') ++run;
      if (runs >= g.small_groups.size() ||
          g.small_groups[runs].start != at || g.small_groups[runs].length != run) {
        return "run at offset " + std::to_string(at) + " not a small group";
      }
      ++runs;
      at += run;
    }
    if (runs != g.small_groups.size()) return "extra small groups";
    for (std::size_t i = 0; i < g.large_groups.size(); ++i) {
      const LargeGroup& lg = g.large_groups[i];
      const std::string_view span =
          std::string_view(x).substr(lg.start, lg.length);
      if (span.front() != '2' || span.back() != '2') {
        return "large group " + std::to_string(i) + " does not start and end "
                                                    "with 2";
      }
      if (span.find("00") != std::string_view::npos) {
        return "large group " + std::to_string(i) + " contains 00";
      }
      if (lg.dense != (span.find("22") != std::string_view::npos)) {
        return "large group " + std::to_string(i) + " has the wrong density";
      }
      if (i > 0) {
        const LargeGroup& prev = g.large_groups[i - 1];
        const std::size_t gap_start = prev.start + prev.length;
        const std::string_view gap =
            std::string_view(x).substr(gap_start, lg.start - gap_start);
        if (gap.size() < 2 || gap.find_first_not_of('0') != std::string_view::npos) {
          return "large groups " + std::to_string(i - 1) + " and " +
                 std::to_string(i) + " not separated by >= 2 zeros";
        }
      }
    }
    // Every small group lies inside exactly one large group.
    for (const SmallGroup& sg : g.small_groups) {
      std::size_t owners = 0;
      for (const LargeGroup& lg : g.large_groups) {
        if (sg.start >= lg.start && sg.start + sg.length <= lg.start + lg.length) {
          ++owners;
        }
      }
      if (owners != 1) {
        return "small group at offset " + std::to_string(sg.start) + " has " +
               std::to_string(owners) + " owners";
      }
    }
    return {};
  };
  for (std::size_t length = 0; length <= 10; ++length) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << length); ++bits) {
      const std::string x = zero_two_string(length, bits);
      if (const std::string why = examine(x); !why.empty()) {
        return fail(name, checked, "\"" + x + "\": " + why);
      }
      ++checked;
    }
  }
  std::mt19937 rng(opt.random_seed + 3);
  for (int sample = 0; sample < 200; ++sample) {
    const std::size_t length = 11 + rng() % 20;
    std::string x;
    for (std::size_t i = 0; i < length; ++i) x += (rng() & 1u) ? '2' : '0';
    if (const std::string why = examine(x); !why.empty()) {
      return fail(name, checked, "\"" + x + "\": " + why);
    }
    ++checked;
  }
  return pass(name, checked);
}

PropertyResult prop_cf_q_agreement(const VerifyOptions& opt) {
  const std::string name = "q: group-counting form matches the recurrence";
  Recursion rec;
  std::uint64_t checked = 0;
  for (std::uint64_t n = 0; n <= opt.horizon; ++n) {
    const int lhs = cf_q(to_ternary(n));
    const int rhs = rec.q(n);
    if (lhs != rhs) {
      return fail(name, checked, at_n(n) + ": " + versus(lhs, rhs));
    }
    ++checked;
  }
  return pass(name, checked);
}

PropertyResult prop_cf_t_agreement(const VerifyOptions& opt) {
  const std::string name = "t: membership form matches p - q";
  Recursion rec;
  std::uint64_t checked = 0;
  for (std::uint64_t n = 0; n <= opt.horizon; ++n) {
    const int lhs = cf_t(to_ternary(n));
    const int rhs = rec.t(n);
    if (lhs != rhs) {
      return fail(name, checked, at_n(n) + ": " + versus(lhs, rhs));
    }
    ++checked;
  }
  return pass(name, checked);
}

PropertyResult prop_q_vs_complement(const VerifyOptions& opt) {
  const std::string name = "q versus complement: gap is the density of the "
                           "first large group";
  (void)opt;
  Recursion rec;
  std::uint64_t checked = 0;
  const auto examine = [&](const std::string& x) -> std::string {
    const int gap = cf_q_vs_overline(x);
    if (gap != 0 && gap != 1) return "gap " + std::to_string(gap) + " out of range";
    const std::uint64_t value = from_ternary(x);
    const std::uint64_t top = pow3(static_cast<unsigned>(x.size()));
    const int by_recursion = rec.q(value) - rec.q(top - value);
    if (gap != by_recursion) {
      return "recursion gives gap " + std::to_string(by_recursion) + ", digit "
             "form gives " + std::to_string(gap);
    }
    const int by_digits = cf_q(x) - cf_q(overline(x));
    if (gap != by_digits) {
      return "digit q gives gap " + std::to_string(by_digits);
    }
    return {};
  };
  if (const std::string why = examine("2"); !why.empty()) {
    return fail(name, checked, "\"2\": " + why);
  }
  ++checked;
  for (std::size_t length = 2; length <= 12; ++length) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (length - 2));
         ++bits) {
      std::string x = "2" + zero_two_string(length - 2, bits) + "2";
      if (const std::string why = examine(x); !why.empty()) {
        return fail(name, checked, "\"" + x + "\": " + why);
      }
      ++checked;
    }
  }
  return pass(name, checked);
}

PropertyResult prop_s_membership(const VerifyOptions& opt) {
  const std::string name = "p = q exactly on the recognized digit patterns";
  Recursion rec;
  std::uint64_t checked = 0;
  for (std::uint64_t n = 0; n <= opt.horizon; ++n) {
    const bool member = in_S(to_ternary(n)).value;
    const bool equal = rec.t(n) == 0;
    if (member != equal) {
      return fail(name, checked, at_n(n) + ": membership " +
                                     std::to_string(member) + ", p = q is " +
                                     std::to_string(equal));
    }
    ++checked;
  }
  return pass(name, checked);
}

PropertyResult prop_cf_dq_agreement(const VerifyOptions& opt) {
  const std::string name = "first difference of q: digit rule matches the "
                           "recurrence";
  Recursion rec;
  std::uint64_t checked = 0;
  for (std::uint64_t n = 0; n < opt.horizon; ++n) {
    const int lhs = cf_dq(n);
    const int rhs = rec.q(n + 1) - rec.q(n);
    if (lhs != rhs) {
      return fail(name, checked, at_n(n) + ": " + versus(lhs, rhs));
    }
    ++checked;
  }
  return pass(name, checked);
}

PropertyResult prop_cf_dt_agreement(const VerifyOptions& opt) {
  const std::string name = "first difference of t: digit rule matches the "
                           "recurrence";
  Recursion rec;
  std::uint64_t checked = 0;
  for (std::uint64_t n = 0; n < opt.horizon; ++n) {
    const int lhs = cf_dt(n);
    const int rhs = rec.t(n + 1) - rec.t(n);
    if (lhs != rhs) {
      return fail(name, checked, at_n(n) + ": " + versus(lhs, rhs));
    }
    ++checked;
  }
  return pass(name, checked);
}

PropertyResult prop_cf_dp_agreement(const VerifyOptions& opt) {
  const std::string name = "first difference of p: digit rule matches the "
                           "recurrence and splits as dq + dt";
  Recursion rec;
  std::uint64_t checked = 0;
  for (std::uint64_t n = 0; n < opt.horizon; ++n) {
    const int lhs = cf_dp(n);
    const int rhs = rec.p(n + 1) - rec.p(n);
    if (lhs != rhs) {
      return fail(name, checked, at_n(n) + ": " + versus(lhs, rhs));
    }
    if (lhs != cf_dq(n) + cf_dt(n)) {
      return fail(name, checked, at_n(n) + ": dp is not dq + dt");
    }
    if (lhs < -1 || lhs > 1) {
      return fail(name, checked, at_n(n) + ": out of range");
    }
    checked += 3;
  }
  return pass(name, checked);
}

PropertyResult prop_dfao_leading_zeros(const VerifyOptions& opt) {
  const std::string name = "difference automata ignore leading zeros";
  const ReferenceSystems& ref = reference_systems();
  std::uint64_t checked = 0;
  for (const Dfao* a : {&ref.dq, &ref.dt, &ref.dp}) {
    if (a->next[static_cast<std::size_t>(a->initial)][0] != a->initial) {
      return fail(name, checked, "initial state moves on digit 0");
    }
    ++checked;
    std::mt19937 rng(opt.random_seed + 4);
    for (int sample = 0; sample < 100; ++sample) {
      const std::uint64_t n = rng() % 1000000;
      if (dfao_eval_digits(*a, "00" + to_ternary(n)) != dfao_eval(*a, n)) {
        return fail(name, checked, at_n(n) + ": padded run differs");
      }
      ++checked;
    }
  }
  return pass(name, checked);
}

PropertyResult prop_dfao_reachability(const VerifyOptions& opt) {
  const std::string name = "difference automata: every state is reachable";
  (void)opt;
  const ReferenceSystems& ref = reference_systems();
  std::uint64_t checked = 0;
  for (const Dfao* a : {&ref.dq, &ref.dt, &ref.dp}) {
    std::vector<bool> seen(a->size(), false);
    std::vector<int> queue{a->initial};
    seen[static_cast<std::size_t>(a->initial)] = true;
    while (!queue.empty()) {
      const int s = queue.back();
      queue.pop_back();
      for (int d = 0; d < 3; ++d) {
        const int to = a->next[static_cast<std::size_t>(s)]
                               [static_cast<std::size_t>(d)];
        if (!seen[static_cast<std::size_t>(to)]) {
          seen[static_cast<std::size_t>(to)] = true;
          queue.push_back(to);
        }
      }
    }
    for (std::size_t s = 0; s < a->size(); ++s) {
      if (!seen[s]) {
        return fail(name, checked, "state \"" + a->names[s] + "\" unreachable");
      }
      ++checked;
    }
  }
  return pass(name, checked);
}

PropertyResult prop_descent_vs_buffer(const VerifyOptions& opt) {
  const std::string name = "morphic systems: digit descent matches the "
                           "materialized fixed point";
  const ReferenceSystems& ref = reference_systems();
  std::uint64_t checked = 0;
  for (const MorphicSystem* m : {&ref.delta, &ref.nu, &ref.psi}) {
    FixedPoint fp(*m);
    for (std::uint64_t n = 0; n < opt.horizon; ++n) {
      if (fp.output(n) != morphic_output(*m, n)) {
        return fail(name, checked, at_n(n));
      }
      ++checked;
    }
  }
  return pass(name, checked);
}

PropertyResult prop_dfao_vs_morphic(const VerifyOptions& opt) {
  const std::string name = "each difference automaton matches its morphic "
                           "system";
  const ReferenceSystems& ref = reference_systems();
  const std::pair<const Dfao*, const MorphicSystem*> pairs[] = {
      {&ref.dq, &ref.delta}, {&ref.dt, &ref.nu}, {&ref.dp, &ref.psi}};
  std::uint64_t checked = 0;
  for (const auto& [a, m] : pairs) {
    FixedPoint fp(*m);
    for (std::uint64_t n = 0; n < opt.horizon; ++n) {
      const int lhs = dfao_eval(*a, n);
      const int rhs = fp.output(n);
      if (lhs != rhs) {
        return fail(name, checked, at_n(n) + ": " + versus(lhs, rhs));
      }
      ++checked;
    }
  }
  return pass(name, checked);
}

PropertyResult prop_automata_vs_recursion(const VerifyOptions& opt) {
  const std::string name = "difference automata match the recurrences";
  const ReferenceSystems& ref = reference_systems();
  Recursion rec;
  std::uint64_t checked = 0;
  for (std::uint64_t n = 0; n < opt.horizon; ++n) {
    const int dq = rec.q(n + 1) - rec.q(n);
    const int dt = rec.t(n + 1) - rec.t(n);
    const int dp = rec.p(n + 1) - rec.p(n);
    if (dfao_eval(ref.dq, n) != dq || dfao_eval(ref.dt, n) != dt ||
        dfao_eval(ref.dp, n) != dp) {
      return fail(name, checked, at_n(n));
    }
    checked += 3;
  }
  return pass(name, checked);
}

PropertyResult prop_product_pair_count(const VerifyOptions& opt) {
  const std::string name = "product of the t and q systems reaches exactly 10 "
                           "letter pairs";
  (void)opt;
  const ReferenceSystems& ref = reference_systems();
  const ProductSystem prod = build_product(ref.nu, ref.delta);
  if (prod.combined.size() != 10) {
    return fail(name, 1, std::to_string(prod.combined.size()) + " pairs");
  }
  return pass(name, 1);
}

PropertyResult prop_product_reconstruction(const VerifyOptions& opt) {
  const std::string name = "collapsed product reproduces the p-difference "
                           "system letter for letter";
  (void)opt;
  const ReferenceSystems& ref = reference_systems();
  const ProductSystem prod = build_product(ref.nu, ref.delta);
  std::string why;
  if (!equivalent_systems(with_collapsed_names(prod), ref.psi, &why)) {
    return fail(name, 1, why);
  }
  return pass(name, 1);
}

PropertyResult prop_product_output(const VerifyOptions& opt) {
  const std::string name = "product outputs equal the digit rule for the first "
                           "difference of p";
  const ReferenceSystems& ref = reference_systems();
  const ProductSystem prod = build_product(ref.nu, ref.delta);
  FixedPoint fp(prod.combined);
  FixedPoint psi(ref.psi);
  std::uint64_t checked = 0;
  for (std::uint64_t n = 0; n < opt.product_range; ++n) {
    const int lhs = fp.output(n);
    if (lhs != cf_dp(n)) {
      return fail(name, checked, at_n(n) + ": " + versus(lhs, cf_dp(n)));
    }
    if (lhs != psi.output(n)) {
      return fail(name, checked, at_n(n) + ": differs from the p system");
    }
    checked += 2;
  }
  return pass(name, checked);
}

PropertyResult prop_product_diagonal(const VerifyOptions& opt) {
  const std::string name = "product of a system with itself stays on the "
                           "diagonal and doubles the coding";
  (void)opt;
  const ReferenceSystems& ref = reference_systems();
  const ProductSystem prod = build_product(ref.delta, ref.delta);
  if (prod.combined.size() != ref.delta.size()) {
    return fail(name, 1,
                std::to_string(prod.combined.size()) + " pairs instead of " +
                    std::to_string(ref.delta.size()));
  }
  for (const auto& [l, r] : prod.pair_names) {
    if (l != r) return fail(name, 1, "off-diagonal pair " + l + "|" + r);
  }
  const MorphicSystem collapsed = with_collapsed_names(prod);
  std::uint64_t checked = 1;
  for (std::size_t i = 0; i < collapsed.size(); ++i) {
    const int d = ref.delta.letter(collapsed.names[i]);
    if (d < 0) return fail(name, checked, "unexpected letter " + collapsed.names[i]);
    if (collapsed.code[i] != 2 * ref.delta.code[static_cast<std::size_t>(d)]) {
      return fail(name, checked, "coding of " + collapsed.names[i] +
                                     " is not doubled");
    }
    for (std::size_t k = 0; k < 3; ++k) {
      const std::string& lhs =
          collapsed.names[static_cast<std::size_t>(collapsed.rule[i][k])];
      const std::string& rhs = ref.delta.names[static_cast<std::size_t>(
          ref.delta.rule[static_cast<std::size_t>(d)][k])];
      if (lhs != rhs) {
        return fail(name, checked, "images of " + collapsed.names[i] +
                                       " differ from the base system");
      }
    }
    checked += 4;
  }
  return pass(name, checked);
}

PropertyResult prop_fibonacci_count(const VerifyOptions& opt) {
  const std::string name = "counts of p = q arguments follow the Fibonacci "
                           "numbers";
  std::uint64_t checked = 0;
  // F_1 = F_2 = 1; the count up to 3^k is F_(k+3).
  std::vector<std::uint64_t> fib{0, 1};
  for (unsigned i = 2; i <= opt.fibonacci_k_max + 3; ++i) {
    fib.push_back(fib[i - 1] + fib[i - 2]);
  }
  if (count_S(0, opt.fibonacci_k_max) != 2 ||
      count_S(2, opt.fibonacci_k_max) != 5) {
    return fail(name, checked, "anchor counts are wrong");
  }
  ++checked;
  for (unsigned k = 0; k <= opt.fibonacci_k_max; ++k) {
    const std::uint64_t count = count_S(k, opt.fibonacci_k_max);
    if (count != fib[k + 3]) {
      return fail(name, checked,
                  "k = " + std::to_string(k) + ": " +
                      versus(static_cast<long long>(count),
                             static_cast<long long>(fib[k + 3])));
    }
    ++checked;
    if (k >= 2) {
      const std::uint64_t lhs = count_S(k, opt.fibonacci_k_max);
      const std::uint64_t rhs = count_S(k - 1, opt.fibonacci_k_max) +
                                count_S(k - 2, opt.fibonacci_k_max);
      if (lhs != rhs) {
        return fail(name, checked, "recurrence breaks at k = " +
                                       std::to_string(k));
      }
      ++checked;
    }
  }
  return pass(name, checked);
}

std::vector<PropertyResult> verify_oracle(const VerifyOptions& opt) {
  return {prop_sierpinski_structure(opt), prop_pl_steps_and_palindromes(opt),
          prop_pl_mirror_invariance(opt), prop_pl_concat_bound(opt),
          prop_oracle_p_agreement(opt),   prop_oracle_q_agreement(opt),
          prop_oracle_qj_agreement(opt),  prop_qj_unit_band(opt),
          prop_oracle_reflection(opt),    prop_q_minimum_attained(opt)};
}

std::vector<PropertyResult> verify_symmetry(const VerifyOptions& opt) {
  return {prop_reflection_bound(opt),       prop_step_bounds(opt),
          prop_q_is_min_over_qj(opt),       prop_unit_values(opt),
          prop_split_point_consistency(opt), prop_t_is_zero_or_one(opt),
          prop_q_ternary_agreement(opt)};
}

std::vector<PropertyResult> verify_closed_form(const VerifyOptions& opt) {
  return {prop_ternary_complement(opt), prop_group_structure(opt),
          prop_cf_q_agreement(opt),     prop_cf_t_agreement(opt),
          prop_q_vs_complement(opt),    prop_s_membership(opt),
          prop_cf_dq_agreement(opt),    prop_cf_dt_agreement(opt),
          prop_cf_dp_agreement(opt)};
}

std::vector<PropertyResult> verify_automata(const VerifyOptions& opt) {
  return {prop_dfao_leading_zeros(opt), prop_dfao_reachability(opt),
          prop_descent_vs_buffer(opt), prop_dfao_vs_morphic(opt),
          prop_automata_vs_recursion(opt)};
}

std::vector<PropertyResult> verify_product(const VerifyOptions& opt) {
  return {prop_product_pair_count(opt), prop_product_reconstruction(opt),
          prop_product_output(opt), prop_product_diagonal(opt)};
}

std::vector<PropertyResult> verify_fibonacci(const VerifyOptions& opt) {
  return {prop_fibonacci_count(opt)};
}

std::vector<PropertyResult> verify_all(const VerifyOptions& opt) {
  std::vector<PropertyResult> all;
  for (const auto& chunk :
       {verify_oracle(opt), verify_symmetry(opt), verify_closed_form(opt),
        verify_automata(opt), verify_product(opt), verify_fibonacci(opt)}) {
    all.insert(all.end(), chunk.begin(), chunk.end());
  }
  return all;
}

std::vector<PropertyResult> verify_suite(std::string_view suite,
                                         const VerifyOptions& opt) {
  if (suite == "oracle") return verify_oracle(opt);
  if (suite == "symmetry") return verify_symmetry(opt);
  if (suite == "closed-form") return verify_closed_form(opt);
  if (suite == "automata") return verify_automata(opt);
  if (suite == "product") return verify_product(opt);
  if (suite == "fibonacci") return verify_fibonacci(opt);
  if (suite == "all") return verify_all(opt);
  throw DomainError("no verification suite named \"" + std::string(suite) +
                    "\"");
}

}  // namespace palinlen
