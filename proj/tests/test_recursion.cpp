#include <algorithm>
#include <string>

#include "doctest.h"
#include "palinlen/errors.hpp"
#include "palinlen/pl_oracle.hpp"
#include "palinlen/recursion.hpp"
#include "palinlen/ternary.hpp"

using namespace palinlen;

TEST_CASE("p recurrence point values") {
  Recursion rec;
  CHECK(rec.p(0) == 0);
  CHECK(rec.p(1) == 1);
  CHECK(rec.p(2) == 2);
  CHECK(rec.p(3) == 1);
  CHECK(rec.p(5) == 2);
  CHECK(rec.p(7) == 3);
  CHECK(rec.p(8) == 2);
  CHECK(rec.p(9) == 1);
  CHECK(rec.p(59049) == 1);
}

TEST_CASE("q recurrence point values") {
  Recursion rec;
  CHECK(rec.q(0) == 0);
  CHECK(rec.q(1) == 1);
  CHECK(rec.q(7) == 2);
  CHECK(rec.q(18) == 1);
  CHECK(rec.q(20) == 2);
  CHECK(rec.q(59049) == 1);
}

TEST_CASE("qj recurrence point values") {
  Recursion rec;
  CHECK(rec.qj(0, 0) == 0);
  CHECK(rec.qj(2, 0) == 1);
  CHECK(rec.qj(0, 1) == 1);
  CHECK(rec.qj(5, 1) == 2);
  CHECK(rec.qj(1, 4) == 1);
  CHECK(rec.qj(3, 12) == 1);
  // Padding longer than the inner power of three still works.
  CHECK(rec.qj(100, 12) == 2);
}

TEST_CASE("recurrences match the letter-level oracle on small ranges") {
  Recursion rec;
  const std::vector<std::int32_t> p_row = oracle_p_row(400);
  for (std::uint64_t n = 0; n <= 400; ++n) CHECK(p_row[n] == rec.p(n));
  const std::vector<std::int32_t> q_row = oracle_q_row(150);
  for (std::uint64_t n = 0; n <= 150; ++n) CHECK(q_row[n] == rec.q(n));
  for (std::uint64_t j = 0; j <= 9; ++j) {
    const std::vector<std::int32_t> row = oracle_qj_row(j, 81);
    for (std::uint64_t n = 0; n <= 81; ++n) CHECK(row[n] == rec.qj(j, n));
  }
}

TEST_CASE("long padding falls back to the minimum over short paddings") {
  Recursion rec;
  for (std::uint64_t j : {28, 100}) {
    for (std::uint64_t n : {19, 20, 25}) {
      CHECK(rec.qj(j, n) == oracle_qj(j, n));
    }
  }
}

TEST_CASE("q is the minimum of qj over its padding range") {
  Recursion rec;
  for (std::uint64_t n = 0; n <= 243; ++n) {
    int best = rec.qj(0, n);
    for (std::uint64_t j = 1; j <= smallest_pow3_geq(n); ++j) {
      best = std::min(best, rec.qj(j, n));
    }
    CHECK(best == rec.q(n));
  }
}

TEST_CASE("t never leaves {0, 1}") {
  Recursion rec;
  for (std::uint64_t n = 0; n <= 2187; ++n) {
    const int t = rec.t(n);
    CHECK(t >= 0);
    CHECK(t <= 1);
  }
}

TEST_CASE("reflection across powers of three moves values by at most 1") {
  Recursion rec;
  for (unsigned k = 0; k <= 6; ++k) {
    const std::uint64_t top = pow3(k);
    for (std::uint64_t n = 0; n <= top; ++n) {
      CHECK(std::abs(rec.q(n) - rec.q(top - n)) <= 1);
    }
  }
  for (std::uint64_t j = 0; j <= 9; ++j) {
    for (unsigned k = 0; k <= 4; ++k) {
      const std::uint64_t top = pow3(k);
      for (std::uint64_t n = 0; n <= top; ++n) {
        CHECK(std::abs(rec.qj(j, n) - rec.qj(j, top - n)) <= 1);
      }
    }
  }
}

TEST_CASE("band case and recursive case agree where they meet") {
  Recursion rec;
  for (unsigned k = 0; k <= 7; ++k) {
    const std::uint64_t low = pow3(k);
    CHECK(rec.q(2 * low) == 1 + std::min(rec.q(0), rec.q(low)));
    CHECK(rec.p(2 * low) == std::min(2 + rec.q(0), 1 + rec.p(low)));
    for (std::uint64_t j = 0; j <= std::min<std::uint64_t>(27, low); ++j) {
      CHECK(rec.qj(j, 2 * low) ==
            1 + std::min(rec.qj(low - j, 0), rec.qj(j, low)));
    }
  }
}

TEST_CASE("digit recursion for q agrees with the numeric recursion") {
  Recursion rec;
  CHECK(rec.q_ternary("") == 0);
  CHECK(rec.q_ternary("0") == 0);
  CHECK(rec.q_ternary("1") == 1);
  CHECK(rec.q_ternary("120") == 1);
  CHECK(rec.q_ternary("22") == 2);
  CHECK(rec.q_ternary("0022") == 2);
  CHECK_THROWS_AS(rec.q_ternary("2x"), DomainError);
  for (std::uint64_t n = 0; n <= 2187; ++n) {
    CHECK(rec.q_ternary(to_ternary(n)) == rec.q(n));
  }
}
