#include <atomic>
#include <string>
#include <thread>
#include <vector>

#include "doctest.h"
#include "palinlen/errors.hpp"
#include "palinlen/ternary.hpp"
#include "palinlen/words.hpp"

using namespace palinlen;

TEST_CASE("mirror reverses words") {
  CHECK(mirror("") == "");
  CHECK(mirror("a") == "a");
  CHECK(mirror("aab") == "baa");
  CHECK(mirror("ababbba") == "abbbaba");
  for (const std::string w : {"abba", "ababab", "bbbab", "a"}) {
    CHECK(mirror(mirror(w)) == w);
  }
}

TEST_CASE("is_palindrome") {
  CHECK(is_palindrome(""));
  CHECK(is_palindrome("a"));
  CHECK(is_palindrome("abba"));
  CHECK(is_palindrome("ababbbaba"));
  CHECK_FALSE(is_palindrome("ab"));
  CHECK_FALSE(is_palindrome("aabab"));
}

TEST_CASE("sierpinski word prefixes") {
  SierpinskiWord word;
  CHECK(word.prefix(0) == "");
  CHECK(word.prefix(1) == "a");
  CHECK(word.prefix(2) == "ab");
  CHECK(word.prefix(9) == "ababbbaba");
  CHECK(word.prefix(27) == "ababbbababbbbbbbbbababbbaba");

  SUBCASE("positions are 1-based") {
    CHECK(word.at(1) == 'a');
    CHECK(word.at(2) == 'b');
    CHECK(word.at(3) == 'a');
    CHECK(word.at(4) == 'b');
    CHECK(word.at(5) == 'b');
    CHECK_THROWS_AS(word.at(0), DomainError);
  }

  SUBCASE("shorter prefixes are prefixes of longer ones") {
    const std::string long_prefix = word.prefix(243);
    for (std::uint64_t n : {0, 1, 9, 26, 27, 100, 242}) {
      CHECK(word.prefix(n) == long_prefix.substr(0, n));
    }
  }

  SUBCASE("prefix 3^k is wing, b-block, wing") {
    for (unsigned k = 1; k <= 7; ++k) {
      const std::uint64_t third = pow3(k - 1);
      const std::string wing = word.prefix(third);
      CHECK(word.prefix(3 * third) ==
            wing + std::string(third, 'b') + wing);
    }
  }

  SUBCASE("prefixes of length 3^k are palindromes") {
    for (unsigned k = 0; k <= 8; ++k) {
      CHECK(is_palindrome(word.prefix(pow3(k))));
    }
  }
}

TEST_CASE("sierpinski word enforces its configured maximum") {
  SierpinskiWord word(27);
  CHECK(word.prefix(27) == "ababbbababbbbbbbbbababbbaba");
  CHECK_THROWS_AS(word.prefix(28), ResourceLimitError);
  CHECK_THROWS_AS(word.at(28), ResourceLimitError);
  CHECK(word.max_length() == 27);
}

TEST_CASE("sierpinski word survives concurrent readers during growth") {
  SierpinskiWord word;
  const std::string expected = word.prefix(19683);
  SierpinskiWord fresh;  // starts at generation 0 again
  std::atomic<bool> ok{true};
  std::vector<std::thread> readers;
  for (int t = 0; t < 4; ++t) {
    readers.emplace_back([&fresh, &expected, &ok, t] {
      for (std::uint64_t n = 1 + static_cast<std::uint64_t>(t); n <= 19683;
           n += 97) {
        if (fresh.prefix(n) != expected.substr(0, n)) ok = false;
      }
    });
  }
  for (std::thread& t : readers) t.join();
  CHECK(ok.load());
  CHECK(fresh.size() >= 19683);
  CHECK(fresh.generation() >= 9);
}

TEST_CASE("shared word is a single growing instance") {
  SierpinskiWord& shared = shared_sierpinski();
  CHECK(shared.prefix(9) == "ababbbaba");
  CHECK(&shared == &shared_sierpinski());
}
