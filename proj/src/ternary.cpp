#include "palinlen/ternary.hpp"

#include <algorithm>
#include <array>

#include "palinlen/errors.hpp"

namespace palinlen {

namespace {

constexpr std::array<std::uint64_t, 41> kPow3 = [] {
  std::array<std::uint64_t, 41> table{};
  table[0] = 1;
  for (std::size_t k = 1; k < table.size(); ++k) table[k] = table[k - 1] * 3;
  return table;
}();

bool is_ternary_digit(char c) { return c == '0' || c == '1' || c == '2'; }

[[noreturn]] void bad_digit(char c) {
  throw DomainError(std::string("'") + c + "' is not a ternary digit");
}

}  // namespace

std::uint64_t pow3(unsigned k) {
  if (k >= kPow3.size()) {
    throw DomainError("3^" + std::to_string(k) + " does not fit in 64 bits");
  }
  return kPow3[k];
}

unsigned floor_log3(std::uint64_t n) {
  if (n == 0) throw DomainError("floor_log3 is undefined at 0");
  unsigned k = 0;
  while (n >= 3) {
    n /= 3;
    ++k;
  }
  return k;
}

std::uint64_t smallest_pow3_geq(std::uint64_t n) {
  if (n > kPow3.back()) {
    throw DomainError("no power of three >= " + std::to_string(n) +
                      " fits in 64 bits");
  }
  std::uint64_t p = 1;
  while (p < n) p *= 3;
  return p;
}

std::string to_ternary(std::uint64_t n) {
  if (n == 0) return {};
  char digits[41];
  std::size_t len = 0;
  while (n != 0) {
    digits[len++] = static_cast<char>('0' + n % 3);
    n /= 3;
  }
  std::string out(digits, digits + len);
  std::reverse(out.begin(), out.end());
  return out;
}

std::uint64_t from_ternary(std::string_view x) {
  std::size_t i = 0;
  while (i < x.size() && x[i] == '0') ++i;
  if (x.size() - i > 40) {
    throw DomainError("ternary value of " + std::to_string(x.size() - i) +
                      " significant digits exceeds 64 bits");
  }
  std::uint64_t value = 0;
  for (; i < x.size(); ++i) {
    if (!is_ternary_digit(x[i])) bad_digit(x[i]);
    value = value * 3 + static_cast<std::uint64_t>(x[i] - '0');
  }
  return value;
}

bool is_canonical_ternary(std::string_view x) {
  if (x.empty()) return true;
  if (x.front() == '0') return false;
  return std::all_of(x.begin(), x.end(), is_ternary_digit);
}

std::string overline(std::string_view x) {
  if (!is_canonical_ternary(x)) {
    throw DomainError("overline expects a canonical ternary expansion, got \"" +
                      std::string(x) + "\"");
  }
  if (x.empty()) {
    throw DomainError("overline is undefined for the empty expansion");
  }
  if (x.front() == '1') {
    if (x.find_first_not_of('0', 1) != std::string_view::npos) {
      throw DomainError("overline is undefined for \"" + std::string(x) +
                        "\": expansions starting with 1 must be powers of three");
    }
    return {};  // 3^k - 3^k
  }
  // x starts with 2, so its value n satisfies 2 * 3^(|x|-1) <= n <= 3^|x|.
  return to_ternary(pow3(static_cast<unsigned>(x.size())) - from_ternary(x));
}

std::size_t GroupDecomposition::dense_count() const {
  return static_cast<std::size_t>(
      std::count_if(large_groups.begin(), large_groups.end(),
                    [](const LargeGroup& g) { return g.dense; }));
}

GroupDecomposition decompose_groups(std::string_view x) {
  for (char c : x) {
    if (c != '0' && c != '2') {
      throw DomainError(std::string("group decomposition expects digits 0 and "
                                    "2, got '") +
                        c + "'");
    }
  }
  GroupDecomposition g;
  std::size_t i = 0;
  const std::size_t n = x.size();
  while (i < n) {
    if (x[i] == '0') {
      ++i;
      continue;
    }
    const std::size_t start = i;
    std::size_t last = i;
    bool dense = false;
    while (true) {
      std::size_t run = 0;
      while (i + run < n && x[i + run] == '2') ++run;
      g.small_groups.push_back({i, run});
      if (run >= 2) dense = true;
      i += run;
      last = i - 1;
      // A single zero followed by another 2 keeps the large group going.
      if (i + 1 < n && x[i] == '0' && x[i + 1] == '2') {
        ++i;
        continue;
      }
      break;
    }
    g.large_groups.push_back({start, last - start + 1, dense});
  }
  return g;
}

}  // namespace palinlen
