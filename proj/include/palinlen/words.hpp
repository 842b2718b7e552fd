#pragma once

#include <cstdint>
#include <shared_mutex>
#include <string>
#include <string_view>

namespace palinlen {

/// Words over the alphabet {a, b} are plain strings; these helpers treat
/// them as immutable values.
std::string mirror(std::string_view w);
bool is_palindrome(std::string_view w);

inline constexpr std::uint64_t kDefaultMaxPrefix = 1594323;  // 3^13

/// Lazily extended prefix of the fixed point of a -> aba, b -> bbb.
///
/// The word starts as "a" and grows by whole substitution rounds, so the
/// buffer is always a genuine prefix of the infinite fixed point.  Reads
/// take a shared lock and extension an exclusive one; prefixes are handed
/// out as copies, so results stay valid while the word keeps growing.
class SierpinskiWord {
 public:
  explicit SierpinskiWord(std::uint64_t max_length = kDefaultMaxPrefix);

  /// First n letters, 1-based convention: prefix(n) covers positions 1..n.
  /// Throws ResourceLimitError when n exceeds the configured maximum.
  std::string prefix(std::uint64_t n);

  /// Letter at position i (1-based).
  char at(std::uint64_t i);

  /// Number of substitution rounds applied so far.
  std::uint64_t generation() const;

  /// Current buffer length.
  std::uint64_t size() const;

  std::uint64_t max_length() const { return max_length_; }

 private:
  void extend_locked(std::uint64_t n);

  mutable std::shared_mutex mutex_;
  std::string buffer_;
  std::uint64_t generation_ = 0;
  std::uint64_t max_length_;
};

/// Process-wide word shared by the oracle helpers and the command line tool.
SierpinskiWord& shared_sierpinski();

}  // namespace palinlen
