#include "palinlen/words.hpp"

#include <mutex>

#include "palinlen/errors.hpp"

namespace palinlen {

std::string mirror(std::string_view w) {
  return std::string(w.rbegin(), w.rend());
}

bool is_palindrome(std::string_view w) {
  std::size_t i = 0;
  std::size_t j = w.size();
  while (i + 1 < j) {
    if (w[i] != w[j - 1]) return false;
    ++i;
    --j;
  }
  return true;
}

SierpinskiWord::SierpinskiWord(std::uint64_t max_length)
    : buffer_("a"), max_length_(max_length) {}

std::string SierpinskiWord::prefix(std::uint64_t n) {
  if (n > max_length_) {
    throw ResourceLimitError("prefix of length " + std::to_string(n) +
                             " exceeds the configured maximum of " +
                             std::to_string(max_length_));
  }
  {
    std::shared_lock lock(mutex_);
    if (buffer_.size() >= n) return buffer_.substr(0, n);
  }
  std::unique_lock lock(mutex_);
  extend_locked(n);
  return buffer_.substr(0, n);
}

char SierpinskiWord::at(std::uint64_t i) {
  if (i == 0) throw DomainError("positions are 1-based; there is no letter 0");
  if (i > max_length_) {
    throw ResourceLimitError("position " + std::to_string(i) +
                             " exceeds the configured maximum of " +
                             std::to_string(max_length_));
  }
  {
    std::shared_lock lock(mutex_);
    if (buffer_.size() >= i) return buffer_[i - 1];
  }
  std::unique_lock lock(mutex_);
  extend_locked(i);
  return buffer_[i - 1];
}

std::uint64_t SierpinskiWord::generation() const {
  std::shared_lock lock(mutex_);
  return generation_;
}

std::uint64_t SierpinskiWord::size() const {
  std::shared_lock lock(mutex_);
  return buffer_.size();
}

void SierpinskiWord::extend_locked(std::uint64_t n) {
  while (buffer_.size() < n) {
    std::string next;
    next.reserve(buffer_.size() * 3);
    for (char ch : buffer_) next.append(ch == 'a' ? "aba" : "bbb");
    buffer_ = std::move(next);
    ++generation_;
  }
}

SierpinskiWord& shared_sierpinski() {
  static SierpinskiWord word;
  return word;
}

}  // namespace palinlen
