#include "palinlen/automata.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <queue>
#include <sstream>

#include "palinlen/errors.hpp"
#include "palinlen/ternary.hpp"

namespace palinlen {

namespace {

struct Line {
  std::size_t number = 0;
  std::vector<std::string> tokens;
};

[[noreturn]] void parse_fail(std::size_t line, const std::string& message) {
  throw DomainError("line " + std::to_string(line) + ": " + message);
}

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t begin = 0;
  while (begin <= text.size()) {
    std::size_t end = text.find('\n', begin);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view raw = text.substr(begin, end - begin);
    if (const std::size_t hash = raw.find('#'); hash != std::string_view::npos) {
      raw = raw.substr(0, hash);
    }
    Line line{number, {}};
    std::istringstream stream{std::string(raw)};
    std::string token;
    while (stream >> token) line.tokens.push_back(token);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (end == text.size()) break;
    begin = end + 1;
  }
  return lines;
}

int parse_int(const Line& line, const std::string& token, const char* what) {
  int value = 0;
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    parse_fail(line.number, std::string(what) + " \"" + token +
                                "\" is not an integer");
  }
  return value;
}

int parse_digit(const Line& line, const std::string& token) {
  if (token.size() != 1 || token[0] < '0' || token[0] > '2') {
    parse_fail(line.number, "\"" + token + "\" is not a ternary digit");
  }
  return token[0] - '0';
}

int require_known(const Line& line, const std::vector<std::string>& names,
                  const std::string& name, const char* kind) {
  const auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) {
    parse_fail(line.number,
               std::string("unknown ") + kind + " \"" + name + "\"");
  }
  return static_cast<int>(it - names.begin());
}

}  // namespace

int Dfao::state(std::string_view name) const {
  const auto it = std::find(names.begin(), names.end(), name);
  return it == names.end() ? -1 : static_cast<int>(it - names.begin());
}

int MorphicSystem::letter(std::string_view name) const {
  const auto it = std::find(names.begin(), names.end(), name);
  return it == names.end() ? -1 : static_cast<int>(it - names.begin());
}

Dfao parse_dfao(std::string_view text) {
  const std::vector<Line> lines = tokenize(text);
  Dfao a;
  a.initial = -1;
  // First pass declares the states so edges may refer forward.
  for (const Line& line : lines) {
    if (line.tokens[0] != "state") continue;
    if (line.tokens.size() != 4 || line.tokens[2] != "output") {
      parse_fail(line.number, "expected: state <name> output <-1|0|1>");
    }
    if (a.state(line.tokens[1]) >= 0) {
      parse_fail(line.number, "state \"" + line.tokens[1] + "\" redeclared");
    }
    const int out = parse_int(line, line.tokens[3], "output");
    if (out < -1 || out > 1) {
      parse_fail(line.number, "output must be -1, 0 or 1");
    }
    a.names.push_back(line.tokens[1]);
    a.output.push_back(out);
    a.next.push_back({-1, -1, -1});
  }
  for (const Line& line : lines) {
    const std::string& directive = line.tokens[0];
    if (directive == "state") continue;
    if (directive == "init") {
      if (line.tokens.size() != 2) parse_fail(line.number, "expected: init <name>");
      if (a.initial >= 0) parse_fail(line.number, "initial state already set");
      a.initial = require_known(line, a.names, line.tokens[1], "state");
    } else if (directive == "edge") {
      if (line.tokens.size() != 4) {
        parse_fail(line.number, "expected: edge <from> <digit> <to>");
      }
      const int from = require_known(line, a.names, line.tokens[1], "state");
      const int digit = parse_digit(line, line.tokens[2]);
      const int to = require_known(line, a.names, line.tokens[3], "state");
      if (a.next[static_cast<std::size_t>(from)][static_cast<std::size_t>(
              digit)] >= 0) {
        parse_fail(line.number, "duplicate edge from \"" + line.tokens[1] +
                                    "\" on digit " + line.tokens[2]);
      }
      a.next[static_cast<std::size_t>(from)][static_cast<std::size_t>(digit)] =
          to;
    } else {
      parse_fail(line.number, "unknown directive \"" + directive + "\"");
    }
  }
  if (a.names.empty()) throw DomainError("automaton has no states");
  if (a.initial < 0) throw DomainError("automaton has no initial state");
  for (std::size_t s = 0; s < a.size(); ++s) {
    for (int d = 0; d < 3; ++d) {
      if (a.next[s][static_cast<std::size_t>(d)] < 0) {
        throw DomainError("incomplete transition table: state \"" + a.names[s] +
                          "\" has no edge on digit " + std::to_string(d));
      }
    }
  }
  return a;
}

MorphicSystem parse_morphic(std::string_view text) {
  const std::vector<Line> lines = tokenize(text);
  MorphicSystem m;
  m.seed = -1;
  std::vector<bool> has_rule;
  for (const Line& line : lines) {
    if (line.tokens[0] != "letter") continue;
    if (line.tokens.size() != 4 || line.tokens[2] != "output") {
      parse_fail(line.number, "expected: letter <name> output <value>");
    }
    if (m.letter(line.tokens[1]) >= 0) {
      parse_fail(line.number, "letter \"" + line.tokens[1] + "\" redeclared");
    }
    m.names.push_back(line.tokens[1]);
    m.code.push_back(parse_int(line, line.tokens[3], "output"));
    m.rule.push_back({-1, -1, -1});
  }
  has_rule.assign(m.size(), false);
  for (const Line& line : lines) {
    const std::string& directive = line.tokens[0];
    if (directive == "letter") continue;
    if (directive == "seed") {
      if (line.tokens.size() != 2) parse_fail(line.number, "expected: seed <name>");
      if (m.seed >= 0) parse_fail(line.number, "seed already set");
      m.seed = require_known(line, m.names, line.tokens[1], "letter");
    } else if (directive == "rule") {
      if (line.tokens.size() != 6 || line.tokens[2] != "->") {
        parse_fail(line.number, "expected: rule <name> -> <l1> <l2> <l3>");
      }
      const int from = require_known(line, m.names, line.tokens[1], "letter");
      if (has_rule[static_cast<std::size_t>(from)]) {
        parse_fail(line.number, "duplicate rule for \"" + line.tokens[1] + "\"");
      }
      has_rule[static_cast<std::size_t>(from)] = true;
      for (int k = 0; k < 3; ++k) {
        m.rule[static_cast<std::size_t>(from)][static_cast<std::size_t>(k)] =
            require_known(line, m.names, line.tokens[static_cast<std::size_t>(3 + k)],
                          "letter");
      }
    } else {
      parse_fail(line.number, "unknown directive \"" + directive + "\"");
    }
  }
  if (m.names.empty()) throw DomainError("morphic system has no letters");
  if (m.seed < 0) throw DomainError("morphic system has no seed");
  for (std::size_t l = 0; l < m.size(); ++l) {
    if (!has_rule[l]) {
      throw DomainError("letter \"" + m.names[l] + "\" has no rule");
    }
  }
  if (m.rule[static_cast<std::size_t>(m.seed)][0] != m.seed) {
    throw DomainError("seed \"" + m.names[static_cast<std::size_t>(m.seed)] +
                      "\" is not prolongable: its image must start with itself");
  }
  return m;
}

int dfao_eval_digits(const Dfao& a, std::string_view digits) {
  int state = a.initial;
  for (char c : digits) {
    if (c < '0' || c > '2') {
      throw DomainError(std::string("'") + c + "' is not a ternary digit");
    }
    state = a.next[static_cast<std::size_t>(state)]
                  [static_cast<std::size_t>(c - '0')];
  }
  return a.output[static_cast<std::size_t>(state)];
}

int dfao_eval(const Dfao& a, std::uint64_t n) {
  return dfao_eval_digits(a, to_ternary(n));
}

int morphic_output(const MorphicSystem& m, std::uint64_t n,
                   std::uint64_t horizon) {
  if (n >= horizon) {
    throw ResourceLimitError("position " + std::to_string(n) +
                             " is beyond the horizon of " +
                             std::to_string(horizon) + " letters");
  }
  // In a 3-uniform fixed point, position n sits inside the image of
  // position n/3, at offset n%3; iterating from the top, the letter is
  // reached by following the ternary digits of n from the seed.
  int letter = m.seed;
  for (char c : to_ternary(n)) {
    letter = m.rule[static_cast<std::size_t>(letter)]
                   [static_cast<std::size_t>(c - '0')];
  }
  return m.code[static_cast<std::size_t>(letter)];
}

FixedPoint::FixedPoint(const MorphicSystem& m, std::uint64_t horizon)
    : system_(&m), horizon_(horizon) {
  const auto& image = m.rule[static_cast<std::size_t>(m.seed)];
  for (int l : image) buffer_.push_back(static_cast<std::uint8_t>(l));
  expanded_ = 1;
}

void FixedPoint::ensure(std::uint64_t length) {
  if (length > horizon_) {
    throw ResourceLimitError("prefix of " + std::to_string(length) +
                             " letters is beyond the horizon of " +
                             std::to_string(horizon_));
  }
  while (buffer_.size() < length) {
    const auto& image = system_->rule[buffer_[expanded_++]];
    for (int l : image) buffer_.push_back(static_cast<std::uint8_t>(l));
  }
}

int FixedPoint::letter(std::uint64_t n) {
  ensure(n + 1);
  return buffer_[n];
}

int FixedPoint::output(std::uint64_t n) {
  return system_->code[static_cast<std::size_t>(letter(n))];
}

ProductSystem build_product(const MorphicSystem& left,
                            const MorphicSystem& right) {
  ProductSystem p;
  std::map<std::pair<int, int>, int> ids;
  std::vector<std::pair<int, int>> pairs;
  const auto intern = [&](int l, int r) {
    const auto [it, inserted] = ids.try_emplace({l, r},
                                                static_cast<int>(pairs.size()));
    if (inserted) pairs.emplace_back(l, r);
    return it->second;
  };
  intern(left.seed, right.seed);
  // Pairs are discovered breadth-first, so the seed gets id 0 and ids
  // follow first appearance in the unfolding.
  for (std::size_t at = 0; at < pairs.size(); ++at) {
    const auto [l, r] = pairs[at];
    std::array<int, 3> image{};
    for (std::size_t k = 0; k < 3; ++k) {
      image[k] = intern(left.rule[static_cast<std::size_t>(l)][k],
                        right.rule[static_cast<std::size_t>(r)][k]);
    }
    p.combined.rule.push_back(image);
  }
  for (const auto& [l, r] : pairs) {
    const std::string& ln = left.names[static_cast<std::size_t>(l)];
    const std::string& rn = right.names[static_cast<std::size_t>(r)];
    p.combined.names.push_back(ln + "|" + rn);
    p.combined.code.push_back(left.code[static_cast<std::size_t>(l)] +
                              right.code[static_cast<std::size_t>(r)]);
    p.pair_names.emplace_back(ln, rn);
  }
  p.combined.seed = 0;
  return p;
}

MorphicSystem with_collapsed_names(const ProductSystem& p) {
  MorphicSystem m = p.combined;
  for (std::size_t i = 0; i < m.size(); ++i) {
    const auto& [ln, rn] = p.pair_names[i];
    m.names[i] = (ln == "S") ? rn : ln;
  }
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      if (m.names[i] == m.names[j]) {
        throw DomainError("collapsing pair names merges two product letters "
                          "into \"" + m.names[i] + "\"");
      }
    }
  }
  return m;
}

bool equivalent_systems(const MorphicSystem& a, const MorphicSystem& b,
                        std::string* why) {
  const auto fail = [&](const std::string& reason) {
    if (why != nullptr) *why = reason;
    return false;
  };
  if (a.size() != b.size()) {
    return fail("letter counts differ: " + std::to_string(a.size()) + " vs " +
                std::to_string(b.size()));
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::string& name = a.names[i];
    const int j = b.letter(name);
    if (j < 0) return fail("letter \"" + name + "\" missing from one system");
    if (a.code[i] != b.code[static_cast<std::size_t>(j)]) {
      return fail("codings of \"" + name + "\" differ");
    }
    for (std::size_t k = 0; k < 3; ++k) {
      const std::string& an = a.names[static_cast<std::size_t>(a.rule[i][k])];
      const std::string& bn =
          b.names[static_cast<std::size_t>(b.rule[static_cast<std::size_t>(j)][k])];
      if (an != bn) {
        return fail("images of \"" + name + "\" differ at position " +
                    std::to_string(k) + ": \"" + an + "\" vs \"" + bn + "\"");
      }
    }
  }
  if (a.names[static_cast<std::size_t>(a.seed)] !=
      b.names[static_cast<std::size_t>(b.seed)]) {
    return fail("seeds differ");
  }
  return true;
}

}  // namespace palinlen
