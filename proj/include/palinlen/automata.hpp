#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace palinlen {

/// Deterministic automaton over the input alphabet {0, 1, 2} with an
/// output attached to every state.  Feeding it the ternary digits of n
/// (most significant first) computes a function of n; a self-loop on digit
/// 0 at the initial state makes leading zeros harmless.
struct Dfao {
  std::vector<std::string> names;
  std::vector<std::array<int, 3>> next;  // next[state][digit]
  std::vector<int> output;               // in {-1, 0, 1}
  int initial = 0;

  /// Index of a state by name, -1 if absent.
  int state(std::string_view name) const;
  std::size_t size() const { return names.size(); }
};

/// 3-uniform morphism with an integer coding and a seed whose image starts
/// with the seed itself, so iterating from the seed converges to an
/// infinite fixed point.
struct MorphicSystem {
  std::vector<std::string> names;
  std::vector<std::array<int, 3>> rule;  // rule[letter] = image, 3 letters
  std::vector<int> code;
  int seed = 0;

  /// Index of a letter by name, -1 if absent.
  int letter(std::string_view name) const;
  std::size_t size() const { return names.size(); }
};

/// Parsers for the fixture format under data/: "state <name> output <v>",
/// "init <name>", "edge <from> <digit> <to>" for automata and
/// "letter <name> output <v>", "seed <name>", "rule <name> -> <a> <b> <c>"
/// for morphisms, with '#' comments.  Unknown directives, duplicate or
/// missing entries, incomplete tables and non-prolongable seeds are all
/// rejected with DomainError naming the offending line.
Dfao parse_dfao(std::string_view text);
MorphicSystem parse_morphic(std::string_view text);

/// Output after consuming an explicit digit string from the initial state.
int dfao_eval_digits(const Dfao& a, std::string_view digits);

/// Output on the ternary expansion of n.
int dfao_eval(const Dfao& a, std::uint64_t n);

inline constexpr std::uint64_t kDefaultMorphicHorizon = 1594323;  // 3^13

/// Coded letter at position n (0-based) of the fixed point, located by
/// base-3 digit descent from the seed without materializing the word.
/// Positions at or beyond the horizon raise ResourceLimitError.
int morphic_output(const MorphicSystem& m, std::uint64_t n,
                   std::uint64_t horizon = kDefaultMorphicHorizon);

/// Buffered prefix of the fixed point for sequential access; grows by
/// expanding one letter at a time, so reading positions 0..n-1 costs O(n)
/// total.  Holds a pointer to the system, which must outlive it.
class FixedPoint {
 public:
  explicit FixedPoint(const MorphicSystem& m,
                      std::uint64_t horizon = kDefaultMorphicHorizon);

  /// Letter index at position n (0-based).
  int letter(std::uint64_t n);

  /// Coded output at position n.
  int output(std::uint64_t n);

  /// Extend the buffer to cover at least the first length positions.
  void ensure(std::uint64_t length);

  const MorphicSystem& system() const { return *system_; }

 private:
  const MorphicSystem* system_;
  std::vector<std::uint8_t> buffer_;
  std::size_t expanded_ = 0;  // letters whose images are already appended
  std::uint64_t horizon_;
};

/// Parallel composition of two morphic systems: letters are the pairs
/// reachable from the pair of seeds, rules act componentwise and codings
/// add.  pair_names keeps the component letters of each product letter.
struct ProductSystem {
  MorphicSystem combined;
  std::vector<std::pair<std::string, std::string>> pair_names;
};

ProductSystem build_product(const MorphicSystem& left,
                            const MorphicSystem& right);

/// Collapse product pair names to single letters: the left name, except
/// that a left "S" defers to the right name.  DomainError if that rule
/// would merge two distinct letters.
MorphicSystem with_collapsed_names(const ProductSystem& p);

/// Structural equality up to letter order, matching letters by name and
/// comparing seed, rules and codings.  On mismatch, stores a reason in
/// *why when why is non-null.
bool equivalent_systems(const MorphicSystem& a, const MorphicSystem& b,
                        std::string* why = nullptr);

/// The three difference automata and three morphic systems the library is
/// built around: dq, dt and dp compute the first differences of q, t and p
/// from ternary digits, and delta, nu and psi generate the same three
/// difference sequences as coded fixed points.
struct ReferenceSystems {
  Dfao dq, dt, dp;
  MorphicSystem delta, nu, psi;
};

const ReferenceSystems& reference_systems();

/// Embedded source text of one reference definition — "dq.dfao",
/// "dt.dfao", "dp.dfao", "delta.morphic", "nu.morphic" or "psi.morphic" —
/// byte-identical to the checked-in file of the same name under data/.
/// DomainError for any other name.
std::string_view reference_fixture_text(std::string_view name);

}  // namespace palinlen
