#include "palinlen/automata.hpp"
#include "palinlen/errors.hpp"

namespace palinlen {

namespace {

// The checked-in copies under data/ carry the same bytes; a test keeps the
// two in sync.

constexpr std::string_view kDqDfao = R"(# First differences of q from ternary digits, most significant first.
# Output is read at the final state.
state D  output 1
state S  output 0
state S' output 0
state D~ output -1
init D
edge D  0 D
edge D  1 S
edge D  2 S'
edge S  0 S
edge S  1 S
edge S  2 S
edge S' 0 D
edge S' 1 S
edge S' 2 D~
edge D~ 0 S'
edge D~ 1 S
edge D~ 2 D~
)";

constexpr std::string_view kDtDfao = R"(# First differences of t = p - q from ternary digits, most significant first.
state A  output 0
state B  output 1
state C  output 1
state A~ output 0
state B~ output -1
state C~ output -1
state S  output 0
init A
edge A  0 A
edge A  1 B
edge A  2 C~
edge B  0 B
edge B  1 S
edge B  2 S
edge C  0 A
edge C  1 B
edge C  2 S
edge A~ 0 C
edge A~ 1 B~
edge A~ 2 A~
edge B~ 0 S
edge B~ 1 S
edge B~ 2 B~
edge C~ 0 S
edge C~ 1 B~
edge C~ 2 A~
edge S  0 S
edge S  1 S
edge S  2 S
)";

constexpr std::string_view kDpDfao = R"(# First differences of p from ternary digits, most significant first.
state A  output 1
state B  output 1
state C  output 1
state D  output 1
state A~ output -1
state B~ output -1
state C~ output -1
state D~ output -1
state S  output 0
state S' output 0
init A
edge A  0 A
edge A  1 B
edge A  2 C~
edge B  0 B
edge B  1 S
edge B  2 S
edge C  0 A
edge C  1 B
edge C  2 D~
edge D  0 D
edge D  1 S
edge D  2 S'
edge A~ 0 C
edge A~ 1 B~
edge A~ 2 A~
edge B~ 0 S
edge B~ 1 S
edge B~ 2 B~
edge C~ 0 D
edge C~ 1 B~
edge C~ 2 A~
edge D~ 0 S'
edge D~ 1 S
edge D~ 2 D~
edge S  0 S
edge S  1 S
edge S  2 S
edge S' 0 D
edge S' 1 S
edge S' 2 D~
)";

constexpr std::string_view kDeltaMorphic = R"(# 3-uniform system whose coded fixed point is the sequence of first
# differences of q.
letter D  output 1
letter S  output 0
letter S' output 0
letter D~ output -1
seed D
rule D  -> D S S'
rule S  -> S S S
rule S' -> D S D~
rule D~ -> S' S D~
)";

constexpr std::string_view kNuMorphic = R"(# 3-uniform system whose coded fixed point is the sequence of first
# differences of t = p - q.
letter A  output 0
letter B  output 1
letter C  output 1
letter A~ output 0
letter B~ output -1
letter C~ output -1
letter S  output 0
seed A
rule A  -> A B C~
rule B  -> B S S
rule C  -> A B S
rule A~ -> C B~ A~
rule B~ -> S S B~
rule C~ -> S B~ A~
rule S  -> S S S
)";

constexpr std::string_view kPsiMorphic = R"(# 3-uniform system whose coded fixed point is the sequence of first
# differences of p; the pairwise product of the other two systems collapses
# onto it letter for letter.
letter A  output 1
letter B  output 1
letter C  output 1
letter D  output 1
letter A~ output -1
letter B~ output -1
letter C~ output -1
letter D~ output -1
letter S  output 0
letter S' output 0
seed A
rule A  -> A B C~
rule B  -> B S S
rule C  -> A B D~
rule D  -> D S S'
rule A~ -> C B~ A~
rule B~ -> S S B~
rule C~ -> D B~ A~
rule D~ -> S' S D~
rule S  -> S S S
rule S' -> D S D~
)";

}  // namespace

const ReferenceSystems& reference_systems() {
  static const ReferenceSystems systems = [] {
    ReferenceSystems s;
    s.dq = parse_dfao(kDqDfao);
    s.dt = parse_dfao(kDtDfao);
    s.dp = parse_dfao(kDpDfao);
    s.delta = parse_morphic(kDeltaMorphic);
    s.nu = parse_morphic(kNuMorphic);
    s.psi = parse_morphic(kPsiMorphic);
    return s;
  }();
  return systems;
}

std::string_view reference_fixture_text(std::string_view name) {
  if (name == "dq.dfao") return kDqDfao;
  if (name == "dt.dfao") return kDtDfao;
  if (name == "dp.dfao") return kDpDfao;
  if (name == "delta.morphic") return kDeltaMorphic;
  if (name == "nu.morphic") return kNuMorphic;
  if (name == "psi.morphic") return kPsiMorphic;
  throw DomainError("no reference definition named \"" + std::string(name) +
                    "\"");
}

}  // namespace palinlen
