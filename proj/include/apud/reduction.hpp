#pragma once

#include "apud/geometry.hpp"
#include "apud/graph.hpp"
#include "apud/rational.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace apud {

/// Parse failure carrying the 1-based input line it refers to.
class ParseError : public std::runtime_error
{
public:
    ParseError(int line, const std::string & what);
    [[nodiscard]] auto line() const -> int { return _line; }

private:
    int _line;
};

/// Raised when a generated placement fails exact verification, i.e. the
/// layout profile cannot realize the instance.
class LayoutError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Monotone NAE3SAT instance. Variables are 0-based internally; the text
/// format is 1-based.
struct NaeFormula
{
    int variables = 0;
    std::vector<std::array<int, 3>> clauses;

    /// Throws RejectedInput unless every clause names three distinct
    /// variables in range.
    auto validate() const -> void;
    friend auto operator==(const NaeFormula &, const NaeFormula &) -> bool = default;
};

struct Assignment
{
    std::vector<bool> values;
    friend auto operator==(const Assignment &, const Assignment &) -> bool = default;
};

/// Reads `p nae <n> <m>` followed by m lines of three positive 1-based
/// variable indices. Blank lines and lines starting with 'c' are skipped.
auto parse_nae3sat(const std::string & text) -> NaeFormula;
auto format_nae3sat(const NaeFormula & f) -> std::string;

/// Index of the first clause whose literals are all equal, if any.
auto first_violated_clause(const NaeFormula & f, const Assignment & a) -> std::optional<int>;
auto is_nae_satisfying(const NaeFormula & f, const Assignment & a) -> bool;

/// Random monotone formula with m clauses over n >= 3 variables. Uses
/// mt19937_64 with plain modulo reduction, so output is the same on every
/// platform for a given seed.
auto random_nae_formula(int variables, int clauses, std::uint64_t seed) -> NaeFormula;

inline constexpr std::uint64_t default_corpus_seed = 20240617;

/// `count` random formulas with 3 <= n <= max_variables, 1 <= m <= max_clauses,
/// all drawn from one generator.
auto nae_corpus(int count, int max_variables, int max_clauses, std::uint64_t seed = default_corpus_seed)
    -> std::vector<NaeFormula>;

inline constexpr int max_bruteforce_variables = 24;

/// Smallest satisfying assignment when read as a binary number with variable
/// 0 as the least significant bit, or nullopt if the formula is unsatisfiable.
auto solve_nae_bruteforce(const NaeFormula & f) -> std::optional<Assignment>;

/// Spacing constants of the line frame and of the witness layout. All values
/// are exact; `for_epsilon` derives the defaults from the slack epsilon.
struct LayoutProfile
{
    Rational epsilon;
    Rational literal_pitch;  // distance between consecutive vertical lines
    Rational clause_pitch;   // distance between consecutive clause lines
    Rational first_clause;   // height of the lowest clause line above the hinge
    Rational straddle;       // half-gap of the literal-path pair around a clause line
    Rational side_straddle;  // same, for the two frame paths
    Rational hub_offset;     // first literal-path disk off the hinge
    Rational diamond_offset; // diamond tips, horizontal distance from the frame line
    Rational flag_offset;    // flags, horizontal distance from the literal line
    Rational end_gap;        // top literal disk to the end line
    Rational cap_height;     // end line to the cap disk
    Rational end_pitch;      // spacing of the disks on the end lines

    static auto for_epsilon(const Rational & epsilon) -> LayoutProfile;
    static auto standard() -> LayoutProfile { return for_epsilon(Rational(1, 10)); }

    friend auto operator==(const LayoutProfile &, const LayoutProfile &) -> bool = default;
};

/// Throws RejectedInput unless 0 < epsilon < 1 and the profile realizes a
/// small satisfiable instance.
auto validate_profile(const LayoutProfile & profile) -> void;

enum class Side
{
    Left,
    Right,
};

enum class Half
{
    Bottom,
    Top,
};

enum class EndPart
{
    Left,
    Right,
    Cap,
};

/// Vertex roles. Path slots are signed: 0 is the vertex on the hinge line,
/// positive slots go up in the top half, negative ones mirror them.
struct SidePathRole
{
    Side side;
    int slot;
    friend auto operator==(const SidePathRole &, const SidePathRole &) -> bool = default;
};

struct LiteralPathRole
{
    int literal;
    int slot;
    friend auto operator==(const LiteralPathRole &, const LiteralPathRole &) -> bool = default;
};

/// Hinge-path vertex between hub k and hub k+1 (hub 0 is the left frame
/// path, hub n+1 the right one).
struct AlphaLinkRole
{
    int link;
    friend auto operator==(const AlphaLinkRole &, const AlphaLinkRole &) -> bool = default;
};

struct DiamondTipRole
{
    Side side;
    int clause;
    Half half;
    bool outer;
    friend auto operator==(const DiamondTipRole &, const DiamondTipRole &) -> bool = default;
};

struct EndCycleRole
{
    int literal;
    Half half;
    int level;
    EndPart part;
    friend auto operator==(const EndCycleRole &, const EndCycleRole &) -> bool = default;
};

struct FlagRole
{
    int literal;
    int clause;
    Half half;
    friend auto operator==(const FlagRole &, const FlagRole &) -> bool = default;
};

using Role = std::variant<SidePathRole, LiteralPathRole, AlphaLinkRole, DiamondTipRole, EndCycleRole, FlagRole>;

auto role_name(const Role & role) -> std::string;

/// Formula-independent part of the construction (plus flags once attached).
struct Skeleton
{
    Graph graph;
    std::vector<Role> roles;
    int literals = 0;
    int clauses = 0;
    /// 1, or 2 when literals == 2 * clauses: each literal path then ends in
    /// two stacked 4-cycles and the frame gains an extra line pair.
    int end_levels = 1;
    std::optional<NaeFormula> formula;
};

struct ReductionInstance
{
    Graph graph;
    LineConfig lines;
    std::vector<Role> roles;
    int literals = 0;
    int clauses = 0;
    int end_levels = 1;
    LayoutProfile profile;
    std::optional<NaeFormula> formula;
};

/// Number of end 4-cycles stacked at each end of a literal path.
auto end_levels_for(int literals, int clauses) -> int;

/// Vertical lines: L at 0, literal i at i * literal_pitch, R at
/// (n+1) * literal_pitch. Horizontal lines: hinge at 0, clause lines C_j
/// above and their mirrors below, end lines T and B = -T (and a second pair
/// when n == 2m).
auto build_lines(int literals, int clauses, const LayoutProfile & profile) -> LineConfig;

/// Heights of the named horizontal lines (top half; the bottom mirrors).
auto clause_height(const LayoutProfile & profile, int clause) -> Rational;
auto end_height(const LayoutProfile & profile, int clauses, int level) -> Rational;

auto build_skeleton(int literals, int clauses) -> Skeleton;

/// Adds one flag per (literal, clause) crossing below the hinge, and one per
/// crossing above it where the literal does not occur in the clause.
auto attach_flags(const Skeleton & skeleton, const NaeFormula & f) -> Skeleton;

auto reduce(const NaeFormula & f, const LayoutProfile & profile) -> ReductionInstance;

/// Instance without any flags, for checking the frame on its own.
auto skeleton_instance(int literals, int clauses, const LayoutProfile & profile) -> ReductionInstance;

/// Explicit realization for a NAE-satisfying assignment: literal paths of
/// false variables are flipped about the hinge, flags point away from the
/// first missing flag on their line. The result is verified exactly before it
/// is returned; a failure raises LayoutError.
auto witness_embedding(const ReductionInstance & instance, const Assignment & a) -> Placement;

/// Same placement, without the final verification pass.
auto witness_layout(const ReductionInstance & instance, const Assignment & a) -> Placement;

/// Two stacked copies of g. Vertex v' is v + n; the edge set is E, E' and the
/// matching {v v'}. The planes are z = 0 and z = 1 - epsilon.
struct Lift
{
    Graph graph;
    Rational lower_plane;
    Rational upper_plane;
};

auto lift_to_3d(const Graph & g, const Rational & epsilon = Rational(1, 10)) -> Lift;

}
