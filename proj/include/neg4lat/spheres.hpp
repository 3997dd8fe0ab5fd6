#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "neg4lat/lattice.hpp"
#include "neg4lat/weyl.hpp"

namespace neg4lat {

/// Sign choice for the adjunction screen. The a-term contributes
/// a_sign * 3a to K_st . xi~, each b_i > 1 contributes signs[t] * b_i (t
/// counting only the entries > 1, left to right), and each b_i = 1 contributes
/// -1 (or +1 with ones_positive).
struct SignAssignment {
    int a_sign = 1;
    std::vector<int> signs;
    bool ones_positive = false;

    friend bool operator==(const SignAssignment&, const SignAssignment&) = default;
    friend auto operator<=>(const SignAssignment&, const SignAssignment&) = default;
};

struct AdjunctionValueSet {
    std::vector<Integer> values; ///< sorted, distinct
    std::map<Integer, SignAssignment> witnesses;

    bool contains(const Integer& v) const { return witnesses.contains(v); }
};

/// Attainable K_st . xi~ values. xi must be trivial-normal with square -4.
AdjunctionValueSet value_set(const LatticeClass& xi, bool ones_positive = false);

/// Every sign assignment of xi attaining `value`, in a fixed order.
std::vector<SignAssignment> assignments_for(const LatticeClass& xi, const Integer& value,
                                            bool ones_positive = false);

/// The class xi~ realized by a sign assignment.
LatticeClass witness_class(const LatticeClass& xi, const SignAssignment& s);

struct ExceptionalMultiple {
    Integer m;
    LatticeClass exceptional;
};

/// xi~ = m * E with |m| >= 2 and E exceptional with 0 <= E.a <= a_max.
std::optional<ExceptionalMultiple> multiple_of_exceptional(const LatticeClass& xi_tilde, int a_max);

/// Exceptional classes (0 <= a <= a_max) meeting xi~ with pairing exactly 1.
std::vector<LatticeClass> unit_meeting_exceptional(const LatticeClass& xi_tilde, int a_max);

enum class ScreenOutcome { not_representable, multiple_of_exceptional, nsm_positive, inconclusive };

std::string to_string(ScreenOutcome o);

struct ScreenVerdict {
    ScreenOutcome outcome = ScreenOutcome::inconclusive;
    AdjunctionValueSet values;
    /// Distinct witness classes of value 2, sorted.
    std::vector<LatticeClass> witnesses;
    /// Set for multiple_of_exceptional: the factorization of the first witness.
    std::optional<LatticeClass> multiple_witness;
    std::optional<ExceptionalMultiple> multiple;
    /// Set for nsm_positive: the witness and an exceptional class meeting it once.
    std::optional<LatticeClass> meeting_witness;
    std::optional<LatticeClass> meeting_exceptional;
};

inline constexpr int default_screen_max_a = 6;

ScreenVerdict screen(const LatticeClass& xi, int a_max = default_screen_max_a,
                     bool ones_positive = false);

enum class RepFlag { not_representable, unknown };

struct TableEntry {
    std::size_t rel_min_k = 0;
    LatticeClass xi;
    RepFlag sympl_rep = RepFlag::unknown;
    bool nsm_positive = false;
    bool starred = false;
    std::string note;
};

/// Reads the TSV table: rel_min_k, class, rep_flag, nsm_flag, star, note.
/// Blank lines and lines starting with '#' are skipped.
std::vector<TableEntry> read_table(const std::filesystem::path& path);
std::vector<TableEntry> parse_table(const std::string& text);

enum class RowStatus { pass, review, fail };

std::string to_string(RowStatus s);

struct RowReport {
    std::size_t row = 0; ///< 1-based line order among entries
    TableEntry entry;
    RowStatus status = RowStatus::fail;
    std::optional<ScreenVerdict> verdict;
    std::vector<std::string> problems;
};

struct OrbitFinding {
    std::size_t row_x = 0;
    std::size_t row_y = 0;
    std::size_t k = 0; ///< common number of blow-ups after zero padding
    bool global_sign = false;
};

struct TableReport {
    std::vector<RowReport> rows;
    std::vector<OrbitFinding> orbit_findings;
    Integer orbit_cap = 0;
    std::size_t failures() const;
    std::size_t reviews() const;
};

inline constexpr int default_table_orbit_cap = 12;

/// Screens every row against its flags, then reports which rows share a
/// bounded orbit (after padding with zero entries to a common k).
TableReport verify_table(const std::vector<TableEntry>& entries, int a_max = default_screen_max_a,
                         const Integer& orbit_cap = default_table_orbit_cap, bool orbit_report = true);

} // namespace neg4lat
