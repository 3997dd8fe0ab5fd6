#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "neg4lat/lattice.hpp"

namespace neg4lat {

/// Kodaira dimension, ordered -inf < 0 < 1 < 2.
enum class Kodaira { minus_infinity = 0, zero = 1, one = 2, two = 3 };

std::string to_string(Kodaira k);
/// Accepts "-inf", "-infinity", "0", "1", "2".
Kodaira parse_kodaira(const std::string& text);

/// Kodaira dimension of a closed surface of the given genus.
Kodaira kappa_surface(int genus);

/// Exact (K^2, K.omega) pair threaded through surgeries.
struct InvariantState {
    Integer k_sq = 0;
    Rational k_omega = 0;
    bool minimal = false;
    std::string label;

    friend bool operator==(const InvariantState&, const InvariantState&) = default;
};

/// Kodaira dimension from the signs of K.omega and K^2 on a minimal manifold.
Kodaira kappa4(const InvariantState& state);

/// Blow-down of an exceptional sphere of area `area_e`: K^2 + 1, K.omega - area.
InvariantState blow_down(const InvariantState& state, const Rational& area_e);
/// Inverse of blow_down.
InvariantState blow_up(const InvariantState& state, const Rational& area);
/// Sum with (CP^2, 2H) along a -4-sphere of area `area_v`: K^2 + 1, K.omega + area/2.
InvariantState minus4_blow_down(const InvariantState& state, const Rational& area_v);

/// K_M . omega = K_X.omega_X + K_Y.omega_Y + area(V_X) + area(V_Y).
/// The two areas must match for the sum to exist.
Rational fiber_sum_k_omega(const Rational& kw_x, const Rational& kw_y, const Rational& area_vx,
                           const Rational& area_vy);

/// K^2 of a sum along a genus-g surface, from the splitting K_M = (K_X + V_X, K_Y + V_Y)
/// and adjunction on V: K_X^2 + K_Y^2 + 8g - 8.
Integer fiber_sum_k_sq(const Integer& k_sq_x, const Integer& k_sq_y, int genus);

struct SplitValues {
    Integer k_dot;
    Integer square;
    friend bool operator==(const SplitValues&, const SplitValues&) = default;
};

/// K_M.A and A^2 of a class A glued from (A_X, A_Y).
SplitValues split_class(const Integer& kx_ax, const Integer& ax_v, const Integer& ky_ay,
                        const Integer& ay_v, const Integer& ax_sq, const Integer& ay_sq);

/// Number of blow-ups k in K_M^2 = K_{X_m}^2 - k + 1 (rational -4-blow-down
/// with a minimal result). Throws InfeasibleScenario when k < 0.
Integer kred_solve(const Integer& k_m_sq, const Integer& k_xm_sq);

enum class Ruledness { not_ruled, rational, irrational_ruled };

std::string to_string(Ruledness r);
Ruledness parse_ruledness(const std::string& text);

struct BlowdownScenario {
    Kodaira kappa_x = Kodaira::zero;
    /// nullopt means unbounded.
    std::optional<unsigned> n_sm = 0;
    /// Symplectic count; defaults to n_sm when not given.
    std::optional<unsigned> n_sy;
    unsigned k = 0;
    bool artificial = false;
    Ruledness ruled = Ruledness::not_ruled;
};

struct Classification {
    /// nullopt when the rules do not determine it.
    std::optional<Kodaira> kappa_m;
    std::string structure;
    std::string rule;      ///< stable rule identifier
    std::string statement; ///< the encoded mathematical rule
};

/// Rule table for the -4-blow-down M of (X, V); first matching rule wins.
Classification classify_minus4(const BlowdownScenario& s);

struct SumDescriptor {
    int genus = 0;
    Integer vx_square = 0;
    Integer vy_square = 0;
    /// An exceptional sphere disjoint from V exists in X or Y.
    bool exceptional_disjoint_from_v = false;
    /// The sum is with (CP^2, 2H) and the other side has two disjoint
    /// exceptional spheres each meeting V once.
    bool cp2_2h_two_unit_exceptionals = false;
    /// One side is an S^2-bundle with V a section.
    bool sphere_bundle_section = false;
    std::optional<int> b_plus;
    std::optional<int> b1;
};

enum class SumMinimality { not_minimal, minimal_iff_z_minimal, minimal };

std::string to_string(SumMinimality m);

SumMinimality minimality_of_sum(const SumDescriptor& d);

/// One traced step of a pipeline run.
struct TraceEntry {
    std::string op;
    InvariantState state;
};

struct PipelineResult {
    std::vector<TraceEntry> trace;
    std::optional<Kodaira> final_kappa;
    std::string note;
};

/// Runs a JSON pipeline: a list of steps, the first of which must be
/// {"op": "init", "k_sq": ..., "k_omega": "p/q", "minimal": bool}. Later
/// steps: blow_up / blow_down / minus4 with "area", and fiber_sum with
/// "k_sq_y", "k_omega_y", "area_vx", "area_vy" and optional "genus". Every
/// step accepts "minimal" and "label".
PipelineResult run_pipeline(const nlohmann::json& steps);

} // namespace neg4lat
