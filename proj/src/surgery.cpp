#include "neg4lat/surgery.hpp"

#include "neg4lat/errors.hpp"
#include "neg4lat/io.hpp"

namespace neg4lat {

namespace {

void require_positive_area(const Rational& area, const char* what)
{
    if (area <= 0) {
        throw AreaError(std::string(what) + ": symplectic area must be positive, got " +
                        io::rational_to_string(area));
    }
}

Classification infeasible(const std::string& rule, const std::string& why)
{
    throw InfeasibleScenario("infeasible scenario (" + rule + "): " + why);
}

Classification result(std::optional<Kodaira> kappa, std::string structure, std::string rule,
                      std::string statement)
{
    return {kappa, std::move(structure), std::move(rule), std::move(statement)};
}

} // namespace

std::string to_string(Kodaira k)
{
    switch (k) {
    case Kodaira::minus_infinity: return "-inf";
    case Kodaira::zero: return "0";
    case Kodaira::one: return "1";
    case Kodaira::two: return "2";
    }
    return "-inf";
}

Kodaira parse_kodaira(const std::string& text)
{
    if (text == "-inf" || text == "-infinity" || text == "-oo") return Kodaira::minus_infinity;
    if (text == "0") return Kodaira::zero;
    if (text == "1") return Kodaira::one;
    if (text == "2") return Kodaira::two;
    throw ParseError("Kodaira dimension must be one of -inf, 0, 1, 2; got '" + text + "'");
}

Kodaira kappa_surface(int genus)
{
    if (genus < 0) throw DomainError("genus must be >= 0");
    if (genus == 0) return Kodaira::minus_infinity;
    if (genus == 1) return Kodaira::zero;
    return Kodaira::one;
}

Kodaira kappa4(const InvariantState& state)
{
    if (!state.minimal) {
        throw DomainError("kappa4 needs a minimal manifold; apply minimal-model reduction first");
    }
    if (state.k_omega < 0 || state.k_sq < 0) return Kodaira::minus_infinity;
    if (state.k_omega == 0 && state.k_sq == 0) return Kodaira::zero;
    if (state.k_omega > 0 && state.k_sq == 0) return Kodaira::one;
    if (state.k_omega > 0 && state.k_sq > 0) return Kodaira::two;
    throw DomainError("inconsistent invariants: K.omega = 0 with K^2 = " + state.k_sq.str() +
                      " > 0 is not assigned a Kodaira dimension");
}

InvariantState blow_down(const InvariantState& state, const Rational& area_e)
{
    require_positive_area(area_e, "blow_down");
    InvariantState out = state;
    out.k_sq += 1;
    out.k_omega -= area_e;
    out.minimal = false;
    return out;
}

InvariantState blow_up(const InvariantState& state, const Rational& area)
{
    require_positive_area(area, "blow_up");
    InvariantState out = state;
    out.k_sq -= 1;
    out.k_omega += area;
    out.minimal = false;
    return out;
}

InvariantState minus4_blow_down(const InvariantState& state, const Rational& area_v)
{
    require_positive_area(area_v, "minus4");
    InvariantState out = state;
    out.k_sq += 1;
    out.k_omega += area_v / 2;
    out.minimal = false;
    return out;
}

Rational fiber_sum_k_omega(const Rational& kw_x, const Rational& kw_y, const Rational& area_vx,
                           const Rational& area_vy)
{
    require_positive_area(area_vx, "fiber_sum");
    require_positive_area(area_vy, "fiber_sum");
    if (area_vx != area_vy) {
        throw GluingError("fiber_sum: areas of V_X (" + io::rational_to_string(area_vx) + ") and V_Y (" +
                          io::rational_to_string(area_vy) + ") must match");
    }
    return kw_x + kw_y + area_vx + area_vy;
}

Integer fiber_sum_k_sq(const Integer& k_sq_x, const Integer& k_sq_y, int genus)
{
    if (genus < 0) throw DomainError("genus must be >= 0");
    return k_sq_x + k_sq_y + 8 * genus - 8;
}

SplitValues split_class(const Integer& kx_ax, const Integer& ax_v, const Integer& ky_ay,
                        const Integer& ay_v, const Integer& ax_sq, const Integer& ay_sq)
{
    return {kx_ax + ax_v + ky_ay + ay_v, ax_sq + ay_sq};
}

Integer kred_solve(const Integer& k_m_sq, const Integer& k_xm_sq)
{
    Integer k = k_xm_sq - k_m_sq + 1;
    if (k < 0) {
        throw InfeasibleScenario("K_M^2 = " + k_m_sq.str() + " and K_{X_m}^2 = " + k_xm_sq.str() +
                                 " need a negative number of blow-ups");
    }
    return k;
}

std::string to_string(Ruledness r)
{
    switch (r) {
    case Ruledness::not_ruled: return "not-ruled";
    case Ruledness::rational: return "rational";
    case Ruledness::irrational_ruled: return "irrational-ruled";
    }
    return "not-ruled";
}

Ruledness parse_ruledness(const std::string& text)
{
    if (text == "not-ruled" || text == "none") return Ruledness::not_ruled;
    if (text == "rational") return Ruledness::rational;
    if (text == "irrational-ruled" || text == "irrational") return Ruledness::irrational_ruled;
    throw ParseError("ruled must be one of not-ruled, rational, irrational-ruled; got '" + text + "'");
}

Classification classify_minus4(const BlowdownScenario& s)
{
    if ((s.kappa_x == Kodaira::minus_infinity) != (s.ruled != Ruledness::not_ruled)) {
        throw DomainError("inconsistent scenario: kappa(X) = -inf exactly when X is rational or ruled");
    }
    const std::optional<unsigned> n_sy = s.n_sy ? s.n_sy : s.n_sm;
    if (s.n_sm && n_sy && *n_sy > *s.n_sm) {
        throw DomainError("inconsistent scenario: n_sy cannot exceed n_sm");
    }
    const bool kappa_nonneg = s.kappa_x != Kodaira::minus_infinity;

    if (s.ruled == Ruledness::irrational_ruled) {
        return result(Kodaira::minus_infinity, "M is irrational ruled (every -4-sphere is artificial)",
                      "irrational-ruled", "X irrational ruled => kappa(X) = kappa(M) = -inf");
    }

    if (!s.n_sm || *s.n_sm > 4 || (n_sy && *n_sy >= 4)) {
        if (kappa_nonneg) {
            return infeasible("many-unit-exceptionals",
                              "n_sm > 4 or n_sy >= 4 forces kappa(X) = -inf");
        }
        return result(Kodaira::minus_infinity, "", "many-unit-exceptionals",
                      "n_sm > 4 or n_sy >= 4 => kappa(X) = kappa(M) = -inf");
    }
    const unsigned n = *s.n_sm;

    if (s.ruled == Ruledness::rational) {
        if (n > 0) {
            return result(Kodaira::minus_infinity, "M is the blow-down of X along a sphere in N_sm",
                          "unit-exceptional-blow-down", "n_sm >= 1 => kappa(M) = kappa(X)");
        }
        if (s.k <= 9) {
            return infeasible("rational-small-blow-up",
                              "every -4-class in CP^2 # k CP^2-bar with k <= 9 is either not symplectically "
                              "representable or has n_sy >= 1");
        }
        if (s.k > 10) {
            return infeasible("rational-large-blow-up",
                              "kappa(M) >= 0 needs k <= 10, and kappa(M) = -inf needs n_sm > 0");
        }
        return result(std::nullopt, "kappa(M) <= 1; kappa(M) = 0 is realized by the Enriques surface",
                      "rational-ten-blow-ups", "X = CP^2 # 10 CP^2-bar with n_sm = 0 => kappa(M) <= 1");
    }

    // kappa(X) >= 0 from here on.
    if (s.artificial) {
        if (s.k != 4) {
            return infeasible("artificial-three-point-blow-up",
                              "an artificial -4-sphere with kappa(X) >= 0 has n_sy = 3 and X = X_m # 4 CP^2-bar");
        }
        return result(s.kappa_x, "X = X_m # 4 CP^2-bar, M = X_m # 3 CP^2-bar",
                      "artificial-three-point-blow-up", "artificial V => kappa(M) = kappa(X)");
    }
    if (s.k > 4) {
        return infeasible("non-artificial-bound", "a non-artificial pair with kappa(X) >= 0 has k <= 4");
    }
    if (n >= 3) {
        return infeasible("non-artificial-bound",
                          "a non-artificial pair with kappa(X) >= 0 has n_sm < 4, and n_sm = 3 does not occur");
    }

    if (s.kappa_x == Kodaira::zero) {
        if (n == 0) {
            if (s.k == 0) {
                return infeasible("kodaira-zero-minimal",
                                  "no minimal manifold with Kodaira dimension 0 contains a symplectic -4-sphere");
            }
            if (s.k == 1) {
                return result(Kodaira::one, "order 2 logarithmic transform of X_m", "kodaira-zero-n0",
                              "kappa(X) = 0, n = 0 => X = X_m # CP^2-bar and kappa(M) = 1");
            }
            return infeasible("kodaira-zero-n0", "kappa(X) = 0 with n = 0 needs k <= 1");
        }
        if (n == 1) {
            return infeasible("kodaira-zero-n1", "n = 1 is excluded by adjunction when kappa(X) = 0");
        }
        if (s.k != 2) return infeasible("kodaira-zero-n2", "kappa(X) = 0 with n = 2 needs k = 2");
        return result(Kodaira::zero,
                      "X_m # CP^2-bar, X_m a K3 surface, an Enriques surface, or an as yet unknown surface "
                      "with kappa = 0",
                      "kodaira-zero-n2", "kappa(X) = 0, n = k = 2 => kappa(M) = 0");
    }

    if (n > 0) {
        if (s.k != n) {
            return infeasible("unit-exceptional-blow-down",
                              "a non-artificial pair with kappa(X) >= 0 and n_sm > 0 has k = n_sm");
        }
        return result(s.kappa_x, "X_m # " + std::to_string(n - 1) + " CP^2-bar", "unit-exceptional-blow-down",
                      "n_sm > 0, kappa(X) >= 0 => M = X_m # (n_sm - 1) CP^2-bar");
    }

    if (s.kappa_x == Kodaira::one) {
        if (s.k == 0) {
            return result(Kodaira::two, "", "kodaira-one-minimal",
                          "kappa(X) = 1, n = 0, X minimal => K_M^2 = 1 and kappa(M) = 2");
        }
        if (s.k == 1) {
            return result(Kodaira::one, "", "kodaira-one-single-blow-up",
                          "kappa(X) = 1, n = 0, k = 1 => K_M^2 = 0 and kappa(M) = 1");
        }
        return result(std::nullopt, "not covered by the known rules", "kodaira-one-not-covered",
                      "kappa(X) = 1, n = 0 is only classified for k <= 1");
    }

    return result(Kodaira::two, "", "kodaira-two", "kappa(X) = 2, n = 0 => kappa(M) = 2");
}

std::string to_string(SumMinimality m)
{
    switch (m) {
    case SumMinimality::not_minimal: return "not-minimal";
    case SumMinimality::minimal_iff_z_minimal: return "minimal-iff-Z-minimal";
    case SumMinimality::minimal: return "minimal";
    }
    return "minimal";
}

SumMinimality minimality_of_sum(const SumDescriptor& d)
{
    if (d.genus < 0) throw DomainError("genus must be >= 0");
    if (d.vx_square + d.vy_square != 0) {
        throw DomainError("normal bundles of V_X and V_Y must cancel: " + d.vx_square.str() + " + " +
                          d.vy_square.str() + " != 0");
    }
    if (d.cp2_2h_two_unit_exceptionals && (d.genus != 0 || abs(d.vx_square) != 4)) {
        throw DomainError("the (CP^2, 2H) clause needs a sphere with square -4 on the other side");
    }
    if (d.exceptional_disjoint_from_v || d.cp2_2h_two_unit_exceptionals) return SumMinimality::not_minimal;
    if (d.sphere_bundle_section) return SumMinimality::minimal_iff_z_minimal;
    return SumMinimality::minimal;
}

PipelineResult run_pipeline(const nlohmann::json& steps)
{
    if (!steps.is_array() || steps.empty()) throw ParseError("pipeline must be a non-empty JSON list");
    const auto& first = steps.front();
    if (first.value("op", std::string()) != "init") {
        throw ParseError("pipeline must start with an {\"op\": \"init\", ...} step");
    }

    auto area_of = [](const nlohmann::json& step, const char* key) {
        if (!step.contains(key)) throw ParseError(std::string("step needs \"") + key + "\": " + step.dump());
        return io::rational_from_json(step[key]);
    };

    PipelineResult out;
    InvariantState state;
    for (const auto& step : steps) {
        if (!step.is_object()) throw ParseError("pipeline step must be an object: " + step.dump());
        const std::string op = step.value("op", std::string());
        if (op == "init") {
            if (&step != &first) throw ParseError("\"init\" may only be the first step");
            state.k_sq = io::rational_from_json(step.value("k_sq", nlohmann::json(0))).convert_to<Integer>();
            if (io::rational_from_json(step.value("k_sq", nlohmann::json(0))) != Rational(state.k_sq)) {
                throw ParseError("k_sq must be an integer");
            }
            state.k_omega = io::rational_from_json(step.value("k_omega", nlohmann::json(0)));
            state.minimal = step.value("minimal", false);
        } else if (op == "blow_up") {
            state = blow_up(state, area_of(step, "area"));
        } else if (op == "blow_down") {
            state = blow_down(state, area_of(step, "area"));
        } else if (op == "minus4") {
            state = minus4_blow_down(state, area_of(step, "area"));
        } else if (op == "fiber_sum") {
            const Rational k_sq_y = area_of(step, "k_sq_y");
            if (denominator(k_sq_y) != 1) throw ParseError("k_sq_y must be an integer");
            const int genus = step.value("genus", 0);
            state.k_omega = fiber_sum_k_omega(state.k_omega, area_of(step, "k_omega_y"),
                                              area_of(step, "area_vx"), area_of(step, "area_vy"));
            state.k_sq = fiber_sum_k_sq(state.k_sq, numerator(k_sq_y), genus);
            state.minimal = false;
        } else {
            throw ParseError("unknown pipeline op '" + op + "'");
        }
        if (op != "init" && step.contains("minimal")) state.minimal = step["minimal"].get<bool>();
        if (step.contains("label")) state.label = step["label"].get<std::string>();
        out.trace.push_back({op, state});
    }
    if (state.minimal) {
        out.final_kappa = kappa4(state);
    } else {
        out.note = "final state not asserted minimal; kappa needs the minimal model";
    }
    return out;
}

} // namespace neg4lat
