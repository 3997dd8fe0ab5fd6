#include <doctest.h>

#include "neg4lat/errors.hpp"
#include "neg4lat/surgery.hpp"

using namespace neg4lat;

namespace {

InvariantState st(long long k_sq, Rational k_omega, bool minimal = false)
{
    InvariantState s;
    s.k_sq = k_sq;
    s.k_omega = std::move(k_omega);
    s.minimal = minimal;
    return s;
}

Kodaira classify_kappa(Kodaira kappa, unsigned n, unsigned k)
{
    BlowdownScenario s;
    s.kappa_x = kappa;
    s.n_sm = n;
    s.k = k;
    const auto c = classify_minus4(s);
    REQUIRE(c.kappa_m);
    return *c.kappa_m;
}

} // namespace

TEST_CASE("Kodaira dimension of surfaces and minimal manifolds")
{
    CHECK(kappa_surface(0) == Kodaira::minus_infinity);
    CHECK(kappa_surface(1) == Kodaira::zero);
    CHECK(kappa_surface(5) == Kodaira::one);

    CHECK(kappa4(st(0, 0, true)) == Kodaira::zero);
    CHECK(kappa4(st(0, Rational(7, 2), true)) == Kodaira::one);
    CHECK(kappa4(st(-1, 5, true)) == Kodaira::minus_infinity);
    CHECK(kappa4(st(3, 2, true)) == Kodaira::two);
    CHECK_THROWS_AS(kappa4(st(0, 0, false)), DomainError);
    CHECK_THROWS_AS(kappa4(st(2, 0, true)), DomainError);

    for (const char* t : {"-inf", "0", "1", "2"}) CHECK(to_string(parse_kodaira(t)) == t);
    CHECK_THROWS_AS(parse_kodaira("3"), ParseError);
}

TEST_CASE("blow-ups and -4-blow-downs")
{
    CHECK(blow_down(st(-1, 3), 1) == st(0, 2));
    CHECK(blow_up(st(0, 2), 1) == st(-1, 3));
    CHECK(blow_up(blow_up(st(0, 2), 1), 1).k_sq == -2);
    CHECK_THROWS_AS(blow_down(st(0, 0), 0), AreaError);
    CHECK_THROWS_AS(blow_up(st(0, 0), -1), AreaError);

    CHECK(minus4_blow_down(st(-1, 5), 4) == st(0, 7));
    CHECK(minus4_blow_down(st(3, Rational(1, 3)), Rational(1, 5)) == st(4, Rational(1, 3) + Rational(1, 10)));
    CHECK_THROWS_AS(minus4_blow_down(st(0, 0), 0), AreaError);
}

TEST_CASE("fiber sums")
{
    const Rational t(3, 7);
    CHECK(fiber_sum_k_omega(5, -3 * t, 2 * t, 2 * t) == 5 + t);
    CHECK(fiber_sum_k_omega(0, 0, Rational(2), Rational(2)) == 4);
    CHECK_THROWS_AS(fiber_sum_k_omega(0, 0, 1, 2), GluingError);

    // Summing with (CP^2, 2H) along a sphere matches the -4-blow-down.
    CHECK(fiber_sum_k_sq(-1, 9, 0) == 0);
    CHECK(fiber_sum_k_sq(0, 0, 1) == 0);

    CHECK(split_class(-1, 0, 0, 0, -1, 0) == SplitValues{-1, -1});
    CHECK(split_class(0, 0, 0, 0, 2, -3).square == -1);
}

TEST_CASE("rational blow-down count")
{
    CHECK(kred_solve(9, 9) == 1);
    CHECK(kred_solve(8, 9) == 2);
    CHECK(kred_solve(10, 9) == 0);
    CHECK_THROWS_AS(kred_solve(11, 9), InfeasibleScenario);
}

TEST_CASE("classifier rule table")
{
    CHECK(classify_kappa(Kodaira::zero, 0, 1) == Kodaira::one);
    CHECK(classify_kappa(Kodaira::zero, 2, 2) == Kodaira::zero);
    CHECK(classify_kappa(Kodaira::one, 0, 0) == Kodaira::two);
    CHECK(classify_kappa(Kodaira::one, 0, 1) == Kodaira::one);
    CHECK(classify_kappa(Kodaira::two, 0, 0) == Kodaira::two);
    CHECK(classify_kappa(Kodaira::two, 1, 1) == Kodaira::two);

    BlowdownScenario s;
    s.kappa_x = Kodaira::zero;
    s.n_sm = 0;
    s.k = 0;
    CHECK_THROWS_AS(classify_minus4(s), InfeasibleScenario);
    s.n_sm = 1;
    s.k = 1;
    CHECK_THROWS_AS(classify_minus4(s), InfeasibleScenario);
    s.kappa_x = Kodaira::one;
    s.n_sm = 0;
    s.k = 5;
    CHECK_THROWS_AS(classify_minus4(s), InfeasibleScenario);
    s.k = 3;
    const auto uncovered = classify_minus4(s);
    CHECK_FALSE(uncovered.kappa_m);
    CHECK(uncovered.rule == "kodaira-one-not-covered");

    s.kappa_x = Kodaira::two;
    s.n_sm = 3;
    s.n_sy = 3;
    s.k = 4;
    s.artificial = true;
    CHECK(classify_minus4(s).kappa_m == Kodaira::two);

    BlowdownScenario irr;
    irr.kappa_x = Kodaira::minus_infinity;
    irr.ruled = Ruledness::irrational_ruled;
    irr.n_sm = std::nullopt;
    CHECK(classify_minus4(irr).kappa_m == Kodaira::minus_infinity);

    BlowdownScenario many;
    many.kappa_x = Kodaira::minus_infinity;
    many.ruled = Ruledness::rational;
    many.n_sm = 5;
    CHECK(classify_minus4(many).rule == "many-unit-exceptionals");

    BlowdownScenario bad;
    bad.kappa_x = Kodaira::minus_infinity;
    CHECK_THROWS_AS(classify_minus4(bad), DomainError);
}

TEST_CASE("minimality of sums")
{
    SumDescriptor d;
    d.vx_square = -4;
    d.vy_square = 4;
    CHECK(minimality_of_sum(d) == SumMinimality::minimal);
    d.exceptional_disjoint_from_v = true;
    CHECK(minimality_of_sum(d) == SumMinimality::not_minimal);
    d.exceptional_disjoint_from_v = false;
    d.cp2_2h_two_unit_exceptionals = true;
    CHECK(minimality_of_sum(d) == SumMinimality::not_minimal);
    d.cp2_2h_two_unit_exceptionals = false;
    d.sphere_bundle_section = true;
    CHECK(minimality_of_sum(d) == SumMinimality::minimal_iff_z_minimal);
    d.vy_square = 3;
    CHECK_THROWS_AS(minimality_of_sum(d), DomainError);
}

TEST_CASE("pipelines")
{
    const auto steps = nlohmann::json::parse(R"json([
        {"op": "init", "k_sq": 0, "k_omega": "-3", "label": "E(1)"},
        {"op": "blow_up", "area": "1"},
        {"op": "minus4", "area": "4"},
        {"op": "blow_up", "area": "1/2"},
        {"op": "minus4", "area": "3"}
    ])json");
    const auto r = run_pipeline(steps);
    REQUIRE(r.trace.size() == 5);
    CHECK(r.trace[1].state.k_sq == -1);
    CHECK(r.trace[2].state.k_sq == 0);
    CHECK(r.trace.back().state.k_sq == 0);
    CHECK(r.trace.back().state.k_omega == Rational(-3) + 1 + 2 + Rational(1, 2) + Rational(3, 2));
    CHECK_FALSE(r.final_kappa);
    CHECK_FALSE(r.note.empty());

    const auto minimal = run_pipeline(nlohmann::json::parse(R"([{"op": "init", "k_sq": 0, "k_omega": "0", "minimal": true}])"));
    CHECK(minimal.final_kappa == Kodaira::zero);

    CHECK_THROWS_AS(run_pipeline(nlohmann::json::parse(R"([{"op": "blow_up", "area": "1"}])")), ParseError);
    CHECK_THROWS_AS(run_pipeline(nlohmann::json::parse(R"([{"op": "init"}, {"op": "twist"}])")), ParseError);
    CHECK_THROWS_AS(run_pipeline(nlohmann::json::parse(R"([{"op": "init"}, {"op": "blow_up", "area": 0.5}])")),
                    ParseError);
    CHECK_THROWS_AS(run_pipeline(nlohmann::json::parse(
                        R"([{"op": "init"}, {"op": "fiber_sum", "k_sq_y": 9, "k_omega_y": "-3",
                              "area_vx": "2", "area_vy": "1"}])")),
                    GluingError);
}
