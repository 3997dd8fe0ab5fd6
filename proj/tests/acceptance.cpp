// Acceptance checks: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "neg4lat/errors.hpp"
#include "neg4lat/io.hpp"
#include "neg4lat/lattice.hpp"
#include "neg4lat/spheres.hpp"
#include "neg4lat/surgery.hpp"
#include "neg4lat/weyl.hpp"
#include "oracles.hpp"

using namespace neg4lat;

namespace {

struct Check {
    bool ok = true;
    std::vector<std::string> notes;

    void require(bool cond, const std::string& what)
    {
        if (!cond) {
            ok = false;
            notes.push_back(what);
        }
    }
    void note(const std::string& what) { notes.push_back(what); }
};

LatticeClass cls(long long a, std::vector<long long> b)
{
    std::vector<Integer> bb(b.begin(), b.end());
    return {Integer(a), std::move(bb)};
}

oracle::Vec to_vec(const LatticeClass& x)
{
    oracle::Vec v;
    for (const auto& b : x.b()) v.push_back(b.convert_to<long long>());
    return v;
}

std::set<long long> values_of(const AdjunctionValueSet& vs)
{
    std::set<long long> out;
    for (const auto& v : vs.values) out.insert(v.convert_to<long long>());
    return out;
}

std::string show(const std::set<long long>& s)
{
    std::ostringstream o;
    o << '{';
    bool first = true;
    for (auto v : s) {
        o << (first ? "" : ",") << v;
        first = false;
    }
    o << '}';
    return o.str();
}

std::vector<TableEntry> load_table()
{
    return read_table(NEG4LAT_TABLE);
}

// --- criteria -------------------------------------------------------------

Check table_integrity()
{
    Check c;
    const auto rows = load_table();
    c.require(rows.size() == 25, "table has " + std::to_string(rows.size()) + " rows, expected 25");
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& e = rows[i];
        const Integer sq = square(e.xi);
        c.require(sq == -4, "row " + std::to_string(i + 1) + " (" + e.xi.to_string() + ") has square " + sq.str());
        c.require(support_size(e.xi) == e.rel_min_k,
                  "row " + std::to_string(i + 1) + " rel_min_k " + std::to_string(e.rel_min_k) + " vs " +
                      std::to_string(support_size(e.xi)) + " nonzero entries");
    }
    return c;
}

Check value_sets()
{
    Check c;
    const auto a = values_of(value_set(cls(2, {2, 1, 1, 1, 1})));
    c.require(a == std::set<long long>{-12, -8, 0, 4}, "(2,2,1,1,1,1) gives " + show(a));
    const auto b = values_of(value_set(cls(3, {2, 2, 1, 1, 1, 1, 1})));
    c.require(b == std::set<long long>{-18, -14, -10, 0, 4, 8}, "(3,2,2,1,1,1,1,1) gives " + show(b));

    std::size_t checked = 0;
    std::set<LatticeClass> seen;
    for (const auto& e : load_table()) {
        if (e.sympl_rep != RepFlag::not_representable) continue;
        if (e.note != "Ex. large" && e.note != "Ex. 9") continue;
        const auto vs = value_set(e.xi);
        const auto got = values_of(vs);
        c.require(got == oracle::value_set(e.xi.a().convert_to<long long>(), to_vec(e.xi)),
                  e.xi.to_string() + ": value set differs from the sign-vector oracle");
        c.require(!vs.contains(2), e.xi.to_string() + ": 2 is attainable");
        seen.insert(e.xi);
        ++checked;
    }
    for (const auto& named : {cls(5, {4, 2, 2, 2, 1}), cls(9, {8, 2, 2, 2, 2, 2, 1}),
                              cls(5, {3, 2, 2, 2, 2, 1, 1, 1, 1})}) {
        c.require(seen.contains(named), named.to_string() + " not among the checked rows");
    }
    c.note(std::to_string(checked) + " N rows excluded by value sets");
    return c;
}

Check multiples()
{
    Check c;
    struct Case {
        LatticeClass xi;
        Integer m;
        LatticeClass e;
    };
    const std::vector<Case> cases = {
        {cls(4, {2, 2, 2, 2, 2}), -2, cls(2, {1, 1, 1, 1, 1})},
        {cls(6, {4, 2, 2, 2, 2, 2, 2}), -2, cls(3, {2, 1, 1, 1, 1, 1, 1})},
        {cls(0, {2}), -2, LatticeClass::exceptional(1, 0)},
    };
    for (const auto& t : cases) {
        const auto v = screen(t.xi);
        c.require(v.outcome == ScreenOutcome::multiple_of_exceptional,
                  t.xi.to_string() + ": outcome " + to_string(v.outcome));
        if (!v.multiple) continue;
        c.require(v.multiple->m == t.m && v.multiple->exceptional == t.e,
                  t.xi.to_string() + ": got " + v.multiple->m.str() + " * " + v.multiple->exceptional.to_string());
        c.require(v.multiple->m * v.multiple->exceptional == *v.multiple_witness,
                  t.xi.to_string() + ": factorization does not multiply back");
        c.require(k_dot(*v.multiple_witness) == 2, t.xi.to_string() + ": witness is not of value 2");
    }
    return c;
}

Check nsm_positive()
{
    Check c;
    std::size_t flagged = 0;
    for (const auto& e : load_table()) {
        if (!e.nsm_positive) continue;
        ++flagged;
        const std::string name = e.xi.to_string();
        try {
            const auto v = screen(e.xi);
            if (v.outcome != ScreenOutcome::nsm_positive) {
                c.require(false, name + ": outcome " + to_string(v.outcome));
                continue;
            }
            const auto& E = *v.meeting_exceptional;
            const auto& w = *v.meeting_witness;
            c.require(pair(E, w) == 1, name + ": pair(E, xi~) = " + pair(E, w).str());
            c.require(square(E) == -1, name + ": square(E) = " + square(E).str());
            c.require(k_dot(E) == -1, name + ": k_dot(E) = " + k_dot(E).str());
            c.require(k_dot(w) == 2 && square(w) == -4, name + ": xi~ is not a value-2 witness");
            bool same_abs = abs(w.a()) == abs(e.xi.a());
            for (std::size_t i = 0; i < w.k(); ++i) same_abs = same_abs && abs(w.b(i)) == abs(e.xi.b(i));
            c.require(same_abs, name + ": xi~ is not a sign change of xi");
        } catch (const Error& err) {
            c.require(false, name + ": " + err.what());
        }
    }
    c.note(std::to_string(flagged) + " rows flagged >0");
    return c;
}

Check section_four_class()
{
    Check c;
    const LatticeClass v = cls(6, std::vector<long long>(10, 2));
    c.require(square(v) == -4, "V^2 = " + square(v).str());
    c.require(k_dot(v) == 2, "K_st.V = " + k_dot(v).str());
    c.require(v == Integer(-2) * canonical_std(10), "V != -2 K_st");
    c.require(unit_meeting_exceptional(v, 6).empty(), "some exceptional class meets V once");

    const std::uint64_t expected = oracle::exceptional_count(10, 6);
    const auto catalog = enumerate_exceptional(10, 6);
    c.require(catalog.size() == expected,
              "catalog has " + std::to_string(catalog.size()) + " classes, oracle counts " + std::to_string(expected));
    c.require(!catalog.empty(), "empty catalog");
    std::size_t off = 0;
    for (const auto& e : catalog) off += pair(e, v) != 2;
    c.require(off == 0, std::to_string(off) + " classes with pair(E, V) != 2");
    c.note("catalog size " + std::to_string(catalog.size()) + (catalog.size() > 527 ? " (exceeds the stated 527 bound)" : ""));
    return c;
}

Check surgery_arithmetic()
{
    Check c;
    for (const auto& [k_sq, k_omega, area] :
         std::vector<std::tuple<long long, Rational, Rational>>{{-1, 5, 4}, {0, Rational(-7, 3), Rational(1, 9)}, {7, 0, 10}}) {
        InvariantState s;
        s.k_sq = k_sq;
        s.k_omega = k_omega;
        const auto t = minus4_blow_down(s, area);
        c.require(t.k_sq == s.k_sq + 1 && t.k_omega == s.k_omega + area / 2,
                  "minus4 on (" + std::to_string(k_sq) + ", " + io::rational_to_string(k_omega) + ")");
    }
    const auto enriques = run_pipeline(nlohmann::json::parse(R"([
        {"op": "init", "k_sq": 0, "k_omega": "-3"},
        {"op": "blow_up", "area": "1"},
        {"op": "minus4", "area": "4"},
        {"op": "blow_up", "area": "1"},
        {"op": "minus4", "area": "4"}])"));
    std::vector<long long> ks;
    for (const auto& t : enriques.trace) ks.push_back(t.state.k_sq.convert_to<long long>());
    c.require(ks == std::vector<long long>{0, -1, 0, -1, 0}, "Enriques chain K^2 trace differs");
    c.require(kred_solve(9, 9) == 1, "k for M = CP^2");
    c.require(kred_solve(8, 9) == 2, "k for M = S^2 x S^2");
    return c;
}

Check classifier()
{
    Check c;
    struct Row {
        Kodaira kx;
        unsigned n, k;
        Kodaira km;
    };
    const std::vector<Row> rows = {
        {Kodaira::zero, 0, 1, Kodaira::one}, {Kodaira::zero, 2, 2, Kodaira::zero}, {Kodaira::one, 0, 0, Kodaira::two},
        {Kodaira::one, 0, 1, Kodaira::one},  {Kodaira::two, 0, 0, Kodaira::two},  {Kodaira::two, 1, 1, Kodaira::two},
    };
    for (const auto& r : rows) {
        BlowdownScenario s;
        s.kappa_x = r.kx;
        s.n_sm = r.n;
        s.k = r.k;
        const std::string name = "(" + to_string(r.kx) + ", n=" + std::to_string(r.n) + ", k=" + std::to_string(r.k) + ")";
        try {
            const auto got = classify_minus4(s);
            c.require(got.kappa_m == r.km, name + " -> " + (got.kappa_m ? to_string(*got.kappa_m) : "undetermined"));
        } catch (const Error& e) {
            c.require(false, name + ": " + e.what());
        }
    }
    BlowdownScenario bad;
    bad.kappa_x = Kodaira::zero;
    bad.n_sm = 0;
    bad.k = 0;
    bool rejected = false;
    try {
        classify_minus4(bad);
    } catch (const InfeasibleScenario&) {
        rejected = true;
    }
    c.require(rejected, "(0, n=0, k=0) accepted");
    return c;
}

void trivial_normal_classes(std::size_t k, long long a, long long target, long long max_part, oracle::Vec& cur,
                            const std::function<void(const oracle::Vec&)>& f)
{
    if (cur.size() == k) {
        if (target == 0) f(cur);
        return;
    }
    for (long long v = max_part; v >= 0; --v) {
        if (v * v > target) continue;
        const long long rest = target - v * v;
        if (rest > static_cast<long long>(k - cur.size() - 1) * v * v) break;
        cur.push_back(v);
        trivial_normal_classes(k, a, rest, v, cur, f);
        cur.pop_back();
    }
}

Check properties()
{
    Check c;
    std::mt19937_64 rng(20261019);
    std::uniform_int_distribution<long long> coef(-40, 40);
    std::size_t bad = 0;
    for (int t = 0; t < 10000; ++t) {
        const std::size_t k = 2 + static_cast<std::size_t>(t % 9);
        oracle::Vec bx(k), by(k);
        for (auto& v : bx) v = coef(rng);
        for (auto& v : by) v = coef(rng);
        const auto x = cls(coef(rng), bx), y = cls(coef(rng), by);
        std::vector<std::size_t> idx(k);
        for (std::size_t i = 0; i < k; ++i) idx[i] = i;
        std::shuffle(idx.begin(), idx.end(), rng);
        const Reflection r = (k == 2 || t % 4 == 0) ? Reflection::pair_kind(idx[0], idx[1])
                                                     : Reflection::cremona(idx[0], idx[1], idx[2]);
        const auto rx = reflect(x, r), ry = reflect(y, r);
        bad += oracle::pair(rx.a().convert_to<long long>(), to_vec(rx), ry.a().convert_to<long long>(), to_vec(ry)) !=
               oracle::pair(x.a().convert_to<long long>(), bx, y.a().convert_to<long long>(), by);
    }
    c.require(bad == 0, "(a) " + std::to_string(bad) + " reflections changed the pairing");

    std::size_t classes = 0, not_idempotent = 0;
    const auto start = std::chrono::steady_clock::now();
    for (std::size_t k = 0; k <= 10; ++k) {
        for (long long a = -12; a <= 12; ++a) {
            oracle::Vec cur;
            trivial_normal_classes(k, a, a * a + 4, a * a + 4, cur, [&](const oracle::Vec& b) {
                const auto x = cls(a, b);
                const auto r = reduce(x);
                ++classes;
                not_idempotent += reduce(r) != r || square(r) != -4;
            });
        }
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    c.require(classes > 0 && not_idempotent == 0,
              "(b) " + std::to_string(not_idempotent) + " of " + std::to_string(classes) + " classes not idempotent");
    c.note("(b) " + std::to_string(classes) + " trivial-normal classes in " + std::to_string(secs).substr(0, 5) + "s");

    std::size_t mismatched = 0;
    for (std::size_t k = 0; k <= 7; ++k) {
        for (int a_max = 0; a_max <= 4; ++a_max) {
            std::set<std::pair<long long, oracle::Vec>> want, got;
            for (auto& e : oracle::exceptional_box(k, a_max)) want.insert(e);
            for (const auto& e : enumerate_exceptional(k, a_max)) got.insert({e.a().convert_to<long long>(), to_vec(e)});
            mismatched += want != got;
        }
    }
    c.require(mismatched == 0, "(c) " + std::to_string(mismatched) + " (k, a_max) pairs disagree with the box filter");
    return c;
}

Check orbit_finding()
{
    Check c;
    const auto x = cls(0, {1, 1, 1, 1});
    const auto y = cls(3, {2, 2, 2, 1});
    const auto v = orbit_equivalent(x, y, 12, true);
    c.require(v.status == OrbitStatus::equivalent, "orbit search status " + to_string(v.status));
    c.require(v.witness && neg4lat::apply(*v.witness, x) == y, "witness does not replay");

    const auto rows = load_table();
    std::size_t rx = 0, ry = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].xi == x) rx = i + 1;
        if (rows[i].xi == y) ry = i + 1;
    }
    const auto report = verify_table(rows, default_screen_max_a, 12, true);
    const bool listed = std::any_of(report.orbit_findings.begin(), report.orbit_findings.end(), [&](const OrbitFinding& f) {
        return (f.row_x == rx && f.row_y == ry) || (f.row_x == ry && f.row_y == rx);
    });
    c.require(rx && ry && listed, "table report does not list rows (0,1,1,1,1) and (3,2,2,2,1) as one orbit");
    c.note(std::to_string(report.orbit_findings.size()) + " orbit findings at cap 12");
    return c;
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Check()>>> criteria = {
        {"table integrity", table_integrity},
        {"value-set reproduction", value_sets},
        {"multiple-of-exceptional", multiples},
        {"n_sm-positivity", nsm_positive},
        {"the 6H - 2(e_1+...+e_10) class", section_four_class},
        {"surgery arithmetic", surgery_arithmetic},
        {"classifier conformance", classifier},
        {"property suites", properties},
        {"orbit findings report", orbit_finding},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Check c;
        try {
            c = criteria[i].second();
        } catch (const std::exception& e) {
            c.require(false, std::string("exception: ") + e.what());
        }
        failed += !c.ok;
        std::cout << "criterion " << i + 1 << ": " << (c.ok ? "PASS" : "FAIL") << " - " << criteria[i].first;
        for (const auto& n : c.notes) std::cout << "; " << n;
        std::cout << '\n';
    }
    return failed == 0 ? 0 : 1;
}
