#include "neg4lat/spheres.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "neg4lat/errors.hpp"
#include "neg4lat/io.hpp"

namespace neg4lat {

namespace {

void require_screenable(const LatticeClass& xi, const char* what)
{
    if (square(xi) != -4) {
        throw DomainError(std::string(what) + ": class " + xi.to_string() + " has square " +
                          square(xi).str() + ", expected -4");
    }
    if (!is_trivial_normal(xi)) {
        throw DomainError(std::string(what) + ": class " + xi.to_string() +
                          " is not in trivial-normal form (b_i >= 0, non-increasing)");
    }
}

std::size_t count_large(const LatticeClass& xi)
{
    return static_cast<std::size_t>(
        std::count_if(xi.b().begin(), xi.b().end(), [](const Integer& v) { return v > 1; }));
}

Integer contribution(const LatticeClass& xi, const SignAssignment& s)
{
    Integer v = s.a_sign * 3 * xi.a();
    std::size_t t = 0;
    for (const auto& b : xi.b()) {
        if (b > 1) {
            v += s.signs[t++] * b;
        } else if (b == 1) {
            v += s.ones_positive ? 1 : -1;
        }
    }
    return v;
}

/// Every assignment in a fixed order: a-sign +1 before -1, then the b-signs
/// counted in binary with +1 first. With a = 0 the a-sign is pinned to +1.
std::vector<SignAssignment> all_assignments(const LatticeClass& xi, bool ones_positive)
{
    const std::size_t m = count_large(xi);
    std::vector<SignAssignment> out;
    const std::vector<int> a_signs = xi.a() == 0 ? std::vector<int>{1} : std::vector<int>{1, -1};
    for (int as : a_signs) {
        for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
            SignAssignment s;
            s.a_sign = as;
            s.ones_positive = ones_positive;
            for (std::size_t t = 0; t < m; ++t) s.signs.push_back((mask >> t) & 1u ? -1 : 1);
            out.push_back(std::move(s));
        }
    }
    return out;
}

std::vector<LatticeClass> unit_meeting_in(const LatticeClass& xi_tilde,
                                          const std::vector<LatticeClass>& catalog)
{
    std::vector<LatticeClass> out;
    for (const auto& e : catalog) {
        if (pair(e, xi_tilde) == 1) out.push_back(e);
    }
    return out;
}

std::optional<Integer> exact_sqrt(const Integer& n)
{
    if (n < 0) return std::nullopt;
    Integer r = boost::multiprecision::sqrt(n);
    if (r * r != n) return std::nullopt;
    return r;
}

std::string trim_copy(const std::string& s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

} // namespace

std::string to_string(ScreenOutcome o)
{
    switch (o) {
    case ScreenOutcome::not_representable: return "not-representable";
    case ScreenOutcome::multiple_of_exceptional: return "multiple-of-exceptional";
    case ScreenOutcome::nsm_positive: return "nsm-positive";
    case ScreenOutcome::inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

std::string to_string(RowStatus s)
{
    switch (s) {
    case RowStatus::pass: return "pass";
    case RowStatus::review: return "review";
    case RowStatus::fail: return "fail";
    }
    return "fail";
}

AdjunctionValueSet value_set(const LatticeClass& xi, bool ones_positive)
{
    require_screenable(xi, "value-set");
    AdjunctionValueSet out;
    for (auto& s : all_assignments(xi, ones_positive)) {
        Integer v = contribution(xi, s);
        out.witnesses.try_emplace(std::move(v), std::move(s));
    }
    for (const auto& [v, s] : out.witnesses) out.values.push_back(v);
    return out;
}

std::vector<SignAssignment> assignments_for(const LatticeClass& xi, const Integer& value,
                                            bool ones_positive)
{
    require_screenable(xi, "value-set");
    std::vector<SignAssignment> out;
    for (auto& s : all_assignments(xi, ones_positive)) {
        if (contribution(xi, s) == value) out.push_back(std::move(s));
    }
    return out;
}

LatticeClass witness_class(const LatticeClass& xi, const SignAssignment& s)
{
    require_screenable(xi, "witness");
    auto is_sign = [](int v) { return v == 1 || v == -1; };
    if (!is_sign(s.a_sign) || s.signs.size() != count_large(xi) ||
        !std::all_of(s.signs.begin(), s.signs.end(), is_sign)) {
        throw DomainError("witness: sign assignment does not belong to class " + xi.to_string());
    }
    std::vector<Integer> b;
    std::size_t t = 0;
    for (const auto& v : xi.b()) {
        if (v > 1) {
            b.push_back(s.signs[t++] * v);
        } else if (v == 1) {
            b.push_back(s.ones_positive ? 1 : -1);
        } else {
            b.push_back(0);
        }
    }
    return LatticeClass(-s.a_sign * xi.a(), std::move(b));
}

std::optional<ExceptionalMultiple> multiple_of_exceptional(const LatticeClass& xi_tilde, int a_max)
{
    const auto root = exact_sqrt(-square(xi_tilde));
    if (!root || *root < 2) return std::nullopt;
    for (const Integer& m : {Integer(-*root), *root}) {
        if (xi_tilde.a() % m != 0) continue;
        bool divisible = true;
        std::vector<Integer> b;
        for (const auto& v : xi_tilde.b()) {
            if (v % m != 0) {
                divisible = false;
                break;
            }
            b.push_back(v / m);
        }
        if (!divisible) continue;
        LatticeClass e(xi_tilde.a() / m, std::move(b));
        // Same test as scanning enumerate_exceptional(k, a_max).
        if (is_exceptional(e) && e.a() >= 0 && e.a() <= a_max) return ExceptionalMultiple{m, e};
    }
    return std::nullopt;
}

std::vector<LatticeClass> unit_meeting_exceptional(const LatticeClass& xi_tilde, int a_max)
{
    return unit_meeting_in(xi_tilde, enumerate_exceptional(xi_tilde.k(), a_max));
}

ScreenVerdict screen(const LatticeClass& xi, int a_max, bool ones_positive)
{
    ScreenVerdict verdict;
    verdict.values = value_set(xi, ones_positive);
    if (!verdict.values.contains(2)) {
        verdict.outcome = ScreenOutcome::not_representable;
        return verdict;
    }

    std::set<LatticeClass> distinct;
    for (const auto& s : assignments_for(xi, 2, ones_positive)) distinct.insert(witness_class(xi, s));
    verdict.witnesses.assign(distinct.begin(), distinct.end());

    std::vector<LatticeClass> survivors;
    for (const auto& w : verdict.witnesses) {
        if (auto mult = multiple_of_exceptional(w, a_max)) {
            if (!verdict.multiple) {
                verdict.multiple = std::move(mult);
                verdict.multiple_witness = w;
            }
        } else {
            survivors.push_back(w);
        }
    }
    if (survivors.empty()) {
        verdict.outcome = ScreenOutcome::multiple_of_exceptional;
        return verdict;
    }

    const auto catalog = enumerate_exceptional(xi.k(), a_max);
    for (const auto& w : survivors) {
        auto meeting = unit_meeting_in(w, catalog);
        if (!meeting.empty()) {
            verdict.outcome = ScreenOutcome::nsm_positive;
            verdict.meeting_witness = w;
            verdict.meeting_exceptional = meeting.front();
            return verdict;
        }
    }
    verdict.outcome = ScreenOutcome::inconclusive;
    return verdict;
}

std::vector<TableEntry> parse_table(const std::string& text)
{
    std::vector<TableEntry> out;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim_copy(line).empty() || trim_copy(line).front() == '#') continue;
        std::vector<std::string> cols;
        std::size_t pos = 0;
        while (true) {
            const auto tab = line.find('\t', pos);
            cols.push_back(trim_copy(line.substr(pos, tab == std::string::npos ? tab : tab - pos)));
            if (tab == std::string::npos) break;
            pos = tab + 1;
        }
        if (cols.size() != 6) {
            throw ParseError("table line " + std::to_string(line_no) + ": expected 6 tab-separated columns, got " +
                             std::to_string(cols.size()));
        }
        TableEntry e;
        try {
            e.rel_min_k = static_cast<std::size_t>(std::stoul(cols[0]));
        } catch (const std::exception&) {
            throw ParseError("table line " + std::to_string(line_no) + ": bad rel_min_k '" + cols[0] + "'");
        }
        e.xi = io::parse_class(cols[1]);
        auto blank = [](const std::string& s) { return s.empty() || s == "-"; };
        if (cols[2] == "N") {
            e.sympl_rep = RepFlag::not_representable;
        } else if (!blank(cols[2])) {
            throw ParseError("table line " + std::to_string(line_no) + ": rep_flag must be N or blank");
        }
        if (cols[3] == ">0") {
            e.nsm_positive = true;
        } else if (!blank(cols[3])) {
            throw ParseError("table line " + std::to_string(line_no) + ": nsm_flag must be >0 or blank");
        }
        if (cols[4] == "*") {
            e.starred = true;
        } else if (!blank(cols[4])) {
            throw ParseError("table line " + std::to_string(line_no) + ": star must be * or blank");
        }
        e.note = cols[5];
        out.push_back(std::move(e));
    }
    return out;
}

std::vector<TableEntry> read_table(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open table file " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_table(buf.str());
}

std::size_t TableReport::failures() const
{
    return static_cast<std::size_t>(std::count_if(
        rows.begin(), rows.end(), [](const RowReport& r) { return r.status == RowStatus::fail; }));
}

std::size_t TableReport::reviews() const
{
    return static_cast<std::size_t>(std::count_if(
        rows.begin(), rows.end(), [](const RowReport& r) { return r.status == RowStatus::review; }));
}

namespace {

RowReport check_row(std::size_t row, const TableEntry& e, int a_max)
{
    RowReport r;
    r.row = row;
    r.entry = e;
    const Integer sq = square(e.xi);
    if (sq != -4) r.problems.push_back("square is " + sq.str() + ", expected -4");
    if (!is_trivial_normal(e.xi)) r.problems.push_back("class is not in trivial-normal form");
    if (support_size(e.xi) != e.rel_min_k) {
        r.problems.push_back("rel_min_k " + std::to_string(e.rel_min_k) + " but " +
                             std::to_string(support_size(e.xi)) + " nonzero b_i");
    }
    if (!r.problems.empty()) {
        r.status = RowStatus::fail;
        return r;
    }

    r.verdict = screen(e.xi, a_max);
    const auto outcome = r.verdict->outcome;
    const bool excluded = outcome == ScreenOutcome::not_representable ||
                          outcome == ScreenOutcome::multiple_of_exceptional;
    const bool marked_n = e.sympl_rep == RepFlag::not_representable;
    const bool nsm = outcome == ScreenOutcome::nsm_positive;

    if (marked_n == excluded && e.nsm_positive == nsm) {
        r.status = RowStatus::pass;
        return r;
    }
    if (outcome == ScreenOutcome::multiple_of_exceptional && !marked_n && e.nsm_positive) {
        // The caption splits rows into ">0" and N; a multiple of an exceptional
        // class is excluded yet listed under ">0".
        r.status = RowStatus::review;
        r.problems.push_back("screen finds a multiple of an exceptional class, but the row is flagged >0 "
                             "rather than N");
        return r;
    }
    r.status = RowStatus::fail;
    r.problems.push_back("flags (rep=" + std::string(marked_n ? "N" : "blank") + ", nsm=" +
                         (e.nsm_positive ? ">0" : "blank") + ") disagree with screen outcome " +
                         to_string(outcome));
    return r;
}

} // namespace

TableReport verify_table(const std::vector<TableEntry>& entries, int a_max, const Integer& orbit_cap,
                         bool orbit_report)
{
    TableReport report;
    report.orbit_cap = orbit_cap;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        report.rows.push_back(check_row(i + 1, entries[i], a_max));
    }
    if (!orbit_report) return report;

    // Orbit report: for each common k, close each unassigned row's orbit once
    // and test membership of the other rows (and their negatives).
    std::set<std::size_t> levels;
    for (const auto& e : entries) levels.insert(e.xi.k());
    for (std::size_t k : levels) {
        std::vector<std::size_t> members;
        for (std::size_t i = 0; i < entries.size(); ++i) {
            if (entries[i].xi.k() <= k && orbit_cap >= abs(entries[i].xi.a())) members.push_back(i);
        }
        std::vector<std::optional<std::size_t>> component(entries.size());
        std::vector<std::set<LatticeClass>> closures;
        for (std::size_t i : members) {
            if (component[i]) continue;
            auto orbit = bounded_orbit(pad_to(entries[i].xi, k), orbit_cap);
            std::set<LatticeClass> closure(orbit.begin(), orbit.end());
            for (std::size_t j : members) {
                if (!component[j] && closure.contains(normalize_trivial(pad_to(entries[j].xi, k)))) {
                    component[j] = closures.size();
                }
            }
            closures.push_back(std::move(closure));
        }
        for (std::size_t p = 0; p < members.size(); ++p) {
            for (std::size_t q = p + 1; q < members.size(); ++q) {
                const std::size_t i = members[p];
                const std::size_t j = members[q];
                if (std::max(entries[i].xi.k(), entries[j].xi.k()) != k) continue;
                if (component[i] == component[j]) {
                    report.orbit_findings.push_back({i + 1, j + 1, k, false});
                } else if (closures[*component[i]].contains(normalize_trivial(-pad_to(entries[j].xi, k)))) {
                    report.orbit_findings.push_back({i + 1, j + 1, k, true});
                }
            }
        }
    }
    return report;
}

} // namespace neg4lat
