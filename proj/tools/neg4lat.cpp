// neg4lat: JSON-lines front end for the lattice, weyl, spheres and surgery modules.
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "neg4lat/errors.hpp"
#include "neg4lat/io.hpp"
#include "neg4lat/lattice.hpp"
#include "neg4lat/spheres.hpp"
#include "neg4lat/surgery.hpp"
#include "neg4lat/weyl.hpp"

#ifndef NEG4LAT_DEFAULT_TABLE
#define NEG4LAT_DEFAULT_TABLE "data/table1.tsv"
#endif

using namespace neg4lat;
using nlohmann::json;

namespace {

int json_indent = -1;

void emit(const json& j)
{
    std::cout << j.dump(json_indent) << '\n';
}

json to_json(const SignAssignment& s)
{
    return json{{"a_sign", s.a_sign}, {"signs", s.signs}, {"ones_positive", s.ones_positive}};
}

json to_json(const AdjunctionValueSet& vs, const LatticeClass& xi)
{
    json values = json::array();
    for (const auto& v : vs.values) values.push_back(io::to_json(v));
    json witnesses = json::array();
    for (const auto& [v, s] : vs.witnesses) {
        witnesses.push_back(json{{"value", io::to_json(v)}, {"assignment", to_json(s)},
                                 {"class", io::to_json(witness_class(xi, s))}});
    }
    return json{{"values", values}, {"witnesses", witnesses}};
}

json to_json(const ScreenVerdict& v, const LatticeClass& xi)
{
    json out{{"class", io::to_json(xi)}, {"outcome", to_string(v.outcome)}};
    json values = json::array();
    for (const auto& val : v.values.values) values.push_back(io::to_json(val));
    out["values"] = values;
    json witnesses = json::array();
    for (const auto& w : v.witnesses) witnesses.push_back(io::to_json(w));
    out["witnesses"] = witnesses;
    if (v.multiple) {
        out["multiple"] = json{{"witness", io::to_json(*v.multiple_witness)},
                               {"m", io::to_json(v.multiple->m)},
                               {"exceptional", io::to_json(v.multiple->exceptional)}};
    }
    if (v.meeting_exceptional) {
        out["meeting"] = json{{"witness", io::to_json(*v.meeting_witness)},
                              {"exceptional", io::to_json(*v.meeting_exceptional)},
                              {"pair", io::to_json(pair(*v.meeting_exceptional, *v.meeting_witness))}};
    }
    return out;
}

json to_json(const InvariantState& s)
{
    json out{{"k_sq", io::to_json(s.k_sq)}, {"k_omega", io::to_json(s.k_omega)}, {"minimal", s.minimal}};
    if (!s.label.empty()) out["label"] = s.label;
    return out;
}

std::optional<unsigned> parse_count(const std::string& text)
{
    if (text == "inf" || text == "unbounded") return std::nullopt;
    std::size_t used = 0;
    unsigned long v = 0;
    try {
        v = std::stoul(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != text.size() || text.front() == '-') {
        throw ParseError("expected a non-negative count or 'inf', got '" + text + "'");
    }
    return static_cast<unsigned>(v);
}

std::string read_file(const std::string& path)
{
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

template <class T>
T pick(const std::optional<T>& local, const std::optional<T>& global, T fallback)
{
    if (local) return *local;
    if (global) return *global;
    return fallback;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact -4-sphere lattice and surgery toolkit (JSON lines on stdout)"};
    app.require_subcommand(1);
    app.fallthrough();

    std::optional<int> g_max_a;
    std::optional<int> g_cap;
    app.add_option("--json-indent", json_indent, "Indent JSON output (-1: one line per record)");
    app.add_option("--max-a", g_max_a, "Default bound on a for enumerations and screens");
    app.add_option("--cap", g_cap, "Default |a| cap for orbit searches");

    std::string cls_x, cls_y;

    auto* pair_cmd = app.add_subcommand("pair", "Intersection pairing of two classes");
    pair_cmd->add_option("x", cls_x)->required();
    pair_cmd->add_option("y", cls_y)->required();

    auto* info_cmd = app.add_subcommand("info", "Square, K_st pairing, adjunction genus of a class");
    info_cmd->add_option("class", cls_x)->required();

    auto* reduce_cmd = app.add_subcommand("reduce", "Greedy Cremona reduction");
    reduce_cmd->add_option("class", cls_x)->required();

    std::optional<int> orbit_cap;
    bool global_sign = false;
    auto* orbit_cmd = app.add_subcommand("orbit-eq", "Bounded search for a generator word x -> y");
    orbit_cmd->add_option("x", cls_x)->required();
    orbit_cmd->add_option("y", cls_y)->required();
    orbit_cmd->add_option("--cap", orbit_cap, "Bound on |a| during the search");
    orbit_cmd->add_flag("--global-sign", global_sign, "Also allow x -> -x");

    std::size_t enum_k = 0;
    long long enum_square = -4;
    std::optional<int> enum_max_a;
    auto* enum_cmd = app.add_subcommand("enum-reduced", "Reduced classes of a given square");
    enum_cmd->add_option("--k", enum_k)->required();
    enum_cmd->add_option("--square", enum_square)->required();
    enum_cmd->add_option("--max-a", enum_max_a);

    std::size_t exc_k = 0;
    std::optional<int> exc_max_a;
    auto* exc_cmd = app.add_subcommand("exceptional", "Exceptional classes with 0 <= a <= max-a");
    exc_cmd->add_option("--k", exc_k)->required();
    exc_cmd->add_option("--max-a", exc_max_a);

    bool ones_positive = false;
    auto* vs_cmd = app.add_subcommand("value-set", "Attainable K_st values of sign-changed classes");
    vs_cmd->add_option("class", cls_x)->required();
    vs_cmd->add_flag("--ones-positive", ones_positive, "Map each b_i = 1 to +1 instead of -1");

    std::optional<int> screen_max_a;
    auto* screen_cmd = app.add_subcommand("screen", "Adjunction screen of a -4-class");
    screen_cmd->add_option("class", cls_x)->required();
    screen_cmd->add_option("--max-a", screen_max_a);
    screen_cmd->add_flag("--ones-positive", ones_positive);

    std::string table_path = NEG4LAT_DEFAULT_TABLE;
    std::optional<int> table_cap;
    std::optional<int> table_max_a;
    bool no_orbits = false;
    auto* table_cmd = app.add_subcommand("verify-table", "Check every table row against the screen");
    table_cmd->add_option("--table", table_path, "TSV table file")->capture_default_str();
    table_cmd->add_option("--cap", table_cap, "Orbit report cap on |a|");
    table_cmd->add_option("--max-a", table_max_a);
    table_cmd->add_flag("--no-orbits", no_orbits, "Skip the orbit report");

    std::string pipeline_path;
    auto* surgery_cmd = app.add_subcommand("surgery", "Surgery invariant pipelines");
    surgery_cmd->require_subcommand(1);
    auto* run_cmd = surgery_cmd->add_subcommand("run", "Run a JSON pipeline file ('-' for stdin)");
    run_cmd->add_option("pipeline", pipeline_path)->required();

    std::string kappa_text, nsm_text, ruled_text = "not-ruled";
    std::optional<std::string> nsy_text;
    unsigned blowups = 0;
    bool artificial = false;
    auto* classify_cmd = app.add_subcommand("classify", "Kodaira dimension after a -4-blow-down");
    classify_cmd->add_option("--kappa", kappa_text, "-inf, 0, 1 or 2")->required();
    classify_cmd->add_option("--nsm", nsm_text, "n_sm, or 'inf'")->required();
    classify_cmd->add_option("--nsy", nsy_text, "n_sy (defaults to n_sm)");
    classify_cmd->add_option("--k", blowups, "Blow-ups above the minimal model")->required();
    classify_cmd->add_flag("--artificial", artificial);
    classify_cmd->add_option("--ruled", ruled_text, "not-ruled, rational, irrational-ruled")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (pair_cmd->parsed()) {
            const auto x = io::parse_class(cls_x);
            const auto y = io::parse_class(cls_y);
            emit({{"x", io::to_json(x)}, {"y", io::to_json(y)}, {"pair", io::to_json(pair(x, y))}});
        } else if (info_cmd->parsed()) {
            const auto x = io::parse_class(cls_x);
            emit({{"class", io::to_json(x)},
                  {"square", io::to_json(square(x))},
                  {"k_dot", io::to_json(k_dot(x))},
                  {"genus", io::to_json(adjunction_genus(x))},
                  {"sphere", is_sphere_class(x)},
                  {"trivial_normal", is_trivial_normal(x)},
                  {"normal_form", io::to_json(normalize_trivial(x))}});
        } else if (reduce_cmd->parsed()) {
            const auto x = io::parse_class(cls_x);
            emit({{"input", io::to_json(x)}, {"reduced", io::to_json(reduce(x))}});
        } else if (orbit_cmd->parsed()) {
            const auto x = io::parse_class(cls_x);
            const auto y = io::parse_class(cls_y);
            const Integer cap = orbit_cap ? Integer(*orbit_cap)
                                : g_cap   ? Integer(*g_cap)
                                          : default_orbit_cap(x, y);
            const auto v = orbit_equivalent(x, y, cap, global_sign);
            emit({{"x", io::to_json(x)},
                  {"y", io::to_json(y)},
                  {"status", to_string(v.status)},
                  {"cap", io::to_json(v.bound)},
                  {"explored", v.explored},
                  {"used_global_sign", v.used_global_sign},
                  {"witness", v.witness ? io::to_json(*v.witness) : json(nullptr)}});
        } else if (enum_cmd->parsed()) {
            const int a_max = pick(enum_max_a, g_max_a, 6);
            const auto classes = enumerate_reduced(enum_k, Integer(enum_square), a_max);
            for (const auto& x : classes) emit({{"class", io::to_json(x)}});
            emit({{"summary", {{"k", enum_k}, {"square", enum_square}, {"max_a", a_max}, {"count", classes.size()}}}});
        } else if (exc_cmd->parsed()) {
            const int a_max = pick(exc_max_a, g_max_a, 6);
            const auto classes = enumerate_exceptional(exc_k, a_max);
            for (const auto& x : classes) emit({{"class", io::to_json(x)}});
            emit({{"summary", {{"k", exc_k}, {"max_a", a_max}, {"count", classes.size()}}}});
        } else if (vs_cmd->parsed()) {
            const auto x = io::parse_class(cls_x);
            json out = to_json(value_set(x, ones_positive), x);
            out["class"] = io::to_json(x);
            out["ones_positive"] = ones_positive;
            emit(out);
        } else if (screen_cmd->parsed()) {
            const auto x = io::parse_class(cls_x);
            const int a_max = pick(screen_max_a, g_max_a, default_screen_max_a);
            emit(to_json(screen(x, a_max, ones_positive), x));
        } else if (table_cmd->parsed()) {
            const int a_max = pick(table_max_a, g_max_a, default_screen_max_a);
            const int cap = pick(table_cap, g_cap, default_table_orbit_cap);
            const auto report = verify_table(read_table(table_path), a_max, cap, !no_orbits);
            for (const auto& r : report.rows) {
                json line{{"row", r.row},
                          {"class", io::to_json(r.entry.xi)},
                          {"rel_min_k", r.entry.rel_min_k},
                          {"status", to_string(r.status)},
                          {"problems", r.problems}};
                if (r.verdict) line["outcome"] = to_string(r.verdict->outcome);
                emit(line);
            }
            for (const auto& f : report.orbit_findings) {
                emit({{"finding", "orbit"},
                      {"row_x", f.row_x},
                      {"row_y", f.row_y},
                      {"k", f.k},
                      {"global_sign", f.global_sign},
                      {"cap", io::to_json(report.orbit_cap)}});
            }
            const std::size_t fails = report.failures();
            const std::size_t reviews = report.reviews();
            emit({{"summary",
                   {{"rows", report.rows.size()},
                    {"pass", report.rows.size() - fails - reviews},
                    {"review", reviews},
                    {"fail", fails}}}});
            return fails == 0 ? 0 : 1;
        } else if (run_cmd->parsed()) {
            json steps;
            try {
                steps = json::parse(read_file(pipeline_path));
            } catch (const json::parse_error& e) {
                throw ParseError(std::string("pipeline is not valid JSON: ") + e.what());
            }
            const auto result = run_pipeline(steps);
            std::size_t i = 0;
            for (const auto& t : result.trace) {
                json line = to_json(t.state);
                line["step"] = ++i;
                line["op"] = t.op;
                emit(line);
            }
            json final{{"final_kappa", result.final_kappa ? json(to_string(*result.final_kappa)) : json(nullptr)}};
            if (!result.note.empty()) final["note"] = result.note;
            emit(final);
        } else if (classify_cmd->parsed()) {
            BlowdownScenario s;
            s.kappa_x = parse_kodaira(kappa_text);
            s.n_sm = parse_count(nsm_text);
            if (nsy_text) s.n_sy = parse_count(*nsy_text);
            s.k = blowups;
            s.artificial = artificial;
            s.ruled = parse_ruledness(ruled_text);
            try {
                const auto c = classify_minus4(s);
                emit({{"feasible", true},
                      {"kappa_m", c.kappa_m ? json(to_string(*c.kappa_m)) : json(nullptr)},
                      {"structure", c.structure},
                      {"rule", c.rule},
                      {"statement", c.statement}});
            } catch (const InfeasibleScenario& e) {
                emit({{"feasible", false}, {"reason", e.what()}});
            }
        }
    } catch (const Error& e) {
        std::cerr << "neg4lat: " << e.what() << '\n';
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "neg4lat: malformed JSON input: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
