#include "neg4lat/weyl.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <set>

#include "neg4lat/errors.hpp"

namespace neg4lat {

namespace {

Integer abs_value(const Integer& v) { return v < 0 ? Integer(-v) : v; }

void flip_in_place(LatticeClass& x, std::size_t i)
{
    auto& b = x.b_mut();
    if (i >= b.size()) throw IndexError("flip index " + std::to_string(i + 1) + " out of range");
    b[i] = -b[i];
}

void swap_in_place(LatticeClass& x, std::size_t i, std::size_t j)
{
    auto& b = x.b_mut();
    if (i >= b.size() || j >= b.size()) {
        throw IndexError("swap indices out of range");
    }
    std::swap(b[i], b[j]);
}

Word inverse(const Word& w)
{
    // Every trivial move is an involution, and so is every reflection.
    Word r;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        if (it->type == Move::Type::global_sign) continue;
        r.push_back(*it);
    }
    return r;
}

/// Key for the greedy descent: |a| first, then b lexicographically.
bool key_less(const LatticeClass& x, const LatticeClass& y)
{
    const Integer ax = abs_value(x.a());
    const Integer ay = abs_value(y.a());
    if (ax != ay) return ax < ay;
    return std::lexicographical_compare(x.b().begin(), x.b().end(), y.b().begin(), y.b().end());
}

std::optional<Reflection> descent_reflection(std::size_t k)
{
    if (k >= 3) return Reflection::cremona(0, 1, 2);
    if (k == 2) return Reflection::pair_kind(0, 1);
    return std::nullopt;
}

/// All index subsets that carry a generator reflection, in lexicographic order.
std::vector<std::vector<std::size_t>> reflection_supports(std::size_t k)
{
    std::vector<std::vector<std::size_t>> out;
    if (k == 2) {
        out.push_back({0, 1});
    } else if (k >= 3) {
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = i + 1; j < k; ++j)
                for (std::size_t l = j + 1; l < k; ++l) out.push_back({i, j, l});
    }
    return out;
}

Reflection make_reflection(const std::vector<std::size_t>& s)
{
    return s.size() == 2 ? Reflection::pair_kind(s[0], s[1]) : Reflection::cremona(s[0], s[1], s[2]);
}

struct Edge {
    LatticeClass target;
    Word word;
};

/// Neighbors of a trivial-normal class under reflections in every root
/// H -/+ e_i -/+ e_j (-/+ e_l), each conjugate of a generator by sign flips.
std::vector<Edge> neighbors(const LatticeClass& u)
{
    std::vector<Edge> out;
    std::set<std::vector<Integer>> seen_patterns;
    for (const auto& support : reflection_supports(u.k())) {
        const Reflection r = make_reflection(support);
        const std::size_t m = support.size();
        for (unsigned mask = 0; mask < (1u << m); ++mask) {
            std::vector<Integer> pattern;
            for (std::size_t t = 0; t < m; ++t) {
                const Integer& v = u.b()[support[t]];
                pattern.push_back((mask >> t) & 1u ? Integer(-v) : v);
            }
            std::sort(pattern.begin(), pattern.end());
            if (!seen_patterns.insert(std::move(pattern)).second) continue;

            Word w;
            for (std::size_t t = 0; t < m; ++t)
                if ((mask >> t) & 1u) w.push_back(Move::flip(support[t]));
            const std::size_t flips = w.size();
            w.push_back(Move::reflect(r));
            for (std::size_t t = 0; t < flips; ++t) w.push_back(w[t]);

            LatticeClass y = neg4lat::apply(w, u);
            auto [normal, norm_word] = normalize_with_word(y);
            w.insert(w.end(), norm_word.begin(), norm_word.end());
            out.push_back({std::move(normal), std::move(w)});
        }
    }
    return out;
}

std::int64_t isqrt(std::int64_t n)
{
    std::int64_t r = 0;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

void exceptional_rec(std::size_t k, std::int64_t a, std::vector<std::int64_t>& prefix,
                     std::int64_t q_rem, std::int64_t s_rem, std::vector<LatticeClass>& out)
{
    const std::size_t left = k - prefix.size();
    if (left == 0) {
        if (q_rem == 0 && s_rem == 0) {
            std::vector<Integer> b(prefix.begin(), prefix.end());
            out.emplace_back(Integer(a), std::move(b));
        }
        return;
    }
    if (q_rem < 0) return;
    // Cauchy-Schwarz and parity (b^2 = b mod 2) on what remains.
    if (s_rem * s_rem > static_cast<std::int64_t>(left) * q_rem) return;
    if (((q_rem - s_rem) % 2 + 2) % 2 != 0) return;
    const std::int64_t bound = isqrt(q_rem);
    for (std::int64_t v = -bound; v <= bound; ++v) {
        prefix.push_back(v);
        exceptional_rec(k, a, prefix, q_rem - v * v, s_rem - v, out);
        prefix.pop_back();
    }
}

void partition_rec(std::size_t k, std::vector<std::int64_t>& prefix, std::int64_t q_rem,
                   std::int64_t max_part, std::int64_t a, std::vector<LatticeClass>& out)
{
    const std::size_t left = k - prefix.size();
    if (left == 0) {
        if (q_rem == 0) {
            std::vector<Integer> b(prefix.begin(), prefix.end());
            out.emplace_back(Integer(a), std::move(b));
        }
        return;
    }
    if (static_cast<std::int64_t>(left) * max_part * max_part < q_rem) return;
    for (std::int64_t v = std::min(max_part, isqrt(q_rem)); v >= 0; --v) {
        prefix.push_back(v);
        partition_rec(k, prefix, q_rem - v * v, v, a, out);
        prefix.pop_back();
    }
}

} // namespace

Reflection Reflection::pair_kind(std::size_t i, std::size_t j)
{
    return Reflection(ReflectionKind::pair, {i, j, 0});
}

Reflection Reflection::cremona(std::size_t i, std::size_t j, std::size_t l)
{
    return Reflection(ReflectionKind::cremona, {i, j, l});
}

void Reflection::check_legal(std::size_t k) const
{
    const auto idx = indices();
    const std::size_t needed = kind_ == ReflectionKind::pair ? 2 : 3;
    if (k < needed) {
        throw IndexError(std::string(kind_ == ReflectionKind::pair ? "pair" : "cremona") +
                         " reflection needs k >= " + std::to_string(needed) + ", got k=" +
                         std::to_string(k));
    }
    for (std::size_t s = 0; s < idx.size(); ++s) {
        if (idx[s] >= k) {
            throw IndexError("reflection index " + std::to_string(idx[s] + 1) +
                             " out of range for k=" + std::to_string(k));
        }
        for (std::size_t t = 0; t < s; ++t) {
            if (idx[s] == idx[t]) throw IndexError("reflection indices must be distinct");
        }
    }
}

LatticeClass Reflection::root(std::size_t k) const
{
    check_legal(k);
    LatticeClass r = LatticeClass::line(k);
    for (auto i : indices()) r.b_mut()[i] = 1;
    return r;
}

LatticeClass reflect(const LatticeClass& x, const Reflection& r)
{
    r.check_legal(x.k());
    // s_r(x) = x - 2 (x.r / r.r) r, with r.r = -1 (pair) or -2 (cremona).
    Integer d = x.a();
    for (auto i : r.indices()) d -= x.b()[i];
    const Integer coeff = r.kind() == ReflectionKind::pair ? Integer(2 * d) : d;
    LatticeClass y = x;
    y.a() += coeff;
    for (auto i : r.indices()) y.b_mut()[i] += coeff;
    return y;
}

LatticeClass apply(const Word& word, LatticeClass x)
{
    for (const auto& m : word) {
        switch (m.type) {
        case Move::Type::flip: flip_in_place(x, m.i); break;
        case Move::Type::swap: swap_in_place(x, m.i, m.j); break;
        case Move::Type::reflect: x = reflect(x, *m.reflection); break;
        case Move::Type::global_sign: x = -x; break;
        }
    }
    return x;
}

std::pair<LatticeClass, Word> normalize_with_word(const LatticeClass& x)
{
    LatticeClass y = x;
    Word w;
    auto& b = y.b_mut();
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (b[i] < 0) {
            b[i] = -b[i];
            w.push_back(Move::flip(i));
        }
    }
    // Selection sort, non-increasing; recorded as transpositions.
    for (std::size_t i = 0; i < b.size(); ++i) {
        std::size_t best = i;
        for (std::size_t j = i + 1; j < b.size(); ++j)
            if (b[j] > b[best]) best = j;
        if (best != i) {
            std::swap(b[i], b[best]);
            w.push_back(Move::swap(i, best));
        }
    }
    return {std::move(y), std::move(w)};
}

LatticeClass reduce(const LatticeClass& x)
{
    LatticeClass current = normalize_trivial(x);
    const auto r = descent_reflection(x.k());
    if (!r) return current;
    std::set<LatticeClass> visited{current};
    while (true) {
        LatticeClass candidate = normalize_trivial(reflect(current, *r));
        if (!key_less(candidate, current) || !visited.insert(candidate).second) break;
        current = std::move(candidate);
    }
    return current;
}

Integer default_orbit_cap(const LatticeClass& x, const LatticeClass& y)
{
    return std::max(abs_value(x.a()), abs_value(y.a())) + 8;
}

OrbitVerdict orbit_equivalent(const LatticeClass& x, const LatticeClass& y, const Integer& a_cap,
                              bool allow_global_sign)
{
    if (x.k() != y.k()) {
        throw DimensionError("orbit-eq: classes live over different k (" + std::to_string(x.k()) +
                             " vs " + std::to_string(y.k()) + ")");
    }
    if (a_cap < abs_value(x.a()) || a_cap < abs_value(y.a())) {
        throw DomainError("orbit-eq: cap " + a_cap.str() + " is below the inputs' |a|");
    }

    OrbitVerdict verdict;
    verdict.bound = a_cap;

    auto [start, start_word] = normalize_with_word(x);
    auto [target, target_word] = normalize_with_word(y);
    std::optional<std::pair<LatticeClass, Word>> negated_target;
    if (allow_global_sign) negated_target = normalize_with_word(-y);

    struct Node {
        LatticeClass cls;
        std::size_t parent;
        Word edge;
    };
    std::vector<Node> nodes;
    std::map<LatticeClass, std::size_t> index;
    nodes.push_back({start, 0, {}});
    index.emplace(start, 0);

    auto finish = [&](std::size_t at, const Word& tail_word, bool negated) {
        std::vector<std::size_t> path;
        for (std::size_t n = at; n != 0; n = nodes[n].parent) path.push_back(n);
        Word w = start_word;
        for (auto it = path.rbegin(); it != path.rend(); ++it) {
            w.insert(w.end(), nodes[*it].edge.begin(), nodes[*it].edge.end());
        }
        const Word back = inverse(tail_word);
        w.insert(w.end(), back.begin(), back.end());
        if (negated) w.push_back(Move::global_sign());
        verdict.status = OrbitStatus::equivalent;
        verdict.witness = std::move(w);
        verdict.used_global_sign = negated;
        verdict.explored = nodes.size();
    };

    auto check = [&](std::size_t at) -> bool {
        if (nodes[at].cls == target) {
            finish(at, target_word, false);
            return true;
        }
        if (negated_target && nodes[at].cls == negated_target->first) {
            finish(at, negated_target->second, true);
            return true;
        }
        return false;
    };

    if (check(0)) return verdict;
    for (std::size_t head = 0; head < nodes.size(); ++head) {
        for (auto& e : neighbors(nodes[head].cls)) {
            if (abs_value(e.target.a()) > a_cap || index.contains(e.target)) continue;
            index.emplace(e.target, nodes.size());
            nodes.push_back({std::move(e.target), head, std::move(e.word)});
            if (check(nodes.size() - 1)) return verdict;
        }
    }
    verdict.explored = nodes.size();
    return verdict;
}

std::vector<LatticeClass> bounded_orbit(const LatticeClass& x, const Integer& a_cap)
{
    if (a_cap < abs_value(x.a())) {
        throw DomainError("orbit: cap " + a_cap.str() + " is below the input's |a|");
    }
    std::set<LatticeClass> seen{normalize_trivial(x)};
    std::deque<LatticeClass> queue{normalize_trivial(x)};
    while (!queue.empty()) {
        LatticeClass u = std::move(queue.front());
        queue.pop_front();
        for (auto& e : neighbors(u)) {
            if (abs_value(e.target.a()) > a_cap) continue;
            if (seen.insert(e.target).second) queue.push_back(std::move(e.target));
        }
    }
    return {seen.begin(), seen.end()};
}

std::vector<LatticeClass> enumerate_reduced(std::size_t k, const Integer& square_value, int a_max)
{
    if (a_max < 0) throw DomainError("enum-reduced: max-a must be >= 0");
    std::vector<LatticeClass> out;
    for (std::int64_t a = 0; a <= a_max; ++a) {
        const Integer q = Integer(a * a) - square_value;
        if (q < 0) continue;
        std::vector<std::int64_t> prefix;
        std::vector<LatticeClass> candidates;
        const auto q64 = q.convert_to<std::int64_t>();
        partition_rec(k, prefix, q64, isqrt(q64), a, candidates);
        for (auto& c : candidates) {
            if (reduce(c) == c) out.push_back(std::move(c));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_exceptional(const LatticeClass& x)
{
    return square(x) == -1 && k_dot(x) == -1;
}

std::vector<LatticeClass> enumerate_exceptional(std::size_t k, int a_max)
{
    if (a_max < 0) throw DomainError("exceptional: max-a must be >= 0");
    std::vector<LatticeClass> out;
    for (std::int64_t a = 0; a <= a_max; ++a) {
        std::vector<std::int64_t> prefix;
        exceptional_rec(k, a, prefix, a * a + 1, 3 * a - 1, out);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string to_string(OrbitStatus s)
{
    return s == OrbitStatus::equivalent ? "equivalent" : "distinct-within-bound";
}

} // namespace neg4lat
