#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "neg4lat/lattice.hpp"

namespace neg4lat {

enum class ReflectionKind {
    pair,    ///< root H - e_i - e_j, square -1 (the k = 2 generator)
    cremona, ///< root H - e_i - e_j - e_l, square -2, orthogonal to K_st
};

/// Reflection in one of the two root shapes. Indices are 0-based.
class Reflection {
public:
    static Reflection pair_kind(std::size_t i, std::size_t j);
    static Reflection cremona(std::size_t i, std::size_t j, std::size_t l);

    ReflectionKind kind() const noexcept { return kind_; }
    std::span<const std::size_t> indices() const noexcept
    {
        return {indices_.data(), kind_ == ReflectionKind::pair ? 2u : 3u};
    }

    /// The root H - sum_{i in indices} e_i over k blow-ups.
    LatticeClass root(std::size_t k) const;

    /// Throws IndexError unless the indices are distinct and < k.
    void check_legal(std::size_t k) const;

    friend bool operator==(const Reflection&, const Reflection&) = default;

private:
    Reflection(ReflectionKind kind, std::array<std::size_t, 3> idx) : kind_(kind), indices_(idx) {}

    ReflectionKind kind_;
    std::array<std::size_t, 3> indices_;
};

LatticeClass reflect(const LatticeClass& x, const Reflection& r);

/// One generator in a witness word.
struct Move {
    enum class Type { flip, swap, reflect, global_sign };

    Type type;
    std::size_t i = 0;                  ///< flip / swap
    std::size_t j = 0;                  ///< swap
    std::optional<Reflection> reflection; ///< reflect

    static Move flip(std::size_t i) { return {Type::flip, i, 0, std::nullopt}; }
    static Move swap(std::size_t i, std::size_t j) { return {Type::swap, i, j, std::nullopt}; }
    static Move reflect(const Reflection& r) { return {Type::reflect, 0, 0, r}; }
    static Move global_sign() { return {Type::global_sign, 0, 0, std::nullopt}; }

    friend bool operator==(const Move&, const Move&) = default;
};

using Word = std::vector<Move>;

/// Applies the moves left to right.
LatticeClass apply(const Word& word, LatticeClass x);

/// normalize_trivial together with the flip/swap word realizing it.
std::pair<LatticeClass, Word> normalize_with_word(const LatticeClass& x);

/// Greedy descent to a key-minimal representative; see README for the key.
LatticeClass reduce(const LatticeClass& x);

enum class OrbitStatus { equivalent, distinct_within_bound };

struct OrbitVerdict {
    OrbitStatus status = OrbitStatus::distinct_within_bound;
    std::optional<Word> witness;
    std::size_t explored = 0;
    Integer bound = 0;
    bool used_global_sign = false;
};

/// Bounded breadth-first search for a generator word taking x to y, staying
/// inside |a| <= a_cap. Never claims distinctness outright.
OrbitVerdict orbit_equivalent(const LatticeClass& x, const LatticeClass& y, const Integer& a_cap,
                              bool allow_global_sign);

/// Default cap: max(|x.a|, |y.a|) + 8.
Integer default_orbit_cap(const LatticeClass& x, const LatticeClass& y);

/// Every trivial-normal class of the given square over k blow-ups whose
/// orbit under the generators stays inside |a| <= a_cap, as the list of
/// trivial-normal forms visited. Used for table-wide orbit reports.
std::vector<LatticeClass> bounded_orbit(const LatticeClass& x, const Integer& a_cap);

/// Trivial-normal classes with the given square, 0 <= a <= a_max, fixed by
/// reduce; sorted.
std::vector<LatticeClass> enumerate_reduced(std::size_t k, const Integer& square_value, int a_max);

/// square = -1 and K_st . x = -1.
bool is_exceptional(const LatticeClass& x);

/// All exceptional classes over k blow-ups with 0 <= a <= a_max; sorted.
std::vector<LatticeClass> enumerate_exceptional(std::size_t k, int a_max);

std::string to_string(OrbitStatus s);

} // namespace neg4lat
