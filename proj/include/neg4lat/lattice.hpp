#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace neg4lat {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Integral class a*H - sum_i b_i*e_i in H_2(CP^2 # k CP^2-bar).
///
/// The sign convention matches the tuples (a, b_1, ..., b_k) used throughout
/// the literature on rational surfaces, so e_i itself has b_i = -1.
/// The intersection form is diag(1, -1, ..., -1).
class LatticeClass {
public:
    LatticeClass() = default;
    LatticeClass(Integer a, std::vector<Integer> b) : a_(std::move(a)), b_(std::move(b)) {}

    /// The zero class over k blow-ups.
    static LatticeClass zero(std::size_t k);
    /// The line class H over k blow-ups.
    static LatticeClass line(std::size_t k);
    /// The exceptional class e_i (0-based index), i.e. a = 0, b_i = -1.
    static LatticeClass exceptional(std::size_t k, std::size_t i);

    std::size_t k() const noexcept { return b_.size(); }
    const Integer& a() const noexcept { return a_; }
    std::span<const Integer> b() const noexcept { return b_; }
    const Integer& b(std::size_t i) const { return b_.at(i); }

    Integer& a() noexcept { return a_; }
    std::vector<Integer>& b_mut() noexcept { return b_; }

    LatticeClass operator-() const;
    LatticeClass& operator+=(const LatticeClass& other);
    LatticeClass& operator-=(const LatticeClass& other);
    LatticeClass& operator*=(const Integer& m);

    friend LatticeClass operator+(LatticeClass x, const LatticeClass& y) { return x += y; }
    friend LatticeClass operator-(LatticeClass x, const LatticeClass& y) { return x -= y; }
    friend LatticeClass operator*(const Integer& m, LatticeClass x) { return x *= m; }

    friend bool operator==(const LatticeClass&, const LatticeClass&) = default;
    /// Total order: k, then a, then b lexicographically.
    friend std::strong_ordering operator<=>(const LatticeClass& x, const LatticeClass& y);

    /// Compact text form "a;b1,b2,...".
    std::string to_string() const;

private:
    Integer a_ = 0;
    std::vector<Integer> b_;
};

/// Same basis with exact rational coefficients; used for symplectic classes.
class RationalClass {
public:
    RationalClass() = default;
    RationalClass(Rational a, std::vector<Rational> b) : a_(std::move(a)), b_(std::move(b)) {}
    explicit RationalClass(const LatticeClass& x);

    std::size_t k() const noexcept { return b_.size(); }
    const Rational& a() const noexcept { return a_; }
    std::span<const Rational> b() const noexcept { return b_; }

    friend bool operator==(const RationalClass&, const RationalClass&) = default;

private:
    Rational a_ = 0;
    std::vector<Rational> b_;
};

/// The standard canonical class K_st = -3H + sum e_i, i.e. a = -3, b_i = -1.
LatticeClass canonical_std(std::size_t k);

/// Intersection pairing a_x*a_y - sum b_{x,i}*b_{y,i}. Throws DimensionError
/// when the classes live over different k.
Integer pair(const LatticeClass& x, const LatticeClass& y);
Rational pair(const RationalClass& x, const RationalClass& y);
Rational pair(const LatticeClass& x, const RationalClass& y);
Rational pair(const RationalClass& x, const LatticeClass& y);

Integer square(const LatticeClass& x);
Rational square(const RationalClass& x);

/// K_st . x = -3a + sum b_i.
Integer k_dot(const LatticeClass& x);

/// Genus forced by adjunction: 1 + (x^2 + K_st.x)/2.
Rational adjunction_genus(const LatticeClass& x);

/// K_st.x = -2 - x^2.
bool is_sphere_class(const LatticeClass& x);

/// Representative under sign flips e_i -> -e_i and permutations: all b_i >= 0,
/// sorted non-increasing. a is untouched.
LatticeClass normalize_trivial(const LatticeClass& x);
bool is_trivial_normal(const LatticeClass& x);

/// Removes every b_i = 0, projecting to the blow-down along those e_i.
LatticeClass drop_zeros(const LatticeClass& x);

/// Appends zero entries up to k blow-ups (k >= x.k()).
LatticeClass pad_to(const LatticeClass& x, std::size_t k);

/// Number of nonzero b_i.
std::size_t support_size(const LatticeClass& x);

} // namespace neg4lat
