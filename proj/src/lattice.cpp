#include "neg4lat/lattice.hpp"

#include <algorithm>
#include <sstream>

#include "neg4lat/errors.hpp"

namespace neg4lat {

namespace {

void require_same_k(std::size_t kx, std::size_t ky)
{
    if (kx != ky) {
        throw DimensionError("classes live over different numbers of blow-ups (k=" +
                             std::to_string(kx) + " vs k=" + std::to_string(ky) + ")");
    }
}

template <typename T>
std::strong_ordering compare_values(const T& x, const T& y)
{
    if (x < y) return std::strong_ordering::less;
    if (y < x) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

} // namespace

LatticeClass LatticeClass::zero(std::size_t k)
{
    return LatticeClass(0, std::vector<Integer>(k, 0));
}

LatticeClass LatticeClass::line(std::size_t k)
{
    return LatticeClass(1, std::vector<Integer>(k, 0));
}

LatticeClass LatticeClass::exceptional(std::size_t k, std::size_t i)
{
    if (i >= k) {
        throw IndexError("exceptional index " + std::to_string(i + 1) + " out of range for k=" +
                         std::to_string(k));
    }
    LatticeClass e = zero(k);
    e.b_[i] = -1;
    return e;
}

LatticeClass LatticeClass::operator-() const
{
    LatticeClass r = *this;
    r.a_ = -r.a_;
    for (auto& v : r.b_) v = -v;
    return r;
}

LatticeClass& LatticeClass::operator+=(const LatticeClass& other)
{
    require_same_k(k(), other.k());
    a_ += other.a_;
    for (std::size_t i = 0; i < b_.size(); ++i) b_[i] += other.b_[i];
    return *this;
}

LatticeClass& LatticeClass::operator-=(const LatticeClass& other)
{
    require_same_k(k(), other.k());
    a_ -= other.a_;
    for (std::size_t i = 0; i < b_.size(); ++i) b_[i] -= other.b_[i];
    return *this;
}

LatticeClass& LatticeClass::operator*=(const Integer& m)
{
    a_ *= m;
    for (auto& v : b_) v *= m;
    return *this;
}

std::strong_ordering operator<=>(const LatticeClass& x, const LatticeClass& y)
{
    if (auto c = x.k() <=> y.k(); c != 0) return c;
    if (auto c = compare_values(x.a_, y.a_); c != 0) return c;
    for (std::size_t i = 0; i < x.b_.size(); ++i) {
        if (auto c = compare_values(x.b_[i], y.b_[i]); c != 0) return c;
    }
    return std::strong_ordering::equal;
}

std::string LatticeClass::to_string() const
{
    std::ostringstream os;
    os << a_ << ';';
    for (std::size_t i = 0; i < b_.size(); ++i) {
        if (i) os << ',';
        os << b_[i];
    }
    return os.str();
}

RationalClass::RationalClass(const LatticeClass& x) : a_(x.a())
{
    b_.reserve(x.k());
    for (const auto& v : x.b()) b_.emplace_back(v);
}

LatticeClass canonical_std(std::size_t k)
{
    return LatticeClass(-3, std::vector<Integer>(k, -1));
}

Integer pair(const LatticeClass& x, const LatticeClass& y)
{
    require_same_k(x.k(), y.k());
    Integer r = x.a() * y.a();
    for (std::size_t i = 0; i < x.k(); ++i) r -= x.b()[i] * y.b()[i];
    return r;
}

Rational pair(const RationalClass& x, const RationalClass& y)
{
    require_same_k(x.k(), y.k());
    Rational r = x.a() * y.a();
    for (std::size_t i = 0; i < x.k(); ++i) r -= x.b()[i] * y.b()[i];
    return r;
}

Rational pair(const LatticeClass& x, const RationalClass& y)
{
    return pair(RationalClass(x), y);
}

Rational pair(const RationalClass& x, const LatticeClass& y)
{
    return pair(x, RationalClass(y));
}

Integer square(const LatticeClass& x) { return pair(x, x); }

Rational square(const RationalClass& x) { return pair(x, x); }

Integer k_dot(const LatticeClass& x)
{
    Integer r = -3 * x.a();
    for (const auto& v : x.b()) r += v;
    return r;
}

Rational adjunction_genus(const LatticeClass& x)
{
    return Rational(1) + Rational(square(x) + k_dot(x)) / 2;
}

bool is_sphere_class(const LatticeClass& x)
{
    return k_dot(x) == -2 - square(x);
}

LatticeClass normalize_trivial(const LatticeClass& x)
{
    std::vector<Integer> b(x.b().begin(), x.b().end());
    for (auto& v : b) {
        if (v < 0) v = -v;
    }
    std::sort(b.begin(), b.end(), [](const Integer& p, const Integer& q) { return p > q; });
    return LatticeClass(x.a(), std::move(b));
}

bool is_trivial_normal(const LatticeClass& x)
{
    const auto b = x.b();
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (b[i] < 0) return false;
        if (i && b[i] > b[i - 1]) return false;
    }
    return true;
}

LatticeClass drop_zeros(const LatticeClass& x)
{
    std::vector<Integer> b;
    for (const auto& v : x.b()) {
        if (v != 0) b.push_back(v);
    }
    return LatticeClass(x.a(), std::move(b));
}

LatticeClass pad_to(const LatticeClass& x, std::size_t k)
{
    if (k < x.k()) {
        throw DimensionError("cannot pad a class over k=" + std::to_string(x.k()) + " down to k=" +
                             std::to_string(k));
    }
    std::vector<Integer> b(x.b().begin(), x.b().end());
    b.resize(k, 0);
    return LatticeClass(x.a(), std::move(b));
}

std::size_t support_size(const LatticeClass& x)
{
    return static_cast<std::size_t>(
        std::count_if(x.b().begin(), x.b().end(), [](const Integer& v) { return v != 0; }));
}

} // namespace neg4lat
