#include "dec/polynomial.hpp"

#include "dec/error.hpp"

#include <algorithm>

namespace dec {

Poly2 Poly2::constant(double c)
{
    return monomial(0, 0, c);
}

Poly2 Poly2::monomial(int i, int j, double c)
{
    if (i < 0 || j < 0)
        throw InvalidArgument("Poly2::monomial: negative exponent");
    Poly2 p;
    p.set_coeff(i, j, c);
    return p;
}

Poly2 Poly2::affine(double c, double cx, double cy)
{
    Poly2 p;
    p.set_coeff(0, 0, c);
    p.set_coeff(1, 0, cx);
    p.set_coeff(0, 1, cy);
    return p;
}

double Poly2::coeff(int i, int j) const
{
    if (i < 0 || j < 0 || i + j > degree_)
        return 0.0;
    return static_cast<double>(c_[slot(i, j)]);
}

void Poly2::reserve_degree(int d)
{
    if (d > degree_) {
        c_.resize(slot(0, d) + 1, 0.0L);
        degree_ = d;
    }
}

void Poly2::trim()
{
    while (degree_ >= 0) {
        const std::size_t lo = slot(degree_, 0);
        const std::size_t hi = slot(0, degree_);
        if (std::any_of(c_.begin() + static_cast<std::ptrdiff_t>(lo),
                        c_.begin() + static_cast<std::ptrdiff_t>(hi) + 1,
                        [](long double v) { return v != 0.0L; }))
            break;
        c_.resize(lo);
        --degree_;
    }
}

void Poly2::set_coeff(int i, int j, double c)
{
    if (i < 0 || j < 0)
        throw InvalidArgument("Poly2::set_coeff: negative exponent");
    reserve_degree(i + j);
    c_[slot(i, j)] = c;
    trim();
}

double Poly2::operator()(double x, double y) const
{
    // Horner in x over coefficients that are themselves Horner sums in y.
    const long double xl = x;
    const long double yl = y;
    long double result = 0.0L;
    for (int i = degree_; i >= 0; --i) {
        long double inner = 0.0L;
        for (int j = degree_ - i; j >= 0; --j)
            inner = inner * yl + c_[slot(i, j)];
        result = result * xl + inner;
    }
    return static_cast<double>(result);
}

Poly2 Poly2::dx() const
{
    Poly2 out;
    if (degree_ < 1)
        return out;
    out.reserve_degree(degree_ - 1);
    for (int i = 1; i <= degree_; ++i)
        for (int j = 0; i + j <= degree_; ++j)
            out.c_[slot(i - 1, j)] = c_[slot(i, j)] * static_cast<long double>(i);
    out.trim();
    return out;
}

Poly2 Poly2::dy() const
{
    Poly2 out;
    if (degree_ < 1)
        return out;
    out.reserve_degree(degree_ - 1);
    for (int i = 0; i < degree_; ++i)
        for (int j = 1; i + j <= degree_; ++j)
            out.c_[slot(i, j - 1)] = c_[slot(i, j)] * static_cast<long double>(j);
    out.trim();
    return out;
}

Poly2 Poly2::pow(int e) const
{
    if (e < 0)
        throw InvalidArgument("Poly2::pow: negative exponent");
    Poly2 result = constant(1.0);
    for (int k = 0; k < e; ++k)
        result = result * *this;
    return result;
}

Poly2& Poly2::operator+=(const Poly2& o)
{
    reserve_degree(o.degree_);
    for (std::size_t s = 0; s < o.c_.size(); ++s)
        c_[s] += o.c_[s];
    trim();
    return *this;
}

Poly2& Poly2::operator-=(const Poly2& o)
{
    reserve_degree(o.degree_);
    for (std::size_t s = 0; s < o.c_.size(); ++s)
        c_[s] -= o.c_[s];
    trim();
    return *this;
}

Poly2& Poly2::operator*=(double s)
{
    for (long double& v : c_)
        v *= s;
    trim();
    return *this;
}

Poly2 operator*(const Poly2& a, const Poly2& b)
{
    Poly2 out;
    if (a.is_zero() || b.is_zero())
        return out;
    out.reserve_degree(a.degree_ + b.degree_);
    for (int ai = 0; ai <= a.degree_; ++ai)
        for (int aj = 0; ai + aj <= a.degree_; ++aj) {
            const long double ca = a.c_[Poly2::slot(ai, aj)];
            if (ca == 0.0L)
                continue;
            for (int bi = 0; bi <= b.degree_; ++bi)
                for (int bj = 0; bi + bj <= b.degree_; ++bj)
                    out.c_[Poly2::slot(ai + bi, aj + bj)] += ca * b.c_[Poly2::slot(bi, bj)];
        }
    out.trim();
    return out;
}

bool operator==(const Poly2& a, const Poly2& b)
{
    return a.degree_ == b.degree_ && a.c_ == b.c_;
}

}  // namespace dec
