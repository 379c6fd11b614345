#include "oracle_svd.hpp"

#include <algorithm>
#include <vector>

#include <mpfr.h>

namespace oracle {

namespace {

constexpr mpfr_prec_t kPrec = 1024;

// Minimal value wrapper so polynomial code stays readable.
class Real {
  public:
    Real() { mpfr_init2(v_, kPrec); mpfr_set_zero(v_, 1); }
    explicit Real(double d) { mpfr_init2(v_, kPrec); mpfr_set_d(v_, d, MPFR_RNDN); }
    Real(const Real& o) { mpfr_init2(v_, kPrec); mpfr_set(v_, o.v_, MPFR_RNDN); }
    Real& operator=(const Real& o) {
        if (this != &o)
            mpfr_set(v_, o.v_, MPFR_RNDN);
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    friend Real operator+(const Real& a, const Real& b) {
        Real r;
        mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend Real operator-(const Real& a, const Real& b) {
        Real r;
        mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend Real operator*(const Real& a, const Real& b) {
        Real r;
        mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend Real operator/(const Real& a, const Real& b) {
        Real r;
        mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    Real operator-() const {
        Real r;
        mpfr_neg(r.v_, v_, MPFR_RNDN);
        return r;
    }

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool abs_below(const Real& bound) const { return mpfr_cmpabs(v_, bound.v_) <= 0; }
    Real abs() const {
        Real r;
        mpfr_abs(r.v_, v_, MPFR_RNDN);
        return r;
    }
    Real sqrt() const {
        Real r;
        if (mpfr_sgn(v_) > 0)
            mpfr_sqrt(r.v_, v_, MPFR_RNDN);
        return r;
    }
    Real scaled_down(long bits) const {
        Real r;
        mpfr_div_2si(r.v_, v_, bits, MPFR_RNDN);
        return r;
    }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  private:
    mpfr_t v_;
};

Real det3(const Real& a, const Real& b, const Real& c, const Real& d, const Real& e,
          const Real& f, const Real& g, const Real& h, const Real& i) {
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g);
}

// Horner evaluation of a monic polynomial stored leading-first.
Real eval(const std::vector<Real>& c, const Real& x) {
    Real acc = c[0];
    for (std::size_t i = 1; i < c.size(); ++i)
        acc = acc * x + c[i];
    return acc;
}

std::vector<Real> derivative(const std::vector<Real>& c) {
    const std::size_t deg = c.size() - 1;
    std::vector<Real> d;
    d.reserve(deg);
    for (std::size_t i = 0; i < deg; ++i)
        d.push_back(c[i] * Real(static_cast<double>(deg - i)));
    return d;
}

// Largest real root of a monic polynomial whose roots are all real and
// lie in [0, start). Newton from the right converges monotonically.
Real largest_root(const std::vector<Real>& c, const Real& start) {
    const std::vector<Real> dc = derivative(c);
    Real x = start;
    for (int it = 0; it < 3000; ++it) {
        const Real fx = eval(c, x);
        if (fx.is_zero())
            break;
        const Real fpx = eval(dc, x);
        if (fpx.is_zero())
            break;
        const Real step = fx / fpx;
        x = x - step;
        // 200 fractional bits of agreement is plenty for double output.
        Real scale = x.abs() + Real(1.0);
        if (step.abs().abs_below(scale.scaled_down(200)))
            break;
    }
    return x;
}

std::vector<Real> deflate(const std::vector<Real>& c, const Real& root) {
    std::vector<Real> out;
    out.reserve(c.size() - 1);
    Real carry(0.0);
    for (std::size_t i = 0; i + 1 < c.size(); ++i) {
        carry = c[i] + carry * root;
        out.push_back(carry);
    }
    return out;
}

} // namespace

std::array<double, 4> singular_values(const std::array<double, 16>& m) {
    // Gram matrix; every product and sum below is exact at this precision
    // for double inputs, so the polynomial coefficients carry no rounding.
    Real g[4][4];
    for (int i = 0; i < 4; ++i)
        for (int j = i; j < 4; ++j) {
            Real s(0.0);
            for (int k = 0; k < 4; ++k)
                s = s + Real(m[k * 4 + i]) * Real(m[k * 4 + j]);
            g[i][j] = s;
            g[j][i] = s;
        }

    // Characteristic polynomial x^4 - e1 x^3 + e2 x^2 - e3 x + e4 via
    // sums of principal minors.
    Real e1 = g[0][0] + g[1][1] + g[2][2] + g[3][3];
    Real e2(0.0);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            e2 = e2 + (g[i][i] * g[j][j] - g[i][j] * g[j][i]);
    Real e3(0.0);
    for (int skip = 0; skip < 4; ++skip) {
        int idx[3], t = 0;
        for (int i = 0; i < 4; ++i)
            if (i != skip)
                idx[t++] = i;
        e3 = e3 + det3(g[idx[0]][idx[0]], g[idx[0]][idx[1]], g[idx[0]][idx[2]],
                       g[idx[1]][idx[0]], g[idx[1]][idx[1]], g[idx[1]][idx[2]],
                       g[idx[2]][idx[0]], g[idx[2]][idx[1]], g[idx[2]][idx[2]]);
    }
    Real e4 = g[0][0] * det3(g[1][1], g[1][2], g[1][3], g[2][1], g[2][2], g[2][3], g[3][1],
                             g[3][2], g[3][3]) -
              g[0][1] * det3(g[1][0], g[1][2], g[1][3], g[2][0], g[2][2], g[2][3], g[3][0],
                             g[3][2], g[3][3]) +
              g[0][2] * det3(g[1][0], g[1][1], g[1][3], g[2][0], g[2][1], g[2][3], g[3][0],
                             g[3][1], g[3][3]) -
              g[0][3] * det3(g[1][0], g[1][1], g[1][2], g[2][0], g[2][1], g[2][2], g[3][0],
                             g[3][1], g[3][2]);

    std::vector<Real> poly = {Real(1.0), -e1, e2, -e3, e4};

    std::vector<Real> roots;
    // Exact zero constant terms are genuine zero eigenvalues (the
    // coefficient arithmetic above is exact); strip them first so
    // rank-deficient inputs do not go through deflation noise.
    while (poly.size() > 1 && poly.back().is_zero()) {
        roots.emplace_back(0.0);
        poly.pop_back();
    }

    const Real bound = e1 + Real(1.0);  // above every eigenvalue
    while (poly.size() > 1) {
        const Real r = largest_root(poly, bound);
        roots.push_back(r);
        poly = deflate(poly, r);
    }

    std::array<double, 4> out{};
    for (std::size_t i = 0; i < 4 && i < roots.size(); ++i)
        out[i] = roots[i].sqrt().to_double();
    std::sort(out.begin(), out.end(), std::greater<double>());
    return out;
}

} // namespace oracle
