#include "stairkvol/ring.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace stairkvol {

Integer iroot(const Integer& a, unsigned k) {
    if (a < 0) throw std::invalid_argument("iroot: negative radicand");
    if (k == 0) throw std::invalid_argument("iroot: zero index");
    if (a == 0 || k == 1) return a;
    // Newton iteration from an upper bound derived from the bit length.
    unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(a)) + 1;
    Integer x = Integer(1) << (bits / k + 1);
    while (true) {
        // x_{new} = ((k-1)x + a / x^{k-1}) / k
        Integer xk1 = 1;
        for (unsigned i = 0; i + 1 < k; ++i) xk1 *= x;
        Integer y = (Integer(k - 1) * x + a / xk1) / k;
        if (y >= x) break;
        x = y;
    }
    // x is now the floor root or one above.
    Integer xk = 1;
    for (unsigned i = 0; i < k; ++i) xk *= x;
    while (xk > a) {
        --x;
        xk = 1;
        for (unsigned i = 0; i < k; ++i) xk *= x;
    }
    return x;
}

namespace {

// Largest k with n = m^k; returns {m, k}.
std::pair<std::int64_t, int> perfect_power(std::int64_t n) {
    for (int k = 62; k >= 2; --k) {
        Integer r = iroot(Integer(n), static_cast<unsigned>(k));
        Integer rk = 1;
        for (int i = 0; i < k; ++i) rk *= r;
        if (rk == n) return {r.convert_to<std::int64_t>(), k};
    }
    return {n, 1};
}

}  // namespace

RingSpec::RingSpec(std::int64_t n, int d) : n_(n), d_(d) {
    if (n < 2) throw std::invalid_argument("RingSpec: n must be >= 2");
    if (d < 1) throw std::invalid_argument("RingSpec: d must be >= 1");
    auto [m, k] = perfect_power(n);
    int r = std::gcd(k, d);
    red_deg_ = d / r;
    Integer base = 1;
    for (int i = 0; i < k / r; ++i) base *= m;
    red_base_ = base.convert_to<std::int64_t>();   // m^{k/r} <= n
}

RingElement::RingElement(RingSpec spec)
    : spec_(spec), c_(static_cast<std::size_t>(spec.degree())) {}

RingElement::RingElement(RingSpec spec, std::int64_t constant)
    : spec_(spec), c_(static_cast<std::size_t>(spec.degree())) {
    c_[0] = constant;
}

RingElement::RingElement(RingSpec spec, std::vector<Integer> coeffs)
    : spec_(spec), c_(std::move(coeffs)) {
    const auto d = static_cast<std::size_t>(spec_.degree());
    if (c_.size() > d) {
        // Fold x^d -> n before canonicalizing.
        for (std::size_t j = c_.size(); j-- > d;) {
            c_[j - d] += c_[j] * spec_.n();
            c_[j] = 0;
        }
    }
    c_.resize(d);
    canonicalize();
}

RingElement RingElement::monomial(RingSpec spec, int k, std::int64_t coeff) {
    if (k < 0) throw std::invalid_argument("monomial: negative degree");
    std::vector<Integer> c(static_cast<std::size_t>(k) + 1);
    c.back() = coeff;
    return RingElement(spec, std::move(c));
}

void RingElement::canonicalize() {
    const int dr = spec_.red_degree();
    const int d = spec_.degree();
    if (dr == d) return;
    // Fold x^j into x^{j mod dr} * M^{j div dr} using x^{dr} = M.
    for (int j = d - 1; j >= dr; --j) {
        if (c_[j] == 0) continue;
        Integer scale = 1;
        for (int i = 0; i < j / dr; ++i) scale *= spec_.red_base();
        c_[j % dr] += c_[j] * scale;
        c_[j] = 0;
    }
}

void RingElement::require_same_spec(const RingElement& o) const {
    if (spec_ != o.spec_) throw std::invalid_argument("RingElement: spec mismatch");
}

bool RingElement::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Integer& v) { return v == 0; });
}

bool RingElement::operator==(const RingElement& o) const {
    return spec_ == o.spec_ && c_ == o.c_;
}

RingElement RingElement::operator-() const {
    RingElement r(spec_);
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = -c_[i];
    return r;
}

RingElement RingElement::operator+(const RingElement& o) const {
    require_same_spec(o);
    RingElement r(spec_);
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] + o.c_[i];
    return r;
}

RingElement RingElement::operator-(const RingElement& o) const {
    require_same_spec(o);
    RingElement r(spec_);
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] - o.c_[i];
    return r;
}

RingElement RingElement::operator*(const RingElement& o) const {
    require_same_spec(o);
    const auto d = static_cast<std::size_t>(spec_.degree());
    std::vector<Integer> prod(2 * d);
    for (std::size_t i = 0; i < d; ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < d; ++j) {
            if (o.c_[j] == 0) continue;
            prod[i + j] += c_[i] * o.c_[j];
        }
    }
    return RingElement(spec_, std::move(prod));
}

RingElement RingElement::operator*(std::int64_t k) const {
    RingElement r(spec_);
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] * k;
    return r;
}

RingElement RingElement::div_exact(std::int64_t k) const {
    if (k == 0) throw std::invalid_argument("div_exact: division by zero");
    RingElement r(spec_);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] % k != 0) throw std::domain_error("div_exact: not divisible");
        r.c_[i] = c_[i] / k;
    }
    return r;
}

namespace {

// Dyadic bounds on the canonical-form value: returns [lo, hi] scaled by
// 2^{p*(dr-1)} where the root satisfies root*2^p in [rlo, rlo+1].
struct DyadicBounds {
    Integer lo, hi;
    int scale_bits;
};

DyadicBounds bound_value(const std::vector<Integer>& c, int red_deg,
                         std::int64_t red_base, int p) {
    const int dr = red_deg;
    DyadicBounds out;
    out.scale_bits = p * (dr - 1);
    if (dr == 1) {
        out.lo = out.hi = c[0];
        out.scale_bits = 0;
        return out;
    }
    Integer rlo = iroot(Integer(red_base) << (p * dr), static_cast<unsigned>(dr));
    Integer rhi = rlo + 1;
    // Powers of the root bounds.
    std::vector<Integer> plo(dr), phi(dr);
    plo[0] = phi[0] = 1;
    for (int k = 1; k < dr; ++k) {
        plo[k] = plo[k - 1] * rlo;
        phi[k] = phi[k - 1] * rhi;
    }
    Integer lo = 0, hi = 0;
    for (int k = 0; k < dr; ++k) {
        if (c[k] == 0) continue;
        Integer shift = Integer(1) << (p * (dr - 1 - k));
        if (c[k] > 0) {
            lo += c[k] * plo[k] * shift;
            hi += c[k] * phi[k] * shift;
        } else {
            lo += c[k] * phi[k] * shift;
            hi += c[k] * plo[k] * shift;
        }
    }
    out.lo = lo;
    out.hi = hi;
    return out;
}

double ldexp_integer(const Integer& v, int shift) {
    // v * 2^shift as double; fine for reporting (certified slop added by caller).
    return std::ldexp(v.convert_to<double>(), shift);
}

}  // namespace

int RingElement::sign() const {
    if (is_zero()) return 0;
    if (spec_.red_degree() == 1) return c_[0] < 0 ? -1 : 1;
    // The canonical form of a non-zero element is a non-zero algebraic number;
    // widen precision until the dyadic interval excludes zero.
    for (int p = 16;; p *= 2) {
        auto b = bound_value(c_, spec_.red_degree(), spec_.red_base(), p);
        if (b.lo > 0) return 1;
        if (b.hi < 0) return -1;
        if (p > (1 << 20))
            throw std::runtime_error("RingElement::sign: interval refinement stalled");
    }
}

Approx RingElement::to_double(int precision_bits) const {
    if (precision_bits < 16) throw std::invalid_argument("to_double: precision < 16 bits");
    Approx out;
    if (is_zero()) return out;
    const int dr = spec_.red_degree();
    if (dr == 1) {
        out.value = c_[0].convert_to<double>();
        // Exact when it fits in the double mantissa.
        if (boost::multiprecision::abs(c_[0]) < (Integer(1) << 53)) {
            out.error = 0.0;
        } else {
            out.error = std::abs(out.value) * 0x1p-50;
        }
        return out;
    }
    int p = precision_bits + 8;
    auto b = bound_value(c_, dr, spec_.red_base(), p);
    double lo = ldexp_integer(b.lo, -b.scale_bits);
    double hi = ldexp_integer(b.hi, -b.scale_bits);
    out.value = 0.5 * (lo + hi);
    double width = hi - lo;
    out.error = 0.5 * width * (1.0 + 0x1p-30) + std::abs(out.value) * 0x1p-50 + 0x1p-1000;
    return out;
}

Ordering compare(const RingElement& a, const RingElement& b) {
    int s = (a - b).sign();
    if (s < 0) return Ordering::Less;
    if (s > 0) return Ordering::Greater;
    return Ordering::Equal;
}

std::string RingElement::str() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        if (!first && c_[k] > 0) os << "+";
        if (k == 0) {
            os << c_[k];
        } else {
            if (c_[k] == -1) os << "-";
            else if (c_[k] != 1) os << c_[k] << "*";
            os << "x";
            if (k > 1) os << "^" << k;
        }
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace stairkvol
