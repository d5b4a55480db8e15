#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace stairkvol {

using Integer = boost::multiprecision::cpp_int;

/// Floor of the k-th root of a non-negative integer.
Integer iroot(const Integer& a, unsigned k);

enum class Ordering { Less, Equal, Greater };

/// The ring Z[x]/(x^d - n) with x embedded as the positive real root n^(1/d).
///
/// The spec also carries the reduced relation x^{d'} = M (the minimal
/// polynomial of n^(1/d)), which makes the sign of an element decidable even
/// when x^d - n is reducible over Q.
class RingSpec {
public:
    RingSpec() : n_(2), d_(1), red_deg_(1), red_base_(2) {}
    RingSpec(std::int64_t n, int d);

    std::int64_t n() const { return n_; }
    int degree() const { return d_; }

    // Reduced relation x^{red_degree} = red_base, irreducible over Q.
    int red_degree() const { return red_deg_; }
    std::int64_t red_base() const { return red_base_; }

    bool operator==(const RingSpec& o) const { return n_ == o.n_ && d_ == o.d_; }
    bool operator!=(const RingSpec& o) const { return !(*this == o); }

private:
    std::int64_t n_;
    int d_;
    int red_deg_;
    std::int64_t red_base_;
};

/// Certified floating approximation: |value - true| <= error.
struct Approx {
    double value = 0.0;
    double error = 0.0;
};

/// An exact element of Z[x]/(x^d - n).
///
/// Coefficients are stored lowest degree first and always in canonical form:
/// reduced modulo the minimal polynomial of n^(1/d), so coefficient-wise
/// equality coincides with equality of the real embeddings. Values are
/// immutable after construction.
class RingElement {
public:
    RingElement() = default;
    explicit RingElement(RingSpec spec);                       // zero
    RingElement(RingSpec spec, std::int64_t constant);
    RingElement(RingSpec spec, std::vector<Integer> coeffs);

    static RingElement monomial(RingSpec spec, int k, std::int64_t coeff = 1);

    const RingSpec& spec() const { return spec_; }
    const std::vector<Integer>& coeffs() const { return c_; }

    bool is_zero() const;
    /// Sign of the real embedding: -1, 0, +1.
    int sign() const;

    Approx to_double(int precision_bits = 53) const;
    double approx() const { return to_double(53).value; }

    RingElement operator-() const;
    RingElement operator+(const RingElement& o) const;
    RingElement operator-(const RingElement& o) const;
    RingElement operator*(const RingElement& o) const;
    RingElement operator*(std::int64_t k) const;

    bool operator==(const RingElement& o) const;
    bool operator!=(const RingElement& o) const { return !(*this == o); }

    /// Exact division by a non-zero integer; throws if not divisible.
    RingElement div_exact(std::int64_t k) const;

    std::string str() const;

private:
    void canonicalize();
    void require_same_spec(const RingElement& o) const;

    RingSpec spec_;
    std::vector<Integer> c_;   // length spec_.degree(), canonical
};

Ordering compare(const RingElement& a, const RingElement& b);

inline bool operator<(const RingElement& a, const RingElement& b) {
    return compare(a, b) == Ordering::Less;
}
inline bool operator>(const RingElement& a, const RingElement& b) {
    return compare(a, b) == Ordering::Greater;
}
inline bool operator<=(const RingElement& a, const RingElement& b) {
    return compare(a, b) != Ordering::Greater;
}
inline bool operator>=(const RingElement& a, const RingElement& b) {
    return compare(a, b) != Ordering::Less;
}

}  // namespace stairkvol
