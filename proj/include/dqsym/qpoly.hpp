#pragma once

// Exact polynomials in q over the integers, with overflow-checked 64-bit
// coefficients. These are the scalars of every algebra element.

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dqsym {

/// Thrown when a coefficient leaves the 64-bit range.
class OverflowError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

class QPoly {
public:
    QPoly() = default;
    QPoly(std::int64_t constant);  // NOLINT: integers are polynomials
    /// Ascending coefficients; trailing zeros are dropped.
    static QPoly from_coeffs(std::vector<std::int64_t> coeffs);
    static QPoly q_power(int k, std::int64_t c = 1);

    const std::vector<std::int64_t>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    std::int64_t coeff(int k) const noexcept;

    QPoly& operator+=(const QPoly& r);
    QPoly& operator-=(const QPoly& r);
    QPoly& operator*=(const QPoly& r);

    friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
    friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
    friend QPoly operator*(QPoly a, const QPoly& b) { return a *= b; }
    friend QPoly operator-(const QPoly& a);

    friend bool operator==(const QPoly&, const QPoly&) = default;

    /// Ascending form without spaces: "1-q", "-q+q^2", "q^2", "0".
    std::string to_string() const;

private:
    void trim();
    std::vector<std::int64_t> coeffs_;
};

QPoly add(const QPoly& p, const QPoly& r);
QPoly neg(const QPoly& p);
QPoly mul(const QPoly& p, const QPoly& r);
QPoly scale(const QPoly& p, std::int64_t c);
QPoly pow(const QPoly& p, int k);

/// Exact evaluation; throws OverflowError.
std::int64_t eval_int(const QPoly& p, std::int64_t v);

/// sign * (-q)^a * (1-q)^b.
struct FactoredCoeff {
    int sign = 1;
    int a = 0;
    int b = 0;
    friend bool operator==(const FactoredCoeff&, const FactoredCoeff&) = default;
};

QPoly expand(const FactoredCoeff& f);

/// The unique (sign, a, b) with p = sign (-q)^a (1-q)^b, or nullopt.
std::optional<FactoredCoeff> try_factor(const QPoly& p);

/// Factored rendering when try_factor succeeds ("-q(1-q)", "(1-q)^2",
/// "q^2(1-q)"), to_string() otherwise.
std::string to_factored_string(const QPoly& p);

}  // namespace dqsym
