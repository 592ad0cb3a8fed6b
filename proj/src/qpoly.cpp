#include "dqsym/qpoly.hpp"

#include <algorithm>

namespace dqsym {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("QPoly coefficient overflow (add)");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("QPoly coefficient overflow (mul)");
    return r;
}

std::int64_t checked_neg(std::int64_t a) { return checked_mul(a, -1); }

}  // namespace

QPoly::QPoly(std::int64_t constant) {
    if (constant != 0) coeffs_.push_back(constant);
}

QPoly QPoly::from_coeffs(std::vector<std::int64_t> coeffs) {
    QPoly p;
    p.coeffs_ = std::move(coeffs);
    p.trim();
    return p;
}

QPoly QPoly::q_power(int k, std::int64_t c) {
    if (k < 0) throw std::invalid_argument("negative power of q");
    if (c == 0) return {};
    std::vector<std::int64_t> v(static_cast<std::size_t>(k) + 1, 0);
    v.back() = c;
    return from_coeffs(std::move(v));
}

std::int64_t QPoly::coeff(int k) const noexcept {
    return k >= 0 && k < static_cast<int>(coeffs_.size()) ? coeffs_[static_cast<std::size_t>(k)] : 0;
}

void QPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

QPoly& QPoly::operator+=(const QPoly& r) {
    if (r.coeffs_.size() > coeffs_.size()) coeffs_.resize(r.coeffs_.size(), 0);
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i) coeffs_[i] = checked_add(coeffs_[i], r.coeffs_[i]);
    trim();
    return *this;
}

QPoly& QPoly::operator-=(const QPoly& r) { return *this += -r; }

QPoly& QPoly::operator*=(const QPoly& r) {
    if (is_zero() || r.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<std::int64_t> out(coeffs_.size() + r.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < r.coeffs_.size(); ++j)
            out[i + j] = checked_add(out[i + j], checked_mul(coeffs_[i], r.coeffs_[j]));
    coeffs_ = std::move(out);
    trim();
    return *this;
}

QPoly operator-(const QPoly& a) {
    QPoly r = a;
    for (auto& c : r.coeffs_) c = checked_neg(c);
    return r;
}

std::string QPoly::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const std::int64_t c = coeffs_[k];
        if (c == 0) continue;
        const bool first = s.empty();
        // Magnitude as unsigned so INT64_MIN prints correctly.
        const std::uint64_t mag = c < 0 ? 0 - static_cast<std::uint64_t>(c) : static_cast<std::uint64_t>(c);
        if (c < 0) s += '-';
        else if (!first) s += '+';
        if (k == 0 || mag != 1) s += std::to_string(mag);
        if (k >= 1) s += 'q';
        if (k >= 2) s += '^' + std::to_string(k);
    }
    return s;
}

QPoly add(const QPoly& p, const QPoly& r) { return p + r; }
QPoly neg(const QPoly& p) { return -p; }
QPoly mul(const QPoly& p, const QPoly& r) { return p * r; }
QPoly scale(const QPoly& p, std::int64_t c) { return p * QPoly(c); }

QPoly pow(const QPoly& p, int k) {
    if (k < 0) throw std::invalid_argument("negative exponent");
    QPoly r(1);
    for (int i = 0; i < k; ++i) r *= p;
    return r;
}

std::int64_t eval_int(const QPoly& p, std::int64_t v) {
    std::int64_t acc = 0;
    const auto& c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = checked_add(checked_mul(acc, v), *it);
    return acc;
}

QPoly expand(const FactoredCoeff& f) {
    return scale(pow(QPoly::from_coeffs({0, -1}), f.a) * pow(QPoly::from_coeffs({1, -1}), f.b), f.sign);
}

std::optional<FactoredCoeff> try_factor(const QPoly& p) {
    if (p.is_zero()) return std::nullopt;
    // The lowest nonzero degree is a; the rest must be c (1-q)^b.
    int a = 0;
    while (p.coeff(a) == 0) ++a;
    const int b = p.degree() - a;
    const std::int64_t low = p.coeff(a);
    if (low != 1 && low != -1) return std::nullopt;
    // low = sign * (-1)^a
    const int sign = static_cast<int>(a % 2 == 0 ? low : -low);
    FactoredCoeff f{sign, a, b};
    if (expand(f) != p) return std::nullopt;
    return f;
}

std::string to_factored_string(const QPoly& p) {
    const auto f = try_factor(p);
    if (!f) return p.to_string();
    // sign (-q)^a = sign (-1)^a q^a
    const bool negative = (f->sign < 0) != (f->a % 2 == 1);
    if (f->a == 0 && f->b == 1 && !negative) return "1-q";
    std::string s = negative ? "-" : "";
    if (f->a == 1) s += "q";
    else if (f->a > 1) s += "q^" + std::to_string(f->a);
    if (f->b >= 1) s += "(1-q)";
    if (f->b > 1) s += "^" + std::to_string(f->b);
    if (f->a == 0 && f->b == 0) s += "1";
    return s;
}

}  // namespace dqsym
