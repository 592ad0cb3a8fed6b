#pragma once

// Colored free quasi-symmetric functions in the G basis.
//
// A Biword is G_{sigma,u}: a permutation sigma with a color word u of the same
// length. In text it is written "u/sigma" (colors over permutation). An
// Element is a finite linear combination of biwords with QPoly coefficients.
//
// Two dendriform structures live here and must not be confused:
//  * left_dend / right_dend split the convolution product by where the
//    maximum of the underlying permutation lands;
//  * biword_left / biword_right test the word condition on the color rows and
//    convolve the permutation rows.

#include <cstddef>
#include <map>
#include <span>

#include "dqsym/combinatorics.hpp"
#include "dqsym/qpoly.hpp"

namespace dqsym {

/// Color used for uncolored FQSym computations.
inline constexpr int kUncolored = 1;

struct Biword {
    Permutation sigma;
    Word colors;

    Biword() = default;
    /// Throws std::invalid_argument when the lengths differ.
    Biword(Permutation sigma, Word colors);

    std::size_t size() const noexcept { return sigma.size(); }

    /// Ordered by length, then permutation, then colors.
    friend auto operator<=>(const Biword&, const Biword&) = default;
    friend bool operator==(const Biword&, const Biword&) = default;
};

class Element {
public:
    using Terms = std::map<Biword, QPoly>;

    Element() = default;
    /// The empty biword with coefficient 1.
    static Element unit();
    static Element term(Biword b, QPoly c = 1);

    /// Accumulates; a coefficient that cancels to zero is erased.
    void add_term(const Biword& b, const QPoly& c);

    const Terms& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    QPoly coefficient(const Biword& b) const;
    /// True when every term has length n.
    bool is_homogeneous(std::size_t n) const;

    Element& operator+=(const Element& r);
    Element& operator-=(const Element& r);
    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator-(const Element& a);
    friend Element operator*(const QPoly& c, const Element& e);

    friend bool operator==(const Element&, const Element&) = default;

private:
    Terms terms_;
};

/// x_c = G_{1,c}.
Element generator(int color);

/// G_{a,u} G_{b,v} = sum over g in a*b of G_{g,uv}, extended bilinearly.
Element product(const Element& a, const Element& b);
/// Terms of the product where the suffix maximum is below the prefix maximum.
Element left_dend(const Element& a, const Element& b);
/// The remaining terms of the product. left_dend + right_dend = product.
Element right_dend(const Element& a, const Element& b);

/// ab - q ba.
Element q_bracket(const Element& a, const Element& b);
/// a >- b - q (b -< a).
Element pre_lie_q(const Element& a, const Element& b);

/// (word_left_dend(u,v) over each g in sigma*tau); terms whose color rows fail
/// the word condition are dropped.
Element biword_left(const Element& a, const Element& b);
Element biword_right(const Element& a, const Element& b);

/// Uncolored ribbon: sum of G_tau over the descent class of I.
Element ribbon_R(const Composition& I);
/// Uncolored sum_{k=0}^{n-1} (-1)^k R_{1^k, n-k}.
Element psi_ncsf(int n);

/// Specialize q to an integer; coefficients become constants.
Element evaluate_q(const Element& e, std::int64_t v);

/// Replace every color c by alphabet[c-1].
Element relabel_colors(const Element& e, std::span<const int> alphabet);

}  // namespace dqsym
