#include "dqsym/fqsym.hpp"

#include <stdexcept>

namespace dqsym {

Biword::Biword(Permutation s, Word u) : sigma(std::move(s)), colors(std::move(u)) {
    if (sigma.size() != colors.size()) throw std::invalid_argument("biword rows have different lengths");
}

Element Element::unit() { return term(Biword{}); }

Element Element::term(Biword b, QPoly c) {
    Element e;
    e.add_term(b, c);
    return e;
}

void Element::add_term(const Biword& b, const QPoly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(b, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

QPoly Element::coefficient(const Biword& b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? QPoly{} : it->second;
}

bool Element::is_homogeneous(std::size_t n) const {
    for (const auto& [b, c] : terms_)
        if (b.size() != n) return false;
    return true;
}

Element& Element::operator+=(const Element& r) {
    for (const auto& [b, c] : r.terms_) add_term(b, c);
    return *this;
}

Element& Element::operator-=(const Element& r) {
    for (const auto& [b, c] : r.terms_) add_term(b, -c);
    return *this;
}

Element operator-(const Element& a) {
    Element r;
    for (const auto& [b, c] : a.terms_) r.terms_.emplace(b, -c);
    return r;
}

Element operator*(const QPoly& k, const Element& e) {
    Element r;
    if (k.is_zero()) return r;
    for (const auto& [b, c] : e.terms_) r.add_term(b, k * c);
    return r;
}

Element generator(int color) { return Element::term(Biword(Permutation{1}, Word{color})); }

namespace {

enum class Split { kAll, kLeft, kRight };

Element convolve(const Element& a, const Element& b, Split split) {
    Element out;
    for (const auto& [ba, ca] : a.terms()) {
        for (const auto& [bb, cb] : b.terms()) {
            if (split != Split::kAll && (ba.size() == 0 || bb.size() == 0))
                throw std::invalid_argument("dendriform product with the empty biword");
            const QPoly c = ca * cb;
            const Word colors = ba.colors.concat(bb.colors);
            const std::size_t k = ba.size();
            for (const Permutation& g : convolution(ba.sigma, bb.sigma)) {
                if (split != Split::kAll) {
                    // max(v) < max(u) iff the largest value sits in the prefix.
                    bool left = false;
                    for (std::size_t i = 0; i < k; ++i) left = left || g[i] == static_cast<int>(g.size());
                    if (left != (split == Split::kLeft)) continue;
                }
                out.add_term(Biword(g, colors), c);
            }
        }
    }
    return out;
}

template <class WordOp>
Element biword_dend(const Element& a, const Element& b, WordOp word_op) {
    Element out;
    for (const auto& [ba, ca] : a.terms()) {
        for (const auto& [bb, cb] : b.terms()) {
            if (ba.size() == 0 || bb.size() == 0)
                throw std::invalid_argument("biword dendriform product with the empty biword");
            const std::optional<Word> top = word_op(ba.colors, bb.colors);
            if (!top) continue;
            const QPoly c = ca * cb;
            for (const Permutation& g : convolution(ba.sigma, bb.sigma)) out.add_term(Biword(g, *top), c);
        }
    }
    return out;
}

const QPoly& q_poly() {
    static const QPoly q = QPoly::q_power(1);
    return q;
}

}  // namespace

Element product(const Element& a, const Element& b) { return convolve(a, b, Split::kAll); }
Element left_dend(const Element& a, const Element& b) { return convolve(a, b, Split::kLeft); }
Element right_dend(const Element& a, const Element& b) { return convolve(a, b, Split::kRight); }

Element q_bracket(const Element& a, const Element& b) { return product(a, b) - q_poly() * product(b, a); }

Element pre_lie_q(const Element& a, const Element& b) { return right_dend(a, b) - q_poly() * left_dend(b, a); }

Element biword_left(const Element& a, const Element& b) { return biword_dend(a, b, word_left_dend); }
Element biword_right(const Element& a, const Element& b) { return biword_dend(a, b, word_right_dend); }

Element ribbon_R(const Composition& I) {
    Element out;
    const Word colors(std::vector<int>(static_cast<std::size_t>(I.weight()), kUncolored));
    for (const Permutation& t : permutations_with_descents(I)) out.add_term(Biword(t, colors), 1);
    return out;
}

Element psi_ncsf(int n) {
    if (n < 1) throw std::invalid_argument("psi_ncsf needs n >= 1");
    Element out;
    for (int k = 0; k < n; ++k) {
        std::vector<int> parts(static_cast<std::size_t>(k), 1);
        parts.push_back(n - k);
        out += QPoly(k % 2 == 0 ? 1 : -1) * ribbon_R(Composition(parts));
    }
    return out;
}

Element evaluate_q(const Element& e, std::int64_t v) {
    Element out;
    for (const auto& [b, c] : e.terms()) out.add_term(b, eval_int(c, v));
    return out;
}

Element relabel_colors(const Element& e, std::span<const int> alphabet) {
    Element out;
    for (const auto& [b, c] : e.terms()) out.add_term(Biword(b.sigma, relabel(b.colors, alphabet)), c);
    return out;
}

}  // namespace dqsym
