#include "dqsym/identities.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace dqsym {

namespace {

const QPoly& q_poly() {
    static const QPoly q = QPoly::q_power(1);
    return q;
}

QPoly sign_of(int exponent) { return QPoly(exponent % 2 == 0 ? 1 : -1); }

void check_bound(int n, int max_n) {
    if (n > max_n)
        throw BoundError("n = " + std::to_string(n) + " exceeds the enumeration bound " + std::to_string(max_n));
}

void check_same_weight(const Composition& I, const Composition& J) {
    if (I.weight() != J.weight()) throw std::invalid_argument("compositions of different weights");
}

Composition ones(int count) { return Composition(std::vector<int>(static_cast<std::size_t>(count), 1)); }

/// (a, b) with a zero part dropped.
Composition two_parts(int a, int b) {
    std::vector<int> parts;
    if (a > 0) parts.push_back(a);
    if (b > 0) parts.push_back(b);
    return Composition(std::move(parts));
}

Composition drop_last(const Composition& L) {
    std::vector<int> parts = L.parts();
    parts.pop_back();
    return Composition(std::move(parts));
}

/// Calls f(chosen) for every k-subset of {1..n}, chosen ascending, with its complement.
template <class F>
void for_each_subset(int n, int k, F&& f) {
    std::vector<bool> pick(static_cast<std::size_t>(n), false);
    std::fill(pick.begin(), pick.begin() + k, true);
    do {
        std::vector<int> chosen, rest;
        for (int v = 0; v < n; ++v) (pick[static_cast<std::size_t>(v)] ? chosen : rest).push_back(v + 1);
        f(chosen, rest);
    } while (std::prev_permutation(pick.begin(), pick.end()));
}

}  // namespace

std::strong_ordering operator<=>(const ColoredRibbonKey& a, const ColoredRibbonKey& b) {
    if (auto c = a.I.weight() <=> b.I.weight(); c != 0) return c;
    if (auto c = composition_order_index(a.I) <=> composition_order_index(b.I); c != 0) return c;
    return composition_order_index(a.J) <=> composition_order_index(b.J);
}

std::string basis_name(Basis b) { return b == Basis::kR ? "R" : "Lambda"; }

void BasisExpansion::add(const ColoredRibbonKey& key, const QPoly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = coeffs.try_emplace(key, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) coeffs.erase(it);
}

QPoly BasisExpansion::coefficient(const Composition& I, const Composition& J) const {
    auto it = coeffs.find({I, J});
    return it == coeffs.end() ? QPoly{} : it->second;
}

CoeffMatrix to_matrix(const BasisExpansion& e) {
    CoeffMatrix m;
    m.n = e.n;
    m.basis = e.basis;
    m.order = compositions_of(e.n);
    m.entries.assign(m.order.size(), std::vector<QPoly>(m.order.size()));
    for (const auto& [key, c] : e.coeffs) {
        if (key.I.weight() != e.n) throw std::invalid_argument("expansion key of the wrong weight");
        m.entries[composition_order_index(key.I)][composition_order_index(key.J)] = c;
    }
    return m;
}

// ---------------------------------------------------------------------------
// Elements

Element psi_u(const Word& u) {
    if (u.empty()) throw std::invalid_argument("psi_u of the empty word");
    Element e = generator(u[0]);
    for (std::size_t i = 1; i < u.size(); ++i) e = pre_lie_q(e, generator(u[i]));
    return e;
}

Element psi_sigma(const Permutation& sigma) {
    if (sigma.empty()) throw std::invalid_argument("psi_sigma of the empty permutation");
    Element e = Element::unit();
    for (const Word& factor : initially_dominated_factorization(sigma.word())) e = product(e, psi_u(factor));
    return e;
}

Element sigma_n(int n, Execution exec, int max_n) {
    if (n < 1) throw std::invalid_argument("sigma_n needs n >= 1");
    check_bound(n, max_n);
    const auto perms = permutations_of(static_cast<std::size_t>(n));
    return sum_psi_sigma(perms, exec);
}

Element p_L(const Composition& L, Execution exec, int max_n) {
    if (L.empty()) throw std::invalid_argument("p_L of the empty composition");
    check_bound(L.weight(), max_n);
    const auto perms = permutations_with_saillance(L);
    return sum_psi_sigma(perms, exec);
}

Element r_IJ(const Composition& I, const Composition& J) {
    check_same_weight(I, J);
    const auto bottoms = permutations_with_descents(I);
    const auto tops = permutations_with_saillance(J);
    return sum_biword_grid_serial(bottoms, tops);
}

Element lambda_IJ(const Composition& I, const Composition& J) {
    check_same_weight(I, J);
    Element out;
    for (const Composition& finer : finer_refinements(conjugate(mirror(I)))) out += r_IJ(finer, J);
    return out;
}

Element lambda_interval(const Composition& I, const Composition& H, const Composition& K) {
    Element out;
    for (const Composition& J : lattice_interval(H, K)) out += lambda_IJ(I, J);
    return out;
}

// ---------------------------------------------------------------------------
// Basis changes

RExpansionResult expand_in_R(const Element& e) {
    BasisExpansion out;
    out.basis = Basis::kR;
    if (e.is_zero()) return out;
    const std::size_t n = e.terms().begin()->first.size();
    out.n = static_cast<int>(n);

    struct ClassInfo {
        Biword representative;
        QPoly coeff;
        std::size_t count = 0;
    };
    std::map<ColoredRibbonKey, ClassInfo> classes;
    for (const auto& [b, c] : e.terms()) {
        if (b.size() != n) return SpanFailure{"element is not homogeneous", e.terms().begin()->first, b, e.terms().begin()->second, c};
        std::vector<int> top(b.colors.begin(), b.colors.end());
        Permutation colors;
        try {
            colors = Permutation(top);
        } catch (const std::invalid_argument&) {
            return SpanFailure{"color row is not a permutation", b, b, c, c};
        }
        const ColoredRibbonKey key{descent_composition(b.sigma), saillance_composition(colors)};
        auto [it, inserted] = classes.try_emplace(key, ClassInfo{b, c, 0});
        if (!inserted && it->second.coeff != c)
            return SpanFailure{"coefficients differ inside one class", it->second.representative, b, it->second.coeff, c};
        ++it->second.count;
    }

    // Every class that occurs must be fully populated.
    std::map<Composition, std::size_t> descent_sizes, saillance_sizes;
    for (const Permutation& p : permutations_of(n)) {
        ++descent_sizes[descent_composition(p)];
        ++saillance_sizes[saillance_composition(p)];
    }
    for (const auto& [key, info] : classes) {
        if (info.count != descent_sizes[key.I] * saillance_sizes[key.J]) {
            for (const Permutation& t : permutations_with_descents(key.I))
                for (const Permutation& s : permutations_with_saillance(key.J)) {
                    Biword missing(t, s.word());
                    if (!e.terms().contains(missing))
                        return SpanFailure{"class only partially present", info.representative, missing, info.coeff, QPoly{}};
                }
        }
        out.add(key, info.coeff);
    }
    return out;
}

BasisExpansion lambda_to_R(const BasisExpansion& lambda) {
    if (lambda.basis != Basis::kLambda) throw std::invalid_argument("lambda_to_R expects a Lambda expansion");
    BasisExpansion out{Basis::kR, lambda.n, {}};
    for (const auto& [key, c] : lambda.coeffs)
        for (const Composition& finer : finer_refinements(conjugate(mirror(key.I)))) out.add({finer, key.J}, c);
    return out;
}

BasisExpansion r_to_lambda(const BasisExpansion& ribbon) {
    if (ribbon.basis != Basis::kR) throw std::invalid_argument("r_to_lambda expects an R expansion");
    // R coefficient at Des = B is the sum of Lambda coefficients over A within B,
    // A = complement of Des(I). Moebius inversion over the boolean lattice.
    const int n = ribbon.n;
    BasisExpansion out{Basis::kLambda, n, {}};
    if (n == 0) return out;
    std::map<Composition, std::map<std::uint32_t, QPoly>> by_color;
    for (const auto& [key, c] : ribbon.coeffs) by_color[key.J][descent_set(key.I).bits()] = c;
    for (const auto& [J, r] : by_color) {
        for (const Composition& I : compositions_of(n)) {
            const std::uint32_t a = descent_set(I).complement().bits();
            QPoly acc;
            // Enumerate submasks b of a, including a itself and 0.
            for (std::uint32_t b = a;; b = (b - 1) & a) {
                if (auto it = r.find(b); it != r.end())
                    acc += std::popcount(a & ~b) % 2 == 0 ? it->second : -it->second;
                if (b == 0) break;
            }
            out.add({I, J}, acc);
        }
    }
    return out;
}

Element to_element(const BasisExpansion& e) {
    Element out;
    for (const auto& [key, c] : e.coeffs)
        out += c * (e.basis == Basis::kR ? r_IJ(key.I, key.J) : lambda_IJ(key.I, key.J));
    return out;
}

// ---------------------------------------------------------------------------
// Predictions

BasisExpansion theorem1_prediction(int n, SignConvention sign) {
    BasisExpansion out{Basis::kLambda, n, {}};
    const auto comps = compositions_of(n);
    for (const Composition& I : comps) {
        const int length = static_cast<int>(I.length());
        const QPoly s = sign_of(sign == SignConvention::kNMinusLength ? n - length : length - 1);
        for (const Composition& J : comps) out.add({I, J}, s * QPoly::q_power(statistic_D(I, J)));
    }
    return out;
}

QPoly c_coefficient(const Composition& I, const Composition& J) {
    check_same_weight(I, J);
    const DescentSet des_i = descent_set(I);
    const DescentSet des_j = descent_set(J);
    // Des(I) \ Des(I)^- : descents d of I with d + 1 not a descent.
    for (int d : des_i.positions())
        if (!des_i.contains(d + 1) && !des_j.contains(d)) return {};
    const int only_i = static_cast<int>(std::popcount(des_i.bits() & ~des_j.bits()));
    const int both = static_cast<int>(std::popcount(des_i.bits() & des_j.bits()));
    return expand(FactoredCoeff{1, only_i, both});
}

BasisExpansion corollary_prediction(int n) {
    BasisExpansion out{Basis::kR, n, {}};
    const auto comps = compositions_of(n);
    for (const Composition& I : comps)
        for (const Composition& J : comps) out.add({I, J}, c_coefficient(I, J));
    return out;
}

std::vector<ColoredRibbonKey> theorem2_pairs(const Composition& L) {
    if (L.empty()) throw std::invalid_argument("theorem2_pairs of the empty composition");
    const int n = L.weight();
    std::vector<int> cuts{0};
    for (int part : L.parts()) cuts.push_back(cuts.back() + part);

    std::vector<ColoredRibbonKey> out;
    const auto comps = compositions_of(n);
    for (const Composition& I : comps) {
        if (!is_finer(I, L)) continue;
        const auto i_blocks = i_decomposition(I, L);
        for (const Composition& J : comps) {
            const DescentSet des_j = descent_set(J);
            bool ok = true;
            for (std::size_t k = 1; ok && k + 1 < cuts.size(); ++k) {
                bool hit = false;
                for (int d = cuts[k]; d <= cuts[k + 1] - 1; ++d) hit = hit || des_j.contains(d);
                ok = hit;
            }
            if (!ok) continue;
            const auto j_blocks = i_decomposition(J, L);
            for (std::size_t k = 0; ok && k < L.length(); ++k) ok = i_blocks[k].first() + j_blocks[k].last() > L[k];
            if (ok) out.push_back({I, J});
        }
    }
    return out;
}

BasisExpansion theorem2_prediction(const Composition& L) {
    const int n = L.weight();
    BasisExpansion out{Basis::kLambda, n, {}};
    for (const ColoredRibbonKey& key : theorem2_pairs(L))
        out.add(key, sign_of(n - static_cast<int>(key.I.length())) * QPoly::q_power(statistic_D(key.I, key.J)));
    return out;
}

Element pn_closed_R(int n) {
    if (n < 1) throw std::invalid_argument("pn_closed_R needs n >= 1");
    Element out;
    for (int k = 1; k <= n; ++k) {
        const QPoly c = pow(-q_poly(), n - k);
        const Composition bottom = concat(ones(n - k), Composition{k});
        for (const Composition& J : compositions_of(n - k)) out += c * r_IJ(bottom, concat(J, Composition{k}));
    }
    return out;
}

BasisExpansion pn_interval_prediction(int n) {
    BasisExpansion out{Basis::kLambda, n, {}};
    for (const Composition& I : compositions_of(n)) {
        const QPoly sign = sign_of(n - static_cast<int>(I.length()));
        for (int k = n - I.first() + 1; k <= n; ++k) {
            const Composition coarse = two_parts(n - k, k);
            const Composition fine = concat(ones(n - k), Composition{k});
            const QPoly c = sign * QPoly::q_power(statistic_D(I, coarse));
            for (const Composition& J : lattice_interval(coarse, fine)) out.add({I, J}, c);
        }
    }
    return out;
}

bool pn_characterization(const Composition& I, const Composition& J) {
    check_same_weight(I, J);
    return I.first() + J.last() > I.weight();
}

Composition glue_L(const Composition& I, const Composition& J) {
    check_same_weight(I, J);
    if (I.empty()) return {};
    const DescentSet des_j = descent_set(J);
    std::vector<int> blocks{I.first()};
    int cut = I.first();
    for (std::size_t k = 1; k < I.length(); ++k) {
        const int next_cut = cut + I[k];
        bool descent_in_gap = false;
        for (int d = cut; d <= next_cut - 1; ++d) descent_in_gap = descent_in_gap || des_j.contains(d);
        if (descent_in_gap) blocks.push_back(I[k]);
        else blocks.back() += I[k];
        cut = next_cut;
    }
    return Composition(std::move(blocks));
}

// ---------------------------------------------------------------------------
// Recursion

Element color_shuffle_right(const Element& a, int m, const Element& b, int l) {
    Element out;
    for_each_subset(m + l, l, [&](const std::vector<int>& second, const std::vector<int>& first) {
        out += biword_right(relabel_colors(a, first), relabel_colors(b, second));
    });
    return out;
}

Element recursion_set_splitting(const Composition& L, Execution exec) {
    if (L.length() < 2) throw std::invalid_argument("recursion needs at least two parts");
    const int n = L.weight();
    const int l = L.last();
    const Element head = p_L(drop_last(L), exec, n);
    const Element tail = p_L(Composition{l}, exec, n);
    Element out;
    for_each_subset(n, l, [&](const std::vector<int>& second, const std::vector<int>& first) {
        if (second.back() != n) return;
        out += product(relabel_colors(head, first), relabel_colors(tail, second));
    });
    return out;
}

Element recursion_biword(const Composition& L, Execution exec) {
    if (L.length() < 2) throw std::invalid_argument("recursion needs at least two parts");
    const int n = L.weight();
    const int l = L.last();
    return color_shuffle_right(p_L(drop_last(L), exec, n), n - l, p_L(Composition{l}, exec, n), l);
}

// ---------------------------------------------------------------------------

BsReport bs_check(int n, Execution exec, int max_n) {
    const Element at_one = evaluate_q(sigma_n(n, exec, max_n), 1);
    const auto perms = permutations_of(static_cast<std::size_t>(n));
    const Element identity_colorings = sum_biword_grid_serial(std::vector{Permutation::identity(static_cast<std::size_t>(n))}, perms);
    const Element diff = at_one - identity_colorings;
    BsReport report;
    for (const auto& [b, c] : diff.terms()) report.discrepancies.push_back(b);
    report.passed = report.discrepancies.empty();
    return report;
}

}  // namespace dqsym
