#include "dqsym/combinatorics.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace dqsym {

namespace {

void check_letter(int letter) {
    if (letter < 1 || letter > 255)
        throw std::invalid_argument("letter out of range 1..255: " + std::to_string(letter));
}

bool is_bijection(const Letters& entries) {
    std::array<bool, kMaxLength + 1> seen{};
    for (int x : entries) {
        if (x < 1 || static_cast<std::size_t>(x) > entries.size() || seen[x]) return false;
        seen[x] = true;
    }
    return true;
}

}  // namespace

// ---------------------------------------------------------------------------
// Letters / Word / Permutation

Letters::Letters(std::initializer_list<int> letters)
    : Letters(std::span<const int>(letters.begin(), letters.size())) {}

Letters::Letters(std::span<const int> letters) {
    if (letters.size() > kMaxLength) throw std::invalid_argument("word longer than kMaxLength");
    for (int x : letters) push_back(x);
}

void Letters::push_back(int letter) {
    if (size_ == kMaxLength) throw std::length_error("word longer than kMaxLength");
    check_letter(letter);
    data_[size_++] = static_cast<std::uint8_t>(letter);
}

void Letters::set(std::size_t i, int letter) {
    check_letter(letter);
    data_[i] = static_cast<std::uint8_t>(letter);
}

int Letters::max() const noexcept {
    int m = 0;
    for (int x : *this) m = std::max(m, x);
    return m;
}

std::vector<int> Letters::to_vector() const { return {begin(), end()}; }

Word::Word(std::initializer_list<int> letters) : letters_(letters) {}
Word::Word(std::span<const int> letters) : letters_(letters) {}
Word::Word(Letters letters) : letters_(letters) {}

bool Word::has_distinct_letters() const {
    std::array<bool, 256> seen{};
    for (int x : letters_) {
        if (seen[x]) return false;
        seen[x] = true;
    }
    return true;
}

Word Word::concat(const Word& other) const {
    Letters out = letters_;
    for (int x : other) out.push_back(x);
    return Word(out);
}

Word Word::slice(std::size_t first, std::size_t count) const {
    Letters out;
    for (std::size_t i = first; i < first + count; ++i) out.push_back(letters_[i]);
    return Word(out);
}

Permutation::Permutation(std::initializer_list<int> entries) : entries_(entries) {
    if (!is_bijection(entries_)) throw std::invalid_argument("not a permutation of 1..n");
}

Permutation::Permutation(std::span<const int> entries) : entries_(entries) {
    if (!is_bijection(entries_)) throw std::invalid_argument("not a permutation of 1..n");
}

Permutation Permutation::identity(std::size_t n) {
    Letters l;
    for (std::size_t i = 1; i <= n; ++i) l.push_back(static_cast<int>(i));
    return unchecked(l);
}

Permutation Permutation::unchecked(Letters entries) noexcept {
    Permutation p;
    p.entries_ = entries;
    return p;
}

// ---------------------------------------------------------------------------
// DescentSet / Composition

DescentSet::DescentSet(int n, std::uint32_t bits) : n_(n), bits_(bits) {
    const std::uint32_t allowed = n <= 1 ? 0u : (((1u << n) - 1u) & ~1u);
    if (n < 0 || (bits & ~allowed) != 0) throw std::invalid_argument("descent outside 1..n-1");
}

DescentSet DescentSet::from_positions(int n, std::span<const int> positions) {
    std::uint32_t bits = 0;
    for (int d : positions) {
        if (d < 1 || d >= n) throw std::invalid_argument("descent outside 1..n-1");
        bits |= 1u << d;
    }
    return {n, bits};
}

std::size_t DescentSet::count() const noexcept { return static_cast<std::size_t>(std::popcount(bits_)); }

std::vector<int> DescentSet::positions() const {
    std::vector<int> out;
    for (int d = 1; d < n_; ++d)
        if (contains(d)) out.push_back(d);
    return out;
}

DescentSet DescentSet::complement() const noexcept {
    const std::uint32_t all = n_ <= 1 ? 0u : (((1u << n_) - 1u) & ~1u);
    DescentSet c;
    c.n_ = n_;
    c.bits_ = all & ~bits_;
    return c;
}

Composition::Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_) {
        if (p < 1) throw std::invalid_argument("composition parts must be positive");
        weight_ += p;
    }
    if (weight_ > 31) throw std::invalid_argument("composition weight above 31");
}

std::string Composition::to_string() const {
    const bool small = std::all_of(parts_.begin(), parts_.end(), [](int p) { return p < 10; });
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (!small && i > 0) s += ',';
        s += std::to_string(parts_[i]);
    }
    return s;
}

// ---------------------------------------------------------------------------
// Word operations

Permutation standardize(const Word& w) {
    std::vector<std::size_t> order(w.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return w[a] < w[b]; });
    Letters out;
    for (std::size_t i = 0; i < w.size(); ++i) out.push_back(1);
    for (std::size_t rank = 0; rank < order.size(); ++rank) out.set(order[rank], static_cast<int>(rank + 1));
    return Permutation::unchecked(out);
}

std::vector<Permutation> convolution(const Permutation& alpha, const Permutation& beta) {
    const std::size_t k = alpha.size();
    const std::size_t n = k + beta.size();
    if (n > kMaxLength) throw std::invalid_argument("convolution result longer than kMaxLength");
    std::vector<Permutation> out;
    out.reserve(binomial(static_cast<int>(n), static_cast<int>(k)));
    // Choose the value set of the prefix; alpha and beta fix the arrangement.
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
    std::array<int, kMaxLength> prefix_vals{}, suffix_vals{};
    do {
        std::size_t a = 0, b = 0;
        for (std::size_t v = 0; v < n; ++v) {
            if (pick[v]) prefix_vals[a++] = static_cast<int>(v + 1);
            else suffix_vals[b++] = static_cast<int>(v + 1);
        }
        Letters g;
        for (int x : alpha) g.push_back(prefix_vals[x - 1]);
        for (int x : beta) g.push_back(suffix_vals[x - 1]);
        out.push_back(Permutation::unchecked(g));
    } while (std::prev_permutation(pick.begin(), pick.end()));
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<Word> word_left_dend(const Word& u, const Word& v) {
    if (u.empty() || v.empty()) throw std::invalid_argument("word dendriform product of an empty word");
    if (v.max_letter() <= u.max_letter()) return u.concat(v);
    return std::nullopt;
}

std::optional<Word> word_right_dend(const Word& u, const Word& v) {
    if (u.empty() || v.empty()) throw std::invalid_argument("word dendriform product of an empty word");
    if (v.max_letter() >= u.max_letter()) return u.concat(v);
    return std::nullopt;
}

Composition descent_composition(const Permutation& sigma) {
    std::vector<int> parts;
    int run = 0;
    for (std::size_t i = 0; i < sigma.size(); ++i) {
        if (i > 0 && sigma[i] < sigma[i - 1]) {
            parts.push_back(run);
            run = 0;
        }
        ++run;
    }
    if (run > 0) parts.push_back(run);
    return Composition(std::move(parts));
}

std::vector<Word> initially_dominated_factorization(const Word& w) {
    if (!w.has_distinct_letters())
        throw std::invalid_argument("initially dominated factorization needs distinct letters");
    std::vector<Word> factors;
    Letters current;
    for (int x : w) {
        if (!current.empty() && x < current[0]) {
            current.push_back(x);
            continue;
        }
        if (!current.empty()) factors.emplace_back(current);
        current = Letters{x};
    }
    if (!current.empty()) factors.emplace_back(current);
    return factors;
}

Composition saillance_composition(const Permutation& sigma) {
    std::vector<int> parts;
    int leader = 0;
    for (int x : sigma) {
        if (parts.empty() || x > leader) {
            parts.push_back(1);
            leader = x;
        } else {
            ++parts.back();
        }
    }
    return Composition(std::move(parts));
}

// ---------------------------------------------------------------------------
// Compositions

DescentSet descent_set(const Composition& I) {
    std::uint32_t bits = 0;
    int s = 0;
    for (std::size_t i = 0; i + 1 < I.length(); ++i) {
        s += I[i];
        bits |= 1u << s;
    }
    return {I.weight(), bits};
}

std::vector<int> descent_set_minus(const Composition& I) {
    std::vector<int> out;
    for (int d : descent_set(I).positions()) out.push_back(d - 1);
    return out;
}

Composition composition_from_descents(const DescentSet& des) {
    std::vector<int> parts;
    int prev = 0;
    for (int d : des.positions()) {
        parts.push_back(d - prev);
        prev = d;
    }
    if (des.n() > 0) parts.push_back(des.n() - prev);
    return Composition(std::move(parts));
}

Composition mirror(const Composition& I) {
    std::vector<int> parts(I.parts().rbegin(), I.parts().rend());
    return Composition(std::move(parts));
}

Composition conjugate(const Composition& I) {
    const int n = I.weight();
    std::uint32_t reflected = 0;
    for (int d : descent_set(I).positions()) reflected |= 1u << (n - d);
    return composition_from_descents(DescentSet(n, reflected).complement());
}

bool is_finer(const Composition& I, const Composition& L) {
    if (I.weight() != L.weight()) throw std::invalid_argument("refinement between different weights");
    return descent_set(L).subset_of(descent_set(I));
}

std::vector<Composition> finer_refinements(const Composition& I) {
    const std::uint32_t base = descent_set(I).bits();
    std::vector<Composition> out;
    for (const Composition& J : compositions_of(I.weight()))
        if ((descent_set(J).bits() & base) == base) out.push_back(J);
    return out;
}

Composition concat(const Composition& I, const Composition& J) {
    std::vector<int> parts = I.parts();
    parts.insert(parts.end(), J.parts().begin(), J.parts().end());
    return Composition(std::move(parts));
}

Composition near_concat(const Composition& I, const Composition& J) {
    if (I.empty() || J.empty()) throw std::invalid_argument("near_concat with an empty composition");
    std::vector<int> parts = I.parts();
    parts.back() += J.first();
    parts.insert(parts.end(), J.parts().begin() + 1, J.parts().end());
    return Composition(std::move(parts));
}

std::vector<Composition> i_decomposition(const Composition& J, const Composition& I) {
    if (I.weight() != J.weight()) throw std::invalid_argument("i_decomposition: weights differ");
    const DescentSet des = descent_set(J);
    std::vector<Composition> blocks;
    int start = 0;
    for (int part : I.parts()) {
        const int end = start + part;
        std::vector<int> inner;
        for (int d = start + 1; d < end; ++d)
            if (des.contains(d)) inner.push_back(d - start);
        blocks.push_back(composition_from_descents(DescentSet::from_positions(part, inner)));
        start = end;
    }
    return blocks;
}

int statistic_D(const Composition& I, const Composition& J) {
    int d = I.weight();
    for (const Composition& block : i_decomposition(J, I)) d -= block.last();
    return d;
}

std::vector<Composition> lattice_interval(const Composition& H, const Composition& K) {
    if (H.weight() != K.weight()) throw std::invalid_argument("lattice_interval: weights differ");
    DescentSet lo = descent_set(H), hi = descent_set(K);
    if (!lo.subset_of(hi)) std::swap(lo, hi);
    if (!lo.subset_of(hi)) throw std::invalid_argument("lattice_interval: incomparable endpoints");
    std::vector<Composition> out;
    for (const Composition& J : compositions_of(H.weight())) {
        const DescentSet d = descent_set(J);
        if (lo.subset_of(d) && d.subset_of(hi)) out.push_back(J);
    }
    return out;
}

std::uint64_t composition_order_index(const Composition& I) {
    const int n = I.weight();
    std::uint64_t idx = 0;
    for (int d : descent_set(I).positions()) idx |= std::uint64_t{1} << (n - 1 - d);
    return idx;
}

std::vector<Composition> compositions_of(int n) {
    if (n < 0) throw std::invalid_argument("compositions_of: negative weight");
    if (n == 0) return {Composition{}};
    std::vector<Composition> out;
    const std::uint32_t count = 1u << (n - 1);
    out.reserve(count);
    for (std::uint32_t idx = 0; idx < count; ++idx) {
        std::uint32_t bits = 0;
        for (int d = 1; d < n; ++d)
            if ((idx >> (n - 1 - d)) & 1u) bits |= 1u << d;
        out.push_back(composition_from_descents(DescentSet(n, bits)));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Enumeration

std::vector<Permutation> permutations_of(std::size_t n) {
    if (n > kMaxLength) throw std::invalid_argument("permutations_of: n too large");
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation::unchecked(Letters(std::span<const int>(v))));
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

std::vector<Permutation> permutations_with_saillance(const Composition& J) {
    std::vector<Permutation> out;
    for (const Permutation& p : permutations_of(static_cast<std::size_t>(J.weight())))
        if (saillance_composition(p) == J) out.push_back(p);
    return out;
}

std::vector<Permutation> permutations_with_descents(const Composition& I) {
    std::vector<Permutation> out;
    for (const Permutation& p : permutations_of(static_cast<std::size_t>(I.weight())))
        if (descent_composition(p) == I) out.push_back(p);
    return out;
}

Word relabel(const Word& w, std::span<const int> alphabet) {
    Letters out;
    for (int x : w) {
        if (x < 1 || static_cast<std::size_t>(x) > alphabet.size())
            throw std::invalid_argument("relabel: letter outside alphabet");
        out.push_back(alphabet[static_cast<std::size_t>(x - 1)]);
    }
    return Word(out);
}

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return r;
}

}  // namespace dqsym
