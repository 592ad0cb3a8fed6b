#pragma once

// Words, permutations and compositions: the indexing objects of the algebra
// layer, together with the statistics (descents, saillance, D(I,J)) that the
// identities are phrased in.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace dqsym {

/// Longest word or permutation the fixed-capacity storage accepts.
inline constexpr std::size_t kMaxLength = 16;

/// Inline letter storage shared by Word and Permutation. Letters are in 1..255.
/// Ordering is by length first, then lexicographic.
class Letters {
public:
    Letters() = default;
    Letters(std::initializer_list<int> letters);
    explicit Letters(std::span<const int> letters);

    std::size_t size() const noexcept { return size_; }
    bool empty() const noexcept { return size_ == 0; }
    int operator[](std::size_t i) const noexcept { return data_[i]; }
    const std::uint8_t* begin() const noexcept { return data_.data(); }
    const std::uint8_t* end() const noexcept { return data_.data() + size_; }

    void push_back(int letter);
    void set(std::size_t i, int letter);
    /// 0 for the empty sequence.
    int max() const noexcept;
    std::vector<int> to_vector() const;

    friend auto operator<=>(const Letters&, const Letters&) = default;
    friend bool operator==(const Letters&, const Letters&) = default;

private:
    std::uint8_t size_ = 0;
    std::array<std::uint8_t, kMaxLength> data_{};
};

/// A word over the positive integers; repeated letters allowed.
class Word {
public:
    Word() = default;
    Word(std::initializer_list<int> letters);
    explicit Word(std::span<const int> letters);
    explicit Word(Letters letters);

    const Letters& letters() const noexcept { return letters_; }
    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }
    int operator[](std::size_t i) const noexcept { return letters_[i]; }
    auto begin() const noexcept { return letters_.begin(); }
    auto end() const noexcept { return letters_.end(); }
    int max_letter() const noexcept { return letters_.max(); }
    bool has_distinct_letters() const;

    Word concat(const Word& other) const;
    Word slice(std::size_t first, std::size_t count) const;

    friend auto operator<=>(const Word&, const Word&) = default;
    friend bool operator==(const Word&, const Word&) = default;

private:
    Letters letters_;
};

/// A permutation of 1..n in one-line notation. The empty permutation is the
/// unit of the convolution product.
class Permutation {
public:
    Permutation() = default;
    /// Throws std::invalid_argument unless the entries are a bijection of 1..n.
    Permutation(std::initializer_list<int> entries);
    explicit Permutation(std::span<const int> entries);

    static Permutation identity(std::size_t n);
    /// Skips the bijection check; for enumeration code that constructs valid
    /// permutations by design.
    static Permutation unchecked(Letters entries) noexcept;

    const Letters& letters() const noexcept { return entries_; }
    std::size_t size() const noexcept { return entries_.size(); }
    bool empty() const noexcept { return entries_.empty(); }
    int operator[](std::size_t i) const noexcept { return entries_[i]; }
    auto begin() const noexcept { return entries_.begin(); }
    auto end() const noexcept { return entries_.end(); }
    Word word() const { return Word(entries_); }

    friend auto operator<=>(const Permutation&, const Permutation&) = default;
    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    Letters entries_;
};

/// Set of descent positions in {1,..,n-1}, stored as a bitmask (bit d = position d).
class DescentSet {
public:
    DescentSet() = default;
    DescentSet(int n, std::uint32_t bits);
    static DescentSet from_positions(int n, std::span<const int> positions);

    int n() const noexcept { return n_; }
    std::uint32_t bits() const noexcept { return bits_; }
    bool contains(int d) const noexcept { return d >= 1 && d < n_ && ((bits_ >> d) & 1u) != 0; }
    std::size_t count() const noexcept;
    std::vector<int> positions() const;
    /// {1,..,n-1} minus this set.
    DescentSet complement() const noexcept;
    bool subset_of(const DescentSet& other) const noexcept { return (bits_ & ~other.bits_) == 0; }

    friend auto operator<=>(const DescentSet&, const DescentSet&) = default;
    friend bool operator==(const DescentSet&, const DescentSet&) = default;

private:
    int n_ = 0;
    std::uint32_t bits_ = 0;
};

/// An ordered list of positive parts. The empty composition has weight 0.
class Composition {
public:
    Composition() = default;
    Composition(std::initializer_list<int> parts);
    explicit Composition(std::vector<int> parts);

    const std::vector<int>& parts() const noexcept { return parts_; }
    std::size_t length() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }
    int weight() const noexcept { return weight_; }
    int operator[](std::size_t i) const { return parts_[i]; }
    int first() const { return parts_.front(); }
    int last() const { return parts_.back(); }

    /// Parts written without separators when all are < 10 ("211"), else comma separated.
    std::string to_string() const;

    friend auto operator<=>(const Composition&, const Composition&) = default;
    friend bool operator==(const Composition&, const Composition&) = default;

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

// ---------------------------------------------------------------------------
// Words and permutations

Permutation standardize(const Word& w);

/// All gamma with gamma = u.v, std(u) = alpha, std(v) = beta. Sorted, duplicate free.
std::vector<Permutation> convolution(const Permutation& alpha, const Permutation& beta);

/// uv when max(v) <= max(u), otherwise nullopt. Both words must be nonempty.
std::optional<Word> word_left_dend(const Word& u, const Word& v);
/// uv when max(v) >= max(u), otherwise nullopt. Both words must be nonempty.
std::optional<Word> word_right_dend(const Word& u, const Word& v);

/// Lengths of the maximal increasing runs.
Composition descent_composition(const Permutation& sigma);

/// Factorization into initially dominated words with weakly increasing first
/// letters. Throws std::invalid_argument on repeated letters.
std::vector<Word> initially_dominated_factorization(const Word& w);

/// Lengths of the initially dominated factors.
Composition saillance_composition(const Permutation& sigma);

// ---------------------------------------------------------------------------
// Compositions

DescentSet descent_set(const Composition& I);
/// {d - 1 : d in Des(I)}; may contain 0.
std::vector<int> descent_set_minus(const Composition& I);
Composition composition_from_descents(const DescentSet& des);

Composition mirror(const Composition& I);
/// Ribbon conjugate: descent set {1..n-1} minus {n - d : d in Des(I)}.
Composition conjugate(const Composition& I);

/// True when Des(I) contains Des(L), i.e. I refines L. Weights must agree.
bool is_finer(const Composition& I, const Composition& L);

/// Every J of the same weight with Des(J) containing Des(I), in order-index order.
std::vector<Composition> finer_refinements(const Composition& I);

Composition concat(const Composition& I, const Composition& J);
/// (i_1,..,i_r + j_1,..,j_s). Throws on an empty operand.
Composition near_concat(const Composition& I, const Composition& J);

/// Cut J at the cumulative positions of I; a cut inside a part splits it.
std::vector<Composition> i_decomposition(const Composition& J, const Composition& I);

/// n minus the sum of the last parts of the blocks of J cut along I.
int statistic_D(const Composition& I, const Composition& J);

/// All J with Des(coarser) within Des(J) within Des(finer). The endpoints may be
/// given in either order; throws std::invalid_argument if they are incomparable.
std::vector<Composition> lattice_interval(const Composition& H, const Composition& K);

/// Sum over d in Des(I) of 2^(n-1-d). Ascending index is the row/column order
/// of the printed coefficient matrices.
std::uint64_t composition_order_index(const Composition& I);

/// All compositions of n ordered by composition_order_index. n = 0 yields {()}.
std::vector<Composition> compositions_of(int n);

// ---------------------------------------------------------------------------
// Enumeration

/// All permutations of 1..n in lexicographic order.
std::vector<Permutation> permutations_of(std::size_t n);
std::vector<Permutation> permutations_with_saillance(const Composition& J);
std::vector<Permutation> permutations_with_descents(const Composition& I);

/// Order-preserving relabelling of a permutation-valued word onto an alphabet.
Word relabel(const Word& w, std::span<const int> alphabet);

std::uint64_t binomial(int n, int k);

}  // namespace dqsym
