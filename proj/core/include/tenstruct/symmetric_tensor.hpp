#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <span>
#include <vector>

namespace tenstruct {

/// Index tuple of a symmetric tensor. Public indices are 1-based; the
/// canonical form is sorted ascending.
using MultiIndex = std::vector<int>;

/// Default absolute tolerance for entry comparisons.
inline constexpr double kDefaultEntryTol = 1e-10;

/// Largest supported order. Multiplicities m!/(k_1!...k_n!) stay exact in
/// 64-bit arithmetic up to 20!.
inline constexpr int kMaxOrder = 20;

/// Canonical multi-indices of order-m dimension-n symmetric tensors, stored
/// in colexicographic rank order, with their permutation multiplicities.
/// Layouts are cached and shared between tensors of the same shape.
class IndexLayout {
public:
    static std::shared_ptr<const IndexLayout> get(int order, int dim);

    [[nodiscard]] int order() const noexcept { return order_; }
    [[nodiscard]] int dim() const noexcept { return dim_; }
    [[nodiscard]] std::size_t size() const noexcept { return indices_.size(); }

    [[nodiscard]] const MultiIndex& index(std::size_t rank) const { return indices_[rank]; }
    [[nodiscard]] std::uint64_t multiplicity(std::size_t rank) const { return multiplicities_[rank]; }

    /// Rank of an arbitrary (unsorted) 1-based tuple. Throws input_error on a
    /// wrong length or an out-of-range index.
    [[nodiscard]] std::size_t rank_of(std::span<const int> idx) const;

    IndexLayout(int order, int dim);

private:
    [[nodiscard]] std::size_t rank_of_sorted_zero_based(std::span<const int> sorted) const;

    int order_;
    int dim_;
    std::vector<MultiIndex> indices_;
    std::vector<std::uint64_t> multiplicities_;
    // binom_[a * (order_ + 1) + b] = C(a, b)
    std::vector<std::size_t> binom_;
};

/// Dense symmetric tensor holding one value per canonical multi-index.
/// Immutable after construction.
class SymmetricTensor {
public:
    /// Zero tensor.
    SymmetricTensor(int order, int dim);

    /// Takes values in canonical (colexicographic) order.
    SymmetricTensor(int order, int dim, std::vector<double> canonical_values);

    /// Builds a tensor by evaluating `f(const MultiIndex&)` on every canonical index.
    template <class F>
    static SymmetricTensor generate(int order, int dim, F&& f) {
        SymmetricTensor t(order, dim);
        for (std::size_t r = 0; r < t.layout_->size(); ++r) {
            t.values_[r] = f(t.layout_->index(r));
        }
        return t;
    }

    [[nodiscard]] int order() const noexcept { return layout_->order(); }
    [[nodiscard]] int dim() const noexcept { return layout_->dim(); }
    [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
    [[nodiscard]] const IndexLayout& layout() const noexcept { return *layout_; }
    [[nodiscard]] std::span<const double> values() const noexcept { return values_; }
    [[nodiscard]] double value_at(std::size_t rank) const { return values_[rank]; }

    /// Entry at any permutation of a 1-based index tuple.
    [[nodiscard]] double entry(std::span<const int> idx) const;
    [[nodiscard]] double entry(std::initializer_list<int> idx) const {
        return entry(std::span<const int>(idx.begin(), idx.size()));
    }

private:
    std::shared_ptr<const IndexLayout> layout_;
    std::vector<double> values_;
};

/// The homogeneous form A x^m.
[[nodiscard]] double apply(const SymmetricTensor& t, std::span<const double> x);

/// The vector A x^{m-1}. Satisfies <contract(t, x), x> = apply(t, x).
[[nodiscard]] std::vector<double> contract(const SymmetricTensor& t, std::span<const double> x);

/// Entrywise product of two tensors of the same shape.
[[nodiscard]] SymmetricTensor hadamard(const SymmetricTensor& a, const SymmetricTensor& b);

[[nodiscard]] double max_abs_diff(const SymmetricTensor& a, const SymmetricTensor& b);

[[nodiscard]] bool approx_equal(const SymmetricTensor& a, const SymmetricTensor& b,
                                double tol = kDefaultEntryTol);

struct RankOneTerm {
    double weight = 1.0;
    std::vector<double> vector;
};

/// sum_k weight_k * vector_k^{(x) m}. Zero weights are rejected on expansion.
struct RankOneSum {
    int order = 2;
    std::vector<RankOneTerm> terms;
};

[[nodiscard]] SymmetricTensor from_rank_one_sum(const RankOneSum& sum, int dim);

struct CopositiveVerdict {
    bool violated = false;
    std::vector<double> witness;  ///< nonnegative vector with apply < -tol when violated
    double value = 0.0;
    std::size_t probes_evaluated = 0;
};

/// Deterministic structured probes of the nonnegative orthant: coordinate
/// vectors, then e_i + t e_j for every ordered pair and t in a small rational
/// ladder {1, 1/2, 2, 1/3, 3, 1/4, 4, 2/3, 3/2, 3/4, 4/3}.
[[nodiscard]] std::vector<std::vector<double>> orthant_structured_probes(int dim);

/// Searches for x >= 0 with A x^m < -tol. Structured probes run first, then
/// `trials` uniform samples of the simplex keyed by (seed, trial index).
/// Can only falsify copositivity.
[[nodiscard]] CopositiveVerdict copositive_probe(const SymmetricTensor& t, int trials,
                                                 std::uint64_t seed, double tol = 1e-10);

}  // namespace tenstruct
