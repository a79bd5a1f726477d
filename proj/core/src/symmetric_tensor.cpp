#include "tenstruct/symmetric_tensor.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <string>
#include <utility>

#include "tenstruct/error.hpp"
#include "tenstruct/sampling.hpp"

namespace tenstruct {

namespace {

constexpr long double kMaxLayoutSize = 2.0e7L;

std::uint64_t factorial(int k) {
    std::uint64_t f = 1;
    for (int i = 2; i <= k; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

std::string format_index(std::span<const int> idx) {
    std::string s = "(";
    for (std::size_t j = 0; j < idx.size(); ++j) {
        if (j) s += ",";
        s += std::to_string(idx[j]);
    }
    return s + ")";
}

void require_same_shape(const SymmetricTensor& a, const SymmetricTensor& b, const char* op) {
    if (a.order() != b.order() || a.dim() != b.dim()) {
        throw input_error(std::string(op) + ": shape mismatch (order " + std::to_string(a.order()) +
                          " dim " + std::to_string(a.dim()) + " vs order " +
                          std::to_string(b.order()) + " dim " + std::to_string(b.dim()) + ")");
    }
}

void require_dim(const SymmetricTensor& t, std::size_t len, const char* op) {
    if (len != static_cast<std::size_t>(t.dim())) {
        throw input_error(std::string(op) + ": vector length " + std::to_string(len) +
                          " does not match tensor dimension " + std::to_string(t.dim()));
    }
}

}  // namespace

IndexLayout::IndexLayout(int order, int dim) : order_(order), dim_(dim) {
    if (order < 2 || order > kMaxOrder) {
        throw input_error("tensor order must lie in [2, " + std::to_string(kMaxOrder) + "], got " +
                          std::to_string(order));
    }
    if (dim < 1) {
        throw input_error("tensor dimension must be >= 1, got " + std::to_string(dim));
    }
    long double count = 1.0L;
    for (int j = 1; j <= order; ++j) count = count * (dim - 1 + j) / j;
    if (count > kMaxLayoutSize) {
        throw input_error("symmetric tensor of order " + std::to_string(order) + " and dimension " +
                          std::to_string(dim) + " is too large for dense storage");
    }

    const int rows = dim + order;
    binom_.assign(static_cast<std::size_t>(rows) * (order + 1), 0);
    for (int a = 0; a < rows; ++a) {
        binom_[a * (order + 1)] = 1;
        for (int b = 1; b <= std::min(a, order); ++b) {
            const std::size_t left = binom_[(a - 1) * (order + 1) + b - 1];
            const std::size_t up = b <= a - 1 ? binom_[(a - 1) * (order + 1) + b] : 0;
            binom_[a * (order + 1) + b] = left + up;
        }
    }

    const auto total = static_cast<std::size_t>(std::llround(static_cast<double>(count)));
    indices_.resize(total);
    multiplicities_.resize(total);

    const std::uint64_t m_fact = factorial(order);
    std::vector<int> zero_based(static_cast<std::size_t>(order), 0);
    std::vector<int> counts(static_cast<std::size_t>(dim), 0);
    while (true) {
        const std::size_t r = rank_of_sorted_zero_based(zero_based);
        MultiIndex one_based(zero_based.size());
        std::fill(counts.begin(), counts.end(), 0);
        for (std::size_t j = 0; j < zero_based.size(); ++j) {
            one_based[j] = zero_based[j] + 1;
            ++counts[zero_based[j]];
        }
        std::uint64_t denom = 1;
        for (int c : counts) denom *= factorial(c);
        indices_[r] = std::move(one_based);
        multiplicities_[r] = m_fact / denom;

        // Next non-decreasing tuple.
        int pos = order - 1;
        while (pos >= 0 && zero_based[pos] == dim - 1) --pos;
        if (pos < 0) break;
        const int next = zero_based[pos] + 1;
        for (int j = pos; j < order; ++j) zero_based[j] = next;
    }
}

std::shared_ptr<const IndexLayout> IndexLayout::get(int order, int dim) {
    static std::mutex mutex;
    static std::map<std::pair<int, int>, std::shared_ptr<const IndexLayout>> cache;
    const std::lock_guard<std::mutex> lock(mutex);
    auto& slot = cache[{order, dim}];
    if (!slot) slot = std::make_shared<const IndexLayout>(order, dim);
    return slot;
}

std::size_t IndexLayout::rank_of_sorted_zero_based(std::span<const int> sorted) const {
    // Colex rank: b_j = a_j + j is strictly increasing, rank = sum_j C(b_j, j + 1).
    std::size_t r = 0;
    for (std::size_t j = 0; j < sorted.size(); ++j) {
        const std::size_t b = static_cast<std::size_t>(sorted[j]) + j;
        r += binom_[b * (order_ + 1) + j + 1];
    }
    return r;
}

std::size_t IndexLayout::rank_of(std::span<const int> idx) const {
    if (idx.size() != static_cast<std::size_t>(order_)) {
        throw input_error("index tuple has length " + std::to_string(idx.size()) + ", expected order " +
                          std::to_string(order_));
    }
    int buf[kMaxOrder];
    for (std::size_t j = 0; j < idx.size(); ++j) {
        if (idx[j] < 1 || idx[j] > dim_) {
            throw input_error("index " + format_index(idx) + " out of range [1, " +
                              std::to_string(dim_) + "]");
        }
        buf[j] = idx[j] - 1;
    }
    std::sort(buf, buf + idx.size());
    return rank_of_sorted_zero_based(std::span<const int>(buf, idx.size()));
}

SymmetricTensor::SymmetricTensor(int order, int dim)
    : layout_(IndexLayout::get(order, dim)), values_(layout_->size(), 0.0) {}

SymmetricTensor::SymmetricTensor(int order, int dim, std::vector<double> canonical_values)
    : layout_(IndexLayout::get(order, dim)), values_(std::move(canonical_values)) {
    if (values_.size() != layout_->size()) {
        throw input_error("expected " + std::to_string(layout_->size()) + " canonical values, got " +
                          std::to_string(values_.size()));
    }
}

double SymmetricTensor::entry(std::span<const int> idx) const {
    return values_[layout_->rank_of(idx)];
}

double apply(const SymmetricTensor& t, std::span<const double> x) {
    require_dim(t, x.size(), "apply");
    const IndexLayout& layout = t.layout();
    long double sum = 0.0L;
    for (std::size_t r = 0; r < layout.size(); ++r) {
        const double a = t.value_at(r);
        if (a == 0.0) continue;
        long double prod = static_cast<long double>(layout.multiplicity(r)) * a;
        for (int i : layout.index(r)) prod *= x[i - 1];
        sum += prod;
    }
    return static_cast<double>(sum);
}

std::vector<double> contract(const SymmetricTensor& t, std::span<const double> x) {
    require_dim(t, x.size(), "contract");
    const IndexLayout& layout = t.layout();
    const int m = t.order();
    std::vector<long double> acc(x.size(), 0.0L);
    for (std::size_t r = 0; r < layout.size(); ++r) {
        const double a = t.value_at(r);
        if (a == 0.0) continue;
        const MultiIndex& idx = layout.index(r);
        const long double base = static_cast<long double>(layout.multiplicity(r)) * a / m;
        // Each distinct index i with count k contributes
        // a * (m-1)!/(...(k-1)!...) * prod(x over idx minus one copy of i).
        std::size_t j = 0;
        while (j < idx.size()) {
            const int i = idx[j];
            std::size_t k = j;
            while (k < idx.size() && idx[k] == i) ++k;
            const auto count = static_cast<long double>(k - j);
            long double prod = base * count;
            for (std::size_t q = 0; q < idx.size(); ++q) {
                if (q == j) continue;
                prod *= x[idx[q] - 1];
            }
            acc[i - 1] += prod;
            j = k;
        }
    }
    return {acc.begin(), acc.end()};
}

SymmetricTensor hadamard(const SymmetricTensor& a, const SymmetricTensor& b) {
    require_same_shape(a, b, "hadamard");
    std::vector<double> v(a.size());
    for (std::size_t r = 0; r < v.size(); ++r) v[r] = a.value_at(r) * b.value_at(r);
    return {a.order(), a.dim(), std::move(v)};
}

double max_abs_diff(const SymmetricTensor& a, const SymmetricTensor& b) {
    require_same_shape(a, b, "max_abs_diff");
    double worst = 0.0;
    for (std::size_t r = 0; r < a.size(); ++r) {
        worst = std::max(worst, std::abs(a.value_at(r) - b.value_at(r)));
    }
    return worst;
}

bool approx_equal(const SymmetricTensor& a, const SymmetricTensor& b, double tol) {
    return max_abs_diff(a, b) <= tol;
}

SymmetricTensor from_rank_one_sum(const RankOneSum& sum, int dim) {
    for (std::size_t k = 0; k < sum.terms.size(); ++k) {
        const RankOneTerm& term = sum.terms[k];
        if (term.vector.size() != static_cast<std::size_t>(dim)) {
            throw input_error("rank-one term " + std::to_string(k) + " has length " +
                              std::to_string(term.vector.size()) + ", expected " + std::to_string(dim));
        }
        if (term.weight == 0.0) {
            throw input_error("rank-one term " + std::to_string(k) + " has zero weight");
        }
    }
    return SymmetricTensor::generate(sum.order, dim, [&](const MultiIndex& idx) {
        long double total = 0.0L;
        for (const RankOneTerm& term : sum.terms) {
            long double prod = term.weight;
            for (int i : idx) prod *= term.vector[i - 1];
            total += prod;
        }
        return static_cast<double>(total);
    });
}

std::vector<std::vector<double>> orthant_structured_probes(int dim) {
    static constexpr double kLadder[] = {1.0,       0.5,       2.0, 1.0 / 3.0, 3.0, 0.25,
                                         4.0,       2.0 / 3.0, 1.5, 0.75,      4.0 / 3.0};
    std::vector<std::vector<double>> probes;
    for (int i = 0; i < dim; ++i) {
        std::vector<double> e(dim, 0.0);
        e[i] = 1.0;
        probes.push_back(std::move(e));
    }
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            if (i == j) continue;
            for (double t : kLadder) {
                // e_i + e_j appears once, from the ordered pair with i < j.
                if (t == 1.0 && i > j) continue;
                std::vector<double> x(dim, 0.0);
                x[i] = 1.0;
                x[j] = t;
                probes.push_back(std::move(x));
            }
        }
    }
    return probes;
}

CopositiveVerdict copositive_probe(const SymmetricTensor& t, int trials, std::uint64_t seed,
                                   double tol) {
    if (trials < 1) throw input_error("copositive_probe: trials must be >= 1");
    CopositiveVerdict verdict;
    auto check = [&](std::vector<double> x) {
        ++verdict.probes_evaluated;
        const double value = tenstruct::apply(t, x);
        if (value < -tol) {
            verdict.violated = true;
            verdict.witness = std::move(x);
            verdict.value = value;
            return true;
        }
        return false;
    };
    for (auto& x : orthant_structured_probes(t.dim())) {
        if (check(std::move(x))) return verdict;
    }
    for (int k = 0; k < trials; ++k) {
        SplitMix64 rng = trial_engine(seed, streams::kCopositive, static_cast<std::uint64_t>(k));
        if (check(simplex_sample(rng, t.dim()))) return verdict;
    }
    return verdict;
}

}  // namespace tenstruct
