#include "tenstruct/hankel.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "tenstruct/error.hpp"

namespace tenstruct {

namespace {

std::string num(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}


constexpr double kRecurrenceTol = 1e-10;
constexpr double kCompositionTol = 1e-8;
constexpr double kDropAlpha = 1e-12;

using MatrixXld = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
using VectorXld = Eigen::Matrix<long double, Eigen::Dynamic, 1>;

int generating_length(int order, int dim) { return (dim - 1) * order + 1; }

std::vector<double> vandermonde_vector(double mu, int n) {
    std::vector<double> u(static_cast<std::size_t>(n));
    double p = 1.0;
    for (int i = 0; i < n; ++i) {
        u[i] = p;
        p *= mu;
    }
    return u;
}

void require_distinct(std::vector<double> nodes, const char* what) {
    std::sort(nodes.begin(), nodes.end());
    if (std::adjacent_find(nodes.begin(), nodes.end()) != nodes.end()) {
        throw input_error(std::string(what) + ": nodes must be pairwise distinct");
    }
}

// Square Vandermonde solve sum_k alpha_k mu_k^j = v_j in extended precision
// with one step of iterative refinement.
std::vector<double> solve_square_vandermonde(const std::vector<double>& nodes, const std::vector<double>& v) {
    const auto n = static_cast<Eigen::Index>(nodes.size());
    MatrixXld V(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
        long double p = 1.0L;
        for (Eigen::Index j = 0; j < n; ++j) {
            V(j, k) = p;
            p *= nodes[k];
        }
    }
    VectorXld rhs(n);
    for (Eigen::Index j = 0; j < n; ++j) rhs(j) = v[j];
    Eigen::FullPivLU<MatrixXld> lu(V);
    VectorXld alpha = lu.solve(rhs);
    const VectorXld residual = rhs - V * alpha;
    alpha += lu.solve(residual);
    return {alpha.data(), alpha.data() + n};
}

}  // namespace

double HankelSpec::entry(std::span<const int> idx) const {
    if (idx.size() != static_cast<std::size_t>(order_)) {
        throw input_error("index tuple length " + std::to_string(idx.size()) + " does not match order " +
                          std::to_string(order_));
    }
    int sum = 0;
    for (int i : idx) {
        if (i < 1 || i > dim_) throw input_error("index " + std::to_string(i) + " out of range");
        sum += i;
    }
    return v_[sum - order_];
}

HankelSpec build_hankel(std::vector<double> v, int order, int dim) {
    if (order < 2 || dim < 2) {
        throw input_error("hankel: order and dimension must be >= 2, got m = " + std::to_string(order) +
                          ", n = " + std::to_string(dim));
    }
    const int expected = generating_length(order, dim);
    if (static_cast<int>(v.size()) != expected) {
        throw input_error("hankel: generating vector has length " + std::to_string(v.size()) +
                          ", expected (n-1)m+1 = " + std::to_string(expected));
    }
    return HankelSpec(std::move(v), order, dim);
}

VandermondeDecomposition::VandermondeDecomposition(std::vector<VandermondeTerm> terms, int dim)
    : terms_(std::move(terms)), dim_(dim) {
    if (dim < 1) throw input_error("vandermonde decomposition: dimension must be >= 1");
    std::vector<double> nodes;
    for (const auto& t : terms_) {
        if (t.alpha == 0.0) throw input_error("vandermonde decomposition: zero coefficient");
        nodes.push_back(t.mu);
    }
    require_distinct(std::move(nodes), "vandermonde decomposition");
}

RankOneSum VandermondeDecomposition::as_rank_one_sum(int order) const {
    RankOneSum sum;
    sum.order = order;
    for (const auto& t : terms_) sum.terms.push_back({t.alpha, vandermonde_vector(t.mu, dim_)});
    return sum;
}

double PlaneForm::eval(double y1, double y2) const {
    long double acc = 0.0L;
    for (int k = 0; k <= degree; ++k) {
        acc += static_cast<long double>(coeffs[k]) * std::pow(static_cast<long double>(y1), degree - k) *
               std::pow(static_cast<long double>(y2), k);
    }
    return static_cast<double>(acc);
}

namespace hankel {

SymmetricTensor dense(const HankelSpec& spec) {
    return SymmetricTensor::generate(spec.order(), spec.dim(), [&](const MultiIndex& idx) {
        int sum = 0;
        for (int i : idx) sum += i;
        return spec.v()[sum - spec.order()];
    });
}

std::uint64_t s_count(int k, int m, int n) {
    if (m < 1 || n < 1) throw input_error("s_count: m and n must be positive");
    if (k < 0 || k > (n - 1) * m) {
        throw input_error("s_count: k = " + std::to_string(k) + " outside [0, " +
                          std::to_string((n - 1) * m) + "]");
    }
    // ways[s] = number of tuples of the parts placed so far with shifted sum s.
    std::vector<std::uint64_t> ways(static_cast<std::size_t>(k) + 1, 0);
    ways[0] = 1;
    for (int part = 0; part < m; ++part) {
        std::vector<std::uint64_t> next(ways.size(), 0);
        for (int s = 0; s <= k; ++s) {
            if (!ways[s]) continue;
            for (int step = 0; step < n && s + step <= k; ++step) next[s + step] += ways[s];
        }
        ways = std::move(next);
    }
    return ways[k];
}

PlaneForm plane_form(const HankelSpec& spec) {
    const int m = spec.order();
    const int n = spec.dim();
    PlaneForm form;
    form.degree = (n - 1) * m;
    if (form.degree > 62) throw input_error("plane_form: degree too large for exact binomials");
    form.coeffs.resize(static_cast<std::size_t>(form.degree) + 1);
    form.binomials.resize(form.coeffs.size());
    std::uint64_t binom = 1;
    for (int k = 0; k <= form.degree; ++k) {
        form.coeffs[k] = static_cast<double>(s_count(k, m, n)) * spec.v()[k];
        form.binomials[k] = binom;
        // C(d, k+1) = C(d, k) (d - k) / (k + 1), exact because C(d,k)(d-k) = C(d,k+1)(k+1).
        binom = binom / static_cast<std::uint64_t>(k + 1) * static_cast<std::uint64_t>(form.degree - k) +
                binom % static_cast<std::uint64_t>(k + 1) * static_cast<std::uint64_t>(form.degree - k) /
                    static_cast<std::uint64_t>(k + 1);
    }
    return form;
}

SymmetricTensor plane_tensor(const PlaneForm& form) {
    return SymmetricTensor::generate(form.degree, 2, [&](const MultiIndex& idx) {
        const auto twos = static_cast<int>(std::count(idx.begin(), idx.end(), 2));
        return form.plane_entry(twos);
    });
}

VpsdVerdict is_vandermonde_psd(const HankelSpec& spec) {
    if (spec.order() % 2 != 0) {
        throw unsupported_query_error("Vandermonde positive semi-definiteness needs even order, got m = " +
                                      std::to_string(spec.order()));
    }
    VpsdVerdict verdict;
    verdict.polynomial = plane_form(spec).vandermonde_poly();
    const NonnegVerdict nn = nonneg_on_reals(verdict.polynomial);
    verdict.vpsd = nn.nonnegative;
    verdict.mu = nn.mu;
    verdict.value = nn.value;
    return verdict;
}

HankelSpec vandermonde_compose(const VandermondeDecomposition& dec, int order) {
    const int len = generating_length(order, dec.dim());
    std::vector<long double> acc(static_cast<std::size_t>(len), 0.0L);
    for (const auto& t : dec.terms()) {
        long double p = 1.0L;
        for (int j = 0; j < len; ++j) {
            acc[j] += t.alpha * p;
            p *= t.mu;
        }
    }
    return build_hankel({acc.begin(), acc.end()}, order, dec.dim());
}

std::vector<double> default_fixed_nodes(int count) {
    std::vector<double> nodes;
    nodes.reserve(static_cast<std::size_t>(count));
    for (int k = 0; static_cast<int>(nodes.size()) < count; ++k) {
        nodes.push_back(k);
        if (k != 0 && static_cast<int>(nodes.size()) < count) nodes.push_back(-k);
    }
    return nodes;
}

double composition_residual(const HankelSpec& spec, const VandermondeDecomposition& dec) {
    const HankelSpec composed = vandermonde_compose(dec, spec.order());
    double worst = 0.0;
    for (std::size_t j = 0; j < spec.v().size(); ++j) {
        worst = std::max(worst, std::abs(spec.v()[j] - composed.v()[j]));
    }
    return worst;
}

VandermondeDecomposition vandermonde_decompose_fixed(const HankelSpec& spec, const std::vector<double>& nodes) {
    const auto len = spec.v().size();
    if (nodes.size() != len) {
        throw input_error("fixed-nodes decomposition needs exactly (n-1)m+1 = " + std::to_string(len) +
                          " nodes, got " + std::to_string(nodes.size()));
    }
    require_distinct(nodes, "fixed-nodes decomposition");
    const std::vector<double> alpha = solve_square_vandermonde(nodes, spec.v());
    std::vector<VandermondeTerm> terms;
    for (std::size_t k = 0; k < len; ++k) {
        if (std::abs(alpha[k]) >= kDropAlpha) terms.push_back({alpha[k], nodes[k]});
    }
    return {std::move(terms), spec.dim()};
}

VandermondeDecomposition vandermonde_decompose_minimal(const HankelSpec& spec) {
    const std::vector<double>& v = spec.v();
    const auto len = static_cast<int>(v.size());
    double scale = 0.0;
    for (double x : v) scale = std::max(scale, std::abs(x));
    if (scale == 0.0) return {{}, spec.dim()};

    for (int r = 1; r <= len / 2; ++r) {
        // Recurrence v_{i+r} + a_{r-1} v_{i+r-1} + ... + a_0 v_i = 0 for i = 0..len-r-1.
        const int rows = len - r;
        Eigen::MatrixXd M(rows, r);
        Eigen::VectorXd rhs(rows);
        for (int i = 0; i < rows; ++i) {
            for (int j = 0; j < r; ++j) M(i, j) = v[i + j];
            rhs(i) = -v[i + r];
        }
        const Eigen::VectorXd a = M.colPivHouseholderQr().solve(rhs);
        if ((M * a - rhs).lpNorm<Eigen::Infinity>() > kRecurrenceTol * std::max(1.0, scale)) continue;

        std::vector<double> charpoly(a.data(), a.data() + r);
        charpoly.push_back(1.0);
        const std::vector<RealRoot> roots = real_roots(UnivariatePoly(charpoly));
        int found = 0;
        for (const auto& root : roots) {
            if (root.multiplicity > 1) {
                throw no_real_minimal_decomposition_error(
                    "Prony recurrence of order " + std::to_string(r) + " has a repeated node near " +
                    num(root.value) + "; use fixed-nodes mode");
            }
            ++found;
        }
        if (found != r) {
            throw no_real_minimal_decomposition_error("Prony recurrence of order " + std::to_string(r) +
                                                      " has complex nodes; use fixed-nodes mode");
        }

        Eigen::MatrixXd V(len, r);
        for (int k = 0; k < r; ++k) {
            double p = 1.0;
            for (int j = 0; j < len; ++j) {
                V(j, k) = p;
                p *= roots[k].value;
            }
        }
        const Eigen::VectorXd target = Eigen::Map<const Eigen::VectorXd>(v.data(), len);
        const Eigen::VectorXd alpha = V.colPivHouseholderQr().solve(target);

        std::vector<VandermondeTerm> terms;
        for (int k = 0; k < r; ++k) {
            if (std::abs(alpha(k)) >= kDropAlpha) terms.push_back({alpha(k), roots[k].value});
        }
        VandermondeDecomposition dec(std::move(terms), spec.dim());
        const double residual = composition_residual(spec, dec);
        if (residual > kCompositionTol * std::max(1.0, scale)) {
            throw no_real_minimal_decomposition_error("Prony decomposition of order " + std::to_string(r) +
                                                      " reconstructs with residual " +
                                                      num(residual));
        }
        return dec;
    }
    throw no_real_minimal_decomposition_error("no consistent linear recurrence of order <= " +
                                              std::to_string(len / 2) + "; use fixed-nodes mode");
}

bool is_complete_decomposition(const VandermondeDecomposition& dec) {
    return std::all_of(dec.terms().begin(), dec.terms().end(), [](const auto& t) { return t.alpha > 0.0; });
}

SignChecks psd_sign_necessary_checks(const VandermondeDecomposition& dec) {
    SignChecks checks;
    long double sum = 0.0L;
    int positive = 0;
    for (const auto& t : dec.terms()) {
        sum += t.alpha;
        if (t.alpha > 0.0) ++positive;
    }
    checks.sum_ok = sum >= 0.0L;
    if (dec.rank() <= dec.dim()) {
        checks.positive_count_ok = true;
        checks.low_rank_all_positive_ok = positive == dec.rank();
    } else {
        checks.positive_count_ok = positive >= dec.dim();
    }
    return checks;
}

LowRankVerdict low_rank_psd_classify(const VandermondeDecomposition& dec, int order) {
    if (order % 2 != 0) {
        throw unsupported_query_error("low_rank_psd_classify needs even order, got m = " + std::to_string(order));
    }
    const int n = dec.dim();
    const int r = dec.rank();
    if (r > n) {
        throw unsupported_query_error("low_rank_psd_classify needs Vandermonde rank r <= n, got r = " +
                                      std::to_string(r) + ", n = " + std::to_string(n));
    }
    LowRankVerdict verdict;
    const auto& terms = dec.terms();
    const auto neg = std::find_if(terms.begin(), terms.end(), [](const auto& t) { return t.alpha < 0.0; });
    if (neg == terms.end()) return verdict;
    verdict.psd_complete = false;
    verdict.negative_term = static_cast<int>(neg - terms.begin());

    // Rows u_k for k != negative_term, reduced with column pivoting.
    std::vector<std::vector<double>> rows;
    for (int k = 0; k < r; ++k) {
        if (k != verdict.negative_term) rows.push_back(vandermonde_vector(terms[k].mu, n));
    }
    std::vector<int> pivot_col(rows.size(), -1);
    std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        int best = -1;
        double best_abs = 0.0;
        double row_scale = 0.0;
        for (int j = 0; j < n; ++j) {
            row_scale = std::max(row_scale, std::abs(rows[i][j]));
            if (!is_pivot[j] && std::abs(rows[i][j]) > best_abs) {
                best_abs = std::abs(rows[i][j]);
                best = j;
            }
        }
        if (best < 0 || best_abs <= 1e-14 * row_scale) continue;
        pivot_col[i] = best;
        is_pivot[best] = true;
        const double p = rows[i][best];
        for (double& x : rows[i]) x /= p;
        for (std::size_t q = 0; q < rows.size(); ++q) {
            if (q == i) continue;
            const double f = rows[q][best];
            if (f == 0.0) continue;
            for (int j = 0; j < n; ++j) rows[q][j] -= f * rows[i][j];
        }
    }

    // Null-space basis vectors, one per free column. Take the first whose
    // product with u_neg is not negligible next to the largest such product.
    const std::vector<double> u_neg = vandermonde_vector(neg->mu, n);
    std::vector<std::vector<double>> basis;
    std::vector<double> dots;
    for (int f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        std::vector<double> x(static_cast<std::size_t>(n), 0.0);
        x[f] = 1.0;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (pivot_col[i] >= 0) x[pivot_col[i]] = -rows[i][f];
        }
        double dot = 0.0;
        for (int j = 0; j < n; ++j) dot += u_neg[j] * x[j];
        basis.push_back(std::move(x));
        dots.push_back(std::abs(dot));
    }
    const double largest = *std::max_element(dots.begin(), dots.end());
    for (std::size_t b = 0; b < basis.size(); ++b) {
        if (dots[b] >= 1e-8 * largest) {
            verdict.witness = std::move(basis[b]);
            break;
        }
    }

    double max_abs = 0.0;
    double first_nonzero = 0.0;
    for (double x : verdict.witness) {
        max_abs = std::max(max_abs, std::abs(x));
        if (first_nonzero == 0.0 && x != 0.0) first_nonzero = x;
    }
    const double s = (first_nonzero < 0.0 ? -1.0 : 1.0) / max_abs;
    for (double& x : verdict.witness) x *= s;

    long double value = 0.0L;
    for (const auto& t : terms) {
        const std::vector<double> u = vandermonde_vector(t.mu, n);
        long double dot = 0.0L;
        for (int j = 0; j < n; ++j) dot += static_cast<long double>(u[j]) * verdict.witness[j];
        value += t.alpha * std::pow(dot, order);
    }
    verdict.value = static_cast<double>(value);
    return verdict;
}

}  // namespace hankel
}  // namespace tenstruct
