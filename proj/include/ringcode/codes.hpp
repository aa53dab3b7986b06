/**
 * Linear codes over Z_{p^s}: standard form with pivot profile, p-bases,
 * cardinality, exhaustive codeword enumeration, duals under the standard
 * inner product, and p-linear independence of word families.
 *
 * A code is the row span of a generator matrix; generators are never
 * assumed independent. The standard form is computed by valuation-guided
 * elimination with column swaps; its pivot profile (k_0, ..., k_s) counts
 * pivots of each valuation, with k_s the number of columns left free.
 */

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "ring.hpp"

namespace ringcode {

class LinearCode {
  public:
    explicit LinearCode(RingMatrix generators) : gen_(std::move(generators)) {}

    LinearCode(const RingSpec& spec, std::size_t n, RingMatrix generators) : gen_(std::move(generators)) {
        require_same_spec(spec, gen_.spec(), "LinearCode");
        if (gen_.cols() != n) throw std::invalid_argument("LinearCode: generator width differs from code length");
    }

    static LinearCode zero(const RingSpec& spec, std::size_t n) { return LinearCode(RingMatrix(spec, n)); }

    const RingSpec& spec() const { return gen_.spec(); }
    std::size_t length() const { return gen_.cols(); }
    const RingMatrix& generators() const { return gen_; }

  private:
    RingMatrix gen_;
};

/// Result of the standard-form reduction. Column j of `matrix` is column
/// `column_permutation[j]` of the original code; `profile[i]` counts pivots
/// of valuation i for i < s, and `profile[s]` the pivot-free columns.
struct StandardForm {
    RingSpec spec;
    std::vector<std::size_t> column_permutation;
    RingMatrix matrix;
    std::vector<std::size_t> profile;

    std::size_t pivot_count() const { return matrix.row_count(); }
    unsigned pivot_valuation(std::size_t t) const { return spec.valuation(matrix.at(t, t)); }
};

/// Valuation-guided elimination. Pivots are chosen by minimal valuation over
/// the remaining submatrix, ties broken by leftmost column then topmost row;
/// each pivot is normalized to p^v, cleared below, and entries above it are
/// reduced mod p^v. The result is canonical for a given generator matrix.
inline StandardForm standard_form(const LinearCode& code) {
    const RingSpec& R = code.spec();
    const std::size_t n = code.length();
    const std::size_t rows = code.generators().row_count();

    std::vector<std::vector<std::uint64_t>> work;
    work.reserve(rows);
    for (std::size_t i = 0; i < rows; ++i) work.push_back(code.generators().row(i).entries());

    std::vector<std::size_t> perm(n);
    for (std::size_t j = 0; j < n; ++j) perm[j] = j;

    std::vector<unsigned> pivot_vals;
    std::size_t r = 0;
    while (r < rows && r < n) {
        unsigned best_val = R.s() + 1;
        for (std::size_t i = r; i < rows; ++i) {
            for (std::size_t j = r; j < n; ++j) {
                if (work[i][j] == 0) continue;
                unsigned v = R.valuation(work[i][j]);
                if (v < best_val) best_val = v;
            }
        }
        if (best_val > R.s()) break;  // remaining submatrix is zero

        std::size_t pc = n, pr = rows;
        for (std::size_t j = r; j < n && pc == n; ++j) {
            for (std::size_t i = r; i < rows; ++i) {
                if (work[i][j] != 0 && R.valuation(work[i][j]) == best_val) {
                    pc = j;
                    pr = i;
                    break;
                }
            }
        }

        std::swap(work[r], work[pr]);
        if (pc != r) {
            for (auto& row : work) std::swap(row[r], row[pc]);
            std::swap(perm[r], perm[pc]);
        }

        const std::uint64_t pw = R.pow_p(best_val);
        const std::uint64_t inv = R.unit_inverse(work[r][r] / pw);
        for (auto& e : work[r]) e = R.mul(e, inv);

        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            std::uint64_t e = work[i][r];
            std::uint64_t q = e / pw;  // exact below the pivot, a mod-p^v reduction above it
            if (q == 0) continue;
            for (std::size_t j = r; j < n; ++j) work[i][j] = R.sub(work[i][j], R.mul(q, work[r][j]));
        }

        pivot_vals.push_back(best_val);
        ++r;
    }

    RingMatrix sf(R, n);
    for (std::size_t i = 0; i < r; ++i) sf.append_row(RingVector(R, work[i]));

    std::vector<std::size_t> profile(R.s() + 1, 0);
    for (unsigned v : pivot_vals) ++profile[v];
    profile[R.s()] = n - r;

    return StandardForm{R, std::move(perm), std::move(sf), std::move(profile)};
}

/// Number of p-ary symbols needed to address the code: k = sum (s - i) k_i.
inline std::uint64_t p_dimension(const StandardForm& sf) {
    std::uint64_t k = 0;
    for (unsigned i = 0; i < sf.spec.s(); ++i) k += (sf.spec.s() - i) * static_cast<std::uint64_t>(sf.profile[i]);
    return k;
}

inline std::uint64_t cardinality(const StandardForm& sf) {
    std::uint64_t k = p_dimension(sf);
    std::uint64_t card = 1;
    for (std::uint64_t i = 0; i < k; ++i) {
        if (card > UINT64_MAX / sf.spec.p()) throw std::overflow_error("cardinality exceeds 64 bits");
        card *= sf.spec.p();
    }
    return card;
}

inline std::uint64_t cardinality(const LinearCode& code) { return cardinality(standard_form(code)); }

/// A p-basis: k words whose Z_p-combinations hit every codeword exactly once.
struct PBasis {
    RingMatrix rows;
    std::uint64_t k() const { return rows.row_count(); }
};

/// Basis rows are the pivot rows of the standard form scaled by successive
/// powers of p (a valuation-i pivot row contributes p^0 through p^{s-1-i}
/// multiples, grouped by source block), written in the original column order.
inline PBasis p_basis_matrix(const StandardForm& sf) {
    const RingSpec& R = sf.spec;
    const std::size_t n = sf.matrix.cols();
    RingMatrix basis(R, n);

    std::size_t t = 0;
    for (unsigned block = 0; block < R.s(); ++block) {
        const std::size_t count = sf.profile[block];
        for (unsigned j = 0; j + block < R.s(); ++j) {
            const std::uint64_t scale = R.pow_p(j);
            for (std::size_t i = 0; i < count; ++i) {
                const RingVector& src = sf.matrix.row(t + i);
                std::vector<std::uint64_t> row(n, 0);
                for (std::size_t c = 0; c < n; ++c) row[sf.column_permutation[c]] = R.mul(src[c], scale);
                basis.append_row(RingVector(R, std::move(row)));
            }
        }
        t += count;
    }
    return PBasis{std::move(basis)};
}

inline PBasis p_basis_matrix(const LinearCode& code) { return p_basis_matrix(standard_form(code)); }

/// Walks every codeword exactly once, in odometer order over the p-ary
/// coefficient tuple of the p-basis. Throws CapExceeded before doing any
/// work if the code has more than `cap` words.
inline void for_each_codeword(const LinearCode& code, const std::function<void(const RingVector&)>& visit,
                              std::uint64_t cap = kDefaultEnumerationCap) {
    const RingSpec& R = code.spec();
    PBasis basis = p_basis_matrix(code);
    const std::size_t k = basis.rows.row_count();

    unsigned __int128 total = 1;
    for (std::size_t i = 0; i < k; ++i) {
        total *= R.p();
        if (total > cap) {
            throw CapExceeded("enumeration of " + std::to_string(k) + " p-ary coefficients exceeds cap " +
                              std::to_string(cap));
        }
    }

    RingVector word = RingVector::zero(R, code.length());
    std::vector<std::uint32_t> lambda(k, 0);
    const std::uint64_t p = R.p();

    visit(word);
    for (unsigned __int128 step = 1; step < total; ++step) {
        std::size_t i = 0;
        while (lambda[i] == p - 1) {
            lambda[i] = 0;
            word = word - basis.rows.row(i).scaled(p - 1);
            ++i;
        }
        ++lambda[i];
        word = word + basis.rows.row(i);
        visit(word);
    }
}

inline std::vector<RingVector> enumerate_codewords(const LinearCode& code,
                                                   std::uint64_t cap = kDefaultEnumerationCap) {
    std::vector<RingVector> out;
    for_each_codeword(code, [&](const RingVector& w) { out.push_back(w); }, cap);
    return out;
}

/// Generators of the dual code {y : c . y = 0 for all c}, found by solving
/// the standard form's pivot equations: one generator per free column, plus
/// p^{s-v} times a unit vector per pivot of valuation v > 0, each completed
/// by back substitution and mapped through the column permutation.
inline LinearCode dual(const LinearCode& code) {
    const RingSpec& R = code.spec();
    const std::size_t n = code.length();
    const StandardForm sf = standard_form(code);
    const std::size_t npiv = sf.pivot_count();
    const std::uint64_t m = R.modulus();

    auto solve_pivots = [&](std::vector<std::uint64_t>& g, std::size_t below) {
        for (std::size_t t = below; t-- > 0;) {
            std::uint64_t rhs = 0;
            for (std::size_t c = t + 1; c < n; ++c) rhs = R.add(rhs, R.mul(sf.matrix.at(t, c), g[c]));
            const unsigned v = sf.pivot_valuation(t);
            const std::uint64_t pv = R.pow_p(v);
            const std::uint64_t want = R.neg(rhs);
            if (want % pv != 0) throw std::logic_error("dual: pivot equation not solvable");
            // the pivot entry is p^v, so x = want / p^v taken mod p^{s-v}
            g[t] = (want / pv) % (m / pv);
        }
    };

    RingMatrix gens(R, n);
    auto emit = [&](const std::vector<std::uint64_t>& g) {
        std::vector<std::uint64_t> orig(n, 0);
        for (std::size_t c = 0; c < n; ++c) orig[sf.column_permutation[c]] = g[c];
        RingVector row(R, std::move(orig));
        if (!row.is_zero()) gens.append_row(std::move(row));
    };

    for (std::size_t f = npiv; f < n; ++f) {
        std::vector<std::uint64_t> g(n, 0);
        g[f] = 1;
        solve_pivots(g, npiv);
        emit(g);
    }
    for (std::size_t t = 0; t < npiv; ++t) {
        const unsigned v = sf.pivot_valuation(t);
        if (v == 0) continue;
        std::vector<std::uint64_t> g(n, 0);
        g[t] = R.pow_p(R.s() - v);
        solve_pivots(g, t);
        emit(g);
    }
    return LinearCode(std::move(gens));
}

inline bool is_self_orthogonal(const LinearCode& code) {
    const RingMatrix& G = code.generators();
    for (std::size_t i = 0; i < G.row_count(); ++i) {
        for (std::size_t j = i; j < G.row_count(); ++j) {
            if (G.row(i).dot(G.row(j)) != 0) return false;
        }
    }
    return true;
}

inline bool is_self_dual(const LinearCode& code) {
    if (!is_self_orthogonal(code)) return false;
    const StandardForm sf = standard_form(code);
    return 2 * p_dimension(sf) == static_cast<std::uint64_t>(sf.spec.s()) * code.length();
}

namespace detail {

/// Basis of the kernel of the mod-p reduction of the column family, by
/// Gaussian elimination over F_p. Vectors are the columns; kernel elements
/// are coefficient tuples lambda with sum lambda_i v_i = 0 (mod p).
inline std::vector<std::vector<std::uint32_t>> mod_p_kernel_basis(const std::vector<RingVector>& vectors,
                                                                  const RingSpec& R) {
    const std::size_t k = vectors.size();
    const std::size_t n = vectors.empty() ? 0 : vectors[0].size();
    const std::uint64_t p = R.p();

    std::vector<std::vector<std::uint32_t>> a(n, std::vector<std::uint32_t>(k));
    for (std::size_t col = 0; col < k; ++col) {
        for (std::size_t row = 0; row < n; ++row) a[row][col] = static_cast<std::uint32_t>(vectors[col][row] % p);
    }

    auto inv_mod_p = [&](std::uint32_t x) {
        std::uint32_t r = 1, b = x, e = static_cast<std::uint32_t>(p - 2);
        while (e) {
            if (e & 1) r = static_cast<std::uint32_t>(std::uint64_t{r} * b % p);
            b = static_cast<std::uint32_t>(std::uint64_t{b} * b % p);
            e >>= 1;
        }
        return r;
    };

    std::vector<std::size_t> pivot_of_col(k, SIZE_MAX);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < k && rank < n; ++col) {
        std::size_t sel = SIZE_MAX;
        for (std::size_t row = rank; row < n; ++row) {
            if (a[row][col] != 0) {
                sel = row;
                break;
            }
        }
        if (sel == SIZE_MAX) continue;
        std::swap(a[rank], a[sel]);
        const std::uint32_t inv = inv_mod_p(a[rank][col]);
        for (auto& e : a[rank]) e = static_cast<std::uint32_t>(std::uint64_t{e} * inv % p);
        for (std::size_t row = 0; row < n; ++row) {
            if (row == rank || a[row][col] == 0) continue;
            const std::uint64_t f = a[row][col];
            for (std::size_t c = 0; c < k; ++c) {
                a[row][c] = static_cast<std::uint32_t>((a[row][c] + (p - f % p) * a[rank][c]) % p);
            }
        }
        pivot_of_col[col] = rank;
        ++rank;
    }

    std::vector<std::vector<std::uint32_t>> kernel;
    for (std::size_t free_col = 0; free_col < k; ++free_col) {
        if (pivot_of_col[free_col] != SIZE_MAX) continue;
        std::vector<std::uint32_t> lambda(k, 0);
        lambda[free_col] = 1;
        for (std::size_t col = 0; col < k; ++col) {
            if (pivot_of_col[col] == SIZE_MAX) continue;
            const std::uint32_t coeff = a[pivot_of_col[col]][free_col];
            if (coeff != 0) lambda[col] = static_cast<std::uint32_t>(p - coeff);
        }
        kernel.push_back(std::move(lambda));
    }
    return kernel;
}

}  // namespace detail

/// True when only the all-zero coefficient tuple over Z_p combines the
/// family to the zero word. Candidate tuples come from the mod-p kernel;
/// each is re-checked exactly in the ring, and a family that is uniformly
/// divisible by p is divided out and retried one ring level down.
inline bool is_p_linearly_independent(const std::vector<RingVector>& vectors, const RingSpec& spec,
                                      std::uint64_t cap = kDefaultEnumerationCap) {
    const std::size_t k = vectors.size();
    if (k == 0) return true;
    for (const auto& v : vectors) require_same_spec(spec, v.spec(), "is_p_linearly_independent");

    const std::uint64_t p = spec.p();
    const std::size_t n = vectors[0].size();
    for (const auto& v : vectors) {
        if (v.size() != n) throw std::invalid_argument("is_p_linearly_independent: mixed word lengths");
    }

    bool all_divisible = true;
    for (const auto& v : vectors) {
        for (auto e : v.entries()) {
            if (e % p != 0) {
                all_divisible = false;
                break;
            }
        }
        if (!all_divisible) break;
    }
    if (all_divisible) {
        if (spec.s() == 1) return false;  // every word is zero, and k >= 1
        RingSpec lower(p, spec.s() - 1);
        std::vector<RingVector> reduced;
        reduced.reserve(k);
        for (const auto& v : vectors) {
            std::vector<std::uint64_t> e(n);
            for (std::size_t i = 0; i < n; ++i) e[i] = v[i] / p;
            reduced.emplace_back(lower, std::move(e));
        }
        return is_p_linearly_independent(reduced, lower, cap);
    }

    auto kernel = detail::mod_p_kernel_basis(vectors, spec);
    if (kernel.empty()) return true;

    unsigned __int128 combos = 1;
    for (std::size_t i = 0; i < kernel.size(); ++i) {
        combos *= p;
        if (combos > cap) {
            throw CapExceeded("mod-p kernel of dimension " + std::to_string(kernel.size()) +
                              " exceeds enumeration cap " + std::to_string(cap));
        }
    }

    std::vector<std::uint32_t> mu(kernel.size(), 0);
    for (unsigned __int128 step = 1; step < combos; ++step) {
        std::size_t i = 0;
        while (mu[i] == p - 1) mu[i++] = 0;
        ++mu[i];

        std::vector<std::uint64_t> lambda(k, 0);
        for (std::size_t b = 0; b < kernel.size(); ++b) {
            if (mu[b] == 0) continue;
            for (std::size_t c = 0; c < k; ++c) lambda[c] = (lambda[c] + std::uint64_t{mu[b]} * kernel[b][c]) % p;
        }

        RingVector sum = RingVector::zero(spec, n);
        for (std::size_t c = 0; c < k; ++c) {
            if (lambda[c] != 0) sum = sum + vectors[c].scaled(lambda[c]);
        }
        if (sum.is_zero()) return false;
    }
    return true;
}

/// A finite word set is additively closed when it contains the zero word
/// and the sum of any two members. When `diagnostic` is non-null, the first
/// counterexample is described there.
inline bool is_additively_closed(const std::set<RingVector>& words, std::string* diagnostic = nullptr) {
    if (words.empty()) {
        if (diagnostic) *diagnostic = "empty set";
        return false;
    }
    const RingVector& first = *words.begin();
    RingVector zero = RingVector::zero(first.spec(), first.size());
    if (!words.count(zero)) {
        if (diagnostic) *diagnostic = "zero word missing";
        return false;
    }
    for (const auto& a : words) {
        for (const auto& b : words) {
            RingVector c = a + b;
            if (!words.count(c)) {
                if (diagnostic) {
                    *diagnostic = "sum of two members falls outside the set";
                }
                return false;
            }
        }
    }
    return true;
}

}  // namespace ringcode
