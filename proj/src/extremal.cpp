#include "zerosum/extremal.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace zerosum {

namespace {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::string describe(const Sequence& S) { return "[" + S.to_literal() + "]"; }

}  // namespace

BigInt extremal_threshold(int length, int davenport) {
    if (davenport < 1) throw std::invalid_argument("davenport constant must be >= 1");
    if (length < davenport - 1)
        throw std::invalid_argument("extremal threshold needs |S| >= D-1 (got |S|=" +
                                    std::to_string(length) + ", D=" + std::to_string(davenport) + ")");
    return pow2(length - davenport + 1);
}

ESet e_set(const CountVector& counts, int davenport) {
    ESet out;
    out.threshold = extremal_threshold(counts.sequence_length, davenport);
    for (ElementIndex g = 0; g < static_cast<ElementIndex>(counts.counts.size()); ++g)
        if (counts.counts[g] == out.threshold) out.members.push_back(g);
    return out;
}

ESet e_set(const Sequence& S, const WeightSet& A, int davenport) {
    return e_set(count_vector(S, A), davenport);
}

bool is_extremal(const Sequence& S, const WeightSet& A, int davenport) {
    if (S.length() < davenport - 1) return false;
    return count_vector(S, A).at(0) == extremal_threshold(S.length(), davenport);
}

ExtremalEnumeration enumerate_extremal(const FiniteAbelianGroup& G, const WeightSet& A,
                                       int davenport, int length, const EnumerateLimits& limits) {
    if (length < davenport - 1)
        throw std::invalid_argument("extremal enumeration needs length >= D-1");
    ExtremalEnumeration out;
    const BigInt threshold = extremal_threshold(length, davenport);
    std::vector<ElementIndex> support;
    for (ElementIndex g = 1; g < G.order(); ++g) support.push_back(g);
    out.complete = for_each_sequence(G, support, length, [&](const Sequence& S) {
        if (out.enumerated >= limits.budget) return false;
        ++out.enumerated;
        if (count_vector(S, A).at(0) == threshold) out.sequences.push_back(S);
        return true;
    });
    return out;
}

Sequence construct_extremal_with_zeros(const FiniteAbelianGroup& G, const WeightSet& A, int k,
                                       const SearchLimits& limits) {
    const long long n = G.exponent();
    std::set<long long> residues;
    for (long long a : A.weights()) residues.insert(((a % n) + n) % n);
    bool full = n >= 2 && static_cast<long long>(residues.size()) == n - 1 && !residues.count(0);
    if (!full)
        throw std::invalid_argument("zero-padded extremal construction needs the full weight set [1, " +
                                    std::to_string(n - 1) + "], got " + A.canonical_name());
    const DavenportResult search = max_zero_sum_free(G, A, limits);
    if (!search.exact) throw BudgetError("zero-sum-free search truncated; cannot construct");
    if (k < search.max_zsf_length)
        throw std::invalid_argument("target length " + std::to_string(k) + " is below D-1 = " +
                                    std::to_string(search.max_zsf_length));
    if (search.witnesses.empty())
        throw std::invalid_argument("search kept no witnesses (max_witnesses = 0)");
    Sequence S = search.witnesses.front();
    const GroupElement zero = G.identity();
    for (int i = search.max_zsf_length; i < k; ++i) S = S.appended(zero);
    return S.canonical();
}

CheckResult check_corollary3(const Sequence& S, const WeightSet& A, int davenport) {
    if (S.length() < davenport - 1) return {CheckStatus::skipped, "|S| < D-1"};
    const CountVector counts = count_vector(S, A);
    const BigInt threshold = extremal_threshold(S.length(), davenport);
    if (counts.at(0) != threshold)
        return {CheckStatus::skipped, "sequence is not extremal (N0 = " + counts.at(0).str() + ")"};
    const SumSupport support = sum_support(S, A);
    const FiniteAbelianGroup& G = S.group();
    if (support.sigma_a_bullet.count() != G.order())
        return {CheckStatus::failed,
                describe(S) + ": adjoined sum support misses elements of " + G.canonical_name()};
    for (ElementIndex g = 0; g < G.order(); ++g)
        if (counts.at(g) < threshold)
            return {CheckStatus::failed, describe(S) + ": N[" + G.format_element(G.element_at(g)) +
                                             "] = " + counts.at(g).str() + " < threshold " +
                                             threshold.str()};
    return {CheckStatus::passed, ""};
}

CheckResult check_corollary4(const Sequence& S, const WeightSet& A, const GroupElement& g) {
    const FiniteAbelianGroup& G = S.group();
    if (!acts_as_pm1(A, G)) return {CheckStatus::skipped, "weights do not act as {-1,+1}"};
    if (S.multiplicity_of(g) < 1) return {CheckStatus::skipped, "g does not divide S"};
    const CountVector counts = count_vector(S, A);
    const BigInt& at_g = counts.at(G.index_of(g));
    if (at_g == counts.at(0)) return {CheckStatus::passed, ""};
    return {CheckStatus::failed, describe(S) + ": N[" + G.format_element(g) + "] = " + at_g.str() +
                                     " but N[0] = " + counts.at(0).str()};
}

CheckResult check_lemma6(const Sequence& S, const WeightSet& A, const GroupElement& a,
                         int davenport) {
    const FiniteAbelianGroup& G = S.group();
    if (!acts_as_pm1(A, G)) return {CheckStatus::skipped, "weights do not act as {-1,+1}"};
    if (S.multiplicity_of(G.identity()) > 0) return {CheckStatus::skipped, "0 divides S"};
    if (S.length() < davenport)
        return {CheckStatus::skipped, "|S| < D so E(S a^-1) is undefined"};
    const int va = S.multiplicity_of(a);
    const int vneg = S.multiplicity_of(G.neg(a));
    if (!(va >= 2 || (va == 1 && vneg == 1)))
        return {CheckStatus::skipped, "multiplicity hypothesis fails for a"};
    const CountVector counts = count_vector(S, A);
    if (counts.at(0) != extremal_threshold(S.length(), davenport))
        return {CheckStatus::skipped, "0 is not in E(S)"};
    const ESet before = e_set(counts, davenport);
    const ESet after = e_set(S.removed_one(a), A, davenport);
    for (ElementIndex g : before.members)
        if (!std::binary_search(after.members.begin(), after.members.end(), g))
            return {CheckStatus::failed, describe(S) + ", a = " + G.format_element(a) + ": " +
                                             G.format_element(G.element_at(g)) +
                                             " is in E(S) but not in E(S a^-1)"};
    return {CheckStatus::passed, ""};
}

CheckResult check_proposition7(const Sequence& S, const WeightSet& A, int davenport) {
    const FiniteAbelianGroup& G = S.group();
    if (!acts_as_pm1(A, G)) return {CheckStatus::skipped, "weights do not act as {-1,+1}"};
    if (S.multiplicity_of(G.identity()) > 0) return {CheckStatus::skipped, "0 divides S"};
    if (S.length() < davenport - 1) return {CheckStatus::skipped, "|S| < D-1"};
    bool hypothesis = false;
    for (const auto& [elem, mult] : S.multiplicities())
        if (mult >= 3 && G.order_of_index(elem) != 2) hypothesis = true;
    if (!hypothesis)
        return {CheckStatus::skipped, "no term has multiplicity > 2 with order != 2"};
    const CountVector counts = count_vector(S, A);
    const BigInt threshold = extremal_threshold(S.length(), davenport);
    if (counts.at(0) > threshold) return {CheckStatus::passed, ""};
    return {CheckStatus::failed, describe(S) + ": N[0] = " + counts.at(0).str() +
                                     " does not exceed threshold " + threshold.str()};
}

CheckResult check_theorem8(const Sequence& S, const WeightSet& A, int davenport) {
    const FiniteAbelianGroup& G = S.group();
    if (G.order() % 2 == 0) return {CheckStatus::skipped, "|G| is even"};
    if (!acts_as_pm1(A, G)) return {CheckStatus::skipped, "weights do not act as {-1,+1}"};
    if (S.multiplicity_of(G.identity()) > 0) return {CheckStatus::skipped, "0 divides S"};
    if (S.length() < davenport - 1) return {CheckStatus::skipped, "|S| < D-1"};
    const CountVector counts = count_vector(S, A);
    if (counts.at(0) != extremal_threshold(S.length(), davenport))
        return {CheckStatus::skipped, "sequence is not extremal"};

    int doubled = 0, higher = 0;
    for (const auto& [elem, mult] : S.multiplicities()) {
        if (mult == 2) ++doubled;
        if (mult > 2) ++higher;
    }
    if (S.length() == davenport - 1) {
        if (doubled == 0 && higher == 0) return {CheckStatus::passed, ""};
        return {CheckStatus::failed, describe(S) + ": extremal at |S| = D-1 but not squarefree"};
    }
    if (G.exponent() % 3 == 0) return {CheckStatus::skipped, "G has elements of order 3"};
    if (higher == 0 && doubled <= 1) return {CheckStatus::passed, ""};
    return {CheckStatus::failed, describe(S) + ": multiplicity profile has " +
                                     std::to_string(doubled) + " doubled and " +
                                     std::to_string(higher) + " higher-multiplicity terms"};
}

std::optional<std::vector<int>> fp_solve(const std::vector<GroupElement>& basis,
                                         const GroupElement& target, int p) {
    if (p < 2 || !is_prime(p)) throw std::invalid_argument("p must be prime");
    const std::size_t rows = target.coords.size();
    const std::size_t cols = basis.size();
    for (const GroupElement& b : basis)
        if (b.coords.size() != rows)
            throw std::invalid_argument("basis and target must share the same rank");

    // columns = basis vectors, augmented with the target
    std::vector<std::vector<int>> m(rows, std::vector<int>(cols + 1, 0));
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) m[r][c] = basis[c].coords[r] % p;
        m[r][cols] = target.coords[r] % p;
    }

    auto inverse_mod = [&](int a) {
        int result = 1, base = a % p, e = p - 2;
        while (e > 0) {
            if (e & 1) result = result * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return result;
    };

    std::vector<int> pivot_row(cols, -1);
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pivot = row;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) return std::nullopt;  // dependent column
        std::swap(m[row], m[pivot]);
        const int inv = inverse_mod(m[row][col]);
        for (std::size_t c = col; c <= cols; ++c) m[row][c] = m[row][c] * inv % p;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == row || m[r][col] == 0) continue;
            const int factor = m[r][col];
            for (std::size_t c = col; c <= cols; ++c)
                m[r][c] = ((m[r][c] - factor * m[row][c]) % p + p) % p;
        }
        pivot_row[col] = static_cast<int>(row);
        ++row;
    }
    if (row < cols) return std::nullopt;  // more columns than pivots: dependent
    for (std::size_t r = row; r < rows; ++r)
        if (m[r][cols] != 0) return std::nullopt;  // inconsistent: target outside the span

    std::vector<int> solution(cols, 0);
    for (std::size_t c = 0; c < cols; ++c) solution[c] = m[pivot_row[c]][cols];
    return solution;
}

std::optional<StructureDecomposition> decompose_theorem11(const Sequence& S, int p, int r) {
    if (!is_prime(p) || p % 2 == 0)
        throw std::invalid_argument("decomposition needs an odd prime p");
    const FiniteAbelianGroup& G = S.group();
    if (G.rank() != r ||
        !std::all_of(G.invariant_factors().begin(), G.invariant_factors().end(),
                     [&](int d) { return d == p; }))
        throw std::invalid_argument("group " + G.canonical_name() + " is not C_" +
                                    std::to_string(p) + "^" + std::to_string(r));
    if (S.multiplicity_of(G.identity()) > 0)
        throw std::invalid_argument("0 must not divide S");
    const int m = S.length();
    if (m < r || m > 2 * r)
        throw std::invalid_argument("decomposition needs r <= |S| <= 2r, got |S| = " +
                                    std::to_string(m));

    const Sequence C = S.canonical();
    std::vector<GroupElement> terms;
    for (int i = 0; i < m; ++i) terms.push_back(C.term(i));

    // walk r-subsets of term positions in lexicographic order
    std::vector<int> pick(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) pick[i] = i;
    while (true) {
        std::vector<GroupElement> basis;
        for (int i : pick) basis.push_back(terms[i]);
        bool viable = true;
        std::vector<StructureDecomposition::Extra> extras;
        std::vector<bool> used(static_cast<std::size_t>(r), false);
        for (int i = 0; i < m && viable; ++i) {
            if (std::find(pick.begin(), pick.end(), i) != pick.end()) continue;
            const auto solution = fp_solve(basis, terms[i], p);
            if (!solution) {
                viable = false;
                break;
            }
            StructureDecomposition::Extra extra;
            extra.term = terms[i];
            for (int c = 0; c < r; ++c) {
                if ((*solution)[c] == 0) continue;
                if (used[c]) {
                    viable = false;  // supports must be pairwise disjoint
                    break;
                }
                used[c] = true;
                extra.support.push_back(c);
                extra.coefficients.push_back((*solution)[c]);
            }
            if (viable) extras.push_back(std::move(extra));
        }
        if (viable) {
            StructureDecomposition out;
            out.basis = std::move(basis);
            out.extras = std::move(extras);
            return out;
        }
        // next combination
        int i = r - 1;
        while (i >= 0 && pick[i] == m - r + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < r; ++j) pick[j] = pick[j - 1] + 1;
    }
    return std::nullopt;
}

}  // namespace zerosum
