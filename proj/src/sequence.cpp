#include "zerosum/sequence.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <stdexcept>

namespace zerosum {

namespace {

void check_length(std::size_t n) {
    if (n > Sequence::kMaxLength)
        throw std::invalid_argument("sequence length " + std::to_string(n) + " exceeds the " +
                                    std::to_string(Sequence::kMaxLength) + "-term cap");
}

}  // namespace

Sequence::Sequence(FiniteAbelianGroup group) : group_(std::move(group)) {}

Sequence::Sequence(FiniteAbelianGroup group, std::vector<ElementIndex> term_indices)
    : group_(std::move(group)), terms_(std::move(term_indices)) {
    check_length(terms_.size());
    for (ElementIndex t : terms_)
        if (t < 0 || t >= group_.order())
            throw std::invalid_argument("term index " + std::to_string(t) + " outside group of order " +
                                        std::to_string(group_.order()));
}

Sequence Sequence::from_elements(const FiniteAbelianGroup& G,
                                 const std::vector<GroupElement>& terms) {
    std::vector<ElementIndex> indices;
    indices.reserve(terms.size());
    for (const GroupElement& g : terms) indices.push_back(G.index_of(g));
    return Sequence(G, std::move(indices));
}

Sequence Sequence::parse(const FiniteAbelianGroup& G, std::string_view literal) {
    std::vector<ElementIndex> indices;
    std::size_t pos = 0;
    while (pos < literal.size()) {
        while (pos < literal.size() &&
               (literal[pos] == ' ' || literal[pos] == ',' || literal[pos] == '\t'))
            ++pos;
        if (pos >= literal.size()) break;
        if (literal[pos] != '(')
            throw std::invalid_argument("expected '(' at '" + std::string(literal.substr(pos)) +
                                        "' in sequence literal");
        std::size_t close = literal.find(')', pos);
        if (close == std::string_view::npos)
            throw std::invalid_argument("unbalanced '(' in sequence literal '" +
                                        std::string(literal) + "'");
        const GroupElement g = G.parse_element(literal.substr(pos, close - pos + 1));
        pos = close + 1;
        long long repeat = 1;
        while (pos < literal.size() && literal[pos] == ' ') ++pos;
        if (pos < literal.size() && literal[pos] == '*') {
            ++pos;
            while (pos < literal.size() && literal[pos] == ' ') ++pos;
            std::size_t end = pos;
            while (end < literal.size() && std::isdigit(static_cast<unsigned char>(literal[end])))
                ++end;
            auto [ptr, ec] = std::from_chars(literal.data() + pos, literal.data() + end, repeat);
            if (ec != std::errc() || ptr == literal.data() + pos || repeat < 1)
                throw std::invalid_argument("expected positive multiplicity after '*' in '" +
                                            std::string(literal) + "'");
            pos = end;
        }
        if (repeat > kMaxLength) check_length(static_cast<std::size_t>(repeat));
        const ElementIndex idx = G.index_of(g);
        for (long long i = 0; i < repeat; ++i) indices.push_back(idx);
        check_length(indices.size());
    }
    return Sequence(G, std::move(indices));
}

std::vector<std::pair<ElementIndex, int>> Sequence::multiplicities() const {
    std::map<ElementIndex, int> mult;
    for (ElementIndex t : terms_) ++mult[t];
    return {mult.begin(), mult.end()};
}

int Sequence::multiplicity_of_index(ElementIndex g) const {
    return static_cast<int>(std::count(terms_.begin(), terms_.end(), g));
}

int Sequence::multiplicity_of(const GroupElement& g) const {
    return multiplicity_of_index(group_.index_of(g));
}

Sequence Sequence::appended(const GroupElement& g) const {
    return appended_index(group_.index_of(g));
}

Sequence Sequence::appended_index(ElementIndex g) const {
    std::vector<ElementIndex> terms = terms_;
    terms.push_back(g);
    return Sequence(group_, std::move(terms));
}

Sequence Sequence::removed_one(const GroupElement& g) const {
    const ElementIndex idx = group_.index_of(g);
    auto it = std::find(terms_.begin(), terms_.end(), idx);
    if (it == terms_.end())
        throw std::invalid_argument("cannot remove " + group_.format_element(g) +
                                    ": not a term of the sequence");
    std::vector<ElementIndex> terms = terms_;
    terms.erase(terms.begin() + (it - terms_.begin()));
    return Sequence(group_, std::move(terms));
}

Sequence Sequence::canonical() const {
    std::vector<ElementIndex> terms = terms_;
    std::sort(terms.begin(), terms.end());
    return Sequence(group_, std::move(terms));
}

bool Sequence::is_canonical() const { return std::is_sorted(terms_.begin(), terms_.end()); }

std::string Sequence::to_literal() const {
    const Sequence c = is_canonical() ? *this : canonical();
    std::string out;
    for (const auto& [idx, mult] : c.multiplicities()) {
        if (!out.empty()) out += ',';
        out += group_.format_element(group_.element_at(idx));
        if (mult > 1) {
            out += '*';
            out += std::to_string(mult);
        }
    }
    return out;
}

bool operator==(const Sequence& a, const Sequence& b) {
    if (!(a.group_ == b.group_)) return false;
    std::vector<ElementIndex> ta = a.terms_, tb = b.terms_;
    std::sort(ta.begin(), ta.end());
    std::sort(tb.begin(), tb.end());
    return ta == tb;
}

GPlusPartition gplus_partition(const FiniteAbelianGroup& G) {
    if (G.order() % 2 == 0)
        throw std::invalid_argument("G+/G- partition needs odd |G|, got order " +
                                    std::to_string(G.order()));
    GPlusPartition P;
    P.side.assign(static_cast<std::size_t>(G.order()), 0);
    for (ElementIndex g = 1; g < G.order(); ++g) {
        if (P.side[g] != 0) continue;
        const ElementIndex n = G.neg_index(g);
        // g < n always holds here: n was not yet assigned and g runs ascending
        P.side[g] = 1;
        P.side[n] = -1;
        P.plus.push_back(g);
        P.minus.push_back(n);
    }
    std::sort(P.minus.begin(), P.minus.end());
    return P;
}

Sequence sign_normalize(const Sequence& S, const GPlusPartition& P) {
    std::vector<ElementIndex> terms;
    terms.reserve(S.length());
    for (ElementIndex t : S.term_indices())
        terms.push_back(P.side[t] < 0 ? S.group().neg_index(t) : t);
    std::sort(terms.begin(), terms.end());
    return Sequence(S.group(), std::move(terms));
}

bool for_each_multiset(int support_size, int length,
                       const std::function<bool(std::span<const int>)>& visit) {
    if (length < 0) throw std::invalid_argument("multiset length must be >= 0");
    std::vector<int> chosen(static_cast<std::size_t>(length), 0);
    if (length == 0) return visit(chosen);
    if (support_size <= 0) return true;  // nothing of positive length to visit
    // Odometer over non-decreasing position vectors.
    while (true) {
        if (!visit(chosen)) return false;
        int i = length - 1;
        while (i >= 0 && chosen[i] == support_size - 1) --i;
        if (i < 0) return true;
        const int next = chosen[i] + 1;
        for (int j = i; j < length; ++j) chosen[j] = next;
    }
}

bool for_each_sequence(const FiniteAbelianGroup& G, std::vector<ElementIndex> support, int length,
                       const std::function<bool(const Sequence&)>& visit) {
    std::sort(support.begin(), support.end());
    support.erase(std::unique(support.begin(), support.end()), support.end());
    std::vector<ElementIndex> terms(static_cast<std::size_t>(length));
    return for_each_multiset(
        static_cast<int>(support.size()), length, [&](std::span<const int> positions) {
            for (int i = 0; i < length; ++i) terms[i] = support[positions[i]];
            return visit(Sequence(G, terms));
        });
}

std::vector<Sequence> enumerate_sequences(const FiniteAbelianGroup& G,
                                          const std::vector<GroupElement>& support, int length) {
    std::vector<ElementIndex> indices;
    indices.reserve(support.size());
    for (const GroupElement& g : support) indices.push_back(G.index_of(g));
    std::vector<Sequence> out;
    for_each_sequence(G, std::move(indices), length, [&](const Sequence& S) {
        out.push_back(S);
        return true;
    });
    return out;
}

}  // namespace zerosum
