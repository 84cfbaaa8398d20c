#include "zerosum/group.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <numeric>
#include <stdexcept>

namespace zerosum {

namespace {

std::map<long long, int> factorize(long long n) {
    std::map<long long, int> powers;
    for (long long p = 2; p * p <= n; ++p) {
        while (n % p == 0) {
            ++powers[p];
            n /= p;
        }
    }
    if (n > 1) ++powers[n];
    return powers;
}

int parse_int(std::string_view text, std::string_view what, std::string_view token) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size())
        throw std::invalid_argument(std::string("expected ") + std::string(what) + " at '" +
                                    std::string(token) + "'");
    return value;
}

}  // namespace

struct FiniteAbelianGroup::Data {
    std::vector<int> factors;          // invariant factors, ascending divisibility chain
    long long order = 1;
    std::vector<long long> strides;    // mixed-radix strides, strides[i] = prod of factors after i
    std::vector<int> add_table;        // order*order flat table when small enough
    std::vector<int> neg_table;

    static constexpr long long kTableLimit = 1024;

    explicit Data(std::vector<int> inv_factors) : factors(std::move(inv_factors)) {
        for (int d : factors) order *= d;
        strides.assign(factors.size(), 1);
        for (int i = static_cast<int>(factors.size()) - 2; i >= 0; --i)
            strides[i] = strides[i + 1] * factors[i + 1];
        if (order <= kTableLimit) build_tables();
    }

    std::vector<int> coords_of(long long index) const {
        std::vector<int> coords(factors.size());
        for (std::size_t i = 0; i < factors.size(); ++i) {
            coords[i] = static_cast<int>(index / strides[i]);
            index %= strides[i];
        }
        return coords;
    }

    long long index_of_coords(const std::vector<int>& coords) const {
        long long index = 0;
        for (std::size_t i = 0; i < factors.size(); ++i) index += coords[i] * strides[i];
        return index;
    }

    long long add_slow(long long a, long long b) const {
        long long index = 0;
        for (std::size_t i = 0; i < factors.size(); ++i) {
            const int ca = static_cast<int>(a / strides[i]);
            const int cb = static_cast<int>(b / strides[i]);
            a %= strides[i];
            b %= strides[i];
            int c = ca + cb;
            if (c >= factors[i]) c -= factors[i];
            index += c * strides[i];
        }
        return index;
    }

    void build_tables() {
        const int n = static_cast<int>(order);
        add_table.resize(static_cast<std::size_t>(n) * n);
        neg_table.resize(n);
        for (int a = 0; a < n; ++a)
            for (int b = a; b < n; ++b) {
                const int s = static_cast<int>(add_slow(a, b));
                add_table[static_cast<std::size_t>(a) * n + b] = s;
                add_table[static_cast<std::size_t>(b) * n + a] = s;
                if (s == 0) {
                    neg_table[a] = b;
                    neg_table[b] = a;
                }
            }
    }
};

FiniteAbelianGroup::FiniteAbelianGroup() : data_(std::make_shared<const Data>(std::vector<int>{})) {}

FiniteAbelianGroup::FiniteAbelianGroup(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

FiniteAbelianGroup FiniteAbelianGroup::from_orders(const std::vector<int>& cyclic_orders) {
    // Split every order into prime powers, then regroup: the largest power
    // of each prime goes into the last invariant factor, the next largest
    // into the one before, and so on.
    std::map<long long, std::vector<int>> prime_exponents;
    long long order = 1;
    for (int n : cyclic_orders) {
        if (n < 2)
            throw std::invalid_argument("cyclic order must be >= 2, got " + std::to_string(n));
        if (order > kMaxOrder / n)
            throw std::invalid_argument("group order exceeds the supported bound of " +
                                        std::to_string(kMaxOrder));
        order *= n;
        for (const auto& [p, e] : factorize(n)) prime_exponents[p].push_back(e);
    }
    std::size_t rank = 0;
    for (auto& [p, exps] : prime_exponents) {
        std::sort(exps.begin(), exps.end(), std::greater<int>());
        rank = std::max(rank, exps.size());
    }
    std::vector<int> factors(rank, 1);
    for (const auto& [p, exps] : prime_exponents)
        for (std::size_t slot = 0; slot < exps.size(); ++slot) {
            long long power = 1;
            for (int i = 0; i < exps[slot]; ++i) power *= p;
            // slot 0 holds the largest power -> last invariant factor
            factors[rank - 1 - slot] = static_cast<int>(factors[rank - 1 - slot] * power);
        }
    return FiniteAbelianGroup(std::make_shared<const Data>(std::move(factors)));
}

FiniteAbelianGroup FiniteAbelianGroup::parse(std::string_view text) {
    if (text.empty())
        throw std::invalid_argument("empty group spec: expected C<n>[^k] atoms joined by 'x'");
    std::vector<int> orders;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find_first_of("xX", pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view atom = text.substr(pos, end - pos);
        if (atom.empty())
            throw std::invalid_argument("empty atom in group spec '" + std::string(text) +
                                        "': expected C<n>[^k] atoms joined by 'x'");
        if (atom[0] != 'C' && atom[0] != 'c')
            throw std::invalid_argument("expected 'C' at '" + std::string(atom) +
                                        "' in group spec (grammar: C<n>[^k] joined by 'x')");
        std::string_view body = atom.substr(1);
        int repeat = 1;
        if (std::size_t caret = body.find('^'); caret != std::string_view::npos) {
            repeat = parse_int(body.substr(caret + 1), "repetition count after '^'", atom);
            if (repeat < 1)
                throw std::invalid_argument("repetition must be >= 1 at '" + std::string(atom) + "'");
            body = body.substr(0, caret);
        }
        const int n = parse_int(body, "integer after 'C'", atom);
        if (n < 1)
            throw std::invalid_argument("cyclic order must be >= 1 at '" + std::string(atom) + "'");
        if (n > 1) {
            // 2^21 already exceeds the order bound, so any larger repeat
            // cannot possibly be valid; reject before allocating
            if (repeat > 21 || orders.size() + repeat > 21)
                throw std::invalid_argument("group order exceeds the supported bound of " +
                                            std::to_string(kMaxOrder) + " at '" + std::string(atom) +
                                            "'");
            for (int i = 0; i < repeat; ++i) orders.push_back(n);
        }
        pos = end + 1;
        if (end == text.size()) break;
        if (end == text.size() - 1)
            throw std::invalid_argument("trailing 'x' in group spec '" + std::string(text) + "'");
    }
    if (orders.empty()) return FiniteAbelianGroup();  // all atoms were C1
    return from_orders(orders);
}

const std::vector<int>& FiniteAbelianGroup::invariant_factors() const { return data_->factors; }
long long FiniteAbelianGroup::order() const { return data_->order; }
int FiniteAbelianGroup::exponent() const {
    return data_->factors.empty() ? 1 : data_->factors.back();
}
int FiniteAbelianGroup::rank() const { return static_cast<int>(data_->factors.size()); }

std::string FiniteAbelianGroup::canonical_name() const {
    if (data_->factors.empty()) return "C1";
    std::string name;
    for (std::size_t i = 0; i < data_->factors.size(); ++i) {
        if (i) name += 'x';
        name += 'C';
        name += std::to_string(data_->factors[i]);
    }
    return name;
}

GroupElement FiniteAbelianGroup::identity() const {
    return GroupElement{std::vector<int>(data_->factors.size(), 0)};
}

GroupElement FiniteAbelianGroup::element(const std::vector<long long>& coords) const {
    if (coords.size() != data_->factors.size())
        throw std::invalid_argument("coordinate count " + std::to_string(coords.size()) +
                                    " does not match rank " + std::to_string(rank()));
    GroupElement a;
    a.coords.resize(coords.size());
    for (std::size_t i = 0; i < coords.size(); ++i) {
        const long long d = data_->factors[i];
        a.coords[i] = static_cast<int>(((coords[i] % d) + d) % d);
    }
    return a;
}

GroupElement FiniteAbelianGroup::add(const GroupElement& a, const GroupElement& b) const {
    GroupElement c;
    c.coords.resize(data_->factors.size());
    for (std::size_t i = 0; i < c.coords.size(); ++i) {
        int s = a.coords[i] + b.coords[i];
        if (s >= data_->factors[i]) s -= data_->factors[i];
        c.coords[i] = s;
    }
    return c;
}

GroupElement FiniteAbelianGroup::neg(const GroupElement& a) const {
    GroupElement c;
    c.coords.resize(data_->factors.size());
    for (std::size_t i = 0; i < c.coords.size(); ++i)
        c.coords[i] = a.coords[i] == 0 ? 0 : data_->factors[i] - a.coords[i];
    return c;
}

GroupElement FiniteAbelianGroup::scalar_mul(long long k, const GroupElement& a) const {
    GroupElement c;
    c.coords.resize(data_->factors.size());
    for (std::size_t i = 0; i < c.coords.size(); ++i) {
        const long long d = data_->factors[i];
        const long long kd = ((k % d) + d) % d;  // reduce the scalar first; no overflow
        c.coords[i] = static_cast<int>((kd * a.coords[i]) % d);
    }
    return c;
}

int FiniteAbelianGroup::order_of(const GroupElement& a) const {
    long long n = 1;
    for (std::size_t i = 0; i < data_->factors.size(); ++i) {
        const long long d = data_->factors[i];
        n = std::lcm(n, d / std::gcd(d, static_cast<long long>(a.coords[i])));
    }
    return static_cast<int>(n);
}

ElementIndex FiniteAbelianGroup::index_of(const GroupElement& a) const {
    if (static_cast<int>(a.coords.size()) != rank())
        throw std::invalid_argument("element does not belong to this group (rank mismatch)");
    return static_cast<ElementIndex>(data_->index_of_coords(a.coords));
}

GroupElement FiniteAbelianGroup::element_at(ElementIndex i) const {
    if (i < 0 || i >= data_->order)
        throw std::invalid_argument("element index " + std::to_string(i) + " outside [0, " +
                                    std::to_string(data_->order) + ")");
    return GroupElement{data_->coords_of(i)};
}

ElementIndex FiniteAbelianGroup::add_index(ElementIndex a, ElementIndex b) const {
    if (!data_->add_table.empty())
        return data_->add_table[static_cast<std::size_t>(a) * data_->order + b];
    return static_cast<ElementIndex>(data_->add_slow(a, b));
}

ElementIndex FiniteAbelianGroup::neg_index(ElementIndex a) const {
    if (!data_->neg_table.empty()) return data_->neg_table[a];
    return index_of(neg(element_at(a)));
}

ElementIndex FiniteAbelianGroup::scalar_mul_index(long long k, ElementIndex a) const {
    return index_of(scalar_mul(k, element_at(a)));
}

int FiniteAbelianGroup::order_of_index(ElementIndex a) const { return order_of(element_at(a)); }

std::vector<GroupElement> FiniteAbelianGroup::elements() const {
    std::vector<GroupElement> all;
    all.reserve(static_cast<std::size_t>(data_->order));
    for (long long i = 0; i < data_->order; ++i) all.push_back(GroupElement{data_->coords_of(i)});
    return all;
}

std::string FiniteAbelianGroup::format_element(const GroupElement& a) const {
    std::string s = "(";
    for (std::size_t i = 0; i < a.coords.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(a.coords[i]);
    }
    s += ')';
    return s;
}

GroupElement FiniteAbelianGroup::parse_element(std::string_view text) const {
    if (text.size() < 2 || text.front() != '(' || text.back() != ')')
        throw std::invalid_argument("expected coordinate tuple '(c1,...,c" + std::to_string(rank()) +
                                    ")' at '" + std::string(text) + "'");
    std::string_view body = text.substr(1, text.size() - 2);
    std::vector<long long> coords;
    if (!body.empty()) {
        std::size_t pos = 0;
        while (true) {
            std::size_t comma = body.find(',', pos);
            std::string_view piece =
                body.substr(pos, comma == std::string_view::npos ? body.size() - pos : comma - pos);
            long long value = 0;
            auto trimmed = piece;
            while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front())))
                trimmed.remove_prefix(1);
            while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back())))
                trimmed.remove_suffix(1);
            auto [ptr, ec] =
                std::from_chars(trimmed.data(), trimmed.data() + trimmed.size(), value);
            if (ec != std::errc() || ptr != trimmed.data() + trimmed.size())
                throw std::invalid_argument("expected integer coordinate at '" + std::string(piece) +
                                            "' in '" + std::string(text) + "'");
            coords.push_back(value);
            if (comma == std::string_view::npos) break;
            pos = comma + 1;
        }
    }
    return element(coords);
}

}  // namespace zerosum
