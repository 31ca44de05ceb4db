#ifndef GRAPH_EULER_PARTITIONS_HPP
#define GRAPH_EULER_PARTITIONS_HPP

#include "graph_euler/partition.hpp"
#include "graph_euler/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <map>
#include <string>
#include <stdexcept>
#include <utility>
#include <vector>

namespace graph_euler {

/// All partitions of weight <= max_weight, graded by size and, within one
/// size, in decreasing lexicographic order of the part sequence:
/// [], [1], [2], [1^2], [3], [2 1], [1^3], ...
///
/// Single pass; nothing beyond the current partition is held in memory.
class PartitionStream {
public:
    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = Partition;
        using difference_type = std::ptrdiff_t;
        using pointer = const Partition*;
        using reference = const Partition&;

        iterator() = default;

        reference operator*() const { return current_; }
        pointer operator->() const { return &current_; }

        iterator& operator++()
        {
            advance();
            return *this;
        }
        void operator++(int) { advance(); }

        friend bool operator==(const iterator& it, std::default_sentinel_t) { return it.done_; }

    private:
        friend class PartitionStream;

        explicit iterator(std::uint64_t max_weight) : max_(max_weight), done_(false) {}

        void advance()
        {
            // parts_ is in decreasing order; find the rightmost part > 1.
            std::size_t ones = 0;
            while (!parts_.empty() && parts_.back() == 1) {
                parts_.pop_back();
                ++ones;
            }
            if (parts_.empty()) {
                // [1^w] was the last partition of weight w.
                const std::uint64_t next = weight_ + 1;
                if (next > max_) {
                    done_ = true;
                    return;
                }
                weight_ = next;
                parts_.assign(1, static_cast<Partition::Part>(next));
            } else {
                Partition::Part v = --parts_.back();
                std::uint64_t rest = ones + 1;
                while (rest >= v) {
                    parts_.push_back(v);
                    rest -= v;
                }
                if (rest)
                    parts_.push_back(static_cast<Partition::Part>(rest));
            }
            current_ = Partition::from_parts(parts_);
        }

        std::uint64_t max_ = 0;
        std::uint64_t weight_ = 0;
        std::vector<Partition::Part> parts_;
        Partition current_;
        bool done_ = true;
    };

    explicit PartitionStream(std::uint64_t max_weight) : max_(max_weight) {}

    iterator begin() const { return iterator(max_); }
    std::default_sentinel_t end() const { return {}; }

private:
    std::uint64_t max_;
};

inline PartitionStream partitions_of_weight_at_most(std::uint64_t max_weight)
{
    return PartitionStream(max_weight);
}

/// Classical Moebius function by trial division.
inline int mobius(std::uint64_t n)
{
    if (n == 0)
        throw std::invalid_argument("mobius: argument must be positive");
    int sign = 1;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p)
            continue;
        n /= p;
        if (n % p == 0)
            return 0;
        sign = -sign;
    }
    return n > 1 ? -sign : sign;
}

/// mu(1..N) by a linear sieve.
class MobiusTable {
public:
    explicit MobiusTable(std::size_t max_n) : values_(max_n + 1, 0)
    {
        if (max_n == 0)
            return;
        std::vector<bool> composite(max_n + 1, false);
        std::vector<std::size_t> primes;
        values_[1] = 1;
        for (std::size_t i = 2; i <= max_n; ++i) {
            if (!composite[i]) {
                primes.push_back(i);
                values_[i] = -1;
            }
            for (std::size_t p : primes) {
                if (i * p > max_n)
                    break;
                composite[i * p] = true;
                if (i % p == 0) {
                    values_[i * p] = 0;
                    break;
                }
                values_[i * p] = -values_[i];
            }
        }
    }

    std::size_t max_n() const noexcept { return values_.size() - 1; }

    int operator()(std::size_t n) const
    {
        if (n == 0 || n >= values_.size())
            throw std::out_of_range("MobiusTable: index outside 1.." + std::to_string(max_n()));
        return values_[n];
    }

private:
    std::vector<int> values_;
};

/// Number of matchings on k*m points commuting with a permutation made of
/// m cycles of length k.
inline Integer eta_km(std::uint64_t k, std::uint64_t m)
{
    if (k == 0)
        throw std::invalid_argument("eta_km: part size must be positive");
    if (k % 2 == 1) {
        if (m % 2 == 1)
            return 0;
        return power(Integer(k), m / 2) * odd_double_factorial(m / 2);
    }
    Integer total = 0;
    for (std::uint64_t r = 0; 2 * r <= m; ++r)
        total += binomial(m, 2 * r) * power(Integer(k), r) * odd_double_factorial(r);
    return total;
}

/// Signed count of the odd orientation convention.
inline Integer eta_odd_km(std::uint64_t k, std::uint64_t m)
{
    if (k == 0)
        throw std::invalid_argument("eta_odd_km: part size must be positive");
    if (k % 2 == 1) {
        if (m % 2 == 1)
            return 0;
        return power(Integer(k), m / 2) * odd_double_factorial(m / 2);
    }
    Integer total = 0;
    for (std::uint64_t r = 0; 2 * r <= m; ++r) {
        Integer term = binomial(m, 2 * r) * power(Integer(k), r) * odd_double_factorial(r);
        if (r % 2)
            total -= term;
        else
            total += term;
    }
    if (m % 2 == 1 && (k / 2) % 2 == 1)
        total = -total;
    return total;
}

inline Integer eta(const Partition& lambda)
{
    Integer prod = 1;
    for (auto [k, m] : lambda.entries()) {
        prod *= eta_km(k, m);
        if (prod == 0)
            break;
    }
    return prod;
}

inline Integer eta_odd(const Partition& lambda)
{
    Integer prod = 1;
    for (auto [k, m] : lambda.entries()) {
        prod *= eta_odd_km(k, m);
        if (prod == 0)
            break;
    }
    return prod;
}

/// eta_km and eta_odd_km for all k*m <= max_weight, filled once and then
/// read-only.
class EtaCache {
public:
    explicit EtaCache(std::uint64_t max_weight) : max_weight_(max_weight)
    {
        for (std::uint64_t k = 1; k <= max_weight; ++k)
            for (std::uint64_t m = 0; k * m <= max_weight; ++m) {
                even_.emplace(std::pair{k, m}, eta_km(k, m));
                odd_.emplace(std::pair{k, m}, eta_odd_km(k, m));
            }
    }

    std::uint64_t max_weight() const noexcept { return max_weight_; }

    const Integer& even(std::uint64_t k, std::uint64_t m) const { return lookup(even_, k, m); }
    const Integer& odd(std::uint64_t k, std::uint64_t m) const { return lookup(odd_, k, m); }

    Integer eta(const Partition& lambda) const { return product(even_, lambda); }
    Integer eta_odd(const Partition& lambda) const { return product(odd_, lambda); }

    const std::map<std::pair<std::uint64_t, std::uint64_t>, Integer>& even_table() const noexcept { return even_; }
    const std::map<std::pair<std::uint64_t, std::uint64_t>, Integer>& odd_table() const noexcept { return odd_; }

private:
    using Table = std::map<std::pair<std::uint64_t, std::uint64_t>, Integer>;

    const Integer& lookup(const Table& t, std::uint64_t k, std::uint64_t m) const
    {
        auto it = t.find({k, m});
        if (it == t.end())
            throw std::out_of_range("EtaCache: (" + std::to_string(k) + ", " + std::to_string(m)
                                    + ") beyond the cached weight");
        return it->second;
    }

    Integer product(const Table& t, const Partition& lambda) const
    {
        Integer prod = 1;
        for (auto [k, m] : lambda.entries()) {
            prod *= lookup(t, k, m);
            if (prod == 0)
                break;
        }
        return prod;
    }

    std::uint64_t max_weight_;
    Table even_;
    Table odd_;
};

/// Number of permutations of cycle type lambda: |lambda|! / prod k^{m_k} m_k!.
inline Integer class_size(const Partition& lambda)
{
    Integer denom = 1;
    for (auto [k, m] : lambda.entries())
        denom *= power(Integer(k), m) * factorial(m);
    return factorial(lambda.size()) / denom;
}

} // namespace graph_euler

#endif
