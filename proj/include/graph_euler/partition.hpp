#ifndef GRAPH_EULER_PARTITION_HPP
#define GRAPH_EULER_PARTITION_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace graph_euler {

/// An integer partition stored as its exponent map k -> m_k.
///
/// The same object serves as a cycle type and as the exponent vector of the
/// monomial x_1^{m_1} x_2^{m_2} ...  Part sizes are kept in decreasing order
/// and no multiplicity is ever zero, so the defaulted comparison is the
/// lexicographic order on the flattened part sequence (largest parts first).
class Partition {
public:
    using Part = std::uint32_t;
    using Entry = std::pair<Part, Part>; // (part size k, multiplicity m_k)

    Partition() = default;

    /// From a list of parts in any order, e.g. {2, 1, 1} for [1^2 2].
    static Partition from_parts(std::span<const Part> parts)
    {
        std::vector<Part> sorted(parts.begin(), parts.end());
        std::sort(sorted.begin(), sorted.end(), std::greater<>());
        Partition p;
        for (Part k : sorted) {
            if (k == 0)
                throw std::invalid_argument("partition parts must be positive");
            if (!p.entries_.empty() && p.entries_.back().first == k)
                ++p.entries_.back().second;
            else
                p.entries_.emplace_back(k, 1);
        }
        return p;
    }

    static Partition from_parts(std::initializer_list<Part> parts)
    {
        return from_parts(std::span<const Part>(parts.begin(), parts.size()));
    }

    /// From (k, m_k) pairs in any order; zero multiplicities are dropped and
    /// repeated part sizes are merged.
    static Partition from_multiplicities(std::vector<Entry> entries)
    {
        std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return a.first > b.first; });
        Partition p;
        for (auto [k, m] : entries) {
            if (k == 0)
                throw std::invalid_argument("partition parts must be positive");
            if (m == 0)
                continue;
            if (!p.entries_.empty() && p.entries_.back().first == k)
                p.entries_.back().second += m;
            else
                p.entries_.emplace_back(k, m);
        }
        return p;
    }

    /// [k^m]
    static Partition power(Part k, Part m)
    {
        return from_multiplicities({{k, m}});
    }

    const std::vector<Entry>& entries() const noexcept { return entries_; }

    Part multiplicity(Part k) const noexcept
    {
        for (auto [part, m] : entries_)
            if (part == k)
                return m;
        return 0;
    }

    std::uint64_t size() const noexcept
    {
        std::uint64_t s = 0;
        for (auto [k, m] : entries_)
            s += std::uint64_t(k) * m;
        return s;
    }

    std::uint64_t length() const noexcept
    {
        std::uint64_t l = 0;
        for (auto [k, m] : entries_)
            l += m;
        return l;
    }

    bool empty() const noexcept { return entries_.empty(); }

    /// No parts of size 1.
    bool is_deranged() const noexcept { return multiplicity(1) == 0; }

    Part largest_part() const noexcept { return entries_.empty() ? 0 : entries_.front().first; }

    /// Parts listed in decreasing order.
    std::vector<Part> parts() const
    {
        std::vector<Part> out;
        for (auto [k, m] : entries_)
            out.insert(out.end(), m, k);
        return out;
    }

    /// Multiset union: m_k(a | b) = m_k(a) + m_k(b).
    friend Partition operator|(const Partition& a, const Partition& b)
    {
        Partition out;
        out.entries_.reserve(a.entries_.size() + b.entries_.size());
        auto i = a.entries_.begin();
        auto j = b.entries_.begin();
        while (i != a.entries_.end() || j != b.entries_.end()) {
            if (j == b.entries_.end() || (i != a.entries_.end() && i->first > j->first))
                out.entries_.push_back(*i++);
            else if (i == a.entries_.end() || j->first > i->first)
                out.entries_.push_back(*j++);
            else {
                out.entries_.emplace_back(i->first, i->second + j->second);
                ++i;
                ++j;
            }
        }
        return out;
    }

    /// Every part multiplied by k (the cycle type of a k-fold wreath).
    Partition scaled(Part k) const
    {
        if (k == 0)
            throw std::invalid_argument("scale factor must be positive");
        Partition out = *this;
        for (auto& e : out.entries_)
            e.first *= k;
        return out;
    }

    /// The deranged part: all parts of size 1 removed.
    Partition without_ones() const
    {
        Partition out = *this;
        if (!out.entries_.empty() && out.entries_.back().first == 1)
            out.entries_.pop_back();
        return out;
    }

    /// "[]", "[3]", "[2^2 1]", ... with the largest part first.
    std::string to_string() const
    {
        std::string s = "[";
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            if (i)
                s += ' ';
            s += std::to_string(entries_[i].first);
            if (entries_[i].second != 1)
                s += '^' + std::to_string(entries_[i].second);
        }
        return s + "]";
    }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<Entry> entries_;
};

struct PartitionHash {
    std::size_t operator()(const Partition& p) const noexcept
    {
        std::size_t h = 0xcbf29ce484222325ull;
        for (auto [k, m] : p.entries()) {
            h = (h ^ k) * 0x100000001b3ull;
            h = (h ^ m) * 0x100000001b3ull;
        }
        return h;
    }
};

} // namespace graph_euler

#endif
