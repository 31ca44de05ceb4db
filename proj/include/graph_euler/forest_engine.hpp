#ifndef GRAPH_EULER_FOREST_ENGINE_HPP
#define GRAPH_EULER_FOREST_ENGINE_HPP

#include "graph_euler/partitions.hpp"
#include "graph_euler/series.hpp"
#include "graph_euler/treegen.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

namespace graph_euler {

/// Specialised evaluator for the forest series F = exp(G).
///
/// It computes the same coefficients as forest_series() but stores each
/// u-grade as a flat list of (packed partition, integer) pairs: every
/// coefficient is multiplied by the common denominator (3U)!, which turns all
/// of F and G into integers.  Partitions are packed as strings of
/// (part, multiplicity) code units, so the exp recurrence runs on hashed
/// strings and GMP integers only.
class ForestEngine {
public:
    using Key = std::u16string;
    using Grade = std::vector<std::pair<Key, Integer>>;

    ForestEngine(std::int64_t u_max, Orientation orientation = Orientation::even, unsigned threads = 1)
        : u_max_(u_max), threads_(std::max(1u, threads))
    {
        if (u_max < 0)
            throw std::invalid_argument("ForestEngine: negative u bound");
        scale_ = factorial(static_cast<std::uint64_t>(3 * std::max<std::int64_t>(u_max, 1)));
        load_exponent(forest_exponent(u_max, orientation));
        run();
    }

    std::int64_t u_max() const noexcept { return u_max_; }

    /// Common denominator applied to every stored coefficient.
    const Integer& scale() const noexcept { return scale_; }

    const Grade& grade(std::int64_t r) const
    {
        if (r < 0 || r > u_max_)
            throw TruncationError("ForestEngine: grade " + std::to_string(r) + " outside 0.." + std::to_string(u_max_));
        return f_[static_cast<std::size_t>(r)];
    }

    std::size_t term_count() const
    {
        std::size_t n = 0;
        for (auto& g : f_)
            n += g.size();
        return n;
    }

    /// sum_lambda weight(lambda) [u^r x^lambda] F
    Rational weighted_sum(std::int64_t r, const std::function<Integer(const Partition&)>& weight) const
    {
        Integer total = 0;
        for (auto& [key, c] : grade(r)) {
            Integer w = weight(decode(key));
            if (w != 0)
                total += w * c;
        }
        return make_rational(total, scale_);
    }

    Series to_series() const
    {
        Series s(Truncation::both(u_max_, static_cast<std::uint64_t>(3 * std::max<std::int64_t>(u_max_, 1))));
        for (std::size_t r = 0; r < f_.size(); ++r)
            for (auto& [key, c] : f_[r])
                s.accumulate({static_cast<std::int64_t>(r), decode(key)}, make_rational(c, scale_));
        return s;
    }

    static Key encode(const Partition& p)
    {
        Key k;
        k.reserve(2 * p.entries().size());
        for (auto [part, m] : p.entries()) {
            if (part > 0xffff || m > 0xffff)
                throw std::overflow_error("ForestEngine: partition too large to pack");
            k.push_back(static_cast<char16_t>(part));
            k.push_back(static_cast<char16_t>(m));
        }
        return k;
    }

    static Partition decode(const Key& key)
    {
        std::vector<Partition::Entry> entries;
        entries.reserve(key.size() / 2);
        for (std::size_t i = 0; i + 1 < key.size(); i += 2)
            entries.emplace_back(key[i], key[i + 1]);
        return Partition::from_multiplicities(std::move(entries));
    }

    /// Multiset union of two packed partitions.
    static void merge(const Key& a, const Key& b, Key& out)
    {
        out.clear();
        std::size_t i = 0, j = 0;
        while (i < a.size() || j < b.size()) {
            if (j == b.size() || (i < a.size() && a[i] > b[j])) {
                out.push_back(a[i]);
                out.push_back(a[i + 1]);
                i += 2;
            } else if (i == a.size() || b[j] > a[i]) {
                out.push_back(b[j]);
                out.push_back(b[j + 1]);
                j += 2;
            } else {
                out.push_back(a[i]);
                out.push_back(static_cast<char16_t>(a[i + 1] + b[j + 1]));
                i += 2;
                j += 2;
            }
        }
    }

private:
    using Accumulator = std::unordered_map<Key, Integer>;

    // (grade j, packed monomial, j * scale * g)
    struct ExponentTerm {
        std::size_t j;
        Key key;
        Integer weighted;
    };

    void load_exponent(const Series& g)
    {
        for (auto& [m, c] : g.terms()) {
            Rational scaled = c * scale_ * m.u;
            if (!is_integral(scaled))
                throw std::logic_error("ForestEngine: exponent coefficient not integral after scaling");
            exponent_.push_back({static_cast<std::size_t>(m.u), encode(m.x), scaled.get_num()});
        }
    }

    void accumulate_range(Accumulator& acc, std::size_t r, std::size_t lo, std::size_t hi) const
    {
        Key merged;
        Integer prod;
        for (std::size_t t = lo; t < hi; ++t) {
            const auto& term = exponent_[t];
            if (term.j > r)
                continue;
            for (auto& [key, c] : f_[r - term.j]) {
                merge(term.key, key, merged);
                mpz_mul(prod.get_mpz_t(), term.weighted.get_mpz_t(), c.get_mpz_t());
                auto [it, inserted] = acc.try_emplace(merged);
                if (inserted)
                    it->second = prod;
                else
                    it->second += prod;
            }
        }
    }

    void run()
    {
        f_.assign(static_cast<std::size_t>(u_max_) + 1, {});
        f_[0].emplace_back(Key{}, scale_);
        for (std::size_t r = 1; r < f_.size(); ++r) {
            Accumulator acc;
            if (threads_ == 1 || exponent_.size() < 2) {
                accumulate_range(acc, r, 0, exponent_.size());
            } else {
                // Split the exponent terms, weighted by the size of the grade
                // each one multiplies, into contiguous slices.
                std::vector<std::size_t> cost(exponent_.size());
                std::size_t total = 0;
                for (std::size_t t = 0; t < exponent_.size(); ++t) {
                    cost[t] = exponent_[t].j <= r ? f_[r - exponent_[t].j].size() : 0;
                    total += cost[t];
                }
                std::vector<std::size_t> bounds{0};
                std::size_t running = 0;
                for (std::size_t t = 0; t < exponent_.size(); ++t) {
                    running += cost[t];
                    if (running * threads_ >= total * bounds.size() && bounds.size() < threads_)
                        bounds.push_back(t + 1);
                }
                bounds.push_back(exponent_.size());
                std::vector<Accumulator> partial(bounds.size() - 1);
                std::vector<std::thread> pool;
                for (std::size_t i = 0; i + 1 < bounds.size(); ++i)
                    pool.emplace_back([&, i] { accumulate_range(partial[i], r, bounds[i], bounds[i + 1]); });
                for (auto& th : pool)
                    th.join();
                acc = std::move(partial[0]);
                for (std::size_t i = 1; i < partial.size(); ++i) {
                    for (auto& [key, c] : partial[i])
                        acc[key] += c;
                    Accumulator().swap(partial[i]);
                }
            }
            // acc holds r * scale^2 * F_r.
            Integer divisor = scale_ * static_cast<unsigned long>(r);
            Grade grade;
            grade.reserve(acc.size());
            for (auto& [key, c] : acc) {
                if (c == 0)
                    continue;
                if (!mpz_divisible_p(c.get_mpz_t(), divisor.get_mpz_t()))
                    throw std::logic_error("ForestEngine: scaled coefficient lost integrality");
                mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), divisor.get_mpz_t());
                grade.emplace_back(key, std::move(c));
            }
            std::sort(grade.begin(), grade.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
            f_[r] = std::move(grade);
        }
    }

    std::int64_t u_max_;
    unsigned threads_;
    Integer scale_;
    std::vector<ExponentTerm> exponent_;
    std::vector<Grade> f_;
};

} // namespace graph_euler

#endif
