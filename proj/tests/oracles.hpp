#pragma once

// Brute-force oracles used only by the tests. None of these call into the
// library's algorithms; they enumerate the combinatorial definitions directly.

#include "bellrec/exact.hpp"

#include <cstddef>
#include <functional>
#include <vector>

namespace oracle {

using bellrec::Integer;
using bellrec::Rational;

inline Integer factorial(unsigned n)
{
    Integer p = 1;
    for (unsigned i = 2; i <= n; ++i) {
        p *= i;
    }
    return p;
}

/// Pascal's triangle rows 0..n_max.
inline std::vector<std::vector<Integer>> pascal(unsigned n_max)
{
    std::vector<std::vector<Integer>> rows;
    for (unsigned n = 0; n <= n_max; ++n) {
        std::vector<Integer> row(n + 1, Integer(1));
        for (unsigned k = 1; k < n; ++k) {
            row[k] = rows[n - 1][k - 1] + rows[n - 1][k];
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

/// Visits every set partition of {0..n-1} as a vector of block sizes
/// (restricted growth strings).
inline void for_each_partition(std::size_t n, const std::function<void(const std::vector<std::size_t>&)>& visit)
{
    std::vector<std::size_t> label(n, 0);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t blocks) {
        if (pos == n) {
            std::vector<std::size_t> sizes(blocks, 0);
            for (auto l : label) {
                ++sizes[l];
            }
            visit(sizes);
            return;
        }
        for (std::size_t b = 0; b <= blocks; ++b) {
            label[pos] = b;
            rec(pos + 1, b == blocks ? blocks + 1 : blocks);
        }
    };
    rec(0, 0);
}

/// B_{n,k}(x) as the sum over set partitions of an n-set into k blocks of
/// prod x_{|block|}. x[j-1] = x_j; missing entries count as zero.
template <class T>
T bell_by_partitions(const std::vector<T>& x, std::size_t n, std::size_t k, const T& zero, const T& one)
{
    T total = zero;
    for_each_partition(n, [&](const std::vector<std::size_t>& sizes) {
        if (sizes.size() != k) {
            return;
        }
        T prod = one;
        for (auto s : sizes) {
            prod = prod * (s <= x.size() ? x[s - 1] : zero);
        }
        total = total + prod;
    });
    return total;
}

/// Visits every composition (m_1..m_r), m_i >= 0, of n.
inline void for_each_composition(std::size_t n, std::size_t r,
                                 const std::function<void(const std::vector<std::size_t>&)>& visit)
{
    std::vector<std::size_t> parts(r, 0);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t left) {
        if (i + 1 == r) {
            parts[i] = left;
            visit(parts);
            return;
        }
        for (std::size_t m = 0; m <= left; ++m) {
            parts[i] = m;
            rec(i + 1, left - m);
        }
    };
    if (r == 0) {
        if (n == 0) {
            visit(parts);
        }
        return;
    }
    rec(0, n);
}

/// sum over compositions m_1+...+m_r = n of prod seq(m_i), with seq(m) supplied by the caller.
inline Integer composition_sum(std::size_t n, std::size_t r, const std::function<Integer(long)>& seq)
{
    Integer total = 0;
    for_each_composition(n, r, [&](const std::vector<std::size_t>& parts) {
        Integer prod = 1;
        for (auto m : parts) {
            prod *= seq(static_cast<long>(m));
        }
        total += prod;
    });
    return total;
}

/// e_k as the sum over k-subsets of the product of their elements.
inline std::vector<Rational> elementary_by_subsets(const std::vector<Rational>& xs)
{
    const std::size_t d = xs.size();
    std::vector<Rational> e(d, Rational(0));
    for (std::size_t mask = 1; mask < (std::size_t{1} << d); ++mask) {
        Rational prod = 1;
        std::size_t bits = 0;
        for (std::size_t i = 0; i < d; ++i) {
            if (mask & (std::size_t{1} << i)) {
                prod *= xs[i];
                ++bits;
            }
        }
        e[bits - 1] += prod;
    }
    return e;
}

/// Plain recurrence a_n = sum c_j a_{n-j}, independent of the library.
template <class T>
std::vector<T> recurrence(const std::vector<T>& c, const std::vector<T>& init, std::size_t n_max, const T& zero)
{
    std::vector<T> a(init.begin(), init.end());
    while (a.size() <= n_max) {
        T acc = zero;
        const std::size_t n = a.size();
        for (std::size_t j = 1; j <= c.size(); ++j) {
            acc = acc + c[j - 1] * a[n - j];
        }
        a.push_back(acc);
    }
    a.resize(n_max + 1, zero);
    return a;
}

}  // namespace oracle
