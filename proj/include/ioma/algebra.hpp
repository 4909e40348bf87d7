#pragma once

// Finite algebras (X, ->, 1) with an optional least element, and the
// derived operation tables used throughout the library.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ioma {

/// Universe size cap: subsets of the universe fit in one 64-bit word.
inline constexpr int kMaxElements = 64;

struct AlgebraError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Immutable finite algebra with one binary operation table.
/// Elements are dense indices 0..n-1 in declaration order; names are
/// metadata for reporting only.
class FiniteAlgebra {
public:
    static FiniteAlgebra validate(std::vector<std::string> names,
                                  const std::vector<std::vector<int>>& arrow_rows,
                                  int one, std::optional<int> zero) {
        const int n = static_cast<int>(names.size());
        if (n < 1 || n > kMaxElements)
            throw AlgebraError("element count must be between 1 and " +
                               std::to_string(kMaxElements));
        for (int i = 0; i < n; ++i) {
            if (names[i].empty())
                throw AlgebraError("empty element name at position " + std::to_string(i));
            for (char c : names[i])
                if (c == ' ' || c == '\t' || c == '\n' || c == '\r')
                    throw AlgebraError("element name contains whitespace: '" + names[i] + "'");
            for (int j = 0; j < i; ++j)
                if (names[j] == names[i])
                    throw AlgebraError("duplicate element name: '" + names[i] + "'");
        }
        if (static_cast<int>(arrow_rows.size()) != n)
            throw AlgebraError("arrow table has " + std::to_string(arrow_rows.size()) +
                               " rows, expected " + std::to_string(n));
        std::vector<int> flat;
        flat.reserve(static_cast<size_t>(n) * n);
        for (int i = 0; i < n; ++i) {
            if (static_cast<int>(arrow_rows[i].size()) != n)
                throw AlgebraError("arrow row " + std::to_string(i) + " has " +
                                   std::to_string(arrow_rows[i].size()) +
                                   " entries, expected " + std::to_string(n));
            for (int j = 0; j < n; ++j) {
                const int v = arrow_rows[i][j];
                if (v < 0 || v >= n)
                    throw AlgebraError("arrow entry out of range at (" + std::to_string(i) +
                                       "," + std::to_string(j) + ")");
                flat.push_back(v);
            }
        }
        if (one < 0 || one >= n) throw AlgebraError("designated one out of range");
        if (zero) {
            if (*zero < 0 || *zero >= n) throw AlgebraError("designated zero out of range");
            if (*zero == one && n != 1)
                throw AlgebraError("one and zero coincide in a non-degenerate algebra");
        }
        return FiniteAlgebra(n, std::move(names), std::move(flat), one,
                             zero ? *zero : -1);
    }

    int size() const { return n_; }
    const std::string& name(int i) const { return names_[static_cast<size_t>(i)]; }
    const std::vector<std::string>& names() const { return names_; }
    int arrow(int x, int y) const { return arrow_[static_cast<size_t>(x) * n_ + y]; }
    int one() const { return one_; }
    bool has_zero() const { return zero_ >= 0; }
    int zero() const {
        if (zero_ < 0) throw AlgebraError("algebra has no designated zero");
        return zero_;
    }

    /// Index of a named element, or -1.
    int index_of(std::string_view nm) const {
        for (int i = 0; i < n_; ++i)
            if (names_[static_cast<size_t>(i)] == nm) return i;
        return -1;
    }

    bool operator==(const FiniteAlgebra& o) const {
        return n_ == o.n_ && names_ == o.names_ && arrow_ == o.arrow_ &&
               one_ == o.one_ && zero_ == o.zero_;
    }

private:
    FiniteAlgebra(int n, std::vector<std::string> names, std::vector<int> arrow,
                  int one, int zero)
        : n_(n), names_(std::move(names)), arrow_(std::move(arrow)),
          one_(one), zero_(zero) {}

    int n_;
    std::vector<std::string> names_;
    std::vector<int> arrow_;  // row-major, arrow_[x*n+y] = x->y
    int one_;
    int zero_;  // -1 when absent
};

/// Precomputed derived operations of an involutive algebra:
///   x* = x->0
///   x cup y = (x->y)->y
///   x cap y = ((x*->y*)->y*)*
///   x odot y = (x->y*)*
///   x oplus y = (x* odot y*)*
///   x <= y iff x->y = 1,  x <=Q y iff x = x cap y
class DerivedTables {
public:
    explicit DerivedTables(const FiniteAlgebra& a) : n_(a.size()), one_(a.one()) {
        if (!a.has_zero())
            throw AlgebraError("derived tables require a designated zero");
        zero_ = a.zero();
        const int n = n_;
        star_.resize(n);
        for (int x = 0; x < n; ++x) star_[x] = a.arrow(x, zero_);
        for (int x = 0; x < n; ++x)
            if (star_[star_[x]] != x)
                throw AlgebraError("involution fails at element '" + a.name(x) +
                                   "': " + a.name(x) + "** = " + a.name(star_[star_[x]]));
        sqcap_.resize(static_cast<size_t>(n) * n);
        sqcup_.resize(static_cast<size_t>(n) * n);
        odot_.resize(static_cast<size_t>(n) * n);
        oplus_.resize(static_cast<size_t>(n) * n);
        leq_.resize(static_cast<size_t>(n) * n);
        leq_q_.resize(static_cast<size_t>(n) * n);
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                const size_t i = static_cast<size_t>(x) * n + y;
                sqcup_[i] = a.arrow(a.arrow(x, y), y);
                sqcap_[i] = star_[a.arrow(a.arrow(star_[x], star_[y]), star_[y])];
                odot_[i] = star_[a.arrow(x, star_[y])];
                leq_[i] = a.arrow(x, y) == one_;
            }
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                const size_t i = static_cast<size_t>(x) * n + y;
                oplus_[i] = star_[odot(star_[x], star_[y])];
                leq_q_[i] = (x == sqcap(x, y));
                // cap/cup duality and the product/arrow round trip hold by
                // construction on involutive input; verify anyway.
                if (sqcap(x, y) != star_[sqcup(star_[x], star_[y])] ||
                    sqcup(x, y) != star_[sqcap(star_[x], star_[y])])
                    throw AlgebraError("cap/cup duality failed; input not involutive");
                if (star_[odot(x, star_[y])] != a.arrow(x, y))
                    throw AlgebraError("product/arrow round trip failed");
            }
    }

    int size() const { return n_; }
    int one() const { return one_; }
    int zero() const { return zero_; }
    int star(int x) const { return star_[static_cast<size_t>(x)]; }
    int sqcap(int x, int y) const { return sqcap_[static_cast<size_t>(x) * n_ + y]; }
    int sqcup(int x, int y) const { return sqcup_[static_cast<size_t>(x) * n_ + y]; }
    int odot(int x, int y) const { return odot_[static_cast<size_t>(x) * n_ + y]; }
    int oplus(int x, int y) const { return oplus_[static_cast<size_t>(x) * n_ + y]; }
    bool leq(int x, int y) const { return leq_[static_cast<size_t>(x) * n_ + y] != 0; }
    bool leq_q(int x, int y) const { return leq_q_[static_cast<size_t>(x) * n_ + y] != 0; }

    bool operator==(const DerivedTables& o) const {
        return n_ == o.n_ && star_ == o.star_ && sqcap_ == o.sqcap_ &&
               sqcup_ == o.sqcup_ && odot_ == o.odot_ && oplus_ == o.oplus_ &&
               leq_ == o.leq_ && leq_q_ == o.leq_q_;
    }

private:
    int n_, one_, zero_;
    std::vector<int> star_, sqcap_, sqcup_, odot_, oplus_;
    std::vector<std::uint8_t> leq_, leq_q_;
};

inline DerivedTables build_derived(const FiniteAlgebra& a) { return DerivedTables(a); }

/// x^k under odot, k >= 1.
inline int odot_power(const DerivedTables& d, int x, int k) {
    if (k < 1) throw AlgebraError("odot power exponent must be >= 1");
    int p = x;
    for (int i = 1; i < k; ++i) p = d.odot(p, x);
    return p;
}

/// Distinct values of x^1, x^2, ... until the sequence repeats.
/// On a finite algebra this enumerates every power of x.
inline std::vector<int> odot_power_cycle(const DerivedTables& d, int x) {
    std::vector<int> cycle;
    std::vector<char> seen(static_cast<size_t>(d.size()), 0);
    int p = x;
    while (!seen[static_cast<size_t>(p)]) {
        seen[static_cast<size_t>(p)] = 1;
        cycle.push_back(p);
        p = d.odot(p, x);
    }
    return cycle;
}

/// Five-element IOM algebra that is not quantum-Wajsberg.
inline FiniteAlgebra make_e5() {
    return FiniteAlgebra::validate(
        {"0", "a", "b", "c", "1"},
        {{4, 4, 4, 4, 4},
         {2, 4, 2, 4, 4},
         {1, 4, 4, 4, 4},
         {3, 4, 4, 4, 4},
         {0, 1, 2, 3, 4}},
        4, 0);
}

/// Two-element Boolean implication algebra.
inline FiniteAlgebra make_b2() {
    return FiniteAlgebra::validate({"0", "1"}, {{1, 1}, {0, 1}}, 1, 0);
}

}  // namespace ioma
