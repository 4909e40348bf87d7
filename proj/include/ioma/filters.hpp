#pragma once

// Filters and deductive systems: predicates, exhaustive enumeration,
// generated filters with independent cross-checks, filter classification,
// and Bosbach-state verification over exact rationals.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ioma/algebra.hpp"
#include "ioma/classify.hpp"
#include "ioma/rational.hpp"

namespace ioma {

/// Subset of the universe as a bitmask; valid for n <= 64.
struct ElementSubset {
    std::uint64_t bits = 0;

    static ElementSubset full(int n) {
        ElementSubset s;
        s.bits = (n >= 64) ? ~0ull : ((1ull << n) - 1);
        return s;
    }
    static ElementSubset of(std::initializer_list<int> xs) {
        ElementSubset s;
        for (int x : xs) s.add(x);
        return s;
    }

    bool contains(int i) const { return (bits >> i) & 1u; }
    void add(int i) { bits |= 1ull << i; }
    bool empty() const { return bits == 0; }
    int count() const { return std::popcount(bits); }
    bool subset_of(const ElementSubset& o) const { return (bits & ~o.bits) == 0; }

    std::vector<int> elements() const {
        std::vector<int> out;
        for (int i = 0; i < 64; ++i)
            if (contains(i)) out.push_back(i);
        return out;
    }

    friend bool operator==(const ElementSubset&, const ElementSubset&) = default;
    friend bool operator<(const ElementSubset& l, const ElementSubset& r) {
        return l.bits < r.bits;
    }
};

/// Exhaustive 2^n scans are limited to this size.
inline constexpr int kEnumerationMaxN = 24;

struct SubsetVerdict {
    bool ok = false;
    std::string reason;        // on failure: which condition broke
    std::vector<int> witness;  // elements of the failing instance
};

/// Shared evaluation state for the subset predicates.  The characterization
/// cross-checks from the source results hold on IOM algebras only, so the
/// IOM flag is computed once here.
struct FilterCtx {
    FiniteAlgebra a;  // owned copy, so a context may outlive its source
    DerivedTables d;
    bool iom;

    explicit FilterCtx(const FiniteAlgebra& alg)
        : a(alg), d(alg), iom(classify(alg).is_iom) {}
};

namespace detail {

inline void require_valid_subset(const FilterCtx& c, ElementSubset s) {
    if (!s.subset_of(ElementSubset::full(c.a.size())))
        throw AlgebraError("subset contains indices outside the universe");
}

// (F1) closed under odot; (F2) upward closed under <=Q.  Definitional route.
inline SubsetVerdict filter_by_definition(const FilterCtx& c, ElementSubset s) {
    const int n = c.a.size();
    if (s.empty()) return {false, "empty", {}};
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (s.contains(x) && s.contains(y) && !s.contains(c.d.odot(x, y)))
                return {false, "F1", {x, y}};
        }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (s.contains(x) && c.d.leq_q(x, y) && !s.contains(y))
                return {false, "F2", {x, y}};
    return {true, "", {}};
}

// (F1) + (F3): x in F, y in X imply y->x in F.
inline bool filter_by_f3(const FilterCtx& c, ElementSubset s) {
    const int n = c.a.size();
    if (s.empty()) return false;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (s.contains(x) && s.contains(y) && !s.contains(c.d.odot(x, y)))
                return false;
            if (s.contains(x) && !s.contains(c.a.arrow(y, x))) return false;
        }
    return true;
}

inline SubsetVerdict ds_by_definition(const FilterCtx& c, ElementSubset s) {
    const int n = c.a.size();
    if (!s.contains(c.a.one())) return {false, "DS1", {c.a.one()}};
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (s.contains(x) && s.contains(c.a.arrow(x, y)) && !s.contains(y))
                return {false, "DS2", {x, y}};
    return {true, "", {}};
}

// nonempty + (F1) + (F4): upward closed under <=.
inline bool ds_by_f4(const FilterCtx& c, ElementSubset s) {
    const int n = c.a.size();
    if (s.empty()) return false;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (s.contains(x) && s.contains(y) && !s.contains(c.d.odot(x, y)))
                return false;
            if (s.contains(x) && c.d.leq(x, y) && !s.contains(y)) return false;
        }
    return true;
}

// nonempty + (F1) + (F5): closed under x cup y for arbitrary y.
inline bool ds_by_f5(const FilterCtx& c, ElementSubset s) {
    const int n = c.a.size();
    if (s.empty()) return false;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (s.contains(x) && s.contains(y) && !s.contains(c.d.odot(x, y)))
                return false;
            if (s.contains(x) && !s.contains(c.d.sqcup(x, y))) return false;
        }
    return true;
}

}  // namespace detail

inline SubsetVerdict is_filter(const FilterCtx& c, ElementSubset s) {
    detail::require_valid_subset(c, s);
    SubsetVerdict v = detail::filter_by_definition(c, s);
    if (c.iom && v.ok != detail::filter_by_f3(c, s))
        throw AlgebraError("internal error: (F1,F2) and (F1,F3) filter "
                           "characterizations disagree on an IOM algebra");
    return v;
}

inline SubsetVerdict is_ds(const FilterCtx& c, ElementSubset s) {
    detail::require_valid_subset(c, s);
    SubsetVerdict v = detail::ds_by_definition(c, s);
    if (c.iom) {
        const bool f4 = detail::ds_by_f4(c, s);
        const bool f5 = detail::ds_by_f5(c, s);
        if (v.ok != f4 || v.ok != f5)
            throw AlgebraError("internal error: deductive-system "
                               "characterizations disagree on an IOM algebra");
    }
    return v;
}

enum class SubfamilyKind { Filter, DeductiveSystem };

/// All filters (or deductive systems), sorted by size then mask.
inline std::vector<ElementSubset> enumerate_subfamilies(const FilterCtx& c,
                                                        SubfamilyKind kind) {
    const int n = c.a.size();
    if (n > kEnumerationMaxN)
        throw AlgebraError("subset enumeration limited to n <= " +
                           std::to_string(kEnumerationMaxN));
    std::vector<ElementSubset> out;
    const std::uint64_t limit = 1ull << n;
    for (std::uint64_t m = 0; m < limit; ++m) {
        ElementSubset s;
        s.bits = m;
        const SubsetVerdict v = (kind == SubfamilyKind::Filter)
                                    ? detail::filter_by_definition(c, s)
                                    : detail::ds_by_definition(c, s);
        if (v.ok) out.push_back(s);
    }
    std::sort(out.begin(), out.end(), [](ElementSubset l, ElementSubset r) {
        return l.count() != r.count() ? l.count() < r.count() : l.bits < r.bits;
    });
    return out;
}

namespace detail {

/// Closure of Y under odot: the set of all finite products of elements of Y.
inline ElementSubset product_closure(const FilterCtx& c, ElementSubset y) {
    ElementSubset p = y;
    bool grew = true;
    while (grew) {
        grew = false;
        for (int u = 0; u < c.a.size(); ++u)
            for (int v = 0; v < c.a.size(); ++v)
                if (p.contains(u) && p.contains(v)) {
                    const int w = c.d.odot(u, v);
                    if (!p.contains(w)) {
                        p.add(w);
                        grew = true;
                    }
                }
    }
    return p;
}

/// The <=Q up-set of a set of lower bounds.
inline ElementSubset upset_q(const FilterCtx& c, ElementSubset lows) {
    ElementSubset out;
    for (int y = 0; y < c.a.size(); ++y)
        for (int p : lows.elements())
            if (c.d.leq_q(p, y)) {
                out.add(y);
                break;
            }
    return out;
}

}  // namespace detail

/// Smallest filter containing Y: least fixpoint under (F1) and (F2).
/// On IOM algebras the result is cross-checked against the product-power
/// formula, and against the intersection of all filters containing Y when
/// full enumeration is cheap.
inline ElementSubset generated_filter(const FilterCtx& c, ElementSubset y) {
    detail::require_valid_subset(c, y);
    if (y.empty()) throw AlgebraError("generated filter needs a nonempty generator set");
    const int n = c.a.size();
    ElementSubset s = y;
    bool grew = true;
    while (grew) {
        grew = false;
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v) {
                if (s.contains(u) && s.contains(v) && !s.contains(c.d.odot(u, v))) {
                    s.add(c.d.odot(u, v));
                    grew = true;
                }
                if (s.contains(u) && c.d.leq_q(u, v) && !s.contains(v)) {
                    s.add(v);
                    grew = true;
                }
            }
    }
    if (c.iom) {
        const ElementSubset formula =
            detail::upset_q(c, detail::product_closure(c, y));
        if (formula != s)
            throw AlgebraError("internal error: generated-filter fixpoint "
                               "disagrees with the product formula");
    }
    if (n <= 12) {
        ElementSubset meet = ElementSubset::full(n);
        for (std::uint64_t m = 0; m < (1ull << n); ++m) {
            ElementSubset f;
            f.bits = m;
            if (y.subset_of(f) && detail::filter_by_definition(c, f).ok)
                meet.bits &= f.bits;
        }
        if (meet != s)
            throw AlgebraError("internal error: generated-filter fixpoint "
                               "disagrees with the filter intersection");
    }
    return s;
}

/// F(x): smallest filter containing the filter F and the element x.
inline ElementSubset generated_filter(const FilterCtx& c, ElementSubset base,
                                      int adjoin) {
    if (!is_filter(c, base).ok) throw AlgebraError("base set is not a filter");
    ElementSubset y = base;
    y.add(adjoin);
    ElementSubset s = generated_filter(c, y);
    if (c.iom) {
        // f odot x^k route, exponents over the power cycle of x.
        ElementSubset lows;
        for (int f : base.elements())
            for (int p : odot_power_cycle(c.d, adjoin)) lows.add(c.d.odot(f, p));
        if (detail::upset_q(c, lows) != s)
            throw AlgebraError("internal error: F(x) formula disagrees with fixpoint");
    }
    return s;
}

struct FilterClassification {
    bool is_filter = false;
    bool is_ds = false;
    bool is_proper = false;
    bool is_maximal = false;
    bool is_strongly_maximal = false;
    bool is_commutative = false;
    std::optional<ElementSubset> maximal_witness;  // proper filter strictly above
    std::vector<int> strong_witness;               // x with no (x^k)* in F
    std::vector<int> commutative_witness;          // (x, y) breaking (CF)
};

/// (CF): y->x in F implies (x cup y)->x in F; first failing pair recorded.
inline SubsetVerdict check_cf(const FilterCtx& c, ElementSubset f) {
    const int n = c.a.size();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (f.contains(c.a.arrow(y, x)) &&
                !f.contains(c.a.arrow(c.d.sqcup(x, y), x)))
                return {false, "CF", {x, y}};
    return {true, "", {}};
}

inline FilterClassification classify_filter(const FilterCtx& c, ElementSubset f) {
    if (!is_filter(c, f).ok) throw AlgebraError("subset is not a filter");
    const int n = c.a.size();
    FilterClassification out;
    out.is_filter = true;
    out.is_ds = is_ds(c, f).ok;
    out.is_proper = f != ElementSubset::full(n);

    // Maximality by definition: no proper filter strictly contains F.
    bool maximal = out.is_proper;
    if (maximal)
        for (const ElementSubset& g : enumerate_subfamilies(c, SubfamilyKind::Filter))
            if (f.subset_of(g) && g != f && g != ElementSubset::full(n)) {
                maximal = false;
                out.maximal_witness = g;
                break;
            }
    out.is_maximal = maximal;

    // Same question via the f odot x^n = 0 characterization; the two routes
    // must agree on IOM algebras.
    if (c.iom && out.is_proper) {
        bool alt = true;
        for (int x = 0; x < n && alt; ++x) {
            if (f.contains(x)) continue;
            bool found = false;
            for (int g : f.elements())
                for (int p : odot_power_cycle(c.d, x))
                    if (c.d.odot(g, p) == c.d.zero()) found = true;
            alt = found;
        }
        if (alt != out.is_maximal)
            throw AlgebraError("internal error: maximality routes disagree");
    }

    bool strong = out.is_proper;
    for (int x = 0; x < n && strong; ++x) {
        if (f.contains(x)) continue;
        bool found = false;
        for (int p : odot_power_cycle(c.d, x))
            if (f.contains(c.d.star(p))) found = true;
        if (!found) {
            strong = false;
            out.strong_witness = {x};
        }
    }
    out.is_strongly_maximal = strong;

    const SubsetVerdict cf = check_cf(c, f);
    out.is_commutative = cf.ok;
    if (!cf.ok) out.commutative_witness = cf.witness;
    return out;
}

/// Commutativity of a deductive system, with the two-condition
/// characterization cross-checked.
inline SubsetVerdict is_commutative_ds(const FilterCtx& c, ElementSubset f) {
    if (!is_ds(c, f).ok) throw AlgebraError("subset is not a deductive system");
    const SubsetVerdict cf = check_cf(c, f);
    const int n = c.a.size();
    bool alt = f.contains(c.a.one());
    for (int x = 0; x < n && alt; ++x)
        for (int y = 0; y < n && alt; ++y)
            for (int z = 0; z < n && alt; ++z)
                if (f.contains(c.a.arrow(z, c.a.arrow(y, x))) && f.contains(z) &&
                    !f.contains(c.a.arrow(c.d.sqcup(x, y), x)))
                    alt = false;
    if (alt != cf.ok)
        throw AlgebraError("internal error: commutative-DS characterizations disagree");
    return cf;
}

struct RationalState {
    std::vector<Rational> value;  // per element, declaration order
};

struct BosbachVerdict {
    bool accepted = false;
    std::string reason;
    std::vector<int> witness;
    ElementSubset kernel;
    bool kernel_commutative_ds = false;
};

/// Checks bs1, bs2 and the [0,1] range; on acceptance returns the kernel,
/// which is verified to be a commutative deductive system.
inline BosbachVerdict verify_bosbach(const FilterCtx& c, const RationalState& s) {
    const int n = c.a.size();
    BosbachVerdict out;
    if (static_cast<int>(s.value.size()) != n)
        throw AlgebraError("state has wrong number of values");
    const Rational zero_r(0), one_r(1);
    for (int x = 0; x < n; ++x)
        if (s.value[x] < zero_r || one_r < s.value[x]) {
            out.reason = "range";
            out.witness = {x};
            return out;
        }
    if (s.value[static_cast<size_t>(c.d.zero())] != zero_r ||
        s.value[static_cast<size_t>(c.a.one())] != one_r) {
        out.reason = "bs1";
        return out;
    }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const Rational lhs = s.value[x] + s.value[static_cast<size_t>(c.a.arrow(x, y))];
            const Rational rhs = s.value[y] + s.value[static_cast<size_t>(c.a.arrow(y, x))];
            if (lhs != rhs) {
                out.reason = "bs2";
                out.witness = {x, y};
                return out;
            }
        }
    out.accepted = true;
    for (int x = 0; x < n; ++x)
        if (s.value[x] == one_r) out.kernel.add(x);
    if (!is_ds(c, out.kernel).ok)
        throw AlgebraError("internal error: Bosbach kernel is not a deductive system");
    out.kernel_commutative_ds = is_commutative_ds(c, out.kernel).ok;
    if (!out.kernel_commutative_ds && c.iom)
        throw AlgebraError("internal error: Bosbach kernel not commutative on IOM input");
    return out;
}

}  // namespace ioma
