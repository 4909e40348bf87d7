#pragma once

// The relation induced by a deductive system, congruence verification,
// the DS <-> congruence correspondence, and quotient construction.

#include <algorithm>
#include <string>
#include <vector>

#include "ioma/algebra.hpp"
#include "ioma/classify.hpp"
#include "ioma/filters.hpp"

namespace ioma {

struct CongruenceError : AlgebraError {
    using AlgebraError::AlgebraError;
};

/// Partition of the universe into equivalence classes with dense indices.
struct Partition {
    std::vector<int> class_of;  // per element
    int class_count = 0;

    bool same(int x, int y) const {
        return class_of[static_cast<size_t>(x)] == class_of[static_cast<size_t>(y)];
    }
    friend bool operator==(const Partition&, const Partition&) = default;
};

/// x related to y iff some f has x,y <=Q f and f->x, f->y both in F.
/// The flag admits mere filters (the relation is then unconstrained by the
/// theory; no characterization cross-checks run).
inline bool related(const FilterCtx& c, ElementSubset f_set, int x, int y,
                    bool allow_filter = false) {
    if (allow_filter) {
        if (!is_filter(c, f_set).ok) throw AlgebraError("set is not a filter");
    } else if (!is_ds(c, f_set).ok) {
        throw AlgebraError("set is not a deductive system");
    }
    const int n = c.a.size();
    bool def = false;
    for (int f = 0; f < n && !def; ++f)
        if (c.d.leq_q(x, f) && c.d.leq_q(y, f) && f_set.contains(c.a.arrow(f, x)) &&
            f_set.contains(c.a.arrow(f, y)))
            def = true;
    if (allow_filter) return def;

    // Characterizations (b) and (c); all three routes must agree for a DS.
    bool via_b = false;
    for (int f1 : f_set.elements())
        for (int f2 : f_set.elements())
            if (c.d.leq_q(x, f1) && c.d.leq_q(y, f2) &&
                c.a.arrow(f1, x) == c.a.arrow(f2, y))
                via_b = true;
    bool via_c = false;
    for (int f1 : f_set.elements())
        for (int f2 : f_set.elements())
            if (c.d.leq_q(x, c.a.arrow(f2, y)) && c.d.leq_q(y, c.a.arrow(f1, x)))
                via_c = true;
    if (def != via_b || def != via_c)
        throw CongruenceError("internal error: relation characterizations "
                              "(a)/(b)/(c) disagree");
    return def;
}

namespace detail {

inline Partition partition_from_relation(int n,
                                         const std::vector<std::uint8_t>& rel) {
    Partition p;
    p.class_of.assign(static_cast<size_t>(n), -1);
    for (int x = 0; x < n; ++x) {
        if (p.class_of[static_cast<size_t>(x)] >= 0) continue;
        const int cls = p.class_count++;
        for (int y = x; y < n; ++y)
            if (rel[static_cast<size_t>(x) * n + y])
                p.class_of[static_cast<size_t>(y)] = cls;
    }
    return p;
}

}  // namespace detail

/// Builds the partition of the DS-induced relation, verifying that it is an
/// equivalence compatible with *, odot, ->, cup and cap before returning.
inline Partition congruence_from_ds(const FilterCtx& c, ElementSubset f) {
    if (!is_ds(c, f).ok) throw AlgebraError("set is not a deductive system");
    const int n = c.a.size();
    std::vector<std::uint8_t> rel(static_cast<size_t>(n) * n, 0);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            rel[static_cast<size_t>(x) * n + y] = related(c, f, x, y);
    auto r = [&](int x, int y) { return rel[static_cast<size_t>(x) * n + y] != 0; };

    for (int x = 0; x < n; ++x)
        if (!r(x, x)) throw CongruenceError("relation not reflexive at " + c.a.name(x));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (r(x, y) != r(y, x))
                throw CongruenceError("relation not symmetric at (" + c.a.name(x) +
                                      "," + c.a.name(y) + ")");
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                if (r(x, y) && r(y, z) && !r(x, z))
                    throw CongruenceError("relation not transitive at (" + c.a.name(x) +
                                          "," + c.a.name(y) + "," + c.a.name(z) + ")");
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (r(x, y) && !r(c.d.star(x), c.d.star(y)))
                throw CongruenceError("relation not compatible with * at (" +
                                      c.a.name(x) + "," + c.a.name(y) + ")");
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int u = 0; u < n; ++u)
                for (int v = 0; v < n; ++v) {
                    if (!r(x, y) || !r(u, v)) continue;
                    if (!r(c.d.odot(x, u), c.d.odot(y, v)))
                        throw CongruenceError("relation not compatible with odot");
                    if (!r(c.a.arrow(x, u), c.a.arrow(y, v)))
                        throw CongruenceError("relation not compatible with ->");
                    if (!r(c.d.sqcup(x, u), c.d.sqcup(y, v)))
                        throw CongruenceError("relation not compatible with cup");
                    if (!r(c.d.sqcap(x, u), c.d.sqcap(y, v)))
                        throw CongruenceError("relation not compatible with cap");
                }
    return detail::partition_from_relation(n, rel);
}

/// Checks that a partition is compatible with -> (constants are singleton
/// classes of themselves, so compatibility with the derived operations
/// follows).
inline SubsetVerdict is_congruence(const FiniteAlgebra& a, const Partition& p) {
    const int n = a.size();
    if (static_cast<int>(p.class_of.size()) != n)
        throw AlgebraError("partition does not cover the universe");
    for (int x = 0; x < n; ++x)
        if (p.class_of[static_cast<size_t>(x)] < 0 ||
            p.class_of[static_cast<size_t>(x)] >= p.class_count)
            throw AlgebraError("partition class index out of range");
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int u = 0; u < n; ++u)
                for (int v = 0; v < n; ++v)
                    if (p.same(x, y) && p.same(u, v) &&
                        !p.same(a.arrow(x, u), a.arrow(y, v)))
                        return {false, "arrow-compatibility", {x, y, u, v}};
    return {true, "", {}};
}

/// The class of 1, verified to be a deductive system.
inline ElementSubset ds_from_congruence(const FilterCtx& c, const Partition& p) {
    const SubsetVerdict v = is_congruence(c.a, p);
    if (!v.ok) throw AlgebraError("partition is not a congruence");
    ElementSubset f;
    for (int x = 0; x < c.a.size(); ++x)
        if (p.same(x, c.a.one())) f.add(x);
    if (!is_ds(c, f).ok)
        throw AlgebraError("internal error: class of 1 is not a deductive system");
    return f;
}

struct QuotientResult {
    FiniteAlgebra algebra;
    std::vector<int> projection;  // element -> class index
    int one_class = 0;
    int zero_class = 0;
    bool supported_regime = true;  // false when the input is not IOM
};

/// Quotient by the DS-induced congruence.  Class representatives are the
/// least element index per class; representative independence is verified
/// exhaustively.  Class names are brace-joined sorted member names.
inline QuotientResult quotient(const FilterCtx& c, ElementSubset f) {
    const Partition p = congruence_from_ds(c, f);
    const int n = c.a.size();
    const int k = p.class_count;
    std::vector<int> rep(static_cast<size_t>(k), -1);
    std::vector<std::vector<int>> members(static_cast<size_t>(k));
    for (int x = 0; x < n; ++x) {
        const int cls = p.class_of[static_cast<size_t>(x)];
        if (rep[static_cast<size_t>(cls)] < 0) rep[static_cast<size_t>(cls)] = x;
        members[static_cast<size_t>(cls)].push_back(x);
    }
    std::vector<std::vector<int>> qarrow(static_cast<size_t>(k),
                                         std::vector<int>(static_cast<size_t>(k)));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            qarrow[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                p.class_of[static_cast<size_t>(c.a.arrow(rep[static_cast<size_t>(i)],
                                                         rep[static_cast<size_t>(j)]))];
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const int ex = p.class_of[static_cast<size_t>(x)];
            const int ey = p.class_of[static_cast<size_t>(y)];
            if (p.class_of[static_cast<size_t>(c.a.arrow(x, y))] !=
                qarrow[static_cast<size_t>(ex)][static_cast<size_t>(ey)])
                throw CongruenceError("quotient arrow depends on representatives at (" +
                                      c.a.name(x) + "," + c.a.name(y) + ")");
        }
    std::vector<std::string> names(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) {
        std::string nm = "{";
        for (size_t j = 0; j < members[static_cast<size_t>(i)].size(); ++j) {
            if (j) nm += ",";
            nm += c.a.name(members[static_cast<size_t>(i)][j]);
        }
        nm += "}";
        names[static_cast<size_t>(i)] = std::move(nm);
    }
    QuotientResult out{
        FiniteAlgebra::validate(std::move(names), qarrow,
                                p.class_of[static_cast<size_t>(c.a.one())],
                                p.class_of[static_cast<size_t>(c.d.zero())]),
        p.class_of,
        p.class_of[static_cast<size_t>(c.a.one())],
        p.class_of[static_cast<size_t>(c.d.zero())],
        c.iom};
    return out;
}

/// Returns (F commutative in X, every DS of X/F commutative); the two
/// booleans are asserted equal.
inline std::pair<bool, bool> check_commutativity_transfer(const FilterCtx& c,
                                                          ElementSubset f) {
    const bool f_comm = is_commutative_ds(c, f).ok;
    const QuotientResult q = quotient(c, f);
    const FilterCtx qc(q.algebra);
    bool all_comm = true;
    for (const ElementSubset& ds :
         enumerate_subfamilies(qc, SubfamilyKind::DeductiveSystem))
        if (!is_commutative_ds(qc, ds).ok) all_comm = false;
    if (f_comm != all_comm)
        throw CongruenceError("internal error: commutativity transfer equivalence "
                              "violated");
    return {f_comm, all_comm};
}

}  // namespace ioma
