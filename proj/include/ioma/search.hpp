#pragma once

// Isomorphism-reduced exhaustive generation of small bounded involutive
// algebras, canonical forms, and constraint-driven model search.

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "ioma/algebra.hpp"
#include "ioma/classify.hpp"

namespace ioma {

/// Permutation-minimal relabeling of the arrow table.  Permutations map the
/// designated one to index n-1 (and zero to index 0 when present), so two
/// algebras have equal canonical forms iff a constant-fixing isomorphism
/// exists between them.
struct CanonicalForm {
    int n = 0;
    std::vector<int> arrow;  // row-major, relabeled

    friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
    friend bool operator<(const CanonicalForm& l, const CanonicalForm& r) {
        return l.n != r.n ? l.n < r.n : l.arrow < r.arrow;
    }
};

inline constexpr int kCanonicalizeMaxN = 8;

inline CanonicalForm canonicalize(const FiniteAlgebra& a) {
    const int n = a.size();
    if (n > kCanonicalizeMaxN)
        throw AlgebraError("canonicalization limited to n <= " +
                           std::to_string(kCanonicalizeMaxN));
    std::vector<int> middles;
    for (int i = 0; i < n; ++i)
        if (i != a.one() && !(a.has_zero() && i == a.zero())) middles.push_back(i);
    std::sort(middles.begin(), middles.end());

    CanonicalForm best;
    best.n = n;
    std::vector<int> perm(static_cast<size_t>(n));  // old index -> new index
    std::vector<int> table(static_cast<size_t>(n) * n);
    do {
        perm[static_cast<size_t>(a.one())] = n - 1;
        if (a.has_zero()) perm[static_cast<size_t>(a.zero())] = 0;
        int slot = a.has_zero() ? 1 : 0;
        for (int m : middles) perm[static_cast<size_t>(m)] = slot++;
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                table[static_cast<size_t>(perm[static_cast<size_t>(x)]) * n +
                      perm[static_cast<size_t>(y)]] =
                    perm[static_cast<size_t>(a.arrow(x, y))];
        if (best.arrow.empty() || table < best.arrow) best.arrow = table;
    } while (std::next_permutation(middles.begin(), middles.end()));
    return best;
}

inline constexpr int kExhaustiveSearchMaxN = 5;

namespace detail {

inline std::vector<std::string> census_names(int n) {
    std::vector<std::string> names;
    names.push_back("0");
    for (int i = 1; i < n - 1; ++i) names.push_back(std::string(1, char('a' + i - 1)));
    if (n > 1) names.push_back("1");
    return names;
}

inline bool table_is_bounded_involutive_be(const std::vector<int>& m, int n) {
    const int one = n - 1;
    auto arr = [&](int x, int y) { return m[static_cast<size_t>(x) * n + y]; };
    for (int x = 0; x < n; ++x) {
        if (arr(x, x) != one) return false;            // BE1
        if (arr(x, one) != one) return false;          // BE2
        if (arr(one, x) != x) return false;            // BE3
        if (arr(0, x) != one) return false;            // bounded
        if (arr(arr(x, 0), 0) != x) return false;      // involutive
    }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                if (arr(x, arr(y, z)) != arr(y, arr(x, z))) return false;  // BE4
    return true;
}

}  // namespace detail

/// Streams one canonical representative per isomorphism class of bounded
/// involutive BE algebras of size n (zero at index 0, one at index n-1).
/// The star column is chosen first as an involutive permutation swapping
/// 0 and 1; the involution identity x->y = y*->x* mirrors the remaining
/// free cells, and full tables are checked against BE1-BE4 before emission.
inline void enumerate_models(int n, const std::function<void(const FiniteAlgebra&)>& emit) {
    if (n < 1 || n > kExhaustiveSearchMaxN)
        throw AlgebraError("exhaustive enumeration limited to 1 <= n <= " +
                           std::to_string(kExhaustiveSearchMaxN));
    if (n == 1) {
        emit(FiniteAlgebra::validate({"1"}, {{0}}, 0, 0));
        return;
    }
    const int one = n - 1;
    const std::vector<std::string> names = detail::census_names(n);
    std::set<CanonicalForm> seen;

    // All involutions of the middle elements 1..n-2.
    std::vector<std::vector<int>> sigmas;
    {
        std::vector<int> sigma(static_cast<size_t>(n), -1);
        sigma[0] = one;
        sigma[static_cast<size_t>(one)] = 0;
        std::function<void()> rec = [&] {
            int i = -1;
            for (int m = 1; m <= n - 2; ++m)
                if (sigma[static_cast<size_t>(m)] == -1) { i = m; break; }
            if (i < 0) {
                sigmas.push_back(sigma);
                return;
            }
            sigma[static_cast<size_t>(i)] = i;  // fixed point
            rec();
            for (int j = i + 1; j <= n - 2; ++j)
                if (sigma[static_cast<size_t>(j)] == -1) {
                    sigma[static_cast<size_t>(i)] = j;
                    sigma[static_cast<size_t>(j)] = i;
                    rec();
                    sigma[static_cast<size_t>(j)] = -1;
                }
            sigma[static_cast<size_t>(i)] = -1;
        };
        rec();
    }

    std::vector<int> table(static_cast<size_t>(n) * n, -1);
    auto cell = [&](int x, int y) -> int& { return table[static_cast<size_t>(x) * n + y]; };

    for (const std::vector<int>& sigma : sigmas) {
        for (auto& v : table) v = -1;
        for (int x = 0; x < n; ++x) {
            cell(x, x) = one;
            cell(x, one) = one;
            cell(one, x) = x;
            cell(0, x) = one;
            cell(x, 0) = sigma[static_cast<size_t>(x)];
        }
        // Free cells: distinct middle pairs not forced by the mirror of an
        // earlier cell.
        std::vector<std::pair<int, int>> free_cells;
        for (int x = 1; x <= n - 2; ++x)
            for (int y = 1; y <= n - 2; ++y)
                if (x != y && cell(x, y) == -1) {
                    const int mx = sigma[static_cast<size_t>(y)];
                    const int my = sigma[static_cast<size_t>(x)];
                    const bool mirrored_earlier =
                        (mx >= 1 && mx <= n - 2 && my >= 1 && my <= n - 2) &&
                        (mx < x || (mx == x && my < y));
                    if (!mirrored_earlier) free_cells.emplace_back(x, y);
                }
        std::function<void(size_t)> fill = [&](size_t idx) {
            if (idx == free_cells.size()) {
                const std::vector<int>& full = table;
                if (!detail::table_is_bounded_involutive_be(full, n)) return;
                std::vector<std::vector<int>> rows(static_cast<size_t>(n));
                for (int x = 0; x < n; ++x)
                    rows[static_cast<size_t>(x)] =
                        std::vector<int>(full.begin() + static_cast<long>(x) * n,
                                         full.begin() + static_cast<long>(x + 1) * n);
                FiniteAlgebra a = FiniteAlgebra::validate(names, rows, one, 0);
                CanonicalForm cf = canonicalize(a);
                if (seen.insert(cf).second) emit(a);
                return;
            }
            const auto [x, y] = free_cells[idx];
            // sigma maps middles to middles, so the mirror is a middle cell.
            const int mx = sigma[static_cast<size_t>(y)];
            const int my = sigma[static_cast<size_t>(x)];
            const bool self_mirror = (mx == x && my == y);
            for (int v = 0; v < n; ++v) {
                cell(x, y) = v;
                if (!self_mirror) cell(mx, my) = v;
                fill(idx + 1);
                if (!self_mirror) cell(mx, my) = -1;
            }
            cell(x, y) = -1;
        };
        fill(0);
    }
}

struct ModelSpec {
    int n = 0;
    std::vector<std::string> require;  // class names: iom, qw, om, prel, iom2
    std::vector<std::string> forbid;
    int limit = 0;  // 0 = unlimited
};

struct SearchResult {
    std::vector<FiniteAlgebra> models;           // canonical-form order
    std::map<std::string, int> census;           // per-class counts, all models
    int total = 0;                               // isomorphism classes enumerated
};

namespace detail {

inline bool has_class(const ClassificationReport& rep, const std::string& cls) {
    if (cls == "be") return rep.is_be;
    if (cls == "bounded") return rep.is_bounded;
    if (cls == "involutive-be") return rep.is_involutive_be;
    if (cls == "iom") return rep.is_iom;
    if (cls == "qw") return rep.is_qw;
    if (cls == "om") return rep.is_om;
    if (cls == "prel") return rep.axiom_holds("Prel");
    if (cls == "iom2") return rep.axiom_holds("IOM2");
    throw AlgebraError("unknown class name: " + cls);
}

}  // namespace detail

/// Enumerates size-n models, filters them through classification, and
/// returns matches (up to the limit) in canonical-form lexicographic order
/// plus a census of class counts over the whole enumeration.
inline SearchResult find_models(const ModelSpec& spec) {
    for (const auto& r : spec.require)
        for (const auto& f : spec.forbid)
            if (r == f) throw AlgebraError("class both required and forbidden: " + r);
    SearchResult out;
    for (const char* cls : {"involutive-be", "iom", "qw", "om", "prel"})
        out.census[cls] = 0;
    std::vector<std::pair<CanonicalForm, FiniteAlgebra>> matches;
    enumerate_models(spec.n, [&](const FiniteAlgebra& a) {
        ++out.total;
        const ClassificationReport rep = classify(a);
        for (auto& [cls, count] : out.census)
            if (detail::has_class(rep, cls)) ++count;
        bool keep = true;
        for (const auto& cls : spec.require)
            if (!detail::has_class(rep, cls)) keep = false;
        for (const auto& cls : spec.forbid)
            if (detail::has_class(rep, cls)) keep = false;
        if (keep) matches.emplace_back(canonicalize(a), a);
    });
    std::sort(matches.begin(), matches.end(),
              [](const auto& l, const auto& r) { return l.first < r.first; });
    for (auto& [cf, a] : matches) {
        if (spec.limit > 0 && static_cast<int>(out.models.size()) >= spec.limit) break;
        out.models.push_back(std::move(a));
    }
    return out;
}

}  // namespace ioma
