#pragma once

// Axiom checks and classification of a finite algebra into the classes
// BE / bounded / involutive BE / IOM / QW / OM, with first-failure witnesses.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ioma/algebra.hpp"

namespace ioma {

struct AxiomResult {
    enum class Status { Holds, Fails, NotEvaluated };
    std::string axiom_id;
    Status status = Status::NotEvaluated;
    std::vector<int> witness;  // lexicographically first failing tuple
    std::string reason;        // set when NotEvaluated

    bool holds() const { return status == Status::Holds; }
};

/// The (odot, *, 1) signature obtained from an involutive algebra via
/// x odot y = (x -> y*)*.
struct ProductForm {
    int n = 0;
    int one = 0;
    int zero = 0;
    std::vector<int> odot;  // row-major
    std::vector<int> star;

    int mul(int x, int y) const { return odot[static_cast<size_t>(x) * n + y]; }
    int neg(int x) const { return star[static_cast<size_t>(x)]; }
    int plus(int x, int y) const { return neg(mul(neg(x), neg(y))); }
};

inline ProductForm to_product_form(const FiniteAlgebra& a) {
    DerivedTables d(a);
    ProductForm p;
    p.n = a.size();
    p.one = a.one();
    p.zero = a.zero();
    p.odot.resize(static_cast<size_t>(p.n) * p.n);
    p.star.resize(static_cast<size_t>(p.n));
    for (int x = 0; x < p.n; ++x) {
        p.star[static_cast<size_t>(x)] = d.star(x);
        for (int y = 0; y < p.n; ++y)
            p.odot[static_cast<size_t>(x) * p.n + y] = d.odot(x, y);
    }
    return p;
}

namespace detail {

/// Evaluates a k-variable identity over all tuples in lexicographic order;
/// records the first failing tuple.
inline AxiomResult check_tuples(const std::string& id, int n, int arity,
                                const std::function<bool(int, int, int)>& pred) {
    AxiomResult r;
    r.axiom_id = id;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < (arity >= 2 ? n : 1); ++y)
            for (int z = 0; z < (arity >= 3 ? n : 1); ++z)
                if (!pred(x, y, z)) {
                    r.status = AxiomResult::Status::Fails;
                    r.witness.assign({x, y, z});
                    r.witness.resize(static_cast<size_t>(arity));
                    return r;
                }
    r.status = AxiomResult::Status::Holds;
    return r;
}

}  // namespace detail

/// Known axiom identifiers: BE1..BE4, bounded, involutive, IOM, IOM',
/// QW, QW1, QW2, IOM2, IOM2', Prel.
inline AxiomResult check_axiom(const FiniteAlgebra& a, const std::string& axiom_id) {
    const int n = a.size();
    const int one = a.one();
    auto arr = [&](int x, int y) { return a.arrow(x, y); };

    if (axiom_id == "BE1")
        return detail::check_tuples(axiom_id, n, 1,
                                    [&](int x, int, int) { return arr(x, x) == one; });
    if (axiom_id == "BE2")
        return detail::check_tuples(axiom_id, n, 1,
                                    [&](int x, int, int) { return arr(x, one) == one; });
    if (axiom_id == "BE3")
        return detail::check_tuples(axiom_id, n, 1,
                                    [&](int x, int, int) { return arr(one, x) == x; });
    if (axiom_id == "BE4")
        return detail::check_tuples(axiom_id, n, 3, [&](int x, int y, int z) {
            return arr(x, arr(y, z)) == arr(y, arr(x, z));
        });
    if (axiom_id == "Prel")
        return detail::check_tuples(axiom_id, n, 2, [&](int x, int y, int) {
            const int xy = arr(x, y), yx = arr(y, x);
            return arr(arr(xy, yx), yx) == one;
        });

    if (axiom_id == "bounded") {
        AxiomResult r;
        r.axiom_id = axiom_id;
        if (!a.has_zero()) {
            r.reason = "no designated zero";
            return r;
        }
        const int zero = a.zero();
        return detail::check_tuples(axiom_id, n, 1,
                                    [&](int x, int, int) { return arr(zero, x) == one; });
    }
    if (axiom_id == "involutive") {
        AxiomResult r;
        r.axiom_id = axiom_id;
        if (!a.has_zero()) {
            r.reason = "no designated zero";
            return r;
        }
        const int zero = a.zero();
        return detail::check_tuples(axiom_id, n, 1, [&](int x, int, int) {
            return arr(arr(x, zero), zero) == x;
        });
    }

    // Everything below needs the derived operations.
    DerivedTables d(a);
    auto cap = [&](int x, int y) { return d.sqcap(x, y); };
    auto cup = [&](int x, int y) { return d.sqcup(x, y); };

    if (axiom_id == "IOM")
        return detail::check_tuples(axiom_id, n, 2, [&](int x, int y, int) {
            return cap(x, arr(y, x)) == x;
        });
    if (axiom_id == "IOM'")
        return detail::check_tuples(axiom_id, n, 2, [&](int x, int y, int) {
            return cap(x, arr(d.star(x), y)) == x;
        });
    if (axiom_id == "QW")
        return detail::check_tuples(axiom_id, n, 3, [&](int x, int y, int z) {
            return arr(x, cap(cap(x, y), cap(z, x))) == cap(arr(x, y), arr(x, z));
        });
    if (axiom_id == "QW1")
        return detail::check_tuples(axiom_id, n, 2, [&](int x, int y, int) {
            return arr(x, cap(x, y)) == arr(x, y);
        });
    if (axiom_id == "QW2")
        return detail::check_tuples(axiom_id, n, 3, [&](int x, int y, int z) {
            return arr(x, cap(y, cap(z, x))) == cap(arr(x, y), arr(x, z));
        });
    if (axiom_id == "IOM2")
        return detail::check_tuples(axiom_id, n, 2, [&](int x, int y, int) {
            return arr(cap(x, y), cap(y, x)) == one;
        });
    if (axiom_id == "IOM2'")
        return detail::check_tuples(axiom_id, n, 2, [&](int x, int y, int) {
            return arr(cup(x, y), cup(y, x)) == one;
        });

    throw AlgebraError("unknown axiom id: " + axiom_id);
}

/// Evaluates the m-BE / orthomodular axioms on a product-form view.
inline std::vector<AxiomResult> check_om(const ProductForm& p) {
    const int n = p.n;
    std::vector<AxiomResult> out;
    out.push_back(detail::check_tuples("PU", n, 1, [&](int x, int, int) {
        return p.mul(p.one, x) == x && p.mul(x, p.one) == x;
    }));
    out.push_back(detail::check_tuples("Pcomm", n, 2, [&](int x, int y, int) {
        return p.mul(x, y) == p.mul(y, x);
    }));
    out.push_back(detail::check_tuples("Pass", n, 3, [&](int x, int y, int z) {
        return p.mul(x, p.mul(y, z)) == p.mul(p.mul(x, y), z);
    }));
    out.push_back(detail::check_tuples("m-L", n, 1, [&](int x, int, int) {
        return p.mul(x, p.zero) == p.zero;
    }));
    out.push_back(detail::check_tuples("m-Re", n, 1, [&](int x, int, int) {
        return p.mul(x, p.neg(x)) == p.zero;
    }));
    out.push_back(detail::check_tuples("Pom", n, 2, [&](int x, int y, int) {
        const int xy = p.mul(x, y);
        return p.plus(xy, p.mul(p.neg(xy), x)) == x;
    }));
    return out;
}

struct ClassificationReport {
    std::vector<AxiomResult> axioms;
    bool is_be = false;
    bool is_bounded = false;
    bool is_involutive_be = false;
    bool is_iom = false;
    bool is_qw = false;
    bool is_om = false;

    const AxiomResult* find(const std::string& id) const {
        for (const auto& r : axioms)
            if (r.axiom_id == id) return &r;
        return nullptr;
    }
    bool axiom_holds(const std::string& id) const {
        const AxiomResult* r = find(id);
        return r && r->holds();
    }
};

/// Full classification. Structural axioms run first; derived-operation
/// axioms and the translated m-BE axioms are reported as not-evaluated
/// (with the blocking reason) on algebras that do not support them.
inline ClassificationReport classify(const FiniteAlgebra& a) {
    ClassificationReport rep;
    for (const char* id : {"BE1", "BE2", "BE3", "BE4"})
        rep.axioms.push_back(check_axiom(a, id));
    rep.is_be = rep.axiom_holds("BE1") && rep.axiom_holds("BE2") &&
                rep.axiom_holds("BE3") && rep.axiom_holds("BE4");
    rep.axioms.push_back(check_axiom(a, "bounded"));
    rep.axioms.push_back(check_axiom(a, "involutive"));
    rep.is_bounded = rep.axiom_holds("bounded");
    rep.is_involutive_be = rep.is_be && rep.is_bounded && rep.axiom_holds("involutive");

    const std::vector<std::string> derived_ids = {"IOM", "IOM'", "QW",
                                                  "QW1", "QW2", "IOM2", "IOM2'"};
    if (rep.is_involutive_be) {
        for (const auto& id : derived_ids) rep.axioms.push_back(check_axiom(a, id));
        rep.axioms.push_back(check_axiom(a, "Prel"));
        for (auto& r : check_om(to_product_form(a))) rep.axioms.push_back(std::move(r));
        rep.is_iom = rep.axiom_holds("IOM");
        rep.is_qw = rep.axiom_holds("QW");
        rep.is_om = rep.axiom_holds("PU") && rep.axiom_holds("Pcomm") &&
                    rep.axiom_holds("Pass") && rep.axiom_holds("m-L") &&
                    rep.axiom_holds("m-Re") && rep.axiom_holds("Pom");
        // (QW) must agree with QW1 & QW2; a divergence is an internal fault.
        const bool qw_split = rep.axiom_holds("QW1") && rep.axiom_holds("QW2");
        if (rep.is_qw != qw_split)
            throw AlgebraError("internal error: (QW) disagrees with (QW1)&(QW2)");
    } else {
        const std::string why = !rep.is_be          ? "not a BE algebra"
                                : !a.has_zero()     ? "no designated zero"
                                : !rep.is_bounded   ? "not bounded"
                                                    : "not involutive";
        auto na = [&](const std::string& id) {
            AxiomResult r;
            r.axiom_id = id;
            r.reason = why;
            rep.axioms.push_back(std::move(r));
        };
        for (const auto& id : derived_ids) na(id);
        rep.axioms.push_back(check_axiom(a, "Prel"));  // needs arrow only
        for (const char* id : {"PU", "Pcomm", "Pass", "m-L", "m-Re", "Pom"}) na(id);
    }
    return rep;
}

}  // namespace ioma
