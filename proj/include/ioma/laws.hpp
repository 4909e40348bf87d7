#pragma once

// Registry of algebraic laws checked exhaustively over all element tuples,
// with first-counterexample witnesses.  Law identifiers follow the usual
// lemma/proposition numbering for these structures (L2.1.*, P2.2.*, ...,
// P3.10.*) so a report can be read against the source statements directly.

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "ioma/algebra.hpp"
#include "ioma/classify.hpp"

namespace ioma {

enum class LawClass { BE, BoundedBE, InvolutiveBE, IOM, QW };

inline const char* law_class_name(LawClass c) {
    switch (c) {
        case LawClass::BE: return "be";
        case LawClass::BoundedBE: return "bounded-be";
        case LawClass::InvolutiveBE: return "involutive-be";
        case LawClass::IOM: return "iom";
        case LawClass::QW: return "qw";
    }
    return "?";
}

/// Evaluation context: the derived operations written out as formulas over
/// the arrow table, so bounded-only laws do not require an involution.
struct LawCtx {
    const FiniteAlgebra& a;
    int one;
    int zero;  // -1 when absent

    int arr(int x, int y) const { return a.arrow(x, y); }
    int st(int x) const { return arr(x, zero); }
    int cup(int x, int y) const { return arr(arr(x, y), y); }
    int cap(int x, int y) const { return st(cup(st(x), st(y))); }
    int od(int x, int y) const { return st(arr(x, st(y))); }
    bool le(int x, int y) const { return arr(x, y) == one; }
    bool lq(int x, int y) const { return x == cap(x, y); }
};

struct Law {
    std::string id;
    int arity;  // 1..3
    bool conditional;
    LawClass applicability;
    std::function<bool(const LawCtx&, int, int, int)> eval;
};

struct LawVerdict {
    enum class Status { Pass, Fail, NotApplicable };
    std::string law_id;
    Status status = Status::NotApplicable;
    std::vector<int> witness;
    std::string missing_class;  // set when NotApplicable
};

struct SuiteReport {
    std::string suite;
    std::vector<LawVerdict> verdicts;
    int passed = 0;
    int failed = 0;
    int not_applicable = 0;
};

/// The complete law registry, built once.
inline const std::vector<Law>& law_registry() {
    static const std::vector<Law> registry = [] {
        std::vector<Law> v;
        auto add = [&](const char* id, int arity, bool cond, LawClass cls,
                       std::function<bool(const LawCtx&, int, int, int)> f) {
            v.push_back(Law{id, arity, cond, cls, std::move(f)});
        };
        using C = const LawCtx&;
        const auto BE = LawClass::BE;
        const auto BND = LawClass::BoundedBE;
        const auto INV = LawClass::InvolutiveBE;
        const auto IOM = LawClass::IOM;
        const auto QW = LawClass::QW;

        // L2.1.* group
        add("L2.1.1", 2, false, BE,
            [](C c, int x, int y, int) { return c.arr(x, c.arr(y, x)) == c.one; });
        add("L2.1.2", 2, false, BE,
            [](C c, int x, int y, int) { return c.le(x, c.cup(x, y)); });
        add("L2.1.3", 2, false, BND,
            [](C c, int x, int y, int) { return c.arr(x, c.st(y)) == c.arr(y, c.st(x)); });
        add("L2.1.4", 1, false, BND,
            [](C c, int x, int, int) { return c.le(x, c.st(c.st(x))); });
        add("L2.1.5", 2, false, INV,
            [](C c, int x, int y, int) { return c.arr(c.st(x), y) == c.arr(c.st(y), x); });
        add("L2.1.6", 2, false, INV,
            [](C c, int x, int y, int) { return c.arr(c.st(x), c.st(y)) == c.arr(y, x); });
        add("L2.1.7", 3, false, INV, [](C c, int x, int y, int z) {
            return c.arr(c.st(c.arr(x, y)), z) == c.arr(x, c.arr(c.st(y), z));
        });
        add("L2.1.8", 3, false, INV, [](C c, int x, int y, int z) {
            return c.arr(x, c.arr(y, z)) == c.arr(c.st(c.arr(x, c.st(y))), z);
        });
        add("L2.1.9", 2, false, INV, [](C c, int x, int y, int) {
            const int u = c.arr(c.st(x), y);
            return c.arr(c.st(u), u) ==
                   c.arr(c.st(c.arr(c.st(x), x)), c.arr(c.st(y), y));
        });

        // P2.2.* group
        add("P2.2.1", 2, true, INV, [](C c, int x, int y, int) {
            return !c.lq(x, y) || (x == c.cap(y, x) && y == c.cup(x, y));
        });
        add("P2.2.2", 2, true, INV, [](C c, int x, int y, int) {
            return c.lq(x, x) && (!(c.lq(x, y) && c.lq(y, x)) || x == y);
        });
        add("P2.2.3", 2, false, INV, [](C c, int x, int y, int) {
            return c.cap(x, y) == c.st(c.cup(c.st(x), c.st(y))) &&
                   c.cup(x, y) == c.st(c.cap(c.st(x), c.st(y)));
        });
        add("P2.2.4", 2, true, INV,
            [](C c, int x, int y, int) { return !c.lq(x, y) || c.le(x, y); });
        add("P2.2.5", 1, false, INV,
            [](C c, int x, int, int) { return c.lq(c.zero, x) && c.lq(x, c.one); });
        add("P2.2.6", 1, false, INV, [](C c, int x, int, int) {
            return c.cap(c.zero, x) == c.zero && c.cap(x, c.zero) == c.zero &&
                   c.cap(c.one, x) == x && c.cap(x, c.one) == x;
        });
        add("P2.2.7", 3, false, INV, [](C c, int x, int y, int z) {
            return c.arr(c.cap(x, y), z) == c.arr(c.arr(y, x), c.arr(y, z));
        });
        add("P2.2.8", 3, false, INV, [](C c, int x, int y, int z) {
            return c.arr(z, c.cup(x, y)) == c.arr(c.arr(x, y), c.arr(z, y));
        });
        add("P2.2.9", 2, false, INV, [](C c, int x, int y, int) {
            const int m = c.cap(x, y), j = c.cup(x, y);
            return c.le(m, x) && c.le(m, y) && c.le(x, j) && c.le(y, j);
        });
        add("P2.2.10", 2, false, INV, [](C c, int x, int y, int) {
            return c.cap(x, c.cap(y, x)) == c.cap(y, x) &&
                   c.cap(x, c.cap(x, y)) == c.cap(x, y);
        });

        // P2.3.* group
        add("P2.3.1", 3, true, INV, [](C c, int x, int y, int z) {
            return !(c.lq(x, z) && c.lq(y, z) && c.arr(z, x) == c.arr(z, y)) || x == y;
        });
        add("P2.3.2", 3, false, INV, [](C c, int x, int y, int z) {
            const int u = c.arr(y, z);
            return c.arr(c.arr(x, u), c.st(x)) == c.st(c.cap(u, x));
        });
        add("P2.3.3", 3, false, INV, [](C c, int x, int y, int z) {
            return c.arr(x, c.cup(c.st(c.arr(y, c.st(x))), z)) == c.cup(y, c.arr(x, z));
        });
        add("P2.3.4", 3, false, INV, [](C c, int x, int y, int z) {
            return c.arr(c.cap(c.arr(y, x), z), x) == c.cup(y, c.arr(z, x));
        });
        add("P2.3.5", 2, true, INV, [](C c, int x, int y, int) {
            return !c.lq(x, y) || c.od(c.arr(y, x), y) == x;
        });
        add("P2.3.6", 3, false, INV, [](C c, int x, int y, int z) {
            return c.arr(x, c.od(z, c.st(y))) == c.st(c.od(c.arr(z, y), x));
        });
        add("P2.3.7", 2, false, INV, [](C c, int x, int y, int) {
            return c.cap(c.cup(x, y), y) == y && c.cup(c.cap(x, y), y) == y;
        });

        // P2.4.* group (QW)
        add("P2.4.1", 2, false, QW, [](C c, int x, int y, int) {
            return c.arr(x, c.cap(y, x)) == c.arr(x, y) &&
                   c.arr(c.arr(x, y), c.cap(y, x)) == x;
        });
        add("P2.4.2", 2, false, QW, [](C c, int x, int y, int) {
            return c.lq(x, c.arr(c.st(x), y)) && c.lq(x, c.arr(y, x));
        });
        add("P2.4.3", 2, false, QW, [](C c, int x, int y, int) {
            return (c.arr(x, y) == c.zero) == (x == c.one && y == c.zero);
        });
        add("P2.4.4", 2, false, QW, [](C c, int x, int y, int) {
            const int u = c.st(c.arr(x, y));
            return c.cap(u, x) == u;
        });
        add("P2.4.5", 2, false, QW, [](C c, int x, int y, int) {
            return c.cap(c.cap(x, y), y) == c.cap(x, y) &&
                   c.cup(c.cup(x, y), y) == c.cup(x, y);
        });
        add("P2.4.6", 2, false, QW, [](C c, int x, int y, int) {
            return c.cup(x, c.cap(y, x)) == x && c.cap(x, c.cup(y, x)) == x;
        });
        add("P2.4.7", 2, false, QW, [](C c, int x, int y, int) {
            return c.lq(c.cap(x, y), y) && c.lq(y, c.cup(x, y));
        });
        add("P2.4.8", 2, false, QW, [](C c, int x, int y, int) {
            return c.arr(c.cup(x, y), x) == c.arr(y, x) &&
                   c.arr(c.cup(y, x), x) == c.arr(y, x);
        });
        add("P2.4.9", 2, false, QW, [](C c, int x, int y, int) {
            return c.arr(c.cup(x, y), y) == c.arr(x, y) &&
                   c.arr(c.cup(y, x), y) == c.arr(x, y);
        });
        add("P2.4.10", 2, true, QW, [](C c, int x, int y, int) {
            return c.le(x, y) == (c.cap(y, x) == x);
        });

        // P2.5.* group (QW, hypotheses x <=Q y)
        add("P2.5.1", 2, true, QW, [](C c, int x, int y, int) {
            return !c.lq(x, y) || c.cup(y, x) == y;
        });
        add("P2.5.2", 2, true, QW, [](C c, int x, int y, int) {
            return !c.lq(x, y) || c.lq(c.st(y), c.st(x));
        });
        add("P2.5.3", 3, true, QW, [](C c, int x, int y, int z) {
            return !c.lq(x, y) || (c.lq(c.arr(y, z), c.arr(x, z)) &&
                                   c.lq(c.arr(z, x), c.arr(z, y)));
        });
        add("P2.5.4", 3, true, QW, [](C c, int x, int y, int z) {
            return !c.lq(x, y) || (c.lq(c.cap(x, z), c.cap(y, z)) &&
                                   c.lq(c.cup(x, z), c.cup(y, z)));
        });

        // P2.6.* group (QW)
        add("P2.6.1", 3, false, QW, [](C c, int x, int y, int z) {
            return c.cap(c.cap(x, y), c.cap(y, z)) == c.cap(c.cap(x, y), z);
        });
        add("P2.6.2", 3, true, QW, [](C c, int x, int y, int z) {
            return !(c.lq(x, y) && c.lq(y, z)) || c.lq(x, z);
        });
        add("P2.6.3", 2, false, QW, [](C c, int x, int y, int) {
            return c.lq(c.cup(x, y), c.arr(c.st(x), y));
        });
        add("P2.6.4", 2, false, QW, [](C c, int x, int y, int) {
            const int u = c.arr(c.st(x), y);
            return c.arr(c.st(u), c.st(c.arr(x, c.st(y)))) == u;
        });
        add("P2.6.5", 2, false, QW, [](C c, int x, int y, int) {
            return c.arr(c.st(c.arr(x, y)), c.st(c.arr(y, x))) == c.arr(x, y);
        });
        add("P2.6.6", 2, false, QW, [](C c, int x, int y, int) {
            return c.arr(c.arr(y, x), c.arr(x, y)) == c.arr(x, y);
        });
        add("P2.6.7", 2, false, QW, [](C c, int x, int y, int) {
            return c.cup(c.arr(x, y), c.arr(y, x)) == c.one;
        });
        add("P2.6.8", 3, false, QW, [](C c, int x, int y, int z) {
            return c.arr(c.cap(z, x), c.cap(y, x)) == c.arr(c.cap(z, x), y);
        });

        // P2.7.* group (QW)
        add("P2.7.1", 3, false, QW, [](C c, int x, int y, int z) {
            return c.arr(x, c.arr(y, z)) == c.arr(c.od(x, y), z);
        });
        add("P2.7.2", 3, true, QW, [](C c, int x, int y, int z) {
            return !c.lq(x, c.arr(y, z)) || c.le(c.od(x, y), z);
        });
        add("P2.7.3", 3, true, QW, [](C c, int x, int y, int z) {
            return !c.le(c.od(x, y), z) || c.le(x, c.arr(y, z));
        });
        add("P2.7.4", 2, false, QW, [](C c, int x, int y, int) {
            return c.le(c.od(c.arr(x, y), x), y);
        });
        add("P2.7.5", 3, true, QW, [](C c, int x, int y, int z) {
            return !c.lq(x, y) || c.lq(c.od(x, z), c.od(y, z));
        });
        add("P2.7.6", 2, true, QW, [](C c, int x, int y, int) {
            return !c.lq(x, y) || c.od(c.arr(y, x), y) == x;
        });
        add("P2.7.7", 3, false, QW, [](C c, int x, int y, int z) {
            return c.arr(x, c.od(z, c.st(y))) == c.st(c.od(c.arr(z, y), x));
        });

        // P3.5.* group (IOM)
        add("P3.5.1", 2, false, IOM, [](C c, int x, int y, int) {
            return c.cap(x, c.cup(y, x)) == x && c.cup(x, c.cap(y, x)) == x;
        });
        add("P3.5.2", 2, true, IOM, [](C c, int x, int y, int) {
            return !c.lq(x, y) || (c.cup(y, x) == y && c.lq(c.st(y), c.st(x)));
        });
        add("P3.5.3", 3, true, IOM, [](C c, int x, int y, int z) {
            return !c.lq(x, y) || (c.lq(c.arr(y, z), c.arr(x, z)) &&
                                   c.lq(c.arr(z, x), c.arr(z, y)));
        });
        add("P3.5.4", 3, true, IOM, [](C c, int x, int y, int z) {
            return !c.lq(x, y) || (c.lq(c.cap(x, z), c.cap(y, z)) &&
                                   c.lq(c.cup(x, z), c.cup(y, z)));
        });
        add("P3.5.5", 3, true, IOM, [](C c, int x, int y, int z) {
            return !c.lq(x, y) || c.cup(c.arr(z, y), c.arr(z, x)) == c.arr(z, y);
        });

        // P3.6.* group (IOM)
        add("P3.6.1", 2, false, IOM, [](C c, int x, int y, int) {
            return c.cup(c.arr(x, y), y) == c.arr(x, y);
        });
        add("P3.6.2", 2, false, IOM, [](C c, int x, int y, int) {
            return c.arr(c.arr(x, y), c.cap(y, x)) == x;
        });
        add("P3.6.3", 2, false, IOM, [](C c, int x, int y, int) {
            return c.arr(x, c.cap(y, x)) == c.arr(x, y);
        });
        add("P3.6.4", 2, false, IOM, [](C c, int x, int y, int) {
            return c.arr(c.cup(x, y), c.st(c.arr(x, y))) == c.st(y);
        });
        add("P3.6.5", 3, false, IOM, [](C c, int x, int y, int z) {
            return c.cap(x, c.cap(c.arr(y, x), c.arr(z, x))) == x;
        });
        add("P3.6.6", 2, true, IOM, [](C c, int x, int y, int) {
            return c.le(x, y) == (c.cap(y, x) == x);
        });
        add("P3.6.7", 2, true, IOM, [](C c, int x, int y, int) {
            return !(c.lq(x, y) && c.le(y, x)) || x == y;
        });
        add("P3.6.8", 2, false, IOM, [](C c, int x, int y, int) {
            return c.lq(c.cap(x, y), y) && c.lq(y, c.cup(x, y));
        });
        add("P3.6.9", 2, false, IOM, [](C c, int x, int y, int) {
            return c.arr(c.cup(x, y), y) == c.arr(x, y);
        });
        add("P3.6.10", 2, false, IOM, [](C c, int x, int y, int) {
            return c.lq(c.cap(x, y), c.arr(x, y)) && c.lq(c.cap(y, x), c.arr(x, y));
        });

        // P3.8.* group (IOM)
        add("P3.8.1", 2, false, IOM, [](C c, int x, int y, int) {
            return c.cap(c.cap(x, y), y) == c.cap(x, y);
        });
        add("P3.8.2", 2, false, IOM,
            [](C c, int x, int y, int) { return c.cup(x, c.cap(y, x)) == x; });
        add("P3.8.3", 2, false, IOM,
            [](C c, int x, int y, int) { return c.cap(x, c.cup(y, x)) == x; });
        add("P3.8.4", 2, false, IOM, [](C c, int x, int y, int) {
            return c.lq(c.cap(x, y), y) && c.lq(y, c.cup(x, y));
        });
        add("P3.8.5", 3, false, IOM, [](C c, int x, int y, int z) {
            return c.cap(c.cap(x, y), c.cap(y, z)) == c.cap(c.cap(x, y), z);
        });
        add("P3.8.6", 3, false, IOM, [](C c, int x, int y, int z) {
            return c.cup(c.cup(x, y), c.cup(y, z)) == c.cup(c.cup(x, y), z);
        });
        add("P3.8.7", 3, true, IOM, [](C c, int x, int y, int z) {
            return !(c.lq(x, y) && c.lq(y, z)) || c.lq(x, z);
        });
        add("P3.8.8", 3, false, IOM, [](C c, int x, int y, int z) {
            const int u = c.arr(x, y);
            return c.cup(u, c.arr(x, c.cap(z, y))) == u;
        });
        add("P3.8.9", 3, false, IOM, [](C c, int x, int y, int z) {
            const int u = c.arr(x, y);
            return c.cup(u, c.arr(c.arr(z, x), y)) == u;
        });

        // P3.10.* group (IOM)
        add("P3.10.1", 3, false, IOM, [](C c, int x, int y, int z) {
            return c.arr(c.cap(z, x), c.cap(y, x)) == c.arr(c.cap(z, x), y);
        });
        add("P3.10.2", 2, false, IOM, [](C c, int x, int y, int) {
            const int u = c.st(c.arr(x, y));
            return c.cap(u, x) == u;
        });
        add("P3.10.3", 2, false, IOM, [](C c, int x, int y, int) {
            return c.cap(c.cap(x, y), y) == c.cap(x, y);
        });
        add("P3.10.4", 3, false, IOM, [](C c, int x, int y, int z) {
            return c.arr(x, c.arr(y, z)) == c.arr(c.od(x, y), z);
        });
        add("P3.10.5", 3, true, IOM, [](C c, int x, int y, int z) {
            return !c.lq(x, c.arr(y, z)) || c.le(c.od(x, y), z);
        });
        add("P3.10.6", 3, true, IOM, [](C c, int x, int y, int z) {
            return !c.le(c.od(x, y), z) || c.le(x, c.arr(y, z));
        });
        add("P3.10.7", 2, false, IOM, [](C c, int x, int y, int) {
            return c.le(c.od(c.arr(x, y), x), y);
        });
        add("P3.10.8", 3, true, IOM, [](C c, int x, int y, int z) {
            return !c.lq(x, y) || c.lq(c.od(x, z), c.od(y, z));
        });

        return v;
    }();
    return registry;
}

inline bool law_applicable(const ClassificationReport& rep, LawClass cls) {
    switch (cls) {
        case LawClass::BE: return rep.is_be;
        case LawClass::BoundedBE: return rep.is_be && rep.is_bounded;
        case LawClass::InvolutiveBE: return rep.is_involutive_be;
        case LawClass::IOM: return rep.is_iom;
        case LawClass::QW: return rep.is_qw;
    }
    return false;
}

/// Exhaustive evaluation of one law; never throws on inapplicable input.
inline LawVerdict check_law(const FiniteAlgebra& a, const ClassificationReport& rep,
                            const Law& law) {
    LawVerdict v;
    v.law_id = law.id;
    if (!law_applicable(rep, law.applicability)) {
        v.status = LawVerdict::Status::NotApplicable;
        v.missing_class = law_class_name(law.applicability);
        return v;
    }
    const LawCtx ctx{a, a.one(), a.has_zero() ? a.zero() : -1};
    const int n = a.size();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < (law.arity >= 2 ? n : 1); ++y)
            for (int z = 0; z < (law.arity >= 3 ? n : 1); ++z)
                if (!law.eval(ctx, x, y, z)) {
                    v.status = LawVerdict::Status::Fail;
                    v.witness.assign({x, y, z});
                    v.witness.resize(static_cast<size_t>(law.arity));
                    return v;
                }
    v.status = LawVerdict::Status::Pass;
    return v;
}

inline LawVerdict check_law(const FiniteAlgebra& a, const Law& law) {
    return check_law(a, classify(a), law);
}

/// Suites: "be", "bounded-be", "involutive-be", "iom", "qw", "all".
/// A suite selects the laws whose applicability class matches; "all" runs
/// the whole registry.
inline SuiteReport run_suite(const FiniteAlgebra& a, const std::string& suite) {
    std::vector<LawClass> wanted;
    if (suite == "all")
        wanted = {LawClass::BE, LawClass::BoundedBE, LawClass::InvolutiveBE,
                  LawClass::IOM, LawClass::QW};
    else if (suite == "be")
        wanted = {LawClass::BE};
    else if (suite == "bounded-be")
        wanted = {LawClass::BE, LawClass::BoundedBE};
    else if (suite == "involutive-be")
        wanted = {LawClass::BE, LawClass::BoundedBE, LawClass::InvolutiveBE};
    else if (suite == "iom")
        wanted = {LawClass::IOM};
    else if (suite == "qw")
        wanted = {LawClass::QW};
    else
        throw AlgebraError("unknown law suite: " + suite);

    const ClassificationReport rep = classify(a);
    SuiteReport out;
    out.suite = suite;
    for (const Law& law : law_registry()) {
        if (std::find(wanted.begin(), wanted.end(), law.applicability) == wanted.end())
            continue;
        LawVerdict v = check_law(a, rep, law);
        switch (v.status) {
            case LawVerdict::Status::Pass: ++out.passed; break;
            case LawVerdict::Status::Fail: ++out.failed; break;
            case LawVerdict::Status::NotApplicable: ++out.not_applicable; break;
        }
        out.verdicts.push_back(std::move(v));
    }
    // Registry construction already orders laws by statement; keep a stable
    // id ordering for reports regardless.
    std::sort(out.verdicts.begin(), out.verdicts.end(),
              [](const LawVerdict& l, const LawVerdict& r) { return l.law_id < r.law_id; });
    return out;
}

}  // namespace ioma
