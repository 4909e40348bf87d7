// Command-line front end for the finite-algebra workbench.
//
// Exit codes: 0 = success and all asserted checks passed,
//             1 = a check failed (witness printed),
//             2 = usage or parse error.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ioma/algebra.hpp"
#include "ioma/classify.hpp"
#include "ioma/congruence.hpp"
#include "ioma/filters.hpp"
#include "ioma/io.hpp"
#include "ioma/laws.hpp"
#include "ioma/search.hpp"

using nlohmann::json;
using namespace ioma;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(0, 0, "cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json algebra_json(const FiniteAlgebra& a) {
    json j;
    j["elements"] = a.names();
    j["one"] = a.name(a.one());
    if (a.has_zero()) j["zero"] = a.name(a.zero());
    json rows = json::array();
    for (int x = 0; x < a.size(); ++x) {
        json row = json::array();
        for (int y = 0; y < a.size(); ++y) row.push_back(a.name(a.arrow(x, y)));
        rows.push_back(row);
    }
    j["arrow"] = rows;
    return j;
}

std::vector<std::string> witness_names(const FiniteAlgebra& a, const std::vector<int>& w) {
    std::vector<std::string> out;
    for (int i : w) out.push_back(a.name(i));
    return out;
}

std::string subset_str(const FiniteAlgebra& a, ElementSubset s) {
    std::string out = "{";
    bool first = true;
    for (int x : s.elements()) {
        if (!first) out += ",";
        out += a.name(x);
        first = false;
    }
    return out + "}";
}

ElementSubset parse_element_list(const FiniteAlgebra& a, const std::string& list) {
    ElementSubset s;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front())))
            item.erase(item.begin());
        while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back())))
            item.pop_back();
        if (item.empty()) continue;
        const int idx = a.index_of(item);
        if (idx < 0) throw ParseError(0, 0, "unknown element name '" + item + "'");
        s.add(idx);
    }
    return s;
}

struct Output {
    json j;
    bool as_json = false;
    std::ostringstream human;

    explicit Output(const std::string& command, bool json_mode) : as_json(json_mode) {
        j["command"] = command;
        j["algebra"] = json::object();
        j["results"] = json::array();
        j["witnesses"] = json::array();
        j["census"] = json::object();
    }
    void set_algebra(const FiniteAlgebra& a) { j["algebra"] = algebra_json(a); }
    void add_witness(const FiniteAlgebra& a, const std::string& name,
                     const std::vector<int>& w) {
        j["witnesses"].push_back({{"name", name}, {"elements", witness_names(a, w)}});
    }
    int finish(int code) {
        j["exit"] = code;
        if (as_json)
            std::cout << j.dump(2) << "\n";
        else
            std::cout << human.str();
        return code;
    }
};

const char* status_str(AxiomResult::Status s) {
    switch (s) {
        case AxiomResult::Status::Holds: return "holds";
        case AxiomResult::Status::Fails: return "fails";
        case AxiomResult::Status::NotEvaluated: return "not-evaluated";
    }
    return "?";
}

int cmd_classify(const FiniteAlgebra& a, Output& out) {
    out.set_algebra(a);
    const ClassificationReport rep = classify(a);
    for (const AxiomResult& r : rep.axioms) {
        json e{{"name", r.axiom_id}, {"status", status_str(r.status)}};
        if (!r.reason.empty()) e["reason"] = r.reason;
        if (r.status == AxiomResult::Status::Fails) {
            e["witness"] = witness_names(a, r.witness);
            out.add_witness(a, r.axiom_id, r.witness);
        }
        out.j["results"].push_back(e);
        out.human << r.axiom_id << ": " << status_str(r.status);
        if (r.status == AxiomResult::Status::Fails) {
            out.human << " (witness:";
            for (int w : r.witness) out.human << " " << a.name(w);
            out.human << ")";
        }
        if (!r.reason.empty()) out.human << " [" << r.reason << "]";
        out.human << "\n";
    }
    json classes{{"be", rep.is_be},
                 {"bounded", rep.is_bounded},
                 {"involutive-be", rep.is_involutive_be},
                 {"iom", rep.is_iom},
                 {"qw", rep.is_qw},
                 {"om", rep.is_om}};
    out.j["results"].push_back({{"name", "classes"}, {"value", classes}});
    out.human << "classes: be=" << rep.is_be << " bounded=" << rep.is_bounded
              << " involutive-be=" << rep.is_involutive_be << " iom=" << rep.is_iom
              << " qw=" << rep.is_qw << " om=" << rep.is_om << "\n";
    return out.finish(0);
}

int cmd_laws(const FiniteAlgebra& a, const std::string& suite, Output& out) {
    out.set_algebra(a);
    const SuiteReport rep = run_suite(a, suite);
    for (const LawVerdict& v : rep.verdicts) {
        json e{{"name", v.law_id}};
        switch (v.status) {
            case LawVerdict::Status::Pass:
                e["status"] = "pass";
                out.human << v.law_id << ": pass\n";
                break;
            case LawVerdict::Status::Fail:
                e["status"] = "fail";
                e["witness"] = witness_names(a, v.witness);
                out.add_witness(a, v.law_id, v.witness);
                out.human << v.law_id << ": FAIL (witness:";
                for (int w : v.witness) out.human << " " << a.name(w);
                out.human << ")\n";
                break;
            case LawVerdict::Status::NotApplicable:
                e["status"] = "not-applicable";
                e["missing_class"] = v.missing_class;
                out.human << v.law_id << ": not applicable (needs "
                          << v.missing_class << ")\n";
                break;
        }
        out.j["results"].push_back(e);
    }
    out.human << "passed " << rep.passed << ", failed " << rep.failed
              << ", not applicable " << rep.not_applicable << "\n";
    return out.finish(rep.failed ? 1 : 0);
}

int cmd_filters(const FiniteAlgebra& a, const std::string& kind, bool with_class,
                Output& out) {
    out.set_algebra(a);
    const FilterCtx c(a);
    const SubfamilyKind k =
        kind == "ds" ? SubfamilyKind::DeductiveSystem : SubfamilyKind::Filter;
    for (const ElementSubset& s : enumerate_subfamilies(c, k)) {
        json e{{"members", witness_names(a, s.elements())}};
        out.human << subset_str(a, s);
        if (with_class && k == SubfamilyKind::Filter) {
            const FilterClassification fc = classify_filter(c, s);
            e["proper"] = fc.is_proper;
            e["ds"] = fc.is_ds;
            e["maximal"] = fc.is_maximal;
            e["strongly_maximal"] = fc.is_strongly_maximal;
            e["commutative"] = fc.is_commutative;
            out.human << " proper=" << fc.is_proper << " ds=" << fc.is_ds
                      << " maximal=" << fc.is_maximal
                      << " strongly_maximal=" << fc.is_strongly_maximal
                      << " commutative=" << fc.is_commutative;
        }
        out.j["results"].push_back(e);
        out.human << "\n";
    }
    return out.finish(0);
}

int cmd_generate(const FiniteAlgebra& a, const std::string& elements, Output& out) {
    out.set_algebra(a);
    const FilterCtx c(a);
    const ElementSubset y = parse_element_list(a, elements);
    const ElementSubset f = generated_filter(c, y);
    out.j["results"].push_back({{"name", "generated"},
                                {"members", witness_names(a, f.elements())}});
    out.human << "[" << subset_str(a, y).substr(1, subset_str(a, y).size() - 2)
              << "] = " << subset_str(a, f) << "\n";
    return out.finish(0);
}

int cmd_congruence(const FiniteAlgebra& a, const std::string& ds_list, Output& out) {
    out.set_algebra(a);
    const FilterCtx c(a);
    const ElementSubset f = parse_element_list(a, ds_list);
    const SubsetVerdict dv = is_ds(c, f);
    if (!dv.ok) {
        out.j["results"].push_back({{"name", "is_ds"}, {"status", "fail"},
                                    {"reason", dv.reason}});
        out.add_witness(a, "is_ds:" + dv.reason, dv.witness);
        out.human << "not a deductive system (" << dv.reason << ")\n";
        return out.finish(1);
    }
    const Partition p = congruence_from_ds(c, f);
    std::vector<std::vector<std::string>> classes(static_cast<size_t>(p.class_count));
    for (int x = 0; x < a.size(); ++x)
        classes[static_cast<size_t>(p.class_of[static_cast<size_t>(x)])].push_back(
            a.name(x));
    for (const auto& cls : classes) {
        out.j["results"].push_back({{"members", cls}});
        out.human << "{";
        for (size_t i = 0; i < cls.size(); ++i) out.human << (i ? "," : "") << cls[i];
        out.human << "}\n";
    }
    out.human << p.class_count << " classes\n";
    return out.finish(0);
}

int cmd_quotient(const FiniteAlgebra& a, const std::string& ds_list,
                 const std::string& out_path, Output& out) {
    out.set_algebra(a);
    const FilterCtx c(a);
    const ElementSubset f = parse_element_list(a, ds_list);
    if (!is_ds(c, f).ok) {
        out.human << "not a deductive system\n";
        out.j["results"].push_back({{"name", "is_ds"}, {"status", "fail"}});
        return out.finish(1);
    }
    const QuotientResult q = quotient(c, f);
    out.j["results"].push_back({{"name", "quotient"}, {"value", algebra_json(q.algebra)}});
    if (!q.supported_regime)
        out.j["results"].push_back({{"name", "warning"},
                                    {"value", "input is not IOM; quotient regime unsupported"}});
    out.human << serialize_alg(q.algebra);
    if (!q.supported_regime)
        out.human << "# warning: input is not IOM; quotient regime unsupported\n";
    if (!out_path.empty()) {
        std::ofstream os(out_path, std::ios::binary);
        os << serialize_alg(q.algebra);
    }
    return out.finish(0);
}

int cmd_transfer(const FiniteAlgebra& a, const std::string& ds_list, Output& out) {
    out.set_algebra(a);
    const FilterCtx c(a);
    const ElementSubset f = parse_element_list(a, ds_list);
    if (!is_ds(c, f).ok) {
        out.human << "not a deductive system\n";
        out.j["results"].push_back({{"name", "is_ds"}, {"status", "fail"}});
        return out.finish(1);
    }
    const auto [f_comm, all_comm] = check_commutativity_transfer(c, f);
    out.j["results"].push_back({{"name", "ds_commutative"}, {"value", f_comm}});
    out.j["results"].push_back({{"name", "quotient_all_ds_commutative"}, {"value", all_comm}});
    out.human << "F commutative: " << (f_comm ? "yes" : "no")
              << "; all DS of X/F commutative: " << (all_comm ? "yes" : "no") << "\n";
    return out.finish(0);
}

int cmd_state(const FiniteAlgebra& a, const std::string& values, Output& out) {
    out.set_algebra(a);
    const FilterCtx c(a);
    const RationalState s = parse_state(values, a);
    const BosbachVerdict v = verify_bosbach(c, s);
    if (!v.accepted) {
        out.j["results"].push_back({{"name", "bosbach"}, {"status", "rejected"},
                                    {"reason", v.reason}});
        out.add_witness(a, v.reason, v.witness);
        out.human << "rejected (" << v.reason << ")";
        if (!v.witness.empty()) {
            out.human << " witness:";
            for (int w : v.witness) out.human << " " << a.name(w);
        }
        out.human << "\n";
        return out.finish(1);
    }
    out.j["results"].push_back({{"name", "bosbach"}, {"status", "accepted"}});
    out.j["results"].push_back({{"name", "kernel"},
                                {"members", witness_names(a, v.kernel.elements())},
                                {"commutative_ds", v.kernel_commutative_ds}});
    out.human << "accepted; kernel " << subset_str(a, v.kernel)
              << (v.kernel_commutative_ds ? " (commutative DS)\n" : "\n");
    return out.finish(0);
}

int cmd_search(int size, const std::string& require, const std::string& forbid,
               int limit, Output& out) {
    ModelSpec spec;
    spec.n = size;
    spec.limit = limit;
    auto split = [](const std::string& s) {
        std::vector<std::string> out;
        std::stringstream ss(s);
        std::string item;
        while (std::getline(ss, item, ','))
            if (!item.empty()) out.push_back(item);
        return out;
    };
    spec.require = split(require);
    spec.forbid = split(forbid);
    const std::vector<std::string> known = {"be",  "bounded", "involutive-be",
                                            "iom", "qw",      "om",
                                            "prel", "iom2"};
    for (const auto& list : {spec.require, spec.forbid})
        for (const auto& cls : list)
            if (std::find(known.begin(), known.end(), cls) == known.end()) {
                std::cerr << "unknown class name: " << cls << "\n";
                std::exit(2);
            }
    const SearchResult res = find_models(spec);
    for (const FiniteAlgebra& m : res.models) {
        out.j["results"].push_back(algebra_json(m));
        out.human << serialize_alg(m) << "\n";
    }
    for (const auto& [cls, count] : res.census) out.j["census"][cls] = count;
    out.j["census"]["total"] = res.total;
    out.human << "census (n=" << size << "): total=" << res.total;
    for (const auto& [cls, count] : res.census) out.human << " " << cls << "=" << count;
    out.human << "\nmatches: " << out.j["results"].size() << "\n";
    return out.finish(0);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-algebra workbench for implication algebras"};
    app.require_subcommand(1);
    app.fallthrough();  // accept the global --json after a subcommand name
    bool json_mode = false;
    app.add_flag("--json", json_mode, "structured output");

    std::string file, suite = "all", kind = "filter", elements, ds_list, values;
    std::string out_path, require_list, forbid_list;
    bool with_class = false;
    int size = 0, limit = 0;

    auto* c_classify = app.add_subcommand("classify", "classify an algebra");
    c_classify->add_option("file", file)->required();

    auto* c_laws = app.add_subcommand("laws", "run law suites");
    c_laws->add_option("file", file)->required();
    c_laws->add_option("--suite", suite, "be|bounded-be|involutive-be|iom|qw|all")
        ->check(CLI::IsMember({"be", "bounded-be", "involutive-be", "iom", "qw", "all"}));

    auto* c_filters = app.add_subcommand("filters", "enumerate filters or DS");
    c_filters->add_option("file", file)->required();
    c_filters->add_option("--kind", kind)->check(CLI::IsMember({"filter", "ds"}));
    c_filters->add_flag("--classify", with_class, "classify each filter");

    auto* c_generate = app.add_subcommand("generate", "generated filter");
    c_generate->add_option("file", file)->required();
    c_generate->add_option("--elements", elements, "comma-separated generators")->required();

    auto* c_congruence = app.add_subcommand("congruence", "DS-induced congruence classes");
    c_congruence->add_option("file", file)->required();
    c_congruence->add_option("--ds", ds_list, "comma-separated DS members")->required();

    auto* c_quotient = app.add_subcommand("quotient", "quotient algebra by a DS");
    c_quotient->add_option("file", file)->required();
    c_quotient->add_option("--ds", ds_list)->required();
    c_quotient->add_option("-o,--output", out_path, "write quotient .alg file");

    auto* c_transfer = app.add_subcommand("transfer", "commutativity transfer check");
    c_transfer->add_option("file", file)->required();
    c_transfer->add_option("--ds", ds_list)->required();

    auto* c_state = app.add_subcommand("state", "verify a Bosbach state");
    c_state->add_option("file", file)->required();
    c_state->add_option("--values", values, "name=p/q assignments")->required();

    auto* c_search = app.add_subcommand("search", "enumerate small models");
    c_search->add_option("--size", size)->required();
    c_search->add_option("--require", require_list, "comma-separated class names");
    c_search->add_option("--forbid", forbid_list, "comma-separated class names");
    c_search->add_option("--limit", limit, "max models to emit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        CLI::App* sub = app.get_subcommands().front();
        Output out(sub->get_name(), json_mode);
        if (sub == c_search) return cmd_search(size, require_list, forbid_list, limit, out);

        FiniteAlgebra a = [&] {
            try {
                return parse_alg(read_file(file));
            } catch (const ParseError& e) {
                std::cerr << file << ": " << e.what() << "\n";
                std::exit(2);
            }
        }();

        if (sub == c_classify) return cmd_classify(a, out);
        if (sub == c_laws) return cmd_laws(a, suite, out);
        if (sub == c_filters) return cmd_filters(a, kind, with_class, out);
        if (sub == c_generate) return cmd_generate(a, elements, out);
        if (sub == c_congruence) return cmd_congruence(a, ds_list, out);
        if (sub == c_quotient) return cmd_quotient(a, ds_list, out_path, out);
        if (sub == c_transfer) return cmd_transfer(a, ds_list, out);
        if (sub == c_state) return cmd_state(a, values, out);
        std::cerr << "unknown subcommand\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const AlgebraError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
