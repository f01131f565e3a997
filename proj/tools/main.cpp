// permcx command line: exact checks for bounded complexes of permutation
// modules over elementary abelian p-groups.
//
// Exit codes: 0 success, 1 negative mathematical finding (where the command
// contract says so), 2 malformed input or violated input invariants.

#include "permcx/json_io.hpp"
#include "permcx/selftest.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace permcx;

namespace {

struct GroupFlag {
    int p = 0;
    int r = -1;
    bool set() const { return p > 0 && r >= 0; }
};

GroupFlag parse_group(const std::string& text) {
    GroupFlag g;
    int p = 0, r = -1;
    if (std::sscanf(text.c_str(), "p=%d,r=%d", &p, &r) != 2)
        throw Error("--group expects the form p=<prime>,r=<rank>");
    g.p = p;
    g.r = r;
    validate_group({g.p, g.r});
    return g;
}

void write_out(const std::string& path, const json& j) {
    if (path.empty()) return;
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error("cannot write output file: " + path);
    f << dump_json(j);
}

void emit(const std::string& format, const std::string& out_path, const json& report,
          const std::string& text) {
    if (format == "json")
        std::cout << dump_json(report);
    else
        std::cout << text;
    write_out(out_path, report);
}

std::string complex_summary(const BoundedComplex& c) {
    std::ostringstream os;
    os << c.terms.size() << " terms";
    if (!c.terms.empty()) {
        os << ", dims ";
        for (std::size_t i = 0; i < c.terms.size(); ++i) {
            if (i) os << ",";
            os << c.terms[i].dim;
        }
        os << " over " << c.terms[0].field->describe() << ", group "
           << c.terms[0].group.describe();
    }
    return os.str();
}

std::string pad_left(const std::string& s, std::size_t width) {
    return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

std::string render_table(const std::vector<std::vector<int>>& table) {
    std::ostringstream os;
    if (table.empty()) return "(empty table)\n";
    const std::size_t cols = table[0].size();
    os << "  j |";
    for (std::size_t i = 0; i < cols; ++i) os << " " << pad_left("C^" + std::to_string(i), 5);
    os << "\n----+" << std::string(cols * 6, '-') << "\n";
    for (std::size_t j = 0; j < table.size(); ++j) {
        os << pad_left(std::to_string(j), 3) << " |";
        for (int v : table[j]) os << " " << pad_left(std::to_string(v), 5);
        os << "\n";
    }
    return os.str();
}

void check_group_matches(const GroupFlag& flag, const ElemAbGroup& g, const char* what) {
    if (!flag.set()) return;
    if (flag.p != g.p || flag.r != g.r)
        throw Error(std::string(what) + ": file is over " + g.describe() +
                    " but --group says C_" + std::to_string(flag.p) + "^" +
                    std::to_string(flag.r));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact contractibility and cohomology checks for bounded complexes of "
                 "permutation modules over elementary abelian p-groups"};
    app.require_subcommand(1);

    std::string group_text, format = "text", out_path;
    app.add_option("--group", group_text, "ambient group, p=<prime>,r=<rank>");
    app.add_option("--format", format, "stdout format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--out", out_path, "write the JSON report to this path");

    auto* cmd_cond =
        app.add_subcommand("check-condition", "test the index-p chain condition on a collection");
    std::string cond_subs;
    cmd_cond->add_option("--subgroups", cond_subs, "collection JSON")->required();

    auto* cmd_verify =
        app.add_subcommand("verify-complex", "validate a complex, decide exactness and "
                                             "contractibility, optionally against a collection");
    std::string verify_complex_path, verify_subs;
    bool expect_contractible = false, expect_exact = false;
    cmd_verify->add_option("--complex", verify_complex_path, "complex JSON")->required();
    cmd_verify->add_option("--subgroups", verify_subs, "collection JSON for the full criterion");
    cmd_verify->add_flag("--expect-contractible", expect_contractible,
                         "exit 1 when the complex is not contractible");
    cmd_verify->add_flag("--expect-exact", expect_exact, "exit 1 when the complex is not exact");

    auto* cmd_cex = app.add_subcommand("counterexample",
                                       "certified non-contractible complex from an index-p pair");
    std::vector<std::string> pair_paths;
    int cex_ext = 1;
    cmd_cex->add_option("--pair", pair_paths, "subgroup JSON files: inner outer")
        ->expected(2)
        ->required();
    cmd_cex->add_option("--field-ext", cex_ext, "field extension degree e (default 1)");

    auto* cmd_nec =
        app.add_subcommand("necessity", "one certified counterexample per violating pair");
    std::string nec_subs;
    int nec_ext = 1;
    cmd_nec->add_option("--subgroups", nec_subs, "collection JSON")->required();
    cmd_nec->add_option("--field-ext", nec_ext, "field extension degree e (default 1)");

    auto* cmd_pair = app.add_subcommand("regular-pair",
                                        "avoidance pair for a top-rank/lower split collection");
    std::string pair_top, pair_lower;
    int pair_ext = 1;
    cmd_pair->add_option("--top", pair_top, "top-rank collection JSON")->required();
    cmd_pair->add_option("--lower", pair_lower, "lower collection JSON (may list zero subgroups)");
    cmd_pair->add_option("--field-ext", pair_ext, "starting field extension degree e");

    auto* cmd_coh = app.add_subcommand("cohomology", "dim H^j(G, M) for 0 <= j <= J");
    std::string coh_module = "trivial", coh_subgroup;
    int coh_degree = 6, coh_ext = 1;
    cmd_coh->add_option("--module", coh_module, "trivial, free, or a GModule JSON path");
    cmd_coh->add_option("--subgroup", coh_subgroup,
                        "subgroup JSON: use the permutation module on its cosets");
    cmd_coh->add_option("--max-degree", coh_degree, "top degree J (default 6)");
    cmd_coh->add_option("--field-ext", coh_ext, "field extension degree e (default 1)");

    auto* cmd_e1 = app.add_subcommand("e1-table", "table of dim H^j(G, C^i) for a complex");
    std::string e1_complex;
    int e1_degree = 4;
    cmd_e1->add_option("--complex", e1_complex, "complex JSON")->required();
    cmd_e1->add_option("--max-degree", e1_degree, "top degree J (default 4)");

    auto* cmd_self = app.add_subcommand("selftest", "run the acceptance criteria");
    std::string self_filter;
    cmd_self->add_option("--filter", self_filter, "only criteria whose id/name/tags match");

    for (CLI::App* sub : app.get_subcommands([](CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        const GroupFlag gflag = group_text.empty() ? GroupFlag{} : parse_group(group_text);

        if (*cmd_cond) {
            const auto h = collection_from_json(parse_json_file(cond_subs));
            if (!h.empty()) check_group_matches(gflag, h[0].group(), "check-condition");
            const auto rep = check_chain_condition(h);
            std::ostringstream text;
            text << "subgroups: " << h.size() << "\n"
                 << "chain condition: " << (rep.ok ? "ok" : "VIOLATED") << "\n";
            for (const auto& v : rep.violations)
                text << "  " << v.sub.describe() << " < " << v.super.describe() << " (index "
                     << v.sub.group().p << ")\n";
            emit(format, out_path, chain_report_to_json(rep), text.str());
            return rep.ok ? 0 : 1;
        }

        if (*cmd_verify) {
            const auto c = complex_from_json(parse_json_file(verify_complex_path));
            if (!c.terms.empty()) check_group_matches(gflag, c.terms[0].group, "verify-complex");
            json report;
            std::ostringstream text;
            text << "complex: " << complex_summary(c) << "\nvalid: yes\n";
            bool exact, contractible;
            if (!verify_subs.empty()) {
                const auto h = collection_from_json(parse_json_file(verify_subs));
                const auto rep = check_collection_criterion(h, c);
                report = criterion_report_to_json(rep);
                exact = rep.exactness.exact;
                contractible = rep.contractibility.contractible;
                text << "membership: " << membership_name(rep.membership) << "\n"
                     << "chain condition: " << (rep.condition.ok ? "ok" : "VIOLATED") << "\n"
                     << "exact: " << (exact ? "yes" : "NO") << "\n"
                     << "contractible: " << (contractible ? "yes" : "NO") << "\n"
                     << "verdict: " << verdict_name(rep.verdict) << "\n";
            } else {
                const auto ex = is_exact(c);
                const auto ct = is_contractible(c);
                exact = ex.exact;
                contractible = ct.contractible;
                report["valid"] = true;
                report["exact"] = exactness_to_json(ex);
                report["contractible"] = ct.contractible;
                if (ct.certificate) report["certificate"] = homotopy_to_json(*ct.certificate);
                text << "exact: " << (exact ? "yes" : "NO") << " (homology";
                for (int d : ex.homology_dims) text << " " << d;
                text << ")\ncontractible: " << (contractible ? "yes" : "NO") << "\n";
            }
            emit(format, out_path, report, text.str());
            if (expect_contractible && !contractible) return 1;
            if (expect_exact && !exact) return 1;
            return 0;
        }

        if (*cmd_cex) {
            const auto inner = subgroup_from_json(parse_json_file(pair_paths[0]));
            const auto outer = subgroup_from_json(parse_json_file(pair_paths[1]));
            check_group_matches(gflag, inner.group(), "counterexample");
            const auto field = Field::make(inner.group().p, cex_ext);
            const auto rep = chain_pair_counterexample(inner, outer, field);
            std::ostringstream text;
            text << "pair: " << inner.describe() << " < " << outer.describe() << "\n"
                 << "complex: " << complex_summary(rep.complex) << "\n"
                 << "exact: " << (rep.exact ? "yes" : "NO") << "\n"
                 << "contractible: " << (rep.contractible ? "yes" : "NO") << "\n";
            emit(format, out_path, counterexample_to_json(rep), text.str());
            return 0;
        }

        if (*cmd_nec) {
            const auto h = collection_from_json(parse_json_file(nec_subs));
            if (h.empty()) throw Error("necessity: empty collection");
            check_group_matches(gflag, h[0].group(), "necessity");
            const auto field = Field::make(h[0].group().p, nec_ext);
            const auto reports = necessity_report(h, field);
            json out = json::array();
            std::ostringstream text;
            text << "violating pairs: " << reports.size() << "\n";
            for (const auto& r : reports) {
                out.push_back(counterexample_to_json(r));
                text << "  " << r.sub.describe() << " < " << r.super.describe() << "  "
                     << complex_summary(r.complex) << "  exact=" << r.exact
                     << " contractible=" << r.contractible << "\n";
            }
            if (reports.empty()) text << "chain condition holds; nothing to build\n";
            emit(format, out_path, out, text.str());
            return 0;
        }

        if (*cmd_pair) {
            const auto top = collection_from_json(parse_json_file(pair_top));
            SubgroupCollection lower;
            if (!pair_lower.empty()) lower = collection_from_json(parse_json_file(pair_lower));
            if (!top.empty()) check_group_matches(gflag, top[0].group(), "regular-pair");
            const auto start = top.empty() ? nullptr : Field::make(top[0].group().p, pair_ext);
            const auto pair = find_avoidance_pair(top, lower, start);
            const auto check = verify_avoidance_pair(pair.u, pair.v, top, lower);
            json report = avoidance_to_json(pair);
            report["verified"] = check.ok;
            std::ostringstream text;
            text << "u = " << pair.u.describe() << "\n"
                 << "v = " << pair.v.describe() << "\n"
                 << "field used: " << pair.field_used->describe() << "\n"
                 << "verified: " << (check.ok ? "yes" : "NO") << "\n";
            emit(format, out_path, report, text.str());
            return 0;
        }

        if (*cmd_coh) {
            GModule m{{2, 1}, Field::make(2), 0, {}, std::nullopt};
            if (!coh_subgroup.empty()) {
                const auto s = subgroup_from_json(parse_json_file(coh_subgroup));
                check_group_matches(gflag, s.group(), "cohomology");
                m = make_permutation(s, Field::make(s.group().p, coh_ext));
            } else if (coh_module == "trivial" || coh_module == "free") {
                if (!gflag.set())
                    throw Error("cohomology: --group is required for the named modules");
                m = coh_module == "trivial"
                        ? make_trivial({gflag.p, gflag.r}, Field::make(gflag.p, coh_ext), 1)
                        : make_free({gflag.p, gflag.r}, Field::make(gflag.p, coh_ext), 1);
            } else {
                m = module_from_json(parse_json_file(coh_module));
                check_group_matches(gflag, m.group, "cohomology");
            }
            const auto dims = cohomology_dims(m, coh_degree);
            json report;
            report["module_dim"] = m.dim;
            report["max_degree"] = coh_degree;
            report["dims"] = dims;
            std::ostringstream text;
            text << "module: dim " << m.dim << " over " << m.field->describe() << ", group "
                 << m.group.describe() << "\ndim H^j:";
            for (int d : dims) text << " " << d;
            text << "\n";
            emit(format, out_path, report, text.str());
            return 0;
        }

        if (*cmd_e1) {
            const auto c = complex_from_json(parse_json_file(e1_complex));
            if (!c.terms.empty()) check_group_matches(gflag, c.terms[0].group, "e1-table");
            const auto table = e1_dimension_table(c, e1_degree);
            json report;
            report["max_degree"] = e1_degree;
            report["table"] = table;
            emit(format, out_path, report,
                 "complex: " + complex_summary(c) + "\n" + render_table(table));
            return 0;
        }

        if (*cmd_self) {
            const auto results = permcx::selftest::run_acceptance(self_filter);
            if (results.empty()) throw Error("selftest: no criteria match '" + self_filter + "'");
            bool all_pass = true;
            json out = json::array();
            std::ostringstream text;
            for (const auto& r : results) {
                all_pass = all_pass && r.pass;
                json entry;
                entry["id"] = r.id;
                entry["name"] = r.name;
                entry["pass"] = r.pass;
                entry["detail"] = r.detail;
                out.push_back(std::move(entry));
                text << (r.pass ? "[PASS] " : "[FAIL] ") << r.id << " " << r.name << ": "
                     << r.detail << "\n";
            }
            text << (all_pass ? "selftest: all criteria passed\n" : "selftest: FAILURES present\n");
            if (!out_path.empty()) {
                std::string err;
                if (!permcx::selftest::write_reports(results, out_path, &err))
                    throw Error("selftest: " + err);
                text << "reports written to " << out_path << "\n";
            }
            if (format == "json")
                std::cout << dump_json(out);
            else
                std::cout << text.str();
            return all_pass ? 0 : 1;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
