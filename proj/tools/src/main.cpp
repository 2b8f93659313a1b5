#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "common.hpp"

namespace qplex::cli {
namespace {

struct GlobalOpts {
    std::string format = "pretty";
    std::string out_path;
};

// Runs fn with output routed to --out (or stdout) and errors mapped to the
// documented exit codes.
int run_command(const GlobalOpts& g, const std::function<int(std::ostream&)>& fn) {
    std::ofstream file;
    std::ostream* out = &std::cout;
    try {
        if (!g.out_path.empty()) {
            file.open(g.out_path);
            if (!file) fail(errc::bad_args, "cannot open output file " + g.out_path);
            out = &file;
        }
        return fn(*out);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
}

int cmd_grassmann(const GlobalOpts& g, const std::string& field_spec, int64_t n, int64_t k,
                  const std::string& sort, std::ostream& out) {
    if (n <= 0 || k < 0 || k > n) fail(errc::bad_args, "need 0 <= k <= n and n > 0");
    if (sort != "none" && sort != "lex") fail(errc::bad_args, "--sort takes lex or none");
    FieldPtr field = Field::parse(field_spec);
    std::vector<Subspace> spaces = enumerate_grassmannian(field, size_t(n), size_t(k));
    if (sort == "lex") spaces = sorted_by_cmp_q(std::move(spaces));
    BigInt count = gaussian_binomial(uint64_t(n), uint64_t(k), field->size());

    if (g.format == "pretty" || g.format == "tsv") {
        out << "q=" << field->to_string() << " n=" << n << "\n";
        for (const Subspace& s : spaces) out << s.to_string() << "\n";
        out << "# count=" << count << "\n";
    } else {
        ordered_json j;
        j["field"] = field->to_string();
        j["n"] = n;
        j["k"] = k;
        j["sort"] = sort;
        j["count"] = big_to_json(count);
        ordered_json rows = ordered_json::array();
        for (const Subspace& s : spaces) rows.push_back(s.to_string());
        j["subspaces"] = std::move(rows);
        emit_machine(j, "json", out);
    }
    return kExitOk;
}

int cmd_check(const GlobalOpts& g, const InputSelection& sel, std::ostream& out) {
    auto [c, desc] = build_complex(sel);

    auto [cert, sorted] = is_lex_shellable(c);
    SimplicialComplex K = order_complex(c, true);
    std::vector<Chain> chains = maximal_chains_sorted(c);
    ShellingCertificate chain_cert = is_simplicial_shelling(K, chain_facet_order(K, chains));

    bool pass = cert.ok && chain_cert.ok;
    ordered_json j;
    j["complex"] = desc;
    j["lex_shelling"] = cert_to_json(cert);
    j["order_complex"] = {{"vertices", K.vertex_count()},
                          {"facets", K.facets().size()},
                          {"dim", K.dim()}};
    j["chain_shelling"] = cert_to_json(chain_cert);
    j["pass"] = pass;

    if (g.format == "pretty") {
        out << "complex: " << desc.dump() << "\n";
        out << "facet shelling under cmp_q: " << (cert.ok ? "pass" : "FAIL") << "\n";
        out << "order complex: " << K.vertex_count() << " vertices, " << K.facets().size()
            << " maximal chains, dim " << K.dim() << "\n";
        out << "chain shelling under cmp_l: " << (chain_cert.ok ? "pass" : "FAIL");
        if (chain_cert.violation)
            out << "  (violating pair " << chain_cert.violation->first << ","
                << chain_cert.violation->second << ")";
        out << "\n";
    } else {
        emit_machine(j, g.format, out);
    }
    return pass ? kExitOk : kExitCheckFailed;
}

int cmd_homology(const GlobalOpts& g, const InputSelection& sel, const std::string& method,
                 const std::string& dump_path, std::ostream& out) {
    if (method != "formula" && method != "count" && method != "snf" && method != "all")
        fail(errc::bad_args, "--method takes formula, count, snf or all");
    auto [c, desc] = build_complex(sel);

    const bool want_formula = method == "formula" || method == "all";
    const bool want_count = method == "count" || method == "all";
    const bool want_snf = method == "snf" || method == "all";

    if (want_formula || want_count) {
        auto [cert, sorted] = is_lex_shellable(c);
        if (!cert.ok)
            fail(errc::method_unavailable,
                 "chain counting and the rank formula need a lexicographically shellable complex");
    }

    ordered_json j;
    j["complex"] = desc;

    std::optional<BettiBreakdown> formula;
    std::optional<int64_t> oracle, characterized;
    std::optional<HomologyReport> snf;

    if (want_formula) {
        formula = betti_formula(c);
        ordered_json f = betti_to_json(*formula);
        for (auto it = f.begin(); it != f.end(); ++it) j[it.key()] = it.value();
    }
    if (want_count) {
        oracle = count_homology_facets_oracle(c);
        characterized = count_homology_facets_characterized(c);
        j["oracle_count"] = *oracle;
        j["characterized_count"] = *characterized;
    }
    if (want_snf) {
        SimplicialComplex K = order_complex(c, true);
        snf = reduced_homology(K);
        j["snf"] = homology_to_json(*snf);
        if (!dump_path.empty()) {
            std::ofstream dump(dump_path);
            if (!dump) fail(errc::bad_args, "cannot open " + dump_path);
            dump_boundary_matrices(K, true, dump);
        }
    }

    bool agree = true;
    if (method == "all") {
        int top = int(c.dim()) - 1;
        BigInt reference = formula->rank;
        agree = BigInt(*oracle) == reference && BigInt(*characterized) == reference &&
                BigInt(snf->rank_at(top)) == reference && snf->torsion_free;
        for (const HomologyGroup& grp : snf->groups)
            if (grp.degree != top && grp.rank != 0) agree = false;
        j["agree"] = agree;
    }

    if (g.format == "pretty") {
        out << "complex: " << desc.dump() << "\n";
        if (formula) out << "rank formula: " << formula->rank << "\n";
        if (oracle) out << "restriction-chain count: " << *oracle
                        << " (characterized: " << *characterized << ")\n";
        if (snf) {
            out << "smith normal form:";
            for (const HomologyGroup& grp : snf->groups)
                out << "  H~" << grp.degree << " rank " << grp.rank
                    << (grp.torsion.empty() ? "" : " +torsion");
            out << "\n";
        }
        if (method == "all") out << "agree: " << (agree ? "yes" : "NO") << "\n";
    } else {
        emit_machine(j, g.format, out);
    }
    return agree ? kExitOk : kExitCheckFailed;
}

int cmd_mv_check(const GlobalOpts& g, const InputSelection& sel, std::ostream& out) {
    auto [c, desc] = build_complex(sel);
    MVReport rep = mayer_vietoris_stage_check(c, c.sorted_facets());

    ordered_json j;
    j["complex"] = desc;
    j["report"] = mv_to_json(rep);

    if (g.format == "pretty") {
        out << "complex: " << desc.dump() << "\n";
        for (const MVStage& st : rep.stages) {
            out << "stage " << st.stage << ": identity " << (st.identity_ok ? "ok" : "FAIL")
                << ", intersection " << (st.intersection_concentrated ? "concentrated" : "SPREAD")
                << ", torsion-free " << (st.torsion_free ? "yes" : "NO") << "\n";
        }
        out << "final betti (from degree -1):";
        for (int64_t b : rep.final_betti) out << " " << b;
        out << "\nresult: " << (rep.ok ? "pass" : "FAIL") << "\n";
    } else {
        emit_machine(j, g.format, out);
    }
    return rep.ok ? kExitOk : kExitCheckFailed;
}

// ---- reproduce scenarios ----------------------------------------------------

RankMetricCode load_example_code(const std::string& data_dir) {
    return RankMetricCode::load_file(data_dir + "/example_f16.gen");
}

QComplex load_example_facets(const std::string& data_dir) {
    std::ifstream in(data_dir + "/example_f16_facets.txt");
    if (!in) fail(errc::parse_error, "cannot open " + data_dir + "/example_f16_facets.txt");
    return QComplex::read_facets(in);
}

std::vector<CheckLine> scenario_example_f16(const std::string& data_dir) {
    std::vector<CheckLine> lines;
    RankMetricCode code = load_example_code(data_dir);
    FieldPtr f2 = code.base_field();

    QComplex expected = load_example_facets(data_dir);
    std::vector<Subspace> all3 = enumerate_grassmannian(f2, 4, 3);
    size_t full_rank = 0;
    std::optional<Subspace> missing;
    for (const Subspace& u : all3) {
        if (code.rank_of(u) == 3) ++full_rank;
        else missing = u;
    }
    lines.push_back({"fourteen-of-fifteen", full_rank == 14 && missing.has_value(),
                     "rank-3 count " + std::to_string(full_rank)});

    Subspace e134 = Subspace::span(f2, 4,
                                   {FieldVector::unit(f2, 4, 0), FieldVector::unit(f2, 4, 2),
                                    FieldVector::unit(f2, 4, 3)});
    bool missing_ok = missing && *missing == e134 && code.rank_of(*missing) == 2;
    lines.push_back({"missing-subspace", missing_ok,
                     missing ? missing->to_string() + " rank " + std::to_string(code.rank_of(*missing))
                             : "none"});

    auto kernel = code.pairing_matrix(e134).kernel_basis();
    FieldPtr f16 = code.extension_field();
    bool kernel_ok = kernel.size() == 1 &&
                     kernel[0] == FieldVector(f16, {1, f16->parse_element("a^3+a^2+a+1"),
                                                    f16->parse_element("a^2+a")});
    lines.push_back({"kernel-vector", kernel_ok, kernel.empty() ? "none" : kernel[0].to_string()});

    QComplex cx = QMatroid::from_code(code).matroid_complex();
    std::vector<Subspace> sorted = cx.sorted_facets();
    bool order_ok = sorted == expected.facets();
    lines.push_back({"facet-order", order_ok, std::to_string(sorted.size()) + " facets"});

    HomologyReport hom = reduced_homology(order_complex(cx, true));
    bool snf_ok = hom.rank_at(2) == 56 && hom.torsion_free && hom.concentrated_at == 2;
    lines.push_back({"homology-snf", snf_ok, "H~2 rank " + std::to_string(hom.rank_at(2))});

    int64_t oracle = count_homology_facets_oracle(cx);
    int64_t characterized = count_homology_facets_characterized(cx);
    lines.push_back({"restriction-count", oracle == 56 && characterized == 56,
                     "oracle " + std::to_string(oracle) + ", characterized " +
                         std::to_string(characterized) + ", expected 56"});

    BettiBreakdown bf = betti_formula(cx);
    lines.push_back({"rank-formula", bf.rank == 56, "formula " + bf.rank.str() + ", expected 56"});
    return lines;
}

std::vector<CheckLine> scenario_uniform_counts() {
    struct Row {
        uint32_t q, k, n;
        int64_t expected;
    };
    const std::vector<Row> rows = {{2, 1, 2, 2},  {2, 1, 3, 6},  {2, 2, 3, 8}, {2, 2, 4, 56},
                                   {2, 3, 4, 64}, {3, 1, 2, 3},  {3, 2, 3, 27}};
    std::vector<CheckLine> lines;
    for (const Row& r : rows) {
        FieldPtr field = Field::prime_field(r.q);
        QComplex c = QComplex::uniform(field, r.n, r.k);
        BettiBreakdown bf = betti_formula(c);
        int64_t oracle = count_homology_facets_oracle(c);
        HomologyReport hom = reduced_homology(order_complex(c, true));
        int top = int(r.k) - 1;
        bool concentrated = !hom.concentrated_at || *hom.concentrated_at == top;
        bool pass = bf.rank == r.expected && oracle == r.expected && hom.rank_at(top) == r.expected &&
                    hom.torsion_free && concentrated;
        std::ostringstream detail;
        detail << "q=" << r.q << " k=" << r.k << " n=" << r.n << " formula=" << bf.rank
               << " oracle=" << oracle << " snf=" << hom.rank_at(top) << " expected=" << r.expected;
        lines.push_back({"uniform-" + std::to_string(r.q) + "-" + std::to_string(r.k) + "-" +
                             std::to_string(r.n),
                         pass, detail.str()});
    }
    return lines;
}

std::vector<CheckLine> scenario_sphere_homology() {
    struct Row {
        uint32_t q, r;
        int64_t expected;
    };
    const std::vector<Row> rows = {{2, 1, 2}, {2, 2, 8}, {3, 1, 3}};
    std::vector<CheckLine> lines;
    for (const Row& row : rows) {
        FieldPtr field = Field::prime_field(row.q);
        QComplex c = QComplex::q_sphere(Subspace::full(field, row.r + 1));
        HomologyReport hom = reduced_homology(order_complex(c, true));
        int top = int(row.r) - 1;
        bool pass = hom.rank_at(top) == row.expected && hom.torsion_free &&
                    hom.concentrated_at == top;
        std::ostringstream detail;
        detail << "q=" << row.q << " r=" << row.r << " H~" << top << "=" << hom.rank_at(top)
               << " expected=" << row.expected;
        lines.push_back({"sphere-" + std::to_string(row.q) + "-" + std::to_string(row.r), pass,
                         detail.str()});
    }
    return lines;
}

std::vector<CheckLine> scenario_mv_recursion(const std::string& data_dir) {
    std::vector<CheckLine> lines;
    auto run = [&](const std::string& name, const QComplex& c, int64_t expected_top) {
        MVReport rep = mayer_vietoris_stage_check(c, c.sorted_facets());
        int64_t top = rep.final_betti.back();
        lines.push_back({name, rep.ok && top == expected_top,
                         "stages ok=" + std::string(rep.ok ? "yes" : "no") + " top betti " +
                             std::to_string(top) + " expected " + std::to_string(expected_top)});
    };
    FieldPtr f2 = Field::prime_field(2);
    run("mv-uniform-2-2-3", QComplex::uniform(f2, 3, 2), 8);
    run("mv-uniform-2-3-4", QComplex::uniform(f2, 4, 3), 64);
    run("mv-example-f16", QMatroid::from_code(load_example_code(data_dir)).matroid_complex(), 56);
    return lines;
}

std::vector<CheckLine> scenario_non_matroid_witness(const std::string& data_dir, std::ostream& out,
                                                    bool pretty) {
    std::vector<CheckLine> lines;
    QComplex cx = QMatroid::from_code(load_example_code(data_dir)).matroid_complex();
    auto w = non_matroid_witness(cx);
    bool pass = w && w->long_chain.size() == 3 && w->short_chain.size() == 2;
    if (w && pretty) {
        out << "restriction vertices: 0, <" << w->x1.to_string() << ">, <" << w->x2.to_string()
            << ">, [" << w->plane.to_string() << "]\n";
        out << "maximal chain of length 3: 0 < <" << w->x1.to_string() << "> < ["
            << w->plane.to_string() << "]\n";
        out << "maximal chain of length 2: 0 < <" << w->x2.to_string() << ">\n";
    }
    lines.push_back({"non-matroid-witness", pass,
                     w ? "chains of lengths " + std::to_string(w->long_chain.size()) + " and " +
                             std::to_string(w->short_chain.size())
                       : "no witness"});
    return lines;
}

int cmd_reproduce(const GlobalOpts& g, const std::string& id, const std::string& data_dir,
                  std::ostream& out) {
    std::vector<CheckLine> lines;
    bool pretty = g.format == "pretty";
    if (id == "example-f16") lines = scenario_example_f16(data_dir);
    else if (id == "uniform-counts") lines = scenario_uniform_counts();
    else if (id == "sphere-homology") lines = scenario_sphere_homology();
    else if (id == "mv-recursion") lines = scenario_mv_recursion(data_dir);
    else if (id == "non-matroid-witness") lines = scenario_non_matroid_witness(data_dir, out, pretty);
    else fail(errc::unknown_id, "unknown scenario " + id);

    bool all_pass = true;
    if (pretty) {
        for (const CheckLine& l : lines) {
            out << (l.pass ? "PASS" : "FAIL") << " " << l.name << " — " << l.detail << "\n";
            all_pass = all_pass && l.pass;
        }
        out << (all_pass ? "all checks passed" : "some checks FAILED") << "\n";
    } else {
        ordered_json j;
        j["id"] = id;
        ordered_json checks = ordered_json::array();
        for (const CheckLine& l : lines) {
            checks.push_back({{"name", l.name}, {"pass", l.pass}, {"detail", l.detail}});
            all_pass = all_pass && l.pass;
        }
        j["checks"] = std::move(checks);
        j["pass"] = all_pass;
        emit_machine(j, g.format, out);
    }
    return all_pass ? kExitOk : kExitCheckFailed;
}

int main_impl(int argc, char** argv) {
    CLI::App app{"q-complexes over finite fields: shellability checks and homology"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--format", g.format, "output format: json, tsv or pretty")
        ->check(CLI::IsMember({"json", "tsv", "pretty"}));
    app.add_option("--out", g.out_path, "write output to a file instead of stdout");

    auto add_input = [](CLI::App* cmd, InputSelection& sel) {
        cmd->add_option("--facets", sel.facets_path, "facet-list file");
        cmd->add_option("--uniform", sel.uniform, "uniform complex: n k")->expected(2);
        cmd->add_option("--sphere", sel.sphere_r, "sphere of dimension r (ambient r+1)");
        cmd->add_option("--code", sel.code_path, "generator-matrix file of a rank-metric code");
        cmd->add_option("--field", sel.field_spec, "field spec, e.g. gf(2) or gf(2^4):x^4+x+1");
    };

    // grassmann
    auto* grass = app.add_subcommand("grassmann", "list all k-dimensional subspaces of F_q^n");
    std::string grass_field, grass_sort = "none";
    int64_t grass_n = 0, grass_k = 0;
    grass->add_option("--field", grass_field, "field spec")->required();
    grass->add_option("--n", grass_n, "ambient dimension")->required();
    grass->add_option("--k", grass_k, "subspace dimension")->required();
    grass->add_option("--sort", grass_sort, "lex: sort under cmp_q");

    // check
    auto* check = app.add_subcommand("check", "facet shelling and order-complex shelling checks");
    InputSelection check_sel;
    add_input(check, check_sel);

    // homology
    auto* hom = app.add_subcommand("homology", "reduced homology of the punctured order complex");
    InputSelection hom_sel;
    std::string method = "all", dump_path;
    add_input(hom, hom_sel);
    hom->add_option("--method", method, "formula, count, snf or all");
    hom->add_option("--dump-matrices", dump_path, "write boundary matrices in triplet form");

    // mv-check
    auto* mv = app.add_subcommand("mv-check", "stagewise gluing recursion along the cmp_q order");
    InputSelection mv_sel;
    add_input(mv, mv_sel);

    // reproduce
    auto* repro = app.add_subcommand("reproduce", "run a named scenario with pinned expected values");
    std::string repro_id, data_dir = "data";
    repro->add_option("id", repro_id,
                      "example-f16 | uniform-counts | sphere-homology | mv-recursion | non-matroid-witness")
        ->required();
    repro->add_option("--data", data_dir, "directory holding the shipped data files");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitValidation;
    }

    if (grass->parsed())
        return run_command(g, [&](std::ostream& out) {
            return cmd_grassmann(g, grass_field, grass_n, grass_k, grass_sort, out);
        });
    if (check->parsed())
        return run_command(g, [&](std::ostream& out) { return cmd_check(g, check_sel, out); });
    if (hom->parsed())
        return run_command(g, [&](std::ostream& out) {
            return cmd_homology(g, hom_sel, method, dump_path, out);
        });
    if (mv->parsed())
        return run_command(g, [&](std::ostream& out) { return cmd_mv_check(g, mv_sel, out); });
    if (repro->parsed())
        return run_command(g, [&](std::ostream& out) {
            return cmd_reproduce(g, repro_id, data_dir, out);
        });
    return kExitValidation;
}

} // namespace
} // namespace qplex::cli

int main(int argc, char** argv) { return qplex::cli::main_impl(argc, argv); }
