#include "common.hpp"

#include <fstream>

namespace qplex::cli {

int exit_code_for(const Error& e) {
    switch (e.code()) {
    case errc::not_prefix:
    case errc::shelling_broken:
        return kExitCheckFailed;
    default:
        return kExitValidation;
    }
}

std::pair<QComplex, ordered_json> build_complex(const InputSelection& sel) {
    int selected = int(!sel.facets_path.empty()) + int(!sel.uniform.empty()) +
                   int(sel.sphere_r >= 0) + int(!sel.code_path.empty());
    if (selected != 1)
        fail(errc::bad_args, "choose exactly one input: --facets, --uniform, --sphere or --code");

    ordered_json desc;
    if (!sel.facets_path.empty()) {
        std::ifstream in(sel.facets_path);
        if (!in) fail(errc::parse_error, "cannot open " + sel.facets_path);
        QComplex c = QComplex::read_facets(in);
        desc["kind"] = "facets";
        desc["source"] = sel.facets_path;
        desc["field"] = c.field()->to_string();
        desc["n"] = c.ambient();
        desc["t"] = c.facet_count();
        desc["dim"] = c.dim();
        return {std::move(c), std::move(desc)};
    }
    if (!sel.code_path.empty()) {
        RankMetricCode code = RankMetricCode::load_file(sel.code_path);
        QComplex c = QMatroid::from_code(code).matroid_complex();
        desc["kind"] = "code";
        desc["source"] = sel.code_path;
        desc["field"] = c.field()->to_string();
        desc["extension"] = code.extension_field()->to_string();
        desc["n"] = c.ambient();
        desc["t"] = c.facet_count();
        desc["dim"] = c.dim();
        return {std::move(c), std::move(desc)};
    }
    if (sel.field_spec.empty()) fail(errc::bad_args, "--uniform and --sphere require --field");
    FieldPtr field = Field::parse(sel.field_spec);
    if (!sel.uniform.empty()) {
        if (sel.uniform.size() != 2 || sel.uniform[0] <= 0 || sel.uniform[1] <= 0)
            fail(errc::bad_args, "--uniform takes n k");
        QComplex c = QComplex::uniform(field, size_t(sel.uniform[0]), size_t(sel.uniform[1]));
        desc["kind"] = "uniform";
        desc["field"] = field->to_string();
        desc["n"] = sel.uniform[0];
        desc["k"] = sel.uniform[1];
        desc["t"] = c.facet_count();
        desc["dim"] = c.dim();
        return {std::move(c), std::move(desc)};
    }
    QComplex c = QComplex::q_sphere(Subspace::full(field, size_t(sel.sphere_r) + 1));
    desc["kind"] = "sphere";
    desc["field"] = field->to_string();
    desc["r"] = sel.sphere_r;
    desc["t"] = c.facet_count();
    desc["dim"] = c.dim();
    return {std::move(c), std::move(desc)};
}

ordered_json big_to_json(const BigInt& v) {
    if (v >= std::numeric_limits<int64_t>::min() && v <= std::numeric_limits<int64_t>::max())
        return ordered_json(int64_t(v));
    return ordered_json(v.str());
}

ordered_json cert_to_json(const ShellingCertificate& cert) {
    ordered_json j;
    j["ok"] = cert.ok;
    j["pure"] = cert.pure;
    j["dim"] = cert.dim;
    j["order"] = cert.order;
    ordered_json witnesses = ordered_json::array();
    for (const ShellingWitness& w : cert.witnesses)
        witnesses.push_back({{"i", w.i}, {"j", w.j}, {"k", w.k}});
    j["witnesses"] = std::move(witnesses);
    if (cert.violation)
        j["violation"] = {{"i", cert.violation->first}, {"j", cert.violation->second}};
    else
        j["violation"] = nullptr;
    return j;
}

ordered_json homology_to_json(const HomologyReport& rep) {
    ordered_json degrees = ordered_json::array();
    for (const HomologyGroup& g : rep.groups) {
        ordered_json torsion = ordered_json::array();
        for (const BigInt& t : g.torsion) torsion.push_back(big_to_json(t));
        degrees.push_back({{"p", g.degree}, {"rank", g.rank}, {"torsion", std::move(torsion)}});
    }
    ordered_json j;
    j["degrees"] = std::move(degrees);
    j["euler"] = rep.euler;
    j["concentrated_at"] = rep.concentrated_at ? ordered_json(*rep.concentrated_at) : ordered_json(nullptr);
    return j;
}

ordered_json betti_to_json(const BettiBreakdown& b) {
    ordered_json j;
    j["t"] = b.t;
    j["s"] = b.s;
    j["x"] = b.x ? ordered_json(b.x->to_string()) : ordered_json(nullptr);
    ordered_json per = ordered_json::array();
    for (const auto& pf : b.per_facet)
        per.push_back({{"j", pf.j}, {"x_j", pf.xj->to_string()}, {"r_j", pf.rj}});
    j["per_facet"] = std::move(per);
    j["interior_factor"] = big_to_json(b.interior_factor);
    j["betti_rank"] = big_to_json(b.rank);
    return j;
}

ordered_json mv_to_json(const MVReport& rep) {
    ordered_json stages = ordered_json::array();
    for (const MVStage& st : rep.stages) {
        stages.push_back({{"stage", st.stage},
                          {"before", st.before},
                          {"after", st.after},
                          {"intersection", st.intersection},
                          {"new_facet_contractible", st.new_facet_contractible},
                          {"intersection_concentrated", st.intersection_concentrated},
                          {"identity_ok", st.identity_ok},
                          {"torsion_free", st.torsion_free}});
    }
    ordered_json j;
    j["ok"] = rep.ok;
    j["stages"] = std::move(stages);
    j["final_betti"] = rep.final_betti;
    j["betti_degrees_start_at"] = -1;
    return j;
}

namespace {

void flatten(const ordered_json& j, const std::string& prefix, std::ostream& out) {
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it)
            flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
        return;
    }
    if (j.is_array()) {
        bool scalars = std::all_of(j.begin(), j.end(), [](const ordered_json& v) {
            return !v.is_object() && !v.is_array();
        });
        if (scalars) {
            out << prefix << "\t";
            for (size_t i = 0; i < j.size(); ++i) {
                if (i) out << ",";
                out << j[i].dump();
            }
            out << "\n";
            return;
        }
        for (size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
        return;
    }
    out << prefix << "\t" << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
}

} // namespace

void emit_machine(const ordered_json& doc, const std::string& format, std::ostream& out) {
    if (format == "json") {
        out << doc.dump(2) << "\n";
    } else {
        flatten(doc, "", out);
    }
}

} // namespace qplex::cli
