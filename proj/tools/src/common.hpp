#pragma once

#include <optional>
#include <ostream>
#include <string>

#include "json.hpp"
#include "qplex/homology.hpp"
#include "qplex/qmatroid.hpp"

namespace qplex::cli {

using ordered_json = nlohmann::ordered_json;

// exit codes: 0 pass, 1 runtime error, 2 validation failure, 3 check failed
constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitValidation = 2;
constexpr int kExitCheckFailed = 3;

int exit_code_for(const Error& e);

struct InputSelection {
    std::string facets_path;
    std::vector<int64_t> uniform; // n k
    int64_t sphere_r = -1;
    std::string code_path;
    std::string field_spec;

    bool any() const { return !facets_path.empty() || !uniform.empty() || sphere_r >= 0 || !code_path.empty(); }
};

/// Builds the complex named by --facets/--uniform/--sphere/--code and a JSON
/// description of where it came from.
std::pair<QComplex, ordered_json> build_complex(const InputSelection& sel);

ordered_json big_to_json(const BigInt& v);
ordered_json cert_to_json(const ShellingCertificate& cert);
ordered_json homology_to_json(const HomologyReport& rep);
ordered_json betti_to_json(const BettiBreakdown& b);
ordered_json mv_to_json(const MVReport& rep);

/// json: pretty-printed document; tsv: flattened `path<TAB>value` lines.
void emit_machine(const ordered_json& doc, const std::string& format, std::ostream& out);

struct CheckLine {
    std::string name;
    bool pass = false;
    std::string detail;
};

} // namespace qplex::cli
