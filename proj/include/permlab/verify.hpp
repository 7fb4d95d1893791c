#ifndef PERMLAB_VERIFY_HPP
#define PERMLAB_VERIFY_HPP

#include <string>
#include <vector>

#include "permlab/io.hpp"

namespace permlab {

/// Outcome of one named check on a document.
struct CheckResult {
    std::string id;
    std::string axioms;  ///< the identities the check evaluates, in ASCII
    bool passed = false;
    std::vector<Violation> witnesses;
    double millis = 0.0;
};

struct ReportDocument {
    std::string subject;
    std::vector<CheckResult> checks;

    bool all_passed() const;
};

/// Stable check ids, in registry order. Each maps to a fixed set of
/// axiom equations (see README) and to named structures it needs in the
/// document.
std::vector<std::string> known_checks();

/// The subset of known checks whose required named structures are all
/// present in the document.
std::vector<std::string> applicable_checks(const Document& doc);

/// Runs the requested checks. Throws std::invalid_argument for an unknown
/// check id or a missing named structure.
ReportDocument run_checks(const Document& doc, const std::vector<std::string>& ids,
                          const std::string& subject = "");

nlohmann::json report_to_json(const ReportDocument& rep);
std::string report_to_text(const ReportDocument& rep);

}  // namespace permlab

#endif
