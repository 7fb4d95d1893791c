#ifndef PERMLAB_REPORT_HPP
#define PERMLAB_REPORT_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace permlab {

/// One failed instance of an identity, anchored at a basis tuple.
struct Violation {
    std::string equation;       ///< axiom id, e.g. "perm.assoc"
    std::vector<int> witness;   ///< basis indices, in argument order
    std::string lhs, rhs;       ///< rendered values of the two sides
};

/// Exhaustive verdict of an axiom suite. The boolean covers every tuple;
/// the witness list is capped at kMaxWitnesses to bound output size.
struct Report {
    static constexpr size_t kMaxWitnesses = 64;

    bool passed = true;
    std::vector<Violation> violations;

    void add(std::string equation, std::vector<int> witness, std::string lhs, std::string rhs) {
        passed = false;
        if (violations.size() < kMaxWitnesses)
            violations.push_back({std::move(equation), std::move(witness), std::move(lhs), std::move(rhs)});
    }

    /// Appends another report's findings, keeping the cap.
    void merge(const Report& other) {
        passed = passed && other.passed;
        for (const auto& v : other.violations) {
            if (violations.size() >= kMaxWitnesses) break;
            violations.push_back(v);
        }
    }

    /// Same, with every appended equation id prefixed (for layered checks).
    void merge_prefixed(const std::string& prefix, const Report& other) {
        passed = passed && other.passed;
        for (const auto& v : other.violations) {
            if (violations.size() >= kMaxWitnesses) break;
            Violation w = v;
            w.equation = prefix + w.equation;
            violations.push_back(std::move(w));
        }
    }

    std::string summary() const;
};

/// Thrown when an operation's checked precondition fails; carries the
/// report of the failing check.
class precondition_error : public std::runtime_error {
public:
    precondition_error(const std::string& what, Report report)
        : std::runtime_error(what), report(std::move(report)) {}
    explicit precondition_error(const std::string& what) : std::runtime_error(what) {}

    Report report;
};

}  // namespace permlab

#endif
