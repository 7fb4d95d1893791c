#include "permlab/report.hpp"

#include <sstream>

namespace permlab {

std::string Report::summary() const {
    if (passed) return "pass";
    std::ostringstream os;
    os << "fail (" << violations.size() << " witness" << (violations.size() == 1 ? "" : "es");
    if (violations.size() == kMaxWitnesses) os << ", capped";
    os << ")";
    for (const auto& v : violations) {
        os << "\n  " << v.equation << " at (";
        for (size_t i = 0; i < v.witness.size(); ++i) os << (i ? "," : "") << v.witness[i] + 1;
        os << "): " << v.lhs << " != " << v.rhs;
    }
    return os.str();
}

}  // namespace permlab
