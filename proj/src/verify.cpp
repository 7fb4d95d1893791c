#include "permlab/verify.hpp"

#include <chrono>
#include <functional>
#include <sstream>

namespace permlab {

namespace {

struct CheckDef {
    const char* id;
    const char* axioms;
    std::vector<const char*> mults;
    std::vector<const char*> operators;  // "Q|Phat" means Q with Phat fallback
    std::vector<const char*> forms;
    std::vector<const char*> comults;
    std::function<Report(const Document&)> run;
};

const Matrix& doc_operator(const Document& doc, const std::string& spec) {
    const auto bar = spec.find('|');
    const std::string primary = spec.substr(0, bar);
    if (auto it = doc.operators.find(primary); it != doc.operators.end()) return it->second;
    if (bar != std::string::npos) {
        const std::string fallback = spec.substr(bar + 1);
        if (auto it = doc.operators.find(fallback); it != doc.operators.end()) return it->second;
    }
    throw std::invalid_argument("missing operator \"" + primary + "\"");
}

Report run_form_check(const Document& doc, const std::vector<std::string>& mults,
                      const char* form, FormProperty prop) {
    auto it = doc.forms.find(form);
    if (it == doc.forms.end())
        throw std::invalid_argument("missing form \"" + std::string(form) + "\"");
    return check_form(document_algebra(doc), mults, it->second, prop);
}

const std::vector<CheckDef>& registry() {
    static const std::vector<CheckDef> defs = {
        {"commutative", "x.y = y.x", {"dot"}, {}, {}, {},
         [](const Document& d) {
             return check_identity(document_algebra(d), {"dot"}, IdentityKind::Commutative);
         }},
        {"associative", "(x.y).z = x.(y.z)", {"dot"}, {}, {}, {},
         [](const Document& d) {
             return check_identity(document_algebra(d), {"dot"}, IdentityKind::Associative);
         }},
        {"perm", "x o (y o z) = (x o y) o z = (y o x) o z", {"circ"}, {}, {}, {},
         [](const Document& d) {
             return check_identity(document_algebra(d), {"circ"}, IdentityKind::Perm);
         }},
        {"lie", "[x,y] = -[y,x]; [[x,y],z] + [[y,z],x] + [[z,x],y] = 0",
         {"bracket"}, {}, {}, {},
         [](const Document& d) {
             return check_identity(document_algebra(d), {"bracket"}, IdentityKind::Lie);
         }},
        {"pre-lie", "(x*y)*z - x*(y*z) = (y*x)*z - y*(x*z)", {"star"}, {}, {}, {},
         [](const Document& d) {
             return check_identity(document_algebra(d), {"star"}, IdentityKind::PreLie);
         }},
        {"anti-pre-lie", "x<>(y<>z) - y<>(x<>z) = [y,x]<>z with [a,b] = a<>b - b<>a Lie",
         {"diamond"}, {}, {}, {},
         [](const Document& d) {
             return check_identity(document_algebra(d), {"diamond"}, IdentityKind::AntiPreLie);
         }},
        {"apre-perm",
         "o := |> + <| is perm; x|>(y<|z) + 2(y<|z)<|x = 0; "
         "x<|(y o z) =-(x<|z)<|y = (y|>x + x<|y)<|z; "
         "(x o y)|>z = y|>(x|>z + z<|x) = x|>(y|>z) + (y|>z)<|x",
         {"tri_r", "tri_l"}, {}, {}, {},
         [](const Document& d) {
             return check_identity(document_algebra(d), {"tri_r", "tri_l"},
                                   IdentityKind::AprePerm);
         }},
        {"special-apre-perm",
         "<| commutative; o := |> + <| is perm; (x o y)<|z = x o (y<|z) = -x<|(y<|z)",
         {"tri_r", "tri_l"}, {}, {}, {},
         [](const Document& d) {
             return check_identity(document_algebra(d), {"tri_r", "tri_l"},
                                   IdentityKind::SpecialAprePerm);
         }},
        {"averaging", "P(x).P(y) = P(P(x).y)", {"dot"}, {"P"}, {}, {},
         [](const Document& d) {
             return check_averaging(document_algebra(d), "dot", doc_operator(d, "P"));
         }},
        {"admissible", "P(x).Q(y) = Q(P(x).y) = Q(x.Q(y))", {"dot"}, {"P", "Q|Phat"}, {}, {},
         [](const Document& d) {
             return check_admissible(document_algebra(d), "dot", doc_operator(d, "P"),
                                     doc_operator(d, "Q|Phat"));
         }},
        {"symmetric", "B(x,y) = B(y,x)", {}, {}, {"B"}, {},
         [](const Document& d) { return run_form_check(d, {}, "B", FormProperty::Symmetric); }},
        {"nondegenerate", "det B != 0", {}, {}, {"B"}, {},
         [](const Document& d) {
             return run_form_check(d, {}, "B", FormProperty::Nondegenerate);
         }},
        {"frobenius", "B(x.y, z) = B(x, y.z)", {"dot"}, {}, {"B"}, {},
         [](const Document& d) {
             return run_form_check(d, {"dot"}, "B", FormProperty::FrobeniusInvariant);
         }},
        {"left-invariant", "B(x o y, z) = B(y, x o z)", {"circ"}, {}, {"B"}, {},
         [](const Document& d) {
             return run_form_check(d, {"circ"}, "B", FormProperty::LeftInvariant);
         }},
        {"left-invariant-ext", "B(x o y, z) = B(y, x o z + z o x) - B(x, z o y)",
         {"circ"}, {}, {"B"}, {},
         [](const Document& d) {
             return run_form_check(d, {"circ"}, "B", FormProperty::LeftInv1);
         }},
        {"double-left-invariant", "B(x o y, z) = B(y, x o z) = B(x o z, y)",
         {"circ"}, {}, {"B"}, {},
         [](const Document& d) {
             return run_form_check(d, {"circ"}, "B", FormProperty::DoubleLeftInvariant);
         }},
        {"commutative-2-cocycle",
         "B symmetric; B([x,y],z) + B([y,z],x) + B([z,x],y) = 0", {"bracket"}, {}, {"B"}, {},
         [](const Document& d) {
             return run_form_check(d, {"bracket"}, "B", FormProperty::Commutative2Cocycle);
         }},
        {"sdpp-invariant", "B(x<|y, z) = -B(x, z o y) with o = |> + <|",
         {"tri_r", "tri_l"}, {}, {"B"}, {},
         [](const Document& d) {
             return run_form_check(d, {"tri_r", "tri_l"}, "B", FormProperty::SDPPInvariant);
         }},
        {"cocomm-coassoc", "D = tau D; (D (x) id) D = (id (x) D) D", {}, {}, {}, {"delta"},
         [](const Document& d) {
             return check_coalgebra(document_coalgebra(d), {"delta"},
                                    CoalgebraKind::CocommCoassoc);
         }},
        {"perm-coalgebra",
         "(eta (x) id) eta = (id (x) eta) eta = (tau (x) id)(eta (x) id) eta",
         {}, {}, {}, {"eta"},
         [](const Document& d) {
             return check_coalgebra(document_coalgebra(d), {"eta"}, CoalgebraKind::PermCoalgebra);
         }},
        {"sapp-coalgebra",
         "eta := vartheta + theta is a perm coalgebra; theta = tau theta; "
         "(eta (x) id) theta = (id (x) theta) eta; (id (x) theta)(eta + theta) = 0",
         {}, {}, {}, {"vartheta", "theta"},
         [](const Document& d) {
             return check_coalgebra(document_coalgebra(d), {"vartheta", "theta"},
                                    CoalgebraKind::SpecialAprePermCoalgebra);
         }},
        {"inf-bialgebra", "D(x.y) = (L(x) (x) id) D(y) + (id (x) L(y)) D(x)",
         {"dot"}, {}, {}, {"delta"},
         [](const Document& d) {
             BialgebraSpec spec{document_algebra(d), document_coalgebra(d), {},
                                BialgebraKind::CommCocommInfinitesimal};
             return check_inf_bialgebra(spec);
         }},
        {"averaging-bialgebra",
         "(Q (x) Q) D = (Q (x) id) D Q; (Q (x) P) D = (Q (x) id) D P = (id (x) P) D P",
         {"dot"}, {"P", "Q|Phat"}, {}, {"delta"},
         [](const Document& d) {
             BialgebraSpec spec{document_algebra(d), document_coalgebra(d),
                                {{"P", doc_operator(d, "P")}, {"Q", doc_operator(d, "Q|Phat")}},
                                BialgebraKind::AveragingCommCocomm};
             return check_averaging_bialgebra(spec);
         }},
        {"sdpp-bialgebra", "the seven splitting/cosplitting compatibility axioms bialg.1-7",
         {"tri_r", "tri_l"}, {}, {}, {"vartheta", "theta"},
         [](const Document& d) {
             BialgebraSpec spec{document_algebra(d), document_coalgebra(d), {},
                                BialgebraKind::SpecialAprePerm};
             return check_sdpp_bialgebra(spec);
         }},
    };
    return defs;
}

const CheckDef& find_check(const std::string& id) {
    for (const auto& def : registry())
        if (id == def.id) return def;
    throw std::invalid_argument("unknown check id \"" + id + "\"");
}

bool requirements_met(const CheckDef& def, const Document& doc) {
    for (const char* m : def.mults)
        if (!doc.multiplications.count(m)) return false;
    for (const char* o : def.operators) {
        const std::string spec(o);
        const auto bar = spec.find('|');
        const bool have = doc.operators.count(spec.substr(0, bar)) ||
                          (bar != std::string::npos && doc.operators.count(spec.substr(bar + 1)));
        if (!have) return false;
    }
    for (const char* f : def.forms)
        if (!doc.forms.count(f)) return false;
    for (const char* c : def.comults)
        if (!doc.comultiplications.count(c)) return false;
    return true;
}

}  // namespace

bool ReportDocument::all_passed() const {
    for (const auto& c : checks)
        if (!c.passed) return false;
    return true;
}

std::vector<std::string> known_checks() {
    std::vector<std::string> ids;
    for (const auto& def : registry()) ids.push_back(def.id);
    return ids;
}

std::vector<std::string> applicable_checks(const Document& doc) {
    std::vector<std::string> ids;
    for (const auto& def : registry())
        if (requirements_met(def, doc)) ids.push_back(def.id);
    return ids;
}

ReportDocument run_checks(const Document& doc, const std::vector<std::string>& ids,
                          const std::string& subject) {
    ReportDocument out;
    out.subject = subject;
    for (const auto& id : ids) {
        const CheckDef& def = find_check(id);
        CheckResult res;
        res.id = id;
        res.axioms = def.axioms;
        const auto start = std::chrono::steady_clock::now();
        Report rep = def.run(doc);
        res.millis = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - start)
                         .count();
        res.passed = rep.passed;
        res.witnesses = std::move(rep.violations);
        out.checks.push_back(std::move(res));
    }
    return out;
}

nlohmann::json report_to_json(const ReportDocument& rep) {
    nlohmann::json j;
    j["schema"] = 1;
    j["subject"] = rep.subject;
    j["all_passed"] = rep.all_passed();
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : rep.checks) {
        nlohmann::json jc;
        jc["id"] = c.id;
        jc["axioms"] = c.axioms;
        jc["passed"] = c.passed;
        jc["millis"] = c.millis;
        nlohmann::json ws = nlohmann::json::array();
        for (const auto& w : c.witnesses)
            ws.push_back({{"equation", w.equation},
                          {"witness", w.witness},
                          {"lhs", w.lhs},
                          {"rhs", w.rhs}});
        jc["witnesses"] = std::move(ws);
        checks.push_back(std::move(jc));
    }
    j["checks"] = std::move(checks);
    return j;
}

std::string report_to_text(const ReportDocument& rep) {
    std::ostringstream os;
    for (const auto& c : rep.checks) {
        os << (c.passed ? "[PASS] " : "[FAIL] ") << c.id;
        os << " (" << c.millis << " ms)\n";
        for (const auto& w : c.witnesses) {
            os << "       " << w.equation << " at (";
            for (size_t i = 0; i < w.witness.size(); ++i)
                os << (i ? "," : "") << w.witness[i] + 1;
            os << "): " << w.lhs << " != " << w.rhs << "\n";
        }
    }
    os << (rep.all_passed() ? "all checks passed" : "some checks FAILED") << "\n";
    return os.str();
}

}  // namespace permlab
