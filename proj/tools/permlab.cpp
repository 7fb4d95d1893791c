#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <string>

#include "permlab/verify.hpp"

using namespace permlab;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

nlohmann::json verdicts_to_json(const std::map<std::string, Report>& verdicts) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [name, rep] : verdicts) {
        nlohmann::json entry;
        entry["passed"] = rep.passed;
        nlohmann::json ws = nlohmann::json::array();
        for (const auto& w : rep.violations)
            ws.push_back({{"equation", w.equation},
                          {"witness", w.witness},
                          {"lhs", w.lhs},
                          {"rhs", w.rhs}});
        entry["witnesses"] = std::move(ws);
        j[name] = std::move(entry);
    }
    return j;
}

nlohmann::json report_meta(const Report& rep) {
    return verdicts_to_json({{"report", rep}});
}

// Applies --operators role=name remappings onto the document's operator table.
void remap_operators(Document& doc, const std::vector<std::string>& mappings) {
    for (const auto& m : mappings) {
        const auto eq = m.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("--operators expects role=name, got \"" + m + "\"");
        const std::string role = m.substr(0, eq), name = m.substr(eq + 1);
        auto it = doc.operators.find(name);
        if (it == doc.operators.end())
            throw std::invalid_argument("missing operator \"" + name + "\"");
        doc.operators[role] = it->second;
    }
}

const Matrix& need_operator(const Document& doc, const std::string& primary,
                            const std::string& fallback = "") {
    if (auto it = doc.operators.find(primary); it != doc.operators.end()) return it->second;
    if (!fallback.empty())
        if (auto it = doc.operators.find(fallback); it != doc.operators.end()) return it->second;
    throw std::invalid_argument("missing operator \"" + primary + "\"");
}

const MulTensor& need_mult(const Document& doc, const std::string& name) {
    auto it = doc.multiplications.find(name);
    if (it == doc.multiplications.end())
        throw std::invalid_argument("missing multiplication \"" + name + "\"");
    return it->second;
}

const BilinearForm& need_form(const Document& doc, const std::string& name) {
    auto it = doc.forms.find(name);
    if (it == doc.forms.end()) throw std::invalid_argument("missing form \"" + name + "\"");
    return it->second;
}

AprePerm doc_sdpp(const Document& doc) {
    AprePerm s;
    s.dim = doc.dimension;
    s.basis_names = doc.basis;
    s.tri_r = need_mult(doc, "tri_r");
    s.tri_l = need_mult(doc, "tri_l");
    return s;
}

int run_verify(const std::string& path, std::string checks_csv, const std::string& format) {
    Document doc = load(path);
    std::vector<std::string> ids;
    if (checks_csv == "all") {
        ids = applicable_checks(doc);
    } else {
        size_t pos = 0;
        while (pos <= checks_csv.size()) {
            const auto comma = checks_csv.find(',', pos);
            const std::string id = checks_csv.substr(
                pos, comma == std::string::npos ? std::string::npos : comma - pos);
            if (!id.empty()) ids.push_back(id);
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
    }
    ReportDocument rep = run_checks(doc, ids, path);
    if (format == "json")
        std::cout << report_to_json(rep).dump(2) << "\n";
    else
        std::cout << report_to_text(rep);
    return rep.all_passed() ? kExitPass : kExitCheckFailed;
}

Document build_induce_perm(Document doc) {
    Algebra a = document_algebra(doc);
    doc.multiplications["circ"] = induce_perm(a, "dot", need_operator(doc, "P"));
    doc.metadata["report"] = report_meta(Report{});
    return doc;
}

Document build_split(Document doc, const std::string& via) {
    Algebra a = document_algebra(doc);
    AprePerm s;
    if (via == "form" || (via == "auto" && !doc.operators.count("P"))) {
        s = split_from_form(a, "circ", need_form(doc, "B"));
    } else {
        s = split_from_admissible(a, "dot", need_operator(doc, "P"),
                                  need_operator(doc, "Q", "Phat"));
    }
    doc.multiplications["tri_r"] = s.tri_r;
    doc.multiplications["tri_l"] = s.tri_l;
    doc.multiplications["circ"] = associated_perm(s);
    Report special = checks::special_apre_perm(s.tri_r, s.tri_l, doc.basis);
    doc.metadata["report"] = verdicts_to_json({{"special-apre-perm", special}});
    return doc;
}

Document build_double(const Document& doc) {
    Algebra a = document_algebra(doc);
    MulTensor dual = doc.multiplications.count("dot_dual") ? doc.multiplications.at("dot_dual")
                                                           : MulTensor(doc.dimension);
    const Matrix& p = need_operator(doc, "P");
    const Matrix& q = need_operator(doc, "Q", "Phat");
    DoubledAlgebra d = double_comm(a, "dot", dual);
    const Matrix qstar = q.transpose();

    auto verdicts = d.verdicts;
    verdicts["avg-double"] = check_avg_double(d, p, qstar);

    Document out;
    out.dimension = d.total.dim;
    out.basis = d.total.basis_names;
    out.multiplications["dot"] = d.total.mult("dot");
    out.forms["B"] = d.B_d;
    Matrix p_total(d.total.dim, d.total.dim);
    for (int i = 0; i < doc.dimension; ++i)
        for (int j = 0; j < doc.dimension; ++j) {
            p_total.at(i, j) = p.at(i, j);
            p_total.at(doc.dimension + i, doc.dimension + j) = qstar.at(i, j);
        }
    out.operators["P"] = p_total;
    out.operators["Phat"] = adjoint_wrt_form(p_total, d.B_d);
    out.metadata["provenance"] = d.provenance;
    out.metadata["report"] = verdicts_to_json(verdicts);
    return out;
}

AprePerm dual_sdpp_or_zero(const std::string& dual_path, int dim) {
    if (dual_path.empty()) return AprePerm::zero(dim);
    Document doc = load(dual_path);
    return doc_sdpp(doc);
}

Document build_manin_perm(const Document& doc, const std::string& dual_path) {
    AprePerm a = doc_sdpp(doc);
    a.basis_names = doc.basis;
    DoubledAlgebra d = manin_perm(a, dual_sdpp_or_zero(dual_path, doc.dimension));
    Document out;
    out.dimension = d.total.dim;
    out.basis = d.total.basis_names;
    out.multiplications["circ"] = d.total.mult("circ");
    out.forms["B"] = d.B_d;
    out.metadata["provenance"] = d.provenance;
    out.metadata["report"] = verdicts_to_json(d.verdicts);
    return out;
}

Document build_manin_sdpp(const Document& doc, const std::string& dual_path) {
    AprePerm a = doc_sdpp(doc);
    a.basis_names = doc.basis;
    ManinSdpp m = manin_sdpp(a, dual_sdpp_or_zero(dual_path, doc.dimension));
    Document out;
    out.dimension = m.pair.dim;
    out.basis = m.pair.basis_names;
    out.multiplications["tri_r"] = m.pair.tri_r;
    out.multiplications["tri_l"] = m.pair.tri_l;
    out.multiplications["circ"] = associated_perm(m.pair);
    out.forms["B"] = m.B_d;
    out.metadata["provenance"] = "manin_sdpp";
    out.metadata["report"] = verdicts_to_json(m.verdicts);
    return out;
}

Document build_pipeline(Document doc) {
    Algebra a = document_algebra(doc);
    auto it = doc.comultiplications.find("delta");
    if (it == doc.comultiplications.end())
        throw std::invalid_argument("missing comultiplication \"delta\"");

    BialgebraSpec out_spec = induce_sdpp_bialgebra(a, it->second, need_operator(doc, "P"),
                                                   need_operator(doc, "Q", "Phat"));

    for (const auto& [name, t] : out_spec.algebra.mults) doc.multiplications[name] = t;
    for (const auto& [name, t] : out_spec.coalgebra.comults) doc.comultiplications[name] = t;

    std::map<std::string, Report> verdicts;
    verdicts["sdpp-bialgebra"] = check_sdpp_bialgebra(out_spec);
    doc.metadata["report"] = verdicts_to_json(verdicts);
    return doc;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"permlab: exact construction and verification of perm-algebra structures"};
    app.require_subcommand(1);

    auto* verify = app.add_subcommand("verify", "run named checks against a document");
    std::string verify_file, checks = "all", format = "text";
    verify->add_option("file", verify_file, "document to verify")->required();
    verify->add_option("--checks", checks, "comma-separated check ids, or \"all\"");
    verify->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    auto* build = app.add_subcommand("build", "construct derived structures");
    std::string kind, input, dual, output, via = "auto";
    std::vector<std::string> op_mappings;
    build->add_option("kind", kind, "induce-perm | split | double | manin-perm | manin-sdpp | pipeline")
        ->required()
        ->check(CLI::IsMember(
            {"induce-perm", "split", "double", "manin-perm", "manin-sdpp", "pipeline"}));
    build->add_option("--input", input, "input document")->required();
    build->add_option("--dual", dual, "second document for the manin builders");
    build->add_option("--via", via, "split route: admissible | form | auto")
        ->check(CLI::IsMember({"admissible", "form", "auto"}));
    build->add_option("--operators", op_mappings,
                      "role=name remappings into the document's operator table")
        ->delimiter(',');
    build->add_option("-o,--output", output, "output path")->required();

    auto* fix = app.add_subcommand("fixture", "write a named fixture as a document");
    std::string fixture_name, fixture_out;
    fix->add_option("name", fixture_name, "ex4 | tensor_square | semidirect_projection")
        ->required();
    fix->add_option("-o,--output", fixture_out, "output path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (verify->parsed()) return run_verify(verify_file, checks, format);
        if (fix->parsed()) {
            save(document_from_fixture(fixture(fixture_name)), fixture_out);
            std::cout << "wrote " << fixture_out << "\n";
            return kExitPass;
        }
        // build
        Document doc = load(input);
        remap_operators(doc, op_mappings);
        Document out;
        if (kind == "induce-perm")
            out = build_induce_perm(std::move(doc));
        else if (kind == "split")
            out = build_split(std::move(doc), via);
        else if (kind == "double")
            out = build_double(doc);
        else if (kind == "manin-perm")
            out = build_manin_perm(doc, dual);
        else if (kind == "manin-sdpp")
            out = build_manin_sdpp(doc, dual);
        else
            out = build_pipeline(std::move(doc));
        save(out, output);
        std::cout << "wrote " << output << "\n";
        return kExitPass;
    } catch (const precondition_error& e) {
        std::cerr << "precondition failed: " << e.what() << "\n";
        for (const auto& w : e.report.violations) {
            std::cerr << "  " << w.equation << " at (";
            for (size_t i = 0; i < w.witness.size(); ++i)
                std::cerr << (i ? "," : "") << w.witness[i] + 1;
            std::cerr << "): " << w.lhs << " != " << w.rhs << "\n";
        }
        return kExitCheckFailed;
    } catch (const io_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitUsage;
    }
}
