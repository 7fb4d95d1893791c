#include "permlab/io.hpp"

#include <fstream>
#include <limits>

namespace permlab {

using nlohmann::json;

namespace {

Scalar scalar_from_json(const json& j, const std::string& where) {
    if (j.is_number_integer()) return Scalar(long(j.get<int64_t>()));
    if (j.is_string()) {
        try {
            return Scalar::parse(j.get<std::string>());
        } catch (const std::invalid_argument& e) {
            throw io_error(where, e.what());
        }
    }
    throw io_error(where, "scalar must be an integer or a \"p/q\" string");
}

json scalar_to_json(const Scalar& s) {
    if (s.is_integer()) {
        const std::string digits = s.num_str();
        // keep plain integers as JSON numbers when they fit in 64 bits
        if (digits.size() < 19) return json(std::stoll(digits));
    }
    return json(s.str());
}

int index_from_json(const json& j, int dim, const std::string& where) {
    if (!j.is_number_integer()) throw io_error(where, "index must be an integer");
    const auto v = j.get<int64_t>();
    if (v < 0 || v >= dim)
        throw io_error(where, "index " + std::to_string(v) + " out of range [0, " +
                                  std::to_string(dim) + ")");
    return int(v);
}

template <class Tensor>
Tensor tensor_from_json(const json& j, int dim, const std::string& where) {
    if (!j.is_array()) throw io_error(where, "expected a list of [i, j, k, scalar] entries");
    Tensor t(dim);
    for (size_t n = 0; n < j.size(); ++n) {
        const std::string entry = where + "[" + std::to_string(n) + "]";
        const json& row = j[n];
        if (!row.is_array() || row.size() != 4)
            throw io_error(entry, "expected [i, j, k, scalar]");
        const int i = index_from_json(row[0], dim, entry);
        const int jj = index_from_json(row[1], dim, entry);
        const int k = index_from_json(row[2], dim, entry);
        t.at(i, jj, k) += scalar_from_json(row[3], entry);
    }
    return t;
}

template <class Tensor>
json tensor_to_json(const Tensor& t) {
    json out = json::array();
    for (int i = 0; i < t.dim; ++i)
        for (int j = 0; j < t.dim; ++j)
            for (int k = 0; k < t.dim; ++k)
                if (!t.at(i, j, k).is_zero())
                    out.push_back(json::array({i, j, k, scalar_to_json(t.at(i, j, k))}));
    return out;
}

Matrix matrix_from_json(const json& j, int dim, const std::string& where) {
    Matrix m(dim, dim);
    if (j.is_array()) {  // dense rows
        if (int(j.size()) != dim) throw io_error(where, "dense matrix must have `dimension` rows");
        for (int i = 0; i < dim; ++i) {
            const json& row = j[i];
            if (!row.is_array() || int(row.size()) != dim)
                throw io_error(where + "[" + std::to_string(i) + "]",
                               "row must have `dimension` entries");
            for (int k = 0; k < dim; ++k)
                m.at(i, k) = scalar_from_json(row[k],
                                              where + "[" + std::to_string(i) + "][" +
                                                  std::to_string(k) + "]");
        }
        return m;
    }
    if (j.is_object() && j.contains("entries")) {  // sparse
        const json& entries = j["entries"];
        if (!entries.is_array()) throw io_error(where + ".entries", "expected a list");
        for (size_t n = 0; n < entries.size(); ++n) {
            const std::string entry = where + ".entries[" + std::to_string(n) + "]";
            const json& row = entries[n];
            if (!row.is_array() || row.size() != 3) throw io_error(entry, "expected [i, j, scalar]");
            const int i = index_from_json(row[0], dim, entry);
            const int k = index_from_json(row[1], dim, entry);
            m.at(i, k) += scalar_from_json(row[2], entry);
        }
        return m;
    }
    throw io_error(where, "matrix must be dense rows or {\"entries\": [[i, j, scalar], ...]}");
}

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(scalar_to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

bool operator==(const Document& a, const Document& b) {
    return a.dimension == b.dimension && a.basis == b.basis &&
           a.multiplications == b.multiplications && a.operators == b.operators &&
           [&] {
               if (a.forms.size() != b.forms.size()) return false;
               for (const auto& [k, v] : a.forms) {
                   auto it = b.forms.find(k);
                   if (it == b.forms.end() || !(it->second.gram == v.gram)) return false;
               }
               return true;
           }() &&
           a.comultiplications == b.comultiplications && a.metadata == b.metadata;
}

Document document_from_json(const json& j) {
    if (!j.is_object()) throw io_error("$", "document must be a JSON object");
    Document doc;
    if (!j.contains("dimension") || !j["dimension"].is_number_integer())
        throw io_error("dimension", "missing or non-integer");
    const auto dim = j["dimension"].get<int64_t>();
    if (dim < 0 || dim > 4096) throw io_error("dimension", "out of range");
    doc.dimension = int(dim);

    if (j.contains("basis")) {
        if (!j["basis"].is_array() || int(j["basis"].size()) != doc.dimension)
            throw io_error("basis", "must list exactly `dimension` names");
        for (const auto& name : j["basis"]) {
            if (!name.is_string()) throw io_error("basis", "names must be strings");
            doc.basis.push_back(name.get<std::string>());
        }
    } else {
        for (int i = 0; i < doc.dimension; ++i) doc.basis.push_back("e" + std::to_string(i + 1));
    }

    auto each = [&](const char* section, auto fn) {
        if (!j.contains(section)) return;
        if (!j[section].is_object()) throw io_error(section, "must be an object");
        for (const auto& [name, value] : j[section].items())
            fn(name, value, std::string(section) + "." + name);
    };
    each("multiplications", [&](const std::string& name, const json& v, const std::string& w) {
        doc.multiplications[name] = tensor_from_json<MulTensor>(v, doc.dimension, w);
    });
    each("comultiplications", [&](const std::string& name, const json& v, const std::string& w) {
        doc.comultiplications[name] = tensor_from_json<ComulTensor>(v, doc.dimension, w);
    });
    each("operators", [&](const std::string& name, const json& v, const std::string& w) {
        doc.operators[name] = matrix_from_json(v, doc.dimension, w);
    });
    each("forms", [&](const std::string& name, const json& v, const std::string& w) {
        doc.forms[name] = BilinearForm{matrix_from_json(v, doc.dimension, w)};
    });
    if (j.contains("metadata")) doc.metadata = j["metadata"];
    return doc;
}

json document_to_json(const Document& doc) {
    json j;
    j["schema"] = 1;
    j["dimension"] = doc.dimension;
    j["basis"] = doc.basis;
    json mults = json::object(), comults = json::object(), ops = json::object(),
         forms = json::object();
    for (const auto& [name, t] : doc.multiplications) mults[name] = tensor_to_json(t);
    for (const auto& [name, t] : doc.comultiplications) comults[name] = tensor_to_json(t);
    for (const auto& [name, m] : doc.operators) ops[name] = matrix_to_json(m);
    for (const auto& [name, f] : doc.forms) forms[name] = matrix_to_json(f.gram);
    j["multiplications"] = std::move(mults);
    j["comultiplications"] = std::move(comults);
    j["operators"] = std::move(ops);
    j["forms"] = std::move(forms);
    j["metadata"] = doc.metadata;
    return j;
}

Document load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error(path, "cannot open file");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw io_error(path, e.what());
    }
    return document_from_json(j);
}

void save(const Document& doc, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw io_error(path, "cannot open file for writing");
    out << document_to_json(doc).dump(2) << "\n";
    if (!out) throw io_error(path, "write failed");
}

Algebra document_algebra(const Document& doc) {
    return make_algebra(doc.dimension, doc.basis, doc.multiplications);
}

Coalgebra document_coalgebra(const Document& doc) {
    return make_coalgebra(doc.dimension, doc.basis, doc.comultiplications);
}

Document document_from_fixture(const Fixture& f) {
    Document doc;
    doc.dimension = f.algebra.dim;
    doc.basis = f.algebra.basis_names;
    doc.multiplications = f.algebra.mults;
    doc.operators = f.operators;
    doc.forms = f.forms;
    doc.comultiplications = f.comults;
    doc.metadata["name"] = f.name;
    return doc;
}

}  // namespace permlab
