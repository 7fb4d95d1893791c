#ifndef PERMLAB_IO_HPP
#define PERMLAB_IO_HPP

#include <json.hpp>

#include <map>
#include <string>
#include <vector>

#include "permlab/construct.hpp"

namespace permlab {

/// Error raised for malformed documents; `where` names the offending field.
class io_error : public std::runtime_error {
public:
    io_error(const std::string& where, const std::string& what)
        : std::runtime_error(where + ": " + what), where(where) {}

    std::string where;
};

/// On-disk description of an algebra with its operators, forms and
/// comultiplications. Scalars are exact ("3/4" strings or integers);
/// tensors are sparse [i, j, k, scalar] triple lists with 0-based indices.
struct Document {
    int dimension = 0;
    std::vector<std::string> basis;
    std::map<std::string, MulTensor> multiplications;
    std::map<std::string, Matrix> operators;
    std::map<std::string, BilinearForm> forms;
    std::map<std::string, ComulTensor> comultiplications;
    nlohmann::json metadata = nlohmann::json::object();

    friend bool operator==(const Document& a, const Document& b);
};

Document document_from_json(const nlohmann::json& j);
nlohmann::json document_to_json(const Document& doc);

Document load(const std::string& path);
void save(const Document& doc, const std::string& path);

/// View of the document's algebraic content as library values.
Algebra document_algebra(const Document& doc);
Coalgebra document_coalgebra(const Document& doc);

Document document_from_fixture(const Fixture& f);

}  // namespace permlab

#endif
