#include "permlab/scalar.hpp"

#include <cctype>
#include <ostream>

namespace permlab {

namespace {

bool valid_integer_token(std::string_view t) {
    if (!t.empty() && (t.front() == '-' || t.front() == '+')) t.remove_prefix(1);
    if (t.empty()) return false;
    for (char c : t)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Scalar Scalar::parse(std::string_view text) {
    auto fail = [&] {
        throw std::invalid_argument("malformed rational \"" + std::string(text) + "\"");
    };
    std::string_view num = text, den = "1";
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }
    if (!valid_integer_token(num) || !valid_integer_token(den)) fail();
    mpq_class v(mpz_class(std::string(num), 10), mpz_class(std::string(den), 10));
    if (v.get_den() == 0) fail();
    v.canonicalize();
    return Scalar(std::move(v));
}

std::string Scalar::str() const {
    return v_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
    return os << s.str();
}

}  // namespace permlab
