#include "pbwdeform/scalar.hpp"

namespace pbwdeform {

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

FieldScalar parse_scalar(const std::string& tok, Field f) {
    auto bad = [&] { throw std::invalid_argument("malformed scalar: '" + tok + "'"); };
    if (tok.empty()) bad();
    auto slash = tok.find('/');
    try {
        if (slash == std::string::npos) {
            if (f.is_rational())
                return FieldScalar::from_rational(Rational(boost::multiprecision::cpp_int(tok)));
            return FieldScalar::from_int(std::stoll(tok), f);
        }
        std::string num = tok.substr(0, slash), den = tok.substr(slash + 1);
        if (num.empty() || den.empty()) bad();
        if (f.is_rational()) {
            boost::multiprecision::cpp_int n(num), d(den);
            if (d == 0) throw DivisionByZero{};
            return FieldScalar::from_rational(Rational(n, d));
        }
        FieldScalar n = FieldScalar::from_int(std::stoll(num), f);
        FieldScalar d = FieldScalar::from_int(std::stoll(den), f);
        return n / d;  // throws on zero denominator
    } catch (const DivisionByZero&) {
        throw;
    } catch (const std::invalid_argument& e) {
        if (std::string(e.what()).rfind("malformed", 0) == 0) throw;
        bad();
    } catch (const std::runtime_error&) {
        bad();
    }
    bad();
    return {};
}

}  // namespace pbwdeform
