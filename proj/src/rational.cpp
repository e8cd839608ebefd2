#include "orbindex/rational.hpp"

#include <stdexcept>

#include "orbindex/errors.hpp"

namespace orbindex {

Rat parse_rational(const std::string& s) {
    auto trim = [](const std::string& t) {
        auto b = t.find_first_not_of(" \t");
        auto e = t.find_last_not_of(" \t");
        if (b == std::string::npos) return std::string();
        return t.substr(b, e - b + 1);
    };
    std::string body = trim(s);
    if (body.empty()) throw std::invalid_argument("empty rational");
    std::string num = body, den = "1";
    if (auto pos = body.find('/'); pos != std::string::npos) {
        num = trim(body.substr(0, pos));
        den = trim(body.substr(pos + 1));
    }
    mpz_class n(num), d(den);  // throws std::invalid_argument on bad digits
    if (d == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
    Rat r(n, d);
    r.canonicalize();
    return r;
}

std::string rational_string(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

bool is_integer(const Rat& r) { return r.get_den() == 1; }

long to_long(const Rat& r) {
    if (!is_integer(r)) throw InternalError("expected integer, got " + rational_string(r));
    if (!r.get_num().fits_slong_p()) throw InternalError("integer out of range: " + rational_string(r));
    return r.get_num().get_si();
}

double to_double(const Rat& r) { return r.get_d(); }

Rat frac_part(const Rat& r) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return r - Rat(q);
}

Rat binomial(unsigned long n, unsigned long k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rat(b);
}

int sign_of(const Rat& r) { return sgn(r); }

}  // namespace orbindex
