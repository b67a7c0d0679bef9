#include "kudla/rational.hpp"

#include <cctype>

#include "kudla/errors.hpp"

namespace kudla {

ExactRational::ExactRational(long num, long den) {
    if (den == 0) throw DomainError("ExactRational: zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

ExactRational& ExactRational::operator/=(const ExactRational& o) {
    if (o.value_ == 0) throw DomainError("ExactRational: division by zero");
    value_ /= o.value_;
    return *this;
}

long ExactRational::to_long() const {
    if (!is_integer()) throw DomainError("ExactRational::to_long: not an integer: " + str());
    const mpz_class& n = value_.get_num();
    if (!n.fits_slong_p()) throw DomainError("ExactRational::to_long: overflow");
    return n.get_si();
}

ExactRational ExactRational::parse(std::string_view text) {
    std::string s(text);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    std::size_t start = 0;
    while (start < s.size() && std::isspace(static_cast<unsigned char>(s[start]))) ++start;
    s = s.substr(start);
    if (s.empty()) throw DomainError("ExactRational::parse: empty input");

    const auto bad = [&]() { return DomainError("ExactRational::parse: malformed rational '" + s + "'"); };
    const auto digits_only = [](std::string_view d) {
        if (d.empty()) return false;
        for (char c : d)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };

    bool negative = false;
    std::string_view body = s;
    if (body.front() == '+' || body.front() == '-') {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }

    mpq_class q;
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        auto num = body.substr(0, slash), den = body.substr(slash + 1);
        if (!digits_only(num) || !digits_only(den)) throw bad();
        mpz_class d{std::string(den)};
        if (d == 0) throw DomainError("ExactRational::parse: zero denominator");
        q = mpq_class(mpz_class(std::string(num)), d);
    } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
        auto ip = body.substr(0, dot), fp = body.substr(dot + 1);
        if ((!ip.empty() && !digits_only(ip)) || !digits_only(fp)) throw bad();
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, fp.size());
        mpz_class whole(ip.empty() ? std::string("0") : std::string(ip));
        q = mpq_class(whole * scale + mpz_class(std::string(fp)), scale);
    } else {
        if (!digits_only(body)) throw bad();
        q = mpq_class(mpz_class(std::string(body)));
    }
    q.canonicalize();
    if (negative) q = -q;
    return ExactRational(q);
}

ExactRational abs(const ExactRational& r) { return r.sign() < 0 ? -r : r; }

ExactRational pow(const ExactRational& base, int exponent) {
    ExactRational result(1);
    ExactRational b = exponent < 0 ? ExactRational(1) / base : base;
    for (int e = exponent < 0 ? -exponent : exponent; e > 0; --e) result *= b;
    return result;
}

}  // namespace kudla
