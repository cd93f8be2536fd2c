#include "superschur/rational.hpp"

#include <cctype>

namespace superschur {

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

std::optional<Rat> parse_rational(const std::string& text) {
    std::string trimmed = text;
    while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front())))
        trimmed.erase(trimmed.begin());
    while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back())))
        trimmed.pop_back();
    std::string num = trimmed, den = "1";
    if (auto slash = trimmed.find('/'); slash != std::string::npos) {
        num = trimmed.substr(0, slash);
        den = trimmed.substr(slash + 1);
    }
    if (!num.empty() && num[0] == '+') num = num.substr(1);  // GMP rejects a leading '+'
    std::string digits = num;
    if (!digits.empty() && digits[0] == '-') digits = digits.substr(1);
    if (!all_digits(digits) || !all_digits(den)) return std::nullopt;
    mpz_class q(den, 10);
    if (q == 0) return std::nullopt;  // denominator must be positive
    Rat r(mpz_class(num, 10), q);
    r.canonicalize();
    return r;
}

std::string to_string(const Rat& x) { return x.get_str(); }

}  // namespace superschur
