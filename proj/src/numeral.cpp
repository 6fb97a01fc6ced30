#include "orglab/numeral.hpp"

#include <algorithm>
#include <cstdint>

namespace orglab {
namespace {

// 4 * (3^39 - 1) / 2 < 2^64, so 39 digits always fit in a machine word.
constexpr std::size_t kWordSafeDigits = 39;

EmployeeState state_of_residue(unsigned long residue) {
    // n = 3q + d with d in {0, 2, 4}: residue 1 forces d = 4.
    switch (residue) {
    case 0:
        return EmployeeState::Zombie;
    case 2:
        return EmployeeState::Confused;
    default:
        return EmployeeState::Motivated;
    }
}

} // namespace

NumValue decode(const OrgState &org) {
    const auto &e = org.employees();
    std::size_t head = std::min(e.size(), kWordSafeDigits);
    std::uint64_t fast = 0;
    for (std::size_t i = 0; i < head; ++i) fast = 3 * fast + static_cast<std::uint64_t>(digit_of(e[i]));

    NumValue value;
    mpz_import(value.get_mpz_t(), 1, -1, sizeof fast, 0, 0, &fast);
    for (std::size_t i = head; i < e.size(); ++i) {
        value *= 3;
        value += static_cast<unsigned long>(digit_of(e[i]));
    }
    return value;
}

OrgState encode(const NumValue &n) {
    if (sgn(n) < 0) throw InvalidInput("numeral must be nonnegative");
    if (!is_even(n)) throw InvalidInput("only even numbers are representable; got odd " + n.get_str());

    std::vector<EmployeeState> digits;
    NumValue rest = n;
    while (!mpz_fits_ulong_p(rest.get_mpz_t())) {
        auto residue = mpz_fdiv_q_ui(rest.get_mpz_t(), rest.get_mpz_t(), 3);
        auto state = state_of_residue(residue);
        // rest currently holds floor(n / 3); residue 1 means (n - 4) / 3 = floor(n / 3) - 1.
        if (residue == 1) rest -= 1;
        digits.push_back(state);
    }
    unsigned long small = rest.get_ui();
    while (small != 0) {
        auto state = state_of_residue(small % 3);
        small = (small - static_cast<unsigned long>(digit_of(state))) / 3;
        digits.push_back(state);
    }
    std::reverse(digits.begin(), digits.end());
    return OrgState(std::move(digits));
}

NumValue parse_decimal(std::string_view text) {
    if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        throw InvalidInput("expected a nonnegative decimal integer; got '" + std::string(text) + "'");
    }
    return NumValue(std::string(text), 10);
}

std::string to_decimal(const NumValue &n) { return n.get_str(10); }

std::string to_digit_string(const OrgState &org) {
    std::string out;
    out.reserve(org.size());
    for (auto e : org.employees()) out.push_back(static_cast<char>('0' + digit_of(e)));
    return out;
}

OrgState parse_digit_string(std::string_view digits) {
    std::vector<EmployeeState> employees;
    employees.reserve(digits.size());
    for (char c : digits) {
        if (c < '0' || c > '9') throw InvalidInput("digit string must use only 0, 2, 4; got '" + std::string(digits) + "'");
        employees.push_back(state_of_digit(c - '0'));
    }
    return OrgState(std::move(employees));
}

} // namespace orglab
