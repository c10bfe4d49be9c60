#include "homcx/field.hpp"

namespace homcx {

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Field::Field(std::uint32_t p) : p_(p) {
    if (!is_prime(p))
        throw ContractError("field characteristic must be prime, got " + std::to_string(p));
    if (p >= (1u << 16))
        throw ContractError("field characteristic must be below 65536");
}

Elem Field::pow(Elem a, std::uint64_t e) const {
    Elem result = 1 % p_;
    Elem base = a % p_;
    while (e) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

Elem Field::inv(Elem a) const {
    if (a % p_ == 0) throw ContractError("inverse of zero in F_" + std::to_string(p_));
    return pow(a, p_ - 2);
}

}  // namespace homcx
