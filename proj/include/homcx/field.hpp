#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace homcx {

using Elem = std::uint32_t;

/// Thrown when a documented precondition is violated by the caller.
class ContractError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Thrown when an operation needs structure the inputs do not carry
/// (for instance a diagonal tensor product without coproduct data).
class UnsupportedOperation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Thrown when a computation would exceed the configured size budget.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The prime field F_p. Elements are canonical residues in [0, p).
class Field {
public:
    explicit Field(std::uint32_t p);

    std::uint32_t characteristic() const { return p_; }

    Elem add(Elem a, Elem b) const {
        Elem s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
    Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
    Elem mul(Elem a, Elem b) const {
        return static_cast<Elem>((static_cast<std::uint64_t>(a) * b) % p_);
    }
    Elem inv(Elem a) const;
    Elem pow(Elem a, std::uint64_t e) const;

    /// Maps an arbitrary integer to its residue class.
    Elem from_int(long long v) const {
        long long r = v % static_cast<long long>(p_);
        return static_cast<Elem>(r < 0 ? r + p_ : r);
    }
    /// (-1)^k as a field element.
    Elem sign(long long k) const { return (k % 2 == 0) ? 1 : neg(1); }

    bool operator==(const Field& o) const { return p_ == o.p_; }

private:
    std::uint32_t p_;
};

bool is_prime(std::uint32_t n);

}  // namespace homcx
