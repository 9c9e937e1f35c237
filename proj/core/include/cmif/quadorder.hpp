#pragma once

// Arithmetic in the thirteen imaginary quadratic orders of class number one.
//
// An order O of conductor f in K = Q(sqrt(g)) is written in the integral
// basis {1, beta} with beta = f * omega, where omega = sqrt(g) when
// g = 2, 3 (mod 4) and omega = (1 + sqrt(g)) / 2 when g = 1 (mod 4).
// beta is a root of X^2 - beta_trace * X + beta_norm, which is all the
// multiplication law needs. In this basis x lies in dO iff d divides both
// coordinates.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cmif/modarith.hpp"

namespace cmif {

struct OrderDesc {
    std::int64_t g = -1;          // squarefree field parameter
    std::int64_t f = 1;           // conductor
    std::int64_t delta = -4;      // field discriminant
    int w = 4;                    // roots of unity in K (for f = 1) / units of O
    std::int64_t omega_trace = 0; // omega^2 = omega_trace * omega - omega_norm
    std::int64_t omega_norm = 1;
    std::int64_t beta_trace = 0;  // beta = f * omega
    std::int64_t beta_norm = 1;

    [[nodiscard]] bool is_maximal() const { return f == 1; }
    [[nodiscard]] std::int64_t discriminant() const { return f * f * delta; }
    [[nodiscard]] std::string name() const;

    friend bool operator==(const OrderDesc& a, const OrderDesc& b) {
        return a.g == b.g && a.f == b.f;
    }
};

/// The thirteen class-number-one orders, maximal orders first.
std::span<const OrderDesc> class_number_one_orders();

/// The nine maximal orders.
std::span<const OrderDesc> maximal_orders();

/// Registry lookup; throws std::invalid_argument for a pair outside the table.
const OrderDesc& order_for(std::int64_t g, std::int64_t f);

/// Element a + b*beta of an order. The order pointer refers into the static
/// registry, so values are cheap to copy and never dangle.
class QuadInt {
public:
    QuadInt() = default;
    QuadInt(std::int64_t a, std::int64_t b, const OrderDesc& order) : a_(a), b_(b), order_(&order) {}

    [[nodiscard]] std::int64_t a() const { return a_; }
    [[nodiscard]] std::int64_t b() const { return b_; }
    [[nodiscard]] const OrderDesc& order() const { return *order_; }
    [[nodiscard]] bool is_zero() const { return a_ == 0 && b_ == 0; }

    friend QuadInt operator+(const QuadInt& x, const QuadInt& y);
    friend QuadInt operator-(const QuadInt& x, const QuadInt& y);
    friend QuadInt operator*(const QuadInt& x, const QuadInt& y);
    QuadInt operator-() const;

    friend bool operator==(const QuadInt& x, const QuadInt& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && *x.order_ == *y.order_;
    }

private:
    std::int64_t a_ = 0;
    std::int64_t b_ = 0;
    const OrderDesc* order_ = &class_number_one_orders()[0];
};

/// Product in the order. Coefficients leaving the signed 64-bit range raise
/// std::range_error.
QuadInt qi_mul(const QuadInt& x, const QuadInt& y);

u128 norm(const QuadInt& x);
i128 trace(const QuadInt& x);
QuadInt conj(const QuadInt& x);

/// Largest rational integer d with x in dO; std::domain_error for x = 0.
std::uint64_t content(const QuadInt& x);

/// True when mu divides x in the order (mu != 0).
bool divides(const QuadInt& mu, const QuadInt& x);

/// True when the principal ideals (mu) and (alpha) are comaximal.
bool comaximal(const QuadInt& mu, const QuadInt& alpha);

/// Kronecker symbol (delta / n) for n >= 1.
int kronecker(std::int64_t delta, std::uint64_t n);

/// Phi(d) = #(O_K / dO_K)^x through the Euler product. Maximal orders only.
std::uint64_t phi_ideal(std::uint64_t d, const OrderDesc& order);

/// Phi of the principal ideal (mu) in a maximal order.
std::uint64_t phi_element(const QuadInt& mu);

/// r(m) = w * sum_{e | m} (delta / e). Maximal orders only.
std::uint64_t rep_count(std::uint64_t m, const OrderDesc& order);

/// Exhaustive lattice count of (X, Y) with Nm(X + Y*omega) = m, m <= 10^6.
std::uint64_t rep_count_bruteforce(std::uint64_t m, const OrderDesc& order);

/// Histogram of Nm(X + Y*omega) over all lattice points of norm <= bound;
/// entry m is the brute-force representation count of m.
std::vector<std::uint64_t> rep_counts_bruteforce_upto(std::uint64_t bound, const OrderDesc& order);

/// Units of the order, listed as successive powers of a generator.
std::vector<QuadInt> units(const OrderDesc& order);

}  // namespace cmif
