#pragma once

// Short-Weierstrass curves y^2 = x^3 + Ax + B: the CM curve table and the
// group law over prime fields.

#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "cmif/modarith.hpp"
#include "cmif/quadorder.hpp"

namespace cmif {

struct CmCurve {
    std::string label;
    std::int64_t A = 0;
    std::int64_t B = 0;
    const OrderDesc* order = nullptr;
    std::vector<std::uint64_t> bad_primes;  // increasing

    [[nodiscard]] bool is_bad(std::uint64_t p) const;
    /// 4A^3 + 27B^2
    [[nodiscard]] i128 discriminant_core() const;
};

/// Primes dividing 2(4A^3 + 27B^2). Throws std::domain_error for a singular
/// model and std::runtime_error if the discriminant cannot be factored.
std::vector<std::uint64_t> model_bad_primes(std::int64_t A, std::int64_t B);

/// A user-supplied model; the bad set is derived from its discriminant.
CmCurve make_custom_curve(std::int64_t A, std::int64_t B, std::int64_t g, std::int64_t f,
                          std::string label = "custom");

/// Parses the whitespace-separated table format
///   label A B g f p1,p2,...
/// with '#' comments. Throws std::runtime_error with the line number on error.
std::vector<CmCurve> parse_curve_table(std::istream& in);
std::vector<CmCurve> load_curve_table(const std::string& path);

/// The thirteen shipped models.
const std::vector<CmCurve>& builtin_curves();

/// Throws std::invalid_argument for an unknown label.
const CmCurve& find_curve(const std::vector<CmCurve>& table, std::string_view label);

struct Point {
    bool infinity = true;
    std::uint64_t x = 0;
    std::uint64_t y = 0;

    static Point at_infinity() { return {}; }
    static Point affine(std::uint64_t x, std::uint64_t y) { return {false, x, y}; }

    friend bool operator==(const Point&, const Point&) = default;
};

/// A curve reduced modulo an odd prime p of good reduction for the model.
class CurveModP {
public:
    /// Throws std::domain_error when p = 2 or the model is singular mod p.
    CurveModP(std::int64_t A, std::int64_t B, std::uint64_t p);
    CurveModP(const CmCurve& curve, std::uint64_t p) : CurveModP(curve.A, curve.B, p) {}

    [[nodiscard]] std::uint64_t p() const { return p_; }
    [[nodiscard]] std::uint64_t a() const { return a_; }
    [[nodiscard]] std::uint64_t b() const { return b_; }

    /// x^3 + Ax + B mod p
    [[nodiscard]] std::uint64_t rhs(std::uint64_t x) const;
    [[nodiscard]] bool is_on_curve(const Point& P) const;

    /// Group law. Off-curve input raises std::domain_error.
    [[nodiscard]] Point add(const Point& P, const Point& Q) const;
    [[nodiscard]] Point negate(const Point& P) const;
    [[nodiscard]] Point scalar_mul(std::uint64_t n, const Point& P) const;

    /// Affine point with x uniform on the curve's x-coordinates, y chosen by
    /// a coin flip. Deterministic for a given generator state.
    [[nodiscard]] Point random_point(std::mt19937_64& rng) const;

    /// y^2 = x^3 + Ac^2 x + Bc^3 for the least quadratic nonresidue c mod p.
    [[nodiscard]] CurveModP quadratic_twist() const;

    /// Number of distinct roots of x^3 + Ax + B in F_p.
    [[nodiscard]] int cubic_root_count() const;
    [[nodiscard]] bool cubic_splits() const { return cubic_root_count() == 3; }

    // Unchecked variants for inner loops; inputs must lie on the curve.
    [[nodiscard]] Point add_unchecked(const Point& P, const Point& Q) const;
    [[nodiscard]] Point double_unchecked(const Point& P) const;
    [[nodiscard]] Point scalar_mul_unchecked(std::uint64_t n, const Point& P) const;

private:
    std::uint64_t p_;
    std::uint64_t a_;
    std::uint64_t b_;
};

/// Uniform integer in [0, n) from a 64-bit engine, identical on every platform.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n);

}  // namespace cmif
