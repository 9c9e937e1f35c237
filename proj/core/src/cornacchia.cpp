#include "cmif/cornacchia.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include "cmif/modarith.hpp"

namespace cmif {

const char* to_string(SplittingType t) {
    switch (t) {
        case SplittingType::Split: return "split";
        case SplittingType::Inert: return "inert";
        case SplittingType::Ramified: return "ramified";
    }
    return "?";
}

SplittingType splitting_type(std::uint64_t p, const OrderDesc& order) {
    const int k = kronecker(order.delta, p);
    if (k == 1) return SplittingType::Split;
    if (k == 0) return SplittingType::Ramified;
    return SplittingType::Inert;
}

std::optional<std::uint64_t> sqrt_mod(std::uint64_t a, std::uint64_t p) {
    a %= p;
    if (a == 0) return 0;
    if (p == 2) return a;
    if (powmod(a, (p - 1) / 2, p) != 1) return std::nullopt;

    std::uint64_t r;
    if (p % 4 == 3) {
        r = powmod(a, (p + 1) / 4, p);
    } else {
        std::uint64_t q = p - 1;
        int s = 0;
        while ((q & 1U) == 0) {
            q >>= 1U;
            ++s;
        }
        std::uint64_t z = 2;
        while (powmod(z, (p - 1) / 2, p) != p - 1) ++z;
        std::uint64_t c = powmod(z, q, p);
        std::uint64_t t = powmod(a, q, p);
        r = powmod(a, (q + 1) / 2, p);
        int m = s;
        while (t != 1) {
            int i = 0;
            std::uint64_t t2 = t;
            while (t2 != 1) {
                t2 = mulmod(t2, t2, p);
                ++i;
            }
            std::uint64_t b = c;
            for (int j = 0; j < m - i - 1; ++j) b = mulmod(b, b, p);
            r = mulmod(r, b, p);
            c = mulmod(b, b, p);
            t = mulmod(t, c, p);
            m = i;
        }
    }
    return r <= p - r ? r : p - r;
}

std::optional<QuadInt> find_norm_element(std::uint64_t p, const OrderDesc& order) {
    const OrderDesc& field = order_for(order.g, 1);
    const std::int64_t t = field.omega_trace;
    const std::int64_t n = field.omega_norm;
    if (p == 2) {
        for (std::int64_t y = 0; y <= 2; ++y) {
            for (std::int64_t x = -3; x <= 3; ++x) {
                if (x * x + t * x * y + n * y * y == 2) return QuadInt(x, y, field);
            }
        }
        return std::nullopt;
    }
    if (splitting_type(p, field) == SplittingType::Inert) return std::nullopt;

    // Solve x^2 + |D| y^2 = 4p with x = D (mod 2).
    const std::int64_t d = field.delta;
    const auto abs_d = static_cast<std::uint64_t>(-d);
    auto root = sqrt_mod(to_residue(d, p), p);
    if (!root) return std::nullopt;
    std::uint64_t x0 = *root;
    if ((x0 & 1U) != (static_cast<std::uint64_t>(d) & 1U)) x0 = p - x0;
    std::uint64_t a = 2 * p, b = x0;
    const std::uint64_t limit = isqrt(4 * p);
    while (b > limit) {
        const std::uint64_t r = a % b;
        a = b;
        b = r;
    }
    const u128 four_p = static_cast<u128>(4) * p;
    const u128 b2 = static_cast<u128>(b) * b;
    if (b2 > four_p || (four_p - b2) % abs_d != 0) return std::nullopt;
    const auto c = static_cast<std::uint64_t>((four_p - b2) / abs_d);
    const std::uint64_t y = isqrt(c);
    if (y * y != c) return std::nullopt;

    const auto xs = static_cast<std::int64_t>(b);
    const auto ys = static_cast<std::int64_t>(y);
    // (x + y sqrt(D)) / 2 in the basis {1, omega}
    if (t == 0) return QuadInt(xs / 2, ys, field);
    return QuadInt((xs - ys) / 2, ys, field);
}

std::optional<QuadInt> solve_norm(std::uint64_t p, const OrderDesc& order) {
    if (order.f > 1 && p <= 3) {
        throw std::invalid_argument("solve_norm: p must exceed 3 for a nonmaximal order");
    }
    if (splitting_type(p, order) != SplittingType::Split) return std::nullopt;
    const auto x = find_norm_element(p, order);
    if (!x || norm(*x) != p) {
        throw std::logic_error("solve_norm: descent failed for split prime " + std::to_string(p));
    }

    const OrderDesc& field = x->order();
    std::vector<QuadInt> in_order;
    for (const QuadInt& u : units(field)) {
        for (const QuadInt& y : {u * *x, u * conj(*x)}) {
            if (y.b() % order.f == 0) in_order.emplace_back(y.a(), y.b() / order.f, order);
        }
    }
    if (in_order.empty()) {
        throw std::logic_error("solve_norm: no associate of the norm-" + std::to_string(p) +
                               " element lies in order " + order.name());
    }
    auto better = [](const QuadInt& u, const QuadInt& v) {
        const bool u_pos = u.a() > 0 && u.b() > 0;
        const bool v_pos = v.a() > 0 && v.b() > 0;
        if (u_pos != v_pos) return u_pos;
        if (u_pos) {
            if (u.b() != v.b()) return u.b() < v.b();
            return u.a() > v.a();
        }
        if ((u.b() > 0) != (v.b() > 0)) return u.b() > 0;
        if (u.a() != v.a()) return u.a() > v.a();
        return u.b() < v.b();
    };
    QuadInt best = in_order.front();
    for (const auto& c : in_order) {
        if (better(c, best)) best = c;
    }
    return best;
}

}  // namespace cmif
