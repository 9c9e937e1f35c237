#include "cmif/quadorder.hpp"

#include <array>
#include <limits>
#include <stdexcept>
#include <utility>

namespace cmif {
namespace {

OrderDesc make_order(std::int64_t g, std::int64_t f) {
    OrderDesc o;
    o.g = g;
    o.f = f;
    const std::int64_t g_mod4 = ((g % 4) + 4) % 4;
    if (g_mod4 == 1) {
        o.delta = g;
        o.omega_trace = 1;
        o.omega_norm = (1 - g) / 4;
    } else {
        o.delta = 4 * g;
        o.omega_trace = 0;
        o.omega_norm = -g;
    }
    o.beta_trace = f * o.omega_trace;
    o.beta_norm = f * f * o.omega_norm;
    if (f == 1 && g == -1) {
        o.w = 4;
    } else if (f == 1 && g == -3) {
        o.w = 6;
    } else {
        o.w = 2;
    }
    return o;
}

const std::array<OrderDesc, 13>& registry() {
    static const std::array<OrderDesc, 13> orders = {
        make_order(-1, 1),   make_order(-2, 1),  make_order(-3, 1),  make_order(-7, 1),
        make_order(-11, 1),  make_order(-19, 1), make_order(-43, 1), make_order(-67, 1),
        make_order(-163, 1), make_order(-1, 2),  make_order(-3, 2),  make_order(-3, 3),
        make_order(-7, 2),
    };
    return orders;
}

std::int64_t narrow(i128 v) {
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
        throw std::range_error("quadratic integer coefficient exceeds 64-bit range");
    }
    return static_cast<std::int64_t>(v);
}

void require_same_order(const QuadInt& x, const QuadInt& y) {
    if (!(x.order() == y.order())) throw std::invalid_argument("operands belong to different orders");
}

void require_maximal(const OrderDesc& order, const char* what) {
    if (!order.is_maximal()) {
        throw std::invalid_argument(std::string(what) + ": unsupported for nonmaximal order " + order.name());
    }
}

// Trial-division factorization; inputs here are small (norms and moduli).
std::vector<std::pair<std::uint64_t, int>> trial_factor(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, int>> out;
    for (std::uint64_t q = 2; q * q <= n; q += (q == 2 ? 1 : 2)) {
        if (n % q) continue;
        int k = 0;
        while (n % q == 0) {
            n /= q;
            ++k;
        }
        out.emplace_back(q, k);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

std::uint64_t ipow(std::uint64_t b, int e) {
    std::uint64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

int jacobi(std::uint64_t a, std::uint64_t n) {
    // n odd and positive
    a %= n;
    int result = 1;
    while (a != 0) {
        while ((a & 1U) == 0) {
            a >>= 1U;
            const std::uint64_t r = n & 7U;
            if (r == 3 || r == 5) result = -result;
        }
        std::swap(a, n);
        if ((a & 3U) == 3 && (n & 3U) == 3) result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

}  // namespace

std::string OrderDesc::name() const {
    return "g=" + std::to_string(g) + ",f=" + std::to_string(f);
}

std::span<const OrderDesc> class_number_one_orders() {
    return {registry().data(), registry().size()};
}

std::span<const OrderDesc> maximal_orders() {
    return {registry().data(), 9};
}

const OrderDesc& order_for(std::int64_t g, std::int64_t f) {
    for (const auto& o : registry()) {
        if (o.g == g && o.f == f) return o;
    }
    throw std::invalid_argument("no class-number-one order with g=" + std::to_string(g) +
                                " f=" + std::to_string(f));
}

QuadInt operator+(const QuadInt& x, const QuadInt& y) {
    require_same_order(x, y);
    return {narrow(static_cast<i128>(x.a_) + y.a_), narrow(static_cast<i128>(x.b_) + y.b_), x.order()};
}

QuadInt operator-(const QuadInt& x, const QuadInt& y) {
    require_same_order(x, y);
    return {narrow(static_cast<i128>(x.a_) - y.a_), narrow(static_cast<i128>(x.b_) - y.b_), x.order()};
}

QuadInt QuadInt::operator-() const {
    return {narrow(-static_cast<i128>(a_)), narrow(-static_cast<i128>(b_)), *order_};
}

QuadInt operator*(const QuadInt& x, const QuadInt& y) {
    require_same_order(x, y);
    const OrderDesc& o = x.order();
    const i128 a1 = x.a_, b1 = x.b_, a2 = y.a_, b2 = y.b_;
    const i128 bb = b1 * b2;
    // beta^2 = T beta - N
    const i128 a = a1 * a2 - bb * o.beta_norm;
    const i128 b = a1 * b2 + a2 * b1 + bb * o.beta_trace;
    return {narrow(a), narrow(b), o};
}

QuadInt qi_mul(const QuadInt& x, const QuadInt& y) { return x * y; }

u128 norm(const QuadInt& x) {
    const OrderDesc& o = x.order();
    const i128 a = x.a(), b = x.b();
    const i128 n = a * a + o.beta_trace * a * b + o.beta_norm * b * b;
    return static_cast<u128>(n);
}

i128 trace(const QuadInt& x) {
    return 2 * static_cast<i128>(x.a()) + static_cast<i128>(x.order().beta_trace) * x.b();
}

QuadInt conj(const QuadInt& x) {
    const OrderDesc& o = x.order();
    return {narrow(static_cast<i128>(x.a()) + static_cast<i128>(o.beta_trace) * x.b()),
            narrow(-static_cast<i128>(x.b())), o};
}

std::uint64_t content(const QuadInt& x) {
    if (x.is_zero()) throw std::domain_error("content of zero is undefined");
    auto mag = [](std::int64_t v) {
        return v < 0 ? static_cast<std::uint64_t>(0) - static_cast<std::uint64_t>(v)
                     : static_cast<std::uint64_t>(v);
    };
    return gcd_u64(mag(x.a()), mag(x.b()));
}

bool divides(const QuadInt& mu, const QuadInt& x) {
    if (mu.is_zero()) throw std::domain_error("division by zero element");
    const QuadInt q = x * conj(mu);
    const auto n = static_cast<i128>(norm(mu));
    return static_cast<i128>(q.a()) % n == 0 && static_cast<i128>(q.b()) % n == 0;
}

bool comaximal(const QuadInt& mu, const QuadInt& alpha) {
    require_same_order(mu, alpha);
    const QuadInt beta(0, 1, mu.order());
    const std::array<QuadInt, 4> gens = {mu, mu * beta, alpha, alpha * beta};
    // Index of the Z-lattice spanned by the generators = gcd of 2x2 minors.
    u128 g = 0;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        for (std::size_t j = i + 1; j < gens.size(); ++j) {
            const i128 m = static_cast<i128>(gens[i].a()) * gens[j].b() -
                           static_cast<i128>(gens[i].b()) * gens[j].a();
            u128 v = static_cast<u128>(m < 0 ? -m : m);
            while (v) {
                const u128 t = g % v;
                g = v;
                v = t;
            }
        }
    }
    return g == 1;
}

int kronecker(std::int64_t delta, std::uint64_t n) {
    if (n == 0) throw std::domain_error("kronecker: n must be positive");
    int result = 1;
    while ((n & 1U) == 0) {
        n >>= 1U;
        const std::int64_t r = ((delta % 8) + 8) % 8;
        if (r % 2 == 0) return 0;
        if (r == 3 || r == 5) result = -result;
    }
    if (n == 1) return result;
    const std::uint64_t a = to_residue(delta, n);
    return result * jacobi(a, n);
}

std::uint64_t phi_ideal(std::uint64_t d, const OrderDesc& order) {
    require_maximal(order, "phi_ideal");
    if (d == 0) throw std::domain_error("phi_ideal: d must be positive");
    std::uint64_t result = 1;
    for (auto [ell, k] : trial_factor(d)) {
        const int chi = kronecker(order.delta, ell);
        result *= ipow(ell, 2 * k - 2) * (ell - 1) * static_cast<std::uint64_t>(static_cast<std::int64_t>(ell) - chi);
    }
    return result;
}

std::uint64_t phi_element(const QuadInt& mu) {
    require_maximal(mu.order(), "phi_element");
    if (mu.is_zero()) throw std::domain_error("phi_element: mu must be nonzero");
    const auto m = static_cast<std::uint64_t>(norm(mu));
    const std::uint64_t c = content(mu);
    std::uint64_t result = 1;
    for (auto [ell, k] : trial_factor(m)) {
        const int chi = kronecker(mu.order().delta, ell);
        if (chi == -1) {
            const int e = k / 2;
            result *= ipow(ell, 2 * e - 2) * (ell * ell - 1);
        } else if (chi == 0) {
            result *= ipow(ell, k - 1) * (ell - 1);
        } else {
            int low = 0;
            for (std::uint64_t cc = c; cc % ell == 0; cc /= ell) ++low;
            const int high = k - low;
            for (int e : {low, high}) {
                if (e > 0) result *= ipow(ell, e - 1) * (ell - 1);
            }
        }
    }
    return result;
}

std::uint64_t rep_count(std::uint64_t m, const OrderDesc& order) {
    require_maximal(order, "rep_count");
    if (m == 0) throw std::domain_error("rep_count: m must be positive");
    std::int64_t r = 1;
    for (auto [ell, k] : trial_factor(m)) {
        const int chi = kronecker(order.delta, ell);
        std::int64_t s = 0, term = 1;
        for (int j = 0; j <= k; ++j) {
            s += term;
            term *= chi;
        }
        r *= s;
    }
    return static_cast<std::uint64_t>(order.w * r);
}

std::uint64_t rep_count_bruteforce(std::uint64_t m, const OrderDesc& order) {
    require_maximal(order, "rep_count_bruteforce");
    if (m == 0 || m > 1000000) throw std::domain_error("rep_count_bruteforce: m outside [1, 10^6]");
    const std::int64_t t = order.omega_trace, n = order.omega_norm;
    const std::int64_t disc = 4 * n - t * t;
    const auto mm = static_cast<std::int64_t>(m);
    // 4 Nm = (2X + tY)^2 + |disc| Y^2
    const auto ymax = static_cast<std::int64_t>(isqrt(static_cast<std::uint64_t>(4 * mm / disc)));
    const auto s = static_cast<std::int64_t>(isqrt(static_cast<std::uint64_t>(4 * mm)));
    std::uint64_t count = 0;
    for (std::int64_t y = -ymax; y <= ymax; ++y) {
        for (std::int64_t x = (-s - t * y) / 2 - 1; x <= (s - t * y) / 2 + 1; ++x) {
            if (x * x + t * x * y + n * y * y == mm) ++count;
        }
    }
    return count;
}

std::vector<std::uint64_t> rep_counts_bruteforce_upto(std::uint64_t bound, const OrderDesc& order) {
    require_maximal(order, "rep_counts_bruteforce_upto");
    std::vector<std::uint64_t> hist(bound + 1, 0);
    const std::int64_t t = order.omega_trace, n = order.omega_norm;
    const std::int64_t disc = 4 * n - t * t;
    const auto mm = static_cast<std::int64_t>(bound);
    const auto ymax = static_cast<std::int64_t>(isqrt(static_cast<std::uint64_t>(4 * mm / disc)));
    const auto s = static_cast<std::int64_t>(isqrt(static_cast<std::uint64_t>(4 * mm)));
    for (std::int64_t y = -ymax; y <= ymax; ++y) {
        for (std::int64_t x = (-s - t * y) / 2 - 1; x <= (s - t * y) / 2 + 1; ++x) {
            const std::int64_t v = x * x + t * x * y + n * y * y;
            if (v >= 0 && v <= mm) ++hist[static_cast<std::size_t>(v)];
        }
    }
    return hist;
}

std::vector<QuadInt> units(const OrderDesc& order) {
    const QuadInt one(1, 0, order);
    QuadInt gen(-1, 0, order);
    if (order.w == 4) gen = QuadInt(0, 1, order);   // i
    if (order.w == 6) gen = QuadInt(0, 1, order);   // omega, a primitive sixth root of unity
    std::vector<QuadInt> out;
    out.reserve(static_cast<std::size_t>(order.w));
    QuadInt u = one;
    for (int i = 0; i < order.w; ++i) {
        out.push_back(u);
        u = u * gen;
    }
    return out;
}

}  // namespace cmif
