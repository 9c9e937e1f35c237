#include "cmif/eccurve.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "cmif/cornacchia.hpp"
#include "cmif/curve_table_data.hpp"

namespace cmif {
namespace {

using Poly = std::vector<std::uint64_t>;  // coefficients, low degree first

void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

// f mod g over F_p, g nonzero
Poly poly_mod(Poly f, const Poly& g, std::uint64_t p) {
    trim(f);
    const std::uint64_t lead_inv = invmod(g.back(), p);
    while (f.size() >= g.size()) {
        const std::uint64_t c = mulmod(f.back(), lead_inv, p);
        const std::size_t shift = f.size() - g.size();
        for (std::size_t i = 0; i < g.size(); ++i) {
            f[shift + i] = submod(f[shift + i], mulmod(c, g[i], p), p);
        }
        trim(f);
    }
    return f;
}

std::uint64_t residue(std::int64_t v, std::uint64_t p) { return to_residue(v, p); }

}  // namespace

bool CmCurve::is_bad(std::uint64_t p) const {
    return std::binary_search(bad_primes.begin(), bad_primes.end(), p);
}

i128 CmCurve::discriminant_core() const {
    const i128 a = A, b = B;
    return 4 * a * a * a + 27 * b * b;
}

std::vector<std::uint64_t> model_bad_primes(std::int64_t A, std::int64_t B) {
    const i128 a = A, b = B;
    i128 disc = 4 * a * a * a + 27 * b * b;
    if (disc == 0) throw std::domain_error("singular model: 4A^3 + 27B^2 = 0");
    u128 n = static_cast<u128>(disc < 0 ? -disc : disc);
    std::vector<std::uint64_t> out{2};
    constexpr std::uint64_t kTrialBound = 2000000;
    for (std::uint64_t q = 2; q <= kTrialBound && static_cast<u128>(q) * q <= n; ++q) {
        if (n % q) continue;
        while (n % q == 0) n /= q;
        if (q != 2) out.push_back(q);
    }
    if (n > 1) {
        if (n > static_cast<u128>(UINT64_MAX) || !is_prime_u64(static_cast<std::uint64_t>(n))) {
            throw std::runtime_error("cannot factor the model discriminant; cofactor " + to_string(n));
        }
        out.push_back(static_cast<std::uint64_t>(n));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

CmCurve make_custom_curve(std::int64_t A, std::int64_t B, std::int64_t g, std::int64_t f, std::string label) {
    CmCurve c;
    c.label = std::move(label);
    c.A = A;
    c.B = B;
    c.order = &order_for(g, f);
    c.bad_primes = model_bad_primes(A, B);
    return c;
}

std::vector<CmCurve> parse_curve_table(std::istream& in) {
    std::vector<CmCurve> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        CmCurve c;
        std::int64_t g = 0, f = 0;
        std::string bad;
        if (!(ls >> c.label)) continue;
        auto fail = [&](const std::string& why) {
            return std::runtime_error("curve table line " + std::to_string(lineno) + ": " + why);
        };
        if (!(ls >> c.A >> c.B >> g >> f >> bad)) throw fail("expected: label A B g f bad_primes");
        std::string extra;
        if (ls >> extra) throw fail("trailing field '" + extra + "'");
        try {
            c.order = &order_for(g, f);
        } catch (const std::invalid_argument& e) {
            throw fail(e.what());
        }
        std::istringstream bs(bad);
        std::string tok;
        while (std::getline(bs, tok, ',')) {
            try {
                std::size_t used = 0;
                const auto v = std::stoull(tok, &used);
                if (used != tok.size()) throw std::invalid_argument(tok);
                c.bad_primes.push_back(v);
            } catch (const std::exception&) {
                throw fail("bad prime list '" + bad + "'");
            }
        }
        std::sort(c.bad_primes.begin(), c.bad_primes.end());
        if (c.discriminant_core() == 0) throw fail("singular model");
        for (const auto& other : out) {
            if (other.label == c.label) throw fail("duplicate label " + c.label);
        }
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<CmCurve> load_curve_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open curve table " + path);
    return parse_curve_table(in);
}

const std::vector<CmCurve>& builtin_curves() {
    static const std::vector<CmCurve> table = [] {
        std::istringstream in{std::string(kBuiltinCurveTable)};
        return parse_curve_table(in);
    }();
    return table;
}

const CmCurve& find_curve(const std::vector<CmCurve>& table, std::string_view label) {
    for (const auto& c : table) {
        if (c.label == label) return c;
    }
    throw std::invalid_argument("unknown curve label '" + std::string(label) + "'");
}

CurveModP::CurveModP(std::int64_t A, std::int64_t B, std::uint64_t p)
    : p_(p), a_(residue(A, p)), b_(residue(B, p)) {
    if (p < 3) throw std::domain_error("CurveModP: p must be an odd prime");
    const std::uint64_t a3 = mulmod(mulmod(a_, a_, p), a_, p);
    const std::uint64_t disc = addmod(mulmod(4 % p, a3, p), mulmod(27 % p, mulmod(b_, b_, p), p), p);
    if (disc == 0) throw std::domain_error("CurveModP: model is singular mod " + std::to_string(p));
}

CurveModP CurveModP::quadratic_twist() const {
    std::uint64_t c = 2;
    while (powmod(c, (p_ - 1) / 2, p_) != p_ - 1) ++c;
    const std::uint64_t c2 = mulmod(c, c, p_);
    const auto a = static_cast<std::int64_t>(mulmod(a_, c2, p_));
    const auto b = static_cast<std::int64_t>(mulmod(b_, mulmod(c2, c, p_), p_));
    return {a, b, p_};
}

std::uint64_t CurveModP::rhs(std::uint64_t x) const {
    const std::uint64_t x2 = mulmod(x, x, p_);
    return addmod(mulmod(addmod(x2, a_, p_), x, p_), b_, p_);
}

bool CurveModP::is_on_curve(const Point& P) const {
    if (P.infinity) return true;
    if (P.x >= p_ || P.y >= p_) return false;
    return mulmod(P.y, P.y, p_) == rhs(P.x);
}

Point CurveModP::negate(const Point& P) const {
    if (P.infinity || P.y == 0) return P;
    return Point::affine(P.x, p_ - P.y);
}

Point CurveModP::double_unchecked(const Point& P) const {
    if (P.infinity || P.y == 0) return Point::at_infinity();
    const std::uint64_t x2 = mulmod(P.x, P.x, p_);
    const std::uint64_t num = addmod(addmod(addmod(x2, x2, p_), x2, p_), a_, p_);
    const std::uint64_t lambda = mulmod(num, invmod(addmod(P.y, P.y, p_), p_), p_);
    const std::uint64_t x3 = submod(mulmod(lambda, lambda, p_), addmod(P.x, P.x, p_), p_);
    const std::uint64_t y3 = submod(mulmod(lambda, submod(P.x, x3, p_), p_), P.y, p_);
    return Point::affine(x3, y3);
}

Point CurveModP::add_unchecked(const Point& P, const Point& Q) const {
    if (P.infinity) return Q;
    if (Q.infinity) return P;
    if (P.x == Q.x) {
        if (P.y == Q.y) return double_unchecked(P);
        return Point::at_infinity();
    }
    const std::uint64_t lambda = mulmod(submod(Q.y, P.y, p_), invmod(submod(Q.x, P.x, p_), p_), p_);
    const std::uint64_t x3 = submod(submod(mulmod(lambda, lambda, p_), P.x, p_), Q.x, p_);
    const std::uint64_t y3 = submod(mulmod(lambda, submod(P.x, x3, p_), p_), P.y, p_);
    return Point::affine(x3, y3);
}

Point CurveModP::add(const Point& P, const Point& Q) const {
    if (!is_on_curve(P) || !is_on_curve(Q)) throw std::domain_error("add: point not on curve");
    return add_unchecked(P, Q);
}

Point CurveModP::scalar_mul_unchecked(std::uint64_t n, const Point& P) const {
    if (n == 0 || P.infinity) return Point::at_infinity();
    Point R = Point::at_infinity();
    for (int bit = 63 - __builtin_clzll(n); bit >= 0; --bit) {
        R = double_unchecked(R);
        if ((n >> bit) & 1U) R = add_unchecked(R, P);
    }
    return R;
}

Point CurveModP::scalar_mul(std::uint64_t n, const Point& P) const {
    if (!is_on_curve(P)) throw std::domain_error("scalar_mul: point not on curve");
    return scalar_mul_unchecked(n, P);
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("uniform_below: empty range");
    // Reject the top partial block so every residue is equally likely.
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t v;
    do {
        v = rng();
    } while (v >= limit);
    return v % n;
}

Point CurveModP::random_point(std::mt19937_64& rng) const {
    for (;;) {
        const std::uint64_t x = uniform_below(rng, p_);
        const auto root = sqrt_mod(rhs(x), p_);
        if (!root) continue;
        const bool flip = (rng() & 1U) != 0;
        return Point::affine(x, flip && *root != 0 ? p_ - *root : *root);
    }
}

int CurveModP::cubic_root_count() const {
    // x^p mod f, f = x^3 + a x + b, by square-and-multiply on residues of degree < 3.
    using R3 = std::array<std::uint64_t, 3>;
    auto mul = [&](const R3& u, const R3& v) {
        std::array<std::uint64_t, 5> w{};
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) w[i + j] = addmod(w[i + j], mulmod(u[i], v[j], p_), p_);
        }
        // x^4 = -a x^2 - b x, x^3 = -a x - b
        w[2] = submod(w[2], mulmod(a_, w[4], p_), p_);
        w[1] = submod(w[1], mulmod(b_, w[4], p_), p_);
        w[1] = submod(w[1], mulmod(a_, w[3], p_), p_);
        w[0] = submod(w[0], mulmod(b_, w[3], p_), p_);
        return R3{w[0], w[1], w[2]};
    };
    R3 result{1, 0, 0};
    R3 base{0, 1, 0};
    for (std::uint64_t e = p_; e; e >>= 1U) {
        if (e & 1U) result = mul(result, base);
        base = mul(base, base);
    }
    Poly h{result[0], submod(result[1], 1, p_), result[2]};
    trim(h);
    if (h.empty()) return 3;
    Poly f{b_, a_, 0, 1};
    // gcd(f, h); f is squarefree at good p, so deg gcd counts distinct roots.
    while (!h.empty()) {
        Poly r = poly_mod(f, h, p_);
        f = std::move(h);
        h = std::move(r);
    }
    return static_cast<int>(f.size()) - 1;
}

}  // namespace cmif
