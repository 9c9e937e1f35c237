#include "cmif/frobenius.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "cmif/cornacchia.hpp"
#include "cmif/oracle.hpp"

namespace cmif {

const char* to_string(ReductionKind k) {
    switch (k) {
        case ReductionKind::Bad: return "bad";
        case ReductionKind::GoodOrdinary: return "ord";
        case ReductionKind::GoodSupersingular: return "ss";
        case ReductionKind::GoodSmall: return "small";
    }
    return "?";
}

AmbiguousFrobenius::AmbiguousFrobenius(std::uint64_t p)
    : std::runtime_error("ambiguous Frobenius at p=" + std::to_string(p)), p_(p) {}

ReductionKind classify(std::uint64_t p, const CmCurve& curve) {
    if (curve.is_bad(p)) return ReductionKind::Bad;
    if (p <= 3) return ReductionKind::GoodSmall;
    if (splitting_type(p, *curve.order) == SplittingType::Split) return ReductionKind::GoodOrdinary;
    return ReductionKind::GoodSupersingular;
}

Frobenius frobenius_at(std::uint64_t p, const CmCurve& curve, std::mt19937_64& rng) {
    if (p <= 3 || classify(p, curve) != ReductionKind::GoodOrdinary) {
        throw std::invalid_argument("frobenius_at: p=" + std::to_string(p) + " is not an ordinary prime > 3");
    }
    const auto pi0 = solve_norm(p, *curve.order);
    if (!pi0) throw std::logic_error("frobenius_at: split prime without a norm element");

    // Candidates are the unit multiples of pi0 up to conjugation. Each one
    // fixes the group Z/d x Z/e of E and, through -pi, that of the quadratic
    // twist; random points on both curves discard the wrong ones.
    const CurveModP E(curve, p);
    const CurveModP twist = E.quadratic_twist();
    const std::uint64_t two_torsion = 1 + static_cast<std::uint64_t>(E.cubic_root_count());
    const QuadInt one(1, 0, *curve.order);

    struct Candidate {
        QuadInt pi;
        std::uint64_t n;
        std::uint64_t e;
        std::uint64_t twist_e;
    };
    auto consistent = [two_torsion](std::uint64_t d, std::uint64_t e) {
        return gcd_u64(d, 2) * gcd_u64(e, 2) == two_torsion;
    };
    std::vector<Candidate> live;
    for (const QuadInt& u : units(*curve.order)) {
        const QuadInt c = u * *pi0;
        const i128 t = trace(c);
        if (std::any_of(live.begin(), live.end(), [&](const Candidate& x) { return trace(x.pi) == t; })) continue;
        const auto n = static_cast<std::uint64_t>(static_cast<i128>(p) + 1 - t);
        const auto twist_n = static_cast<std::uint64_t>(static_cast<i128>(p) + 1 + t);
        const std::uint64_t d = content(c - one);
        const std::uint64_t twist_d = content(c + one);
        if (!consistent(d, n / d) || !consistent(twist_d, twist_n / twist_d)) continue;
        live.push_back({c, n, n / d, twist_n / twist_d});
    }

    for (int sampled = 0; live.size() > 1; ++sampled) {
        if (sampled == kMaxDisambiguationPoints) throw AmbiguousFrobenius(p);
        const Point P = E.random_point(rng);
        const Point Q = twist.random_point(rng);
        std::erase_if(live, [&](const Candidate& c) {
            return !E.scalar_mul_unchecked(c.e, P).infinity || !twist.scalar_mul_unchecked(c.twist_e, Q).infinity;
        });
    }
    if (live.empty()) throw AmbiguousFrobenius(p);
    return {live.front().pi, live.front().n};
}

PrimeRecord dp_ep(std::uint64_t p, const CmCurve& curve, std::mt19937_64& rng) {
    PrimeRecord r;
    r.p = p;
    r.kind = classify(p, curve);
    switch (r.kind) {
        case ReductionKind::Bad:
            break;
        case ReductionKind::GoodSmall: {
            const GroupStructure g = group_structure(curve, p);
            r.n = g.n;
            r.d = g.d;
            r.e = g.e;
            r.a_p = static_cast<std::int64_t>(p + 1) - static_cast<std::int64_t>(g.n);
            break;
        }
        case ReductionKind::GoodOrdinary: {
            const Frobenius fr = frobenius_at(p, curve, rng);
            r.pi_a = fr.pi.a();
            r.pi_b = fr.pi.b();
            r.n = fr.n;
            r.a_p = static_cast<std::int64_t>(trace(fr.pi));
            r.d = content(fr.pi - QuadInt(1, 0, fr.pi.order()));
            r.e = r.n / r.d;
            break;
        }
        case ReductionKind::GoodSupersingular: {
            const CurveModP E(curve, p);
            r.n = p + 1;
            r.d = E.cubic_splits() ? 2 : 1;
            r.e = r.n / r.d;
            break;
        }
    }
    return r;
}

}  // namespace cmif
