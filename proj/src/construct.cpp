#include <quandlekit/construct.hpp>
#include <quandlekit/number_theory.hpp>
#include <quandlekit/structure.hpp>

#include <numeric>

namespace quandlekit {

namespace nt = number_theory;

namespace {
    void require_odd_prime(std::uint64_t p)
    {
        if (p % 2 == 0 || ! nt::is_prime(p))
            throw QuandleError(ErrorKind::NotOddPrime, std::to_string(p) + " is not an odd prime", {p});
    }

    void require_within_cap(std::uint64_t order, std::size_t cap)
    {
        if (order > cap)
            throw QuandleError(ErrorKind::SizeLimitExceeded,
                "order " + std::to_string(order) + " exceeds the construction cap " + std::to_string(cap), {order});
    }

    auto family_order(std::uint64_t p, std::uint32_t c) -> std::uint64_t
    {
        if (c < 2)
            throw QuandleError(ErrorKind::ParamOutOfRange, "c >= 2 required", {c});
        auto order = nt::checked_pow(p, c - 1);
        if (! order)
            throw QuandleError(ErrorKind::SizeLimitExceeded, "p^{c-1} overflows", {p, c});
        return *order;
    }
}

auto primitive_root(std::uint64_t p) -> PrimitiveRootResult
{
    require_odd_prime(p);
    if (p > UINT32_MAX)
        throw QuandleError(ErrorKind::ParamOutOfRange, "p^2 must fit in 64 bits", {p});
    PrimitiveRootResult result;
    result.p = p;
    for (std::uint64_t g = 2; g < p; ++g)
        if (nt::multiplicative_order(g, p) == p - 1) {
            result.g = g;
            break;
        }
    // A primitive root mod p^2 is primitive mod every higher power of p.
    if (nt::multiplicative_order(result.g, p * p) == p * (p - 1)) {
        result.h = result.g;
    }
    else {
        result.h = result.g + p;
        result.lifted = true;
    }
    return result;
}

auto affine_quandle(std::uint64_t m, std::int64_t h, std::size_t cap) -> QuandleTable
{
    if (m < 1)
        throw QuandleError(ErrorKind::ParamOutOfRange, "modulus must be positive");
    require_within_cap(m, cap);
    const auto hm = static_cast<std::uint64_t>(((h % static_cast<std::int64_t>(m)) + static_cast<std::int64_t>(m))
        % static_cast<std::int64_t>(m));
    if (std::gcd(hm, m) != 1)
        throw QuandleError(ErrorKind::MultiplierNotInvertible,
            "gcd(" + std::to_string(h) + ", " + std::to_string(m) + ") != 1", {m});
    const auto one_minus_h = (m + 1 - hm) % m;
    std::vector<index_t> entries(m * m);
    for (std::uint64_t a = 0; a < m; ++a)
        for (std::uint64_t b = 0; b < m; ++b)
            entries[a * m + b] = static_cast<index_t>((hm * a + one_minus_h * b) % m);
    return QuandleTable{detail::TrustedTag{}, m, std::move(entries)};
}

auto shq_family(std::uint64_t p, std::uint32_t c, std::size_t cap) -> QuandleTable
{
    require_odd_prime(p);
    const auto m = family_order(p, c);
    require_within_cap(m, cap);
    auto root = primitive_root(p);
    return affine_quandle(m, static_cast<std::int64_t>(root.h % m), cap);
}

auto galois_affine_quandle(std::uint32_t p, std::uint32_t a, GaloisField::element_type multiplier, std::size_t cap)
    -> QuandleTable
{
    auto order = nt::checked_pow(p, a);
    if (! nt::is_prime(p) || a < 1 || ! order)
        throw QuandleError(ErrorKind::ParamOutOfRange, "GF(p^a) needs p prime and a >= 1", {p, a});
    require_within_cap(*order, cap);
    GaloisField field(p, a);
    if (multiplier >= field.size())
        throw QuandleError(ErrorKind::ParamOutOfRange, "multiplier index outside the field", {multiplier});
    if (multiplier == 0 || multiplier == field.one())
        throw QuandleError(ErrorKind::DegenerateMultiplier, "multiplier must differ from 0 and 1", {multiplier});

    const auto n = field.size();
    const auto one_minus_h = field.sub(field.one(), multiplier);
    std::vector<GaloisField::element_type> hx(n), ky(n);
    for (GaloisField::element_type x = 0; x < n; ++x) {
        hx[x] = field.mul(multiplier, x);
        ky[x] = field.mul(one_minus_h, x);
    }
    std::vector<index_t> entries(static_cast<std::size_t>(n) * n);
    for (GaloisField::element_type x = 0; x < n; ++x)
        for (GaloisField::element_type y = 0; y < n; ++y)
            entries[static_cast<std::size_t>(x) * n + y] = field.add(hx[x], ky[y]);
    return QuandleTable{detail::TrustedTag{}, n, std::move(entries)};
}

auto cyclic_type_quandle(std::uint32_t p, std::uint32_t a, std::size_t cap) -> QuandleTable
{
    auto order = nt::checked_pow(p, a);
    if (! nt::is_prime(p) || a < 1 || ! order || *order < 3)
        throw QuandleError(ErrorKind::ParamOutOfRange, "cyclic type needs a prime power order >= 3", {p, a});
    require_within_cap(*order, cap);
    GaloisField field(p, a);
    return galois_affine_quandle(p, a, field.smallest_generator(), cap);
}

auto family_embedding_map(std::uint64_t p, std::uint32_t c) -> std::vector<index_t>
{
    const auto source = family_order(p, c);
    const auto target = source * p;
    std::vector<index_t> labels(source);
    for (std::uint64_t z = 0; z < source; ++z)
        labels[z] = static_cast<index_t>((p * z) % target + 1);
    return labels;
}

auto family_embedding(std::uint64_t p, std::uint32_t c, std::size_t cap) -> EmbeddingReport
{
    auto source = shq_family(p, c, cap);
    auto target = shq_family(p, c + 1, cap);
    auto map = family_embedding_map(p, c);

    EmbeddingReport report;
    report.p = p;
    report.c = c;
    report.image = map;

    std::vector<char> hit(target.order(), 0);
    report.injective = true;
    for (std::size_t z = 0; z < map.size(); ++z) {
        if (hit[map[z] - 1]) {
            report.injective = false;
            report.failure = "T(" + std::to_string(z + 1) + ") = " + std::to_string(map[z]) + " repeats an image";
            break;
        }
        hit[map[z] - 1] = 1;
    }

    report.homomorphism = true;
    for (index_t x = 0; x < source.order() && report.homomorphism; ++x)
        for (index_t y = 0; y < source.order(); ++y) {
            auto lhs = map[source.at(x, y)] - 1;
            auto rhs = target.at(map[x] - 1, map[y] - 1);
            if (lhs != rhs) {
                report.homomorphism = false;
                if (report.failure.empty())
                    report.failure = "T(x*y) != T(x)*T(y) at (" + std::to_string(x + 1) + "," + std::to_string(y + 1) + ")";
                break;
            }
        }

    auto image = element_set_from_labels(map);
    report.image_closed = is_closed(target, image) && subquandle_closure(target, image) == image;
    if (! report.image_closed && report.failure.empty())
        report.failure = "image is not closed in the target";
    if (report.image_closed)
        report.image_isomorphic = are_isomorphic(subquandle_table(target, image), source).has_value();
    if (! report.image_isomorphic && report.failure.empty())
        report.failure = "image is not isomorphic to the source";
    return report;
}

} // namespace quandlekit
