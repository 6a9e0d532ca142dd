#include <quandlekit/error.hpp>
#include <quandlekit/galois_field.hpp>
#include <quandlekit/number_theory.hpp>

namespace quandlekit {

namespace {
    using Poly = std::vector<std::uint32_t>;

    void trim(Poly & f)
    {
        while (! f.empty() && f.back() == 0)
            f.pop_back();
    }

    // Remainder of f modulo a monic g.
    auto poly_mod(Poly f, const Poly & g, std::uint32_t p) -> Poly
    {
        trim(f);
        const auto dg = g.size() - 1;
        while (f.size() > dg) {
            const auto lead = f.back();
            const auto shift = f.size() - 1 - dg;
            for (std::size_t k = 0; k <= dg; ++k)
                f[shift + k] = static_cast<std::uint32_t>((f[shift + k] + static_cast<std::uint64_t>(p - lead) * g[k]) % p);
            trim(f);
        }
        return f;
    }

    auto monic_of_degree(std::uint32_t d, std::uint64_t index, std::uint32_t p) -> Poly
    {
        Poly f(d + 1, 0);
        for (std::uint32_t k = 0; k < d; ++k) {
            f[k] = static_cast<std::uint32_t>(index % p);
            index /= p;
        }
        f[d] = 1;
        return f;
    }
}

auto is_irreducible(const std::vector<std::uint32_t> & poly, std::uint32_t p) -> bool
{
    const auto d = poly.empty() ? 0 : poly.size() - 1;
    if (d < 1)
        return false;
    // Exhaustive: no monic factor of degree 1..d/2.
    for (std::uint32_t e = 1; 2 * e <= d; ++e) {
        auto count = number_theory::checked_pow(p, e).value();
        for (std::uint64_t idx = 0; idx < count; ++idx)
            if (poly_mod(poly, monic_of_degree(e, idx, p), p).empty())
                return false;
    }
    return true;
}

GaloisField::GaloisField(std::uint32_t p, std::uint32_t a) : _p(p), _a(a)
{
    if (! number_theory::is_prime(p) || a < 1)
        throw QuandleError(ErrorKind::ParamOutOfRange, "GF(p^a) needs p prime and a >= 1", {p, a});
    auto size = number_theory::checked_pow(p, a);
    if (! size || *size > (1u << 24))
        throw QuandleError(ErrorKind::SizeLimitExceeded, "field too large", {p, a});
    _size = static_cast<std::uint32_t>(*size);
    for (std::uint64_t idx = 0; idx < _size; ++idx) {
        auto candidate = monic_of_degree(a, idx, p);
        if (is_irreducible(candidate, p)) {
            _modulus = std::move(candidate);
            break;
        }
    }
}

auto GaloisField::coefficients(element_type x) const -> std::vector<std::uint32_t>
{
    std::vector<std::uint32_t> c(_a);
    for (std::uint32_t k = 0; k < _a; ++k) {
        c[k] = x % _p;
        x /= _p;
    }
    return c;
}

auto GaloisField::from_coefficients(const std::vector<std::uint32_t> & coeffs) const -> element_type
{
    element_type x = 0;
    for (std::size_t k = coeffs.size(); k-- > 0;)
        x = x * _p + coeffs[k] % _p;
    return x;
}

auto GaloisField::add(element_type x, element_type y) const -> element_type
{
    element_type result = 0, scale = 1;
    for (std::uint32_t k = 0; k < _a; ++k) {
        result += ((x % _p + y % _p) % _p) * scale;
        x /= _p;
        y /= _p;
        scale *= _p;
    }
    return result;
}

auto GaloisField::neg(element_type x) const -> element_type
{
    element_type result = 0, scale = 1;
    for (std::uint32_t k = 0; k < _a; ++k) {
        result += ((_p - x % _p) % _p) * scale;
        x /= _p;
        scale *= _p;
    }
    return result;
}

auto GaloisField::sub(element_type x, element_type y) const -> element_type
{
    return add(x, neg(y));
}

auto GaloisField::mul(element_type x, element_type y) const -> element_type
{
    auto cx = coefficients(x), cy = coefficients(y);
    Poly product(2 * _a, 0);
    for (std::uint32_t i = 0; i < _a; ++i)
        for (std::uint32_t j = 0; j < _a; ++j)
            product[i + j] = static_cast<std::uint32_t>((product[i + j] + static_cast<std::uint64_t>(cx[i]) * cy[j]) % _p);
    auto reduced = poly_mod(std::move(product), _modulus, _p);
    return from_coefficients(reduced);
}

auto GaloisField::pow(element_type x, std::uint64_t k) const -> element_type
{
    element_type result = one();
    while (k != 0) {
        if (k & 1)
            result = mul(result, x);
        x = mul(x, x);
        k >>= 1;
    }
    return result;
}

auto GaloisField::inv(element_type x) const -> element_type
{
    if (x == 0)
        throw QuandleError(ErrorKind::ParamOutOfRange, "zero has no inverse");
    return pow(x, _size - 2);
}

auto GaloisField::multiplicative_order(element_type x) const -> std::uint64_t
{
    if (x == 0)
        return 0;
    std::uint64_t order = _size - 1;
    for (auto [q, e] : number_theory::factorize(order))
        for (std::uint32_t k = 0; k < e && pow(x, order / q) == one(); ++k)
            order /= q;
    return order;
}

auto GaloisField::is_generator(element_type x) const -> bool
{
    return x != 0 && multiplicative_order(x) == _size - 1;
}

auto GaloisField::smallest_generator() const -> element_type
{
    for (element_type x = 1; x < _size; ++x)
        if (is_generator(x))
            return x;
    return 1; // GF(2)
}

} // namespace quandlekit
