#include "tightpath/types.hpp"

#include <charconv>
#include <limits>

namespace tightpath {

Colour parse_colour(std::string_view text) {
    if (text == "R" || text == "r" || text == "red") return Colour::red;
    if (text == "B" || text == "b" || text == "blue") return Colour::blue;
    throw ParseError("unknown colour '" + std::string(text) + "'");
}

std::string colour_name(Colour c) { return c == Colour::red ? "red" : "blue"; }

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    if (num < 0) throw std::invalid_argument("negative rational");
    const std::int64_t g = std::gcd(num, den);
    num_ = g == 0 ? 0 : num / g;
    den_ = g == 0 ? 1 : den / g;
}

namespace {

std::int64_t parse_int(std::string_view text) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
        throw ParseError("malformed integer '" + std::string(text) + "'");
    }
    return value;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        const auto whole = text.substr(0, dot);
        const auto frac = text.substr(dot + 1);
        if (frac.size() > 15) throw ParseError("too many decimal places in '" + std::string(text) + "'");
        std::int64_t den = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
        const std::int64_t w = whole.empty() ? 0 : parse_int(whole);
        const std::int64_t f = frac.empty() ? 0 : parse_int(frac);
        return Rational(w * den + f, den);
    }
    return Rational(parse_int(text), 1);
}

std::uint64_t Rational::ceil_times(std::uint64_t n) const {
    const unsigned __int128 prod = static_cast<unsigned __int128>(num_) * n;
    const unsigned __int128 q = (prod + static_cast<unsigned __int128>(den_) - 1) / static_cast<unsigned __int128>(den_);
    if (q > std::numeric_limits<std::uint64_t>::max()) throw std::overflow_error("rational product overflow");
    return static_cast<std::uint64_t>(q);
}

std::string Rational::to_string() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("uniform_below(0)");
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x = rng();
    while (x >= limit) x = rng();
    return x % bound;
}

double uniform_unit(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) noexcept {
    // splitmix64 finaliser over the combined word
    std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace tightpath
