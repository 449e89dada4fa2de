#pragma once

#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tightpath {

using Vertex = std::uint32_t;

// Sorted, duplicate-free by convention.
using VertexSet = std::vector<Vertex>;

enum class Colour : std::uint8_t { red = 0, blue = 1 };

constexpr Colour opposite(Colour c) noexcept {
    return c == Colour::red ? Colour::blue : Colour::red;
}

constexpr char colour_char(Colour c) noexcept { return c == Colour::red ? 'R' : 'B'; }

Colour parse_colour(std::string_view text);
std::string colour_name(Colour c);

// Raised when a step the underlying combinatorial argument guarantees does not
// happen. Always an implementation bug, never a property of the input.
struct HardFault : std::logic_error {
    using std::logic_error::logic_error;
};

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exact non-negative rational, kept in lowest terms.
class Rational {
public:
    constexpr Rational() = default;
    Rational(std::int64_t num, std::int64_t den);

    // Accepts "p/q", an integer, or a finite decimal such as "0.2".
    static Rational parse(std::string_view text);

    std::int64_t num() const noexcept { return num_; }
    std::int64_t den() const noexcept { return den_; }
    double value() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }

    // ceil(r * n) in exact arithmetic.
    std::uint64_t ceil_times(std::uint64_t n) const;

    std::string to_string() const;

    friend bool operator==(const Rational&, const Rational&) = default;
    friend bool operator<(const Rational& a, const Rational& b) {
        return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
    }

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

// All randomness flows through explicitly seeded generators.
using Rng = std::mt19937_64;

// Uniform integer in [0, bound) by rejection; portable across standard libraries.
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);

// Uniform double in [0, 1).
double uniform_unit(Rng& rng);

// Independent seed for the index-th sub-stream of a base seed.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) noexcept;

template <class T>
void shuffle(std::vector<T>& items, Rng& rng) {
    for (std::size_t i = items.size(); i > 1; --i) {
        std::swap(items[i - 1], items[uniform_below(rng, i)]);
    }
}

}  // namespace tightpath
