#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "strongedge/graph.hpp"
#include "strongedge/params.hpp"

namespace strongedge {

/// SplitMix64: the fixed PRNG behind every generator. The constants are the
/// standard ones (Steele, Lea, Flood 2014); bounded draws use plain modulo.
/// Identical seeds yield identical streams on every platform.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform-ish draw in [0, n); n must be positive.
    std::uint64_t below(std::uint64_t n) { return next() % n; }

    /// Folds extra key material into the stream deterministically.
    void absorb(std::uint64_t x) {
        state_ ^= x;
        next();
    }

private:
    std::uint64_t state_;
};

enum class NamedKind { Path, Cycle, Star, K2n, Theta, Book };

NamedKind parse_named_kind(const std::string& name);
std::string named_kind_str(NamedKind kind);

enum class Regime { Case1Rich, Case2Rich };

std::string regime_str(Regime r);

struct GenSpec {
    enum class Model { Random2Deg, Named, ClassInstance };
    Model model = Model::Random2Deg;
    int n = 0;
    int m = 0;
    std::uint64_t seed = 0;
    NamedKind kind = NamedKind::Path;
    std::optional<Regime> regime;
    std::optional<Params> params;
};

/// Random 2-degenerate graph: vertices arrive one at a time, each joined to
/// at most two earlier vertices. Requires m <= 2n - 3 for n >= 2.
Graph gen_random_2deg(int n, int m, std::uint64_t seed);

/// Fixture graphs: path/cycle/star on n, K_{2,n}, theta (two hubs joined by
/// n length-2 paths), book (n triangles sharing an edge).
Graph gen_named(NamedKind kind, int n);

/// Instance inside the theorem class with the reduction regime planted:
/// Case2Rich places at least three sharer sites of group size >= ceil(tau);
/// Case1Rich (needs tau > 1) keeps every shared count strictly below tau.
/// All degrees stay <= D - 1 and no vertex is a leaf.
Graph gen_class_instance(const Params& p, Regime regime, std::uint64_t seed, int n);

Graph generate(const GenSpec& spec);

} // namespace strongedge
