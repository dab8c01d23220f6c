#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "kfd/perm.hpp"

namespace kfd {

struct enumeration_limit_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Permutation group closed under a base-and-strong-generating-set structure.
// Immutable after construction; order and membership are exact.
class PermGroup {
  public:
    // Builds the stabilizer chain from the generators (Schreier-Sims).
    static PermGroup close(int degree, std::vector<Perm> generators);

    int degree() const { return degree_; }
    const mpz_class& order() const { return order_; }
    bool trivial() const { return order_ == 1; }
    bool transitive() const { return transitive_; }
    const std::vector<Perm>& generators() const { return gens_; }
    bool contains(const Perm& p) const;

    // Full element list via the chain; throws enumeration_limit_error when the
    // order exceeds `cap`.
    std::vector<Perm> elements(std::uint64_t cap = 10'000'000) const;

    // Smallest e such that { g in G : ind(g) <= e } generates G. Equivalent to
    // the min-max over generating sets: enlarging a generating set never
    // lowers its maximal index, so the minimum is attained on the full set of
    // elements of index <= e (see docs/generator-index.md).
    // Throws std::invalid_argument for the trivial or an intransitive group.
    int generator_index(std::uint64_t cap = 10'000'000) const;

    // All cycle types of elements (deduplicated, sorted).
    std::vector<CycleType> cycle_types(std::uint64_t cap = 10'000'000) const;

  private:
    struct Level {
        int base = 0;                               // 0-based base point
        std::vector<std::optional<Perm>> coset_rep;  // by image point, rep maps base -> point
        std::vector<Perm> gens;                      // generators of this stabilizer
        std::uint64_t orbit_size = 0;
    };

    void extend_level(size_t l, const Perm& g);
    void rebuild_orbit(size_t l);
    // Strips p through levels >= l; returns residue and the level it stuck at.
    std::pair<Perm, size_t> sift(Perm p, size_t l) const;

    int degree_ = 0;
    std::vector<Perm> gens_;
    std::vector<Level> levels_;
    mpz_class order_ = 1;
    bool transitive_ = false;
};

// Direct product in the product action on pairs, degree deg(g)*deg(h).
PermGroup direct_product(const PermGroup& g, const PermGroup& h);

// Imprimitive wreath product G wr S_n on n blocks of size deg(G), degree
// n*deg(G); requires n >= 2.
PermGroup wreath_product_sn(const PermGroup& g, int n);

struct GroupName {
    enum Kind {
        Symmetric,
        Alternating,
        Dihedral,
        CyclicRegular,
        C2WrSn,
        C2WrSnEven,
        PSL25,
        PSL32,
        AGL32,
    };
    Kind kind;
    int n = 0;  // parameter, ignored for the three exceptional groups

    std::string to_string() const;
    bool operator==(const GroupName&) const = default;
};

PermGroup named_group(const GroupName& name);
GroupName parse_group_name(const std::string& text);

// The transitive index-2 subgroup of C2 wr S_n generated by 4-cycles that
// project to transpositions on the blocks (degree 2n).
PermGroup four_cycle_wreath_subgroup(int n);

}  // namespace kfd
