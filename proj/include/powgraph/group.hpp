#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "powgraph/card.hpp"

namespace powgraph {

// Concrete group description. Finite catalog kinds carry their defining data;
// window kinds describe an exactly-computable slice of an infinite group.
struct GroupSpec {
    enum class Kind {
        Cyclic,
        Dihedral,
        Dicyclic,
        Abelian,
        Permutation,
        Table,
        ZWindow,
        QSubgroupWindow,
        Amalgam,
    };

    Kind kind = Kind::Cyclic;
    std::int64_t n = 1;                        // cyclic n / dihedral rotation order / dicyclic k / table order
    std::vector<std::int64_t> invariants;      // abelian invariant list (prime powers or any d_i >= 1)
    int degree = 0;                            // permutation degree
    std::vector<std::vector<int>> generators;  // permutation generators
    std::vector<std::vector<int>> table;       // multiplication table, identity row/column at 0
    std::int64_t window = 0;                   // window radius N
    std::int64_t p = 0, q = 0;                 // amalgam relation a^p = b^q
    std::map<std::int64_t, int> prime_caps;    // q_subgroup_window denominator exponent caps

    static GroupSpec cyclic(std::int64_t n);
    static GroupSpec dihedral(std::int64_t rotation_order);
    static GroupSpec dicyclic(std::int64_t k);
    static GroupSpec abelian(std::vector<std::int64_t> invariants);
    static GroupSpec permutation(int degree, std::vector<std::vector<int>> gens);
    static GroupSpec from_table(std::vector<std::vector<int>> table);
    static GroupSpec z_window(std::int64_t radius);
    static GroupSpec q_subgroup_window(std::map<std::int64_t, int> caps, std::int64_t radius);
    static GroupSpec amalgam(std::int64_t p, std::int64_t q, std::int64_t radius);

    // Canonical JSON serialization; parse(to_json_text(s)) reproduces s byte-stably.
    std::string to_json_text() const;
    static GroupSpec parse_json_text(const std::string& text);

    std::string display_name() const;
};

// A concrete group (or window of one). Elements are opaque indices
// 0..size()-1 with the identity at index 0 and a deterministic order.
// Window models answer order/membership questions about the full group
// by exact payload arithmetic; only enumeration is truncated.
class GroupModel {
public:
    virtual ~GroupModel() = default;

    virtual std::size_t size() const = 0;
    virtual bool finite_model() const = 0;

    virtual Card element_order(std::size_t x) const = 0;

    // y in <x>, i.e. y = x^n for some n in Z.  Exact, never truncated.
    virtual bool is_power_member(std::size_t x, std::size_t y) const = 0;

    // y = x^n for some nonzero n.  For finite-order x this coincides with
    // is_power_member; it differs only at y = e when x has infinite order.
    virtual bool is_nonzero_power(std::size_t x, std::size_t y) const = 0;

    // <x> intersected with the enumerated window, sorted by index.
    // truncated is set when the true subgroup extends beyond the window.
    virtual std::vector<std::size_t> cyclic_subgroup(std::size_t x, bool* truncated = nullptr) const = 0;

    virtual std::size_t inverse(std::size_t x) const = 0;

    // x^k if it falls inside the enumerated window.
    virtual std::optional<std::size_t> power(std::size_t x, std::int64_t k) const = 0;

    virtual std::string label(std::size_t x) const = 0;
};

std::unique_ptr<GroupModel> build_group(const GroupSpec& spec);

}  // namespace powgraph
