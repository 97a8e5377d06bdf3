#include "powgraph/group.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "json.hpp"
#include "powgraph/error.hpp"

namespace powgraph {

using json = nlohmann::ordered_json;

namespace {

void require(bool cond, const char* code, const std::string& msg) {
    if (!cond) throw Error(code, msg);
}

// ---------------------------------------------------------------------------
// Finite groups: explicit element list plus multiplication table.

class FiniteGroup final : public GroupModel {
public:
    FiniteGroup(std::vector<std::string> labels, std::vector<std::vector<int>> mul)
        : labels_(std::move(labels)), mul_(std::move(mul)) {
        const std::size_t n = labels_.size();
        inv_.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (mul_[i][j] == 0) inv_[i] = j;
            }
        }
        ord_.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            std::uint64_t k = 1;
            std::size_t x = i;
            while (x != 0) {
                x = static_cast<std::size_t>(mul_[x][i]);
                ++k;
            }
            ord_[i] = k;
        }
    }

    std::size_t size() const override { return labels_.size(); }
    bool finite_model() const override { return true; }

    Card element_order(std::size_t x) const override { return Card::fin(ord_[x]); }

    bool is_power_member(std::size_t x, std::size_t y) const override {
        std::size_t z = 0;
        do {
            if (z == y) return true;
            z = static_cast<std::size_t>(mul_[z][x]);
        } while (z != 0);
        return false;
    }

    bool is_nonzero_power(std::size_t x, std::size_t y) const override {
        // e = x^{o(x)} with o(x) > 0, so the relations coincide on finite groups.
        return is_power_member(x, y);
    }

    std::vector<std::size_t> cyclic_subgroup(std::size_t x, bool* truncated = nullptr) const override {
        if (truncated) *truncated = false;
        std::vector<std::size_t> out;
        std::size_t z = 0;
        do {
            out.push_back(z);
            z = static_cast<std::size_t>(mul_[z][x]);
        } while (z != 0);
        std::sort(out.begin(), out.end());
        return out;
    }

    std::size_t inverse(std::size_t x) const override { return inv_[x]; }

    std::optional<std::size_t> power(std::size_t x, std::int64_t k) const override {
        const std::int64_t o = static_cast<std::int64_t>(ord_[x]);
        std::int64_t r = k % o;
        if (r < 0) r += o;
        std::size_t z = 0;
        for (std::int64_t i = 0; i < r; ++i) z = static_cast<std::size_t>(mul_[z][x]);
        return z;
    }

    std::string label(std::size_t x) const override { return labels_[x]; }

    int mul(int a, int b) const { return mul_[a][b]; }

private:
    std::vector<std::string> labels_;
    std::vector<std::vector<int>> mul_;
    std::vector<std::size_t> inv_;
    std::vector<std::uint64_t> ord_;
};

std::unique_ptr<FiniteGroup> make_cyclic(std::int64_t n) {
    require(n >= 1, errc::bad_spec, "cyclic: n must be >= 1");
    std::vector<std::string> labels(n);
    std::vector<std::vector<int>> mul(n, std::vector<int>(n));
    for (std::int64_t i = 0; i < n; ++i) {
        labels[i] = std::to_string(i);
        for (std::int64_t j = 0; j < n; ++j) mul[i][j] = static_cast<int>((i + j) % n);
    }
    return std::make_unique<FiniteGroup>(std::move(labels), std::move(mul));
}

// Dihedral group of order 2n: rotations r^0..r^{n-1} first, then reflections r^i s.
std::unique_ptr<FiniteGroup> make_dihedral(std::int64_t n) {
    require(n >= 1, errc::bad_spec, "dihedral: rotation order must be >= 1");
    const std::int64_t sz = 2 * n;
    auto idx = [n](std::int64_t rot, std::int64_t flip) { return static_cast<int>(flip * n + ((rot % n + n) % n)); };
    std::vector<std::string> labels(sz);
    std::vector<std::vector<int>> mul(sz, std::vector<int>(sz));
    for (std::int64_t f = 0; f < 2; ++f)
        for (std::int64_t r = 0; r < n; ++r)
            labels[idx(r, f)] = (f ? "r" + std::to_string(r) + "s" : "r" + std::to_string(r));
    for (std::int64_t f1 = 0; f1 < 2; ++f1)
        for (std::int64_t r1 = 0; r1 < n; ++r1)
            for (std::int64_t f2 = 0; f2 < 2; ++f2)
                for (std::int64_t r2 = 0; r2 < n; ++r2) {
                    // (r^a s^x)(r^b s^y) = r^{a + b or a - b} s^{x+y}
                    const std::int64_t rot = f1 ? r1 - r2 : r1 + r2;
                    mul[idx(r1, f1)][idx(r2, f2)] = idx(rot, (f1 + f2) % 2);
                }
    return std::make_unique<FiniteGroup>(std::move(labels), std::move(mul));
}

// Dicyclic group of order 4k: <a,b | a^{2k} = e, b^2 = a^k, b a b^{-1} = a^{-1}>.
// Elements a^i b^j with 0 <= i < 2k, j in {0,1}.
std::unique_ptr<FiniteGroup> make_dicyclic(std::int64_t k) {
    require(k >= 1, errc::bad_spec, "dicyclic: k must be >= 1");
    const std::int64_t m = 2 * k;
    auto idx = [m](std::int64_t i, std::int64_t j) { return static_cast<int>(j * m + ((i % m + m) % m)); };
    std::vector<std::string> labels(4 * k);
    std::vector<std::vector<int>> mul(4 * k, std::vector<int>(4 * k));
    for (std::int64_t j = 0; j < 2; ++j)
        for (std::int64_t i = 0; i < m; ++i)
            labels[idx(i, j)] = "a" + std::to_string(i) + (j ? "b" : "");
    for (std::int64_t j1 = 0; j1 < 2; ++j1)
        for (std::int64_t i1 = 0; i1 < m; ++i1)
            for (std::int64_t j2 = 0; j2 < 2; ++j2)
                for (std::int64_t i2 = 0; i2 < m; ++i2) {
                    // b a^i = a^{-i} b, and b^2 = a^k.
                    std::int64_t i = j1 ? i1 - i2 : i1 + i2;
                    std::int64_t j = j1 + j2;
                    if (j == 2) {
                        i += k;
                        j = 0;
                    }
                    mul[idx(i1, j1)][idx(i2, j2)] = idx(i, j);
                }
    return std::make_unique<FiniteGroup>(std::move(labels), std::move(mul));
}

std::unique_ptr<FiniteGroup> make_abelian(const std::vector<std::int64_t>& invariants) {
    std::int64_t n = 1;
    for (std::int64_t d : invariants) {
        require(d >= 1, errc::bad_spec, "abelian: invariants must be >= 1");
        n *= d;
        require(n <= 100000, errc::bad_spec, "abelian: group too large");
    }
    const std::size_t m = invariants.size();
    std::vector<std::vector<std::int64_t>> tuples;
    std::vector<std::int64_t> cur(m, 0);
    for (std::int64_t c = 0; c < n; ++c) {
        tuples.push_back(cur);
        for (std::size_t i = m; i-- > 0;) {
            if (++cur[i] < invariants[i]) break;
            cur[i] = 0;
        }
    }
    auto idx = [&](const std::vector<std::int64_t>& t) {
        std::int64_t r = 0;
        for (std::size_t i = 0; i < m; ++i) r = r * invariants[i] + t[i];
        return static_cast<int>(r);
    };
    std::vector<std::string> labels(n);
    std::vector<std::vector<int>> mul(n, std::vector<int>(n));
    for (std::int64_t a = 0; a < n; ++a) {
        std::ostringstream os;
        os << "(";
        for (std::size_t i = 0; i < m; ++i) os << (i ? "," : "") << tuples[a][i];
        os << ")";
        labels[a] = os.str();
        for (std::int64_t b = 0; b < n; ++b) {
            std::vector<std::int64_t> t(m);
            for (std::size_t i = 0; i < m; ++i) t[i] = (tuples[a][i] + tuples[b][i]) % invariants[i];
            mul[a][b] = idx(t);
        }
    }
    return std::make_unique<FiniteGroup>(std::move(labels), std::move(mul));
}

std::unique_ptr<FiniteGroup> make_permutation(int degree, const std::vector<std::vector<int>>& gens) {
    require(degree >= 1, errc::bad_spec, "permutation: degree must be >= 1");
    for (const auto& g : gens) {
        require(static_cast<int>(g.size()) == degree, errc::bad_spec, "permutation: generator has wrong degree");
        std::vector<bool> seen(degree, false);
        for (int v : g) {
            require(v >= 0 && v < degree && !seen[v], errc::bad_spec, "permutation: generator is not a bijection");
            seen[v] = true;
        }
    }
    std::vector<int> ident(degree);
    std::iota(ident.begin(), ident.end(), 0);
    std::set<std::vector<int>> closure{ident};
    std::vector<std::vector<int>> frontier{ident};
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& f : frontier)
            for (const auto& g : gens) {
                std::vector<int> h(degree);
                for (int i = 0; i < degree; ++i) h[i] = f[g[i]];
                if (closure.insert(h).second) next.push_back(h);
            }
        require(closure.size() <= 20000, errc::bad_spec, "permutation: closure too large");
        frontier = std::move(next);
    }
    // std::set order is lexicographic; the identity permutation is minimal,
    // so it lands at index 0.
    std::vector<std::vector<int>> elems(closure.begin(), closure.end());
    std::map<std::vector<int>, int> index;
    for (std::size_t i = 0; i < elems.size(); ++i) index[elems[i]] = static_cast<int>(i);
    const std::size_t n = elems.size();
    std::vector<std::string> labels(n);
    std::vector<std::vector<int>> mul(n, std::vector<int>(n));
    for (std::size_t a = 0; a < n; ++a) {
        std::ostringstream os;
        os << "[";
        for (int i = 0; i < degree; ++i) os << (i ? " " : "") << elems[a][i];
        os << "]";
        labels[a] = os.str();
        for (std::size_t b = 0; b < n; ++b) {
            std::vector<int> h(degree);
            for (int i = 0; i < degree; ++i) h[i] = elems[a][elems[b][i]];
            mul[a][b] = index.at(h);
        }
    }
    return std::make_unique<FiniteGroup>(std::move(labels), std::move(mul));
}

std::unique_ptr<FiniteGroup> make_table(const std::vector<std::vector<int>>& table) {
    const std::size_t n = table.size();
    require(n >= 1, errc::table_not_group, "empty table");
    for (const auto& row : table)
        require(row.size() == n, errc::table_not_group, "table is not square");
    // Latin square with identity row/column at index 0.
    for (std::size_t i = 0; i < n; ++i) {
        require(table[0][i] == static_cast<int>(i), errc::table_not_group, "row 0 is not the identity");
        require(table[i][0] == static_cast<int>(i), errc::table_not_group, "column 0 is not the identity");
        std::vector<bool> row(n, false), col(n, false);
        for (std::size_t j = 0; j < n; ++j) {
            int r = table[i][j], c = table[j][i];
            require(r >= 0 && r < static_cast<int>(n) && !row[r], errc::table_not_group, "row is not a permutation");
            require(c >= 0 && c < static_cast<int>(n) && !col[c], errc::table_not_group, "column is not a permutation");
            row[r] = col[c] = true;
        }
    }
    auto check = [&](std::size_t a, std::size_t b, std::size_t c) {
        require(table[table[a][b]][c] == table[a][table[b][c]], errc::table_not_group, "table is not associative");
    };
    if (n <= 256) {
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t c = 0; c < n; ++c) check(a, b, c);
    } else {
        std::mt19937 rng(12345);
        std::uniform_int_distribution<std::size_t> pick(0, n - 1);
        for (int t = 0; t < 1000; ++t) check(pick(rng), pick(rng), pick(rng));
    }
    // Every row must generate a cyclic subgroup reaching back to 0 (inverses exist).
    std::vector<std::string> labels(n);
    for (std::size_t i = 0; i < n; ++i) labels[i] = "g" + std::to_string(i);
    return std::make_unique<FiniteGroup>(std::move(labels), table);
}

// ---------------------------------------------------------------------------
// Window of (Z, +): 0, +1, -1, ..., +N, -N.  Orders and membership are decided
// from the integer payload; only enumeration is cut at the radius.

class ZWindow final : public GroupModel {
public:
    explicit ZWindow(std::int64_t radius, std::int64_t denom = 1) : radius_(radius), denom_(denom) {
        require(radius >= 1, errc::bad_spec, "window radius must be >= 1");
    }

    std::size_t size() const override { return static_cast<std::size_t>(2 * radius_ + 1); }
    bool finite_model() const override { return false; }

    std::int64_t value(std::size_t i) const {
        if (i == 0) return 0;
        const std::int64_t k = static_cast<std::int64_t>((i + 1) / 2);
        return (i % 2 == 1) ? k : -k;
    }
    std::optional<std::size_t> index_of(std::int64_t v) const {
        if (std::llabs(v) > radius_) return std::nullopt;
        if (v == 0) return 0;
        return static_cast<std::size_t>(v > 0 ? 2 * v - 1 : -2 * v);
    }

    Card element_order(std::size_t x) const override {
        return x == 0 ? Card::fin(1) : Card::aleph0();
    }

    bool is_power_member(std::size_t x, std::size_t y) const override {
        const std::int64_t vx = value(x), vy = value(y);
        return vx == 0 ? vy == 0 : vy % vx == 0;
    }

    bool is_nonzero_power(std::size_t x, std::size_t y) const override {
        const std::int64_t vx = value(x), vy = value(y);
        if (vx == 0) return vy == 0;
        return vy != 0 && vy % vx == 0;
    }

    std::vector<std::size_t> cyclic_subgroup(std::size_t x, bool* truncated = nullptr) const override {
        const std::int64_t vx = value(x);
        if (truncated) *truncated = vx != 0;
        std::vector<std::size_t> out{0};
        if (vx != 0)
            for (std::int64_t m = std::llabs(vx); m <= radius_; m += std::llabs(vx)) {
                out.push_back(*index_of(m));
                out.push_back(*index_of(-m));
            }
        std::sort(out.begin(), out.end());
        return out;
    }

    std::size_t inverse(std::size_t x) const override { return *index_of(-value(x)); }

    std::optional<std::size_t> power(std::size_t x, std::int64_t k) const override {
        return index_of(value(x) * k);
    }

    std::string label(std::size_t x) const override {
        const std::int64_t v = value(x);
        if (denom_ == 1) return std::to_string(v);
        const std::int64_t g = std::gcd(std::llabs(v), denom_);
        const std::int64_t num = v / g, den = denom_ / g;
        if (v == 0) return "0";
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }

private:
    std::int64_t radius_;
    std::int64_t denom_;
};

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Rationals with denominator dividing prod p^cap: the lattice (1/D)Z.
// Reuses ZWindow arithmetic on numerators with fraction labels.
std::unique_ptr<GroupModel> make_q_window(const std::map<std::int64_t, int>& caps, std::int64_t radius) {
    std::int64_t denom = 1;
    for (auto [p, e] : caps) {
        require(is_prime(p), errc::bad_spec, "q_subgroup_window: cap key must be prime");
        require(e >= 1, errc::bad_spec, "q_subgroup_window: cap exponent must be >= 1");
        for (int i = 0; i < e; ++i) {
            denom *= p;
            require(denom <= 1000000, errc::bad_spec, "q_subgroup_window: denominator too large");
        }
    }
    return std::make_unique<ZWindow>(radius, denom);
}

// ---------------------------------------------------------------------------
// The subset <a> u <b> of <a,b | a^p = b^q>, with a^{pk} = b^{qk} canonicalized
// to the a-branch.  Torsion-free; b^j is stored only for q not dividing j.

class AmalgamWindow final : public GroupModel {
public:
    struct Payload {
        char branch;  // 'a' or 'b'; identity is ('a', 0)
        std::int64_t e;
        auto operator<=>(const Payload&) const = default;
    };

    AmalgamWindow(std::int64_t p, std::int64_t q, std::int64_t radius) : p_(p), q_(q), radius_(radius) {
        require(p >= 2 && q >= 2, errc::bad_spec, "amalgam: p and q must be >= 2");
        require(radius >= 1, errc::bad_spec, "amalgam: radius must be >= 1");
        elems_.push_back({'a', 0});
        for (std::int64_t i = 1; i <= radius_; ++i) {
            elems_.push_back({'a', i});
            elems_.push_back({'a', -i});
        }
        for (std::int64_t j = 1; j <= radius_; ++j) {
            if (j % q_ == 0) continue;  // canonical form lives on the a-branch
            elems_.push_back({'b', j});
            elems_.push_back({'b', -j});
        }
        for (std::size_t i = 0; i < elems_.size(); ++i) index_[elems_[i]] = i;
    }

    std::size_t size() const override { return elems_.size(); }
    bool finite_model() const override { return false; }

    Payload canonical(char branch, std::int64_t e) const {
        if (e == 0) return {'a', 0};
        if (branch == 'b' && e % q_ == 0) return {'a', (e / q_) * p_};
        return {branch, e};
    }

    std::optional<std::size_t> index_of(Payload pl) const {
        auto it = index_.find(pl);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    Payload payload(std::size_t i) const { return elems_[i]; }

    Card element_order(std::size_t x) const override {
        return x == 0 ? Card::fin(1) : Card::aleph0();
    }

    bool is_power_member(std::size_t x, std::size_t y) const override {
        const Payload px = elems_[x], py = elems_[y];
        if (py.e == 0) return true;  // e = x^0
        if (px.e == 0) return false;
        if (px.branch == 'a') {
            // <a^i> stays on the a-branch.
            return py.branch == 'a' && py.e % px.e == 0;
        }
        if (py.branch == 'b') return py.e % px.e == 0;
        // y = a^m is a power of b^j exactly when (p*j/gcd(j,q)) divides m.
        const std::int64_t g = std::gcd(std::llabs(px.e), q_);
        const std::int64_t step = p_ * (std::llabs(px.e) / g);
        return py.e % step == 0;
    }

    bool is_nonzero_power(std::size_t x, std::size_t y) const override {
        if (elems_[y].e == 0) return elems_[x].e == 0;  // torsion-free: e = x^n, n != 0, forces x = e
        return is_power_member(x, y);
    }

    std::vector<std::size_t> cyclic_subgroup(std::size_t x, bool* truncated = nullptr) const override {
        const Payload px = elems_[x];
        if (truncated) *truncated = px.e != 0;
        std::vector<std::size_t> out{0};
        if (px.e != 0) {
            // Generous bound: canonical exponents shrink by at most a factor q/p.
            const std::int64_t bound = (radius_ * std::max(p_, q_)) / std::llabs(px.e) + 2;
            for (std::int64_t k = 1; k <= bound; ++k) {
                for (std::int64_t s : {k, -k}) {
                    if (auto idx = power(x, s)) out.push_back(*idx);
                }
            }
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    std::size_t inverse(std::size_t x) const override {
        const Payload px = elems_[x];
        return *index_of({px.branch, -px.e});
    }

    std::optional<std::size_t> power(std::size_t x, std::int64_t k) const override {
        const Payload px = elems_[x];
        return index_of(canonical(px.branch, px.e * k));
    }

    std::string label(std::size_t x) const override {
        const Payload px = elems_[x];
        if (px.e == 0) return "e";
        std::string s(1, px.branch);
        if (px.e != 1) s += "^" + std::to_string(px.e);
        return s;
    }

private:
    std::int64_t p_, q_, radius_;
    std::vector<Payload> elems_;
    std::map<Payload, std::size_t> index_;
};

}  // namespace

// ---------------------------------------------------------------------------
// GroupSpec construction and JSON round-trip.

GroupSpec GroupSpec::cyclic(std::int64_t n) {
    GroupSpec s;
    s.kind = Kind::Cyclic;
    s.n = n;
    return s;
}
GroupSpec GroupSpec::dihedral(std::int64_t n) {
    GroupSpec s;
    s.kind = Kind::Dihedral;
    s.n = n;
    return s;
}
GroupSpec GroupSpec::dicyclic(std::int64_t k) {
    GroupSpec s;
    s.kind = Kind::Dicyclic;
    s.n = k;
    return s;
}
GroupSpec GroupSpec::abelian(std::vector<std::int64_t> invariants) {
    GroupSpec s;
    s.kind = Kind::Abelian;
    s.invariants = std::move(invariants);
    return s;
}
GroupSpec GroupSpec::permutation(int degree, std::vector<std::vector<int>> gens) {
    GroupSpec s;
    s.kind = Kind::Permutation;
    s.degree = degree;
    s.generators = std::move(gens);
    return s;
}
GroupSpec GroupSpec::from_table(std::vector<std::vector<int>> table) {
    GroupSpec s;
    s.kind = Kind::Table;
    s.n = static_cast<std::int64_t>(table.size());
    s.table = std::move(table);
    return s;
}
GroupSpec GroupSpec::z_window(std::int64_t radius) {
    GroupSpec s;
    s.kind = Kind::ZWindow;
    s.window = radius;
    return s;
}
GroupSpec GroupSpec::q_subgroup_window(std::map<std::int64_t, int> caps, std::int64_t radius) {
    GroupSpec s;
    s.kind = Kind::QSubgroupWindow;
    s.prime_caps = std::move(caps);
    s.window = radius;
    return s;
}
GroupSpec GroupSpec::amalgam(std::int64_t p, std::int64_t q, std::int64_t radius) {
    GroupSpec s;
    s.kind = Kind::Amalgam;
    s.p = p;
    s.q = q;
    s.window = radius;
    return s;
}

std::string GroupSpec::to_json_text() const {
    json j;
    switch (kind) {
        case Kind::Cyclic:
            j["kind"] = "cyclic";
            j["n"] = n;
            break;
        case Kind::Dihedral:
            j["kind"] = "dihedral";
            j["n"] = n;
            break;
        case Kind::Dicyclic:
            j["kind"] = "dicyclic";
            j["k"] = n;
            break;
        case Kind::Abelian:
            j["kind"] = "abelian";
            j["invariants"] = invariants;
            break;
        case Kind::Permutation:
            j["kind"] = "permutation";
            j["degree"] = degree;
            j["generators"] = generators;
            break;
        case Kind::Table:
            j["kind"] = "table";
            j["order"] = n;
            j["table"] = table;
            break;
        case Kind::ZWindow:
            j["kind"] = "z_window";
            j["N"] = window;
            break;
        case Kind::QSubgroupWindow: {
            j["kind"] = "q_subgroup_window";
            json caps = json::object();
            for (auto [p_, e] : prime_caps) caps[std::to_string(p_)] = e;
            j["caps"] = caps;
            j["N"] = window;
            break;
        }
        case Kind::Amalgam:
            j["kind"] = "amalgam";
            j["p"] = p;
            j["q"] = q;
            j["N"] = window;
            break;
    }
    return j.dump();
}

GroupSpec GroupSpec::parse_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw Error(errc::bad_spec, std::string("invalid JSON: ") + e.what());
    }
    try {
        const std::string kind = j.at("kind").get<std::string>();
        if (kind == "cyclic") return cyclic(j.at("n").get<std::int64_t>());
        if (kind == "dihedral") return dihedral(j.at("n").get<std::int64_t>());
        if (kind == "dicyclic") return dicyclic(j.at("k").get<std::int64_t>());
        if (kind == "abelian") return abelian(j.at("invariants").get<std::vector<std::int64_t>>());
        if (kind == "permutation")
            return permutation(j.at("degree").get<int>(), j.at("generators").get<std::vector<std::vector<int>>>());
        if (kind == "table") return from_table(j.at("table").get<std::vector<std::vector<int>>>());
        if (kind == "z_window") return z_window(j.at("N").get<std::int64_t>());
        if (kind == "q_subgroup_window") {
            std::map<std::int64_t, int> caps;
            for (auto& [key, val] : j.at("caps").items()) caps[std::stoll(key)] = val.get<int>();
            return q_subgroup_window(std::move(caps), j.at("N").get<std::int64_t>());
        }
        if (kind == "amalgam")
            return amalgam(j.at("p").get<std::int64_t>(), j.at("q").get<std::int64_t>(), j.at("N").get<std::int64_t>());
        throw Error(errc::bad_spec, "unknown kind: " + kind);
    } catch (const json::exception& e) {
        throw Error(errc::bad_spec, std::string("malformed spec: ") + e.what());
    }
}

std::string GroupSpec::display_name() const {
    switch (kind) {
        case Kind::Cyclic:
            return "cyclic(" + std::to_string(n) + ")";
        case Kind::Dihedral:
            return "dihedral(" + std::to_string(n) + ")";
        case Kind::Dicyclic:
            return "dicyclic(" + std::to_string(n) + ")";
        case Kind::Abelian: {
            std::string s = "abelian([";
            for (std::size_t i = 0; i < invariants.size(); ++i)
                s += (i ? "," : "") + std::to_string(invariants[i]);
            return s + "])";
        }
        case Kind::Permutation:
            return "permutation(deg=" + std::to_string(degree) + ",gens=" + std::to_string(generators.size()) + ")";
        case Kind::Table:
            return "table(order=" + std::to_string(n) + ")";
        case Kind::ZWindow:
            return "z_window(" + std::to_string(window) + ")";
        case Kind::QSubgroupWindow: {
            std::string s = "q_subgroup_window({";
            bool first = true;
            for (auto [p_, e] : prime_caps) {
                if (!first) s += ",";
                first = false;
                s += std::to_string(p_) + ":" + std::to_string(e);
            }
            return s + "},N=" + std::to_string(window) + ")";
        }
        case Kind::Amalgam:
            return "amalgam(" + std::to_string(p) + "," + std::to_string(q) + ",N=" + std::to_string(window) + ")";
    }
    return "?";
}

std::unique_ptr<GroupModel> build_group(const GroupSpec& spec) {
    switch (spec.kind) {
        case GroupSpec::Kind::Cyclic:
            return make_cyclic(spec.n);
        case GroupSpec::Kind::Dihedral:
            return make_dihedral(spec.n);
        case GroupSpec::Kind::Dicyclic:
            return make_dicyclic(spec.n);
        case GroupSpec::Kind::Abelian:
            return make_abelian(spec.invariants);
        case GroupSpec::Kind::Permutation:
            return make_permutation(spec.degree, spec.generators);
        case GroupSpec::Kind::Table:
            return make_table(spec.table);
        case GroupSpec::Kind::ZWindow:
            return std::make_unique<ZWindow>(spec.window);
        case GroupSpec::Kind::QSubgroupWindow:
            return make_q_window(spec.prime_caps, spec.window);
        case GroupSpec::Kind::Amalgam:
            return std::make_unique<AmalgamWindow>(spec.p, spec.q, spec.window);
    }
    throw Error(errc::bad_spec, "unknown group kind");
}

}  // namespace powgraph
