#include "kfd/group.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <deque>
#include <set>
#include <stdexcept>

namespace kfd {

PermGroup PermGroup::close(int degree, std::vector<Perm> generators) {
    PermGroup g;
    g.degree_ = degree;
    for (const Perm& p : generators) {
        if (p.degree() != degree)
            throw std::invalid_argument("generator degree mismatch");
    }
    for (const Perm& p : generators)
        if (!p.is_identity()) g.gens_.push_back(p);

    for (const Perm& p : g.gens_) {
        auto [res, lvl] = g.sift(p, 0);
        if (!res.is_identity()) g.extend_level(lvl, res);
    }

    g.order_ = 1;
    for (const auto& lv : g.levels_) g.order_ *= static_cast<unsigned long>(lv.orbit_size);

    // orbit of point 1 under the full generator set
    if (degree == 0) {
        g.transitive_ = false;
    } else {
        std::vector<bool> seen(degree, false);
        std::deque<int> work{1};
        seen[0] = true;
        int cnt = 1;
        while (!work.empty()) {
            int x = work.front();
            work.pop_front();
            for (const Perm& s : g.gens_) {
                int y = s.apply(x);
                if (!seen[y - 1]) {
                    seen[y - 1] = true;
                    ++cnt;
                    work.push_back(y);
                }
            }
        }
        g.transitive_ = (cnt == degree);
    }
    return g;
}

std::pair<Perm, size_t> PermGroup::sift(Perm p, size_t l) const {
    for (size_t i = l; i < levels_.size(); ++i) {
        int img = p.apply(levels_[i].base + 1);
        const auto& rep = levels_[i].coset_rep[img - 1];
        if (!rep) return {std::move(p), i};
        p = p * rep->inverse();
    }
    return {std::move(p), levels_.size()};
}

void PermGroup::rebuild_orbit(size_t l) {
    Level& lv = levels_[l];
    lv.coset_rep.assign(degree_, std::nullopt);
    lv.coset_rep[lv.base] = Perm::identity(degree_);
    lv.orbit_size = 1;
    std::deque<int> work{lv.base};
    while (!work.empty()) {
        int x = work.front();
        work.pop_front();
        for (const Perm& s : lv.gens) {
            int y = s.apply(x + 1) - 1;
            if (!lv.coset_rep[y]) {
                lv.coset_rep[y] = *lv.coset_rep[x] * s;
                ++lv.orbit_size;
                work.push_back(y);
            }
        }
    }
}

void PermGroup::extend_level(size_t l, const Perm& g) {
    if (l == levels_.size()) {
        Level lv;
        lv.base = g.first_moved() - 1;
        levels_.push_back(std::move(lv));
    }
    levels_[l].gens.push_back(g);
    rebuild_orbit(l);

    // Schreier generators of the stabilizer at this level; sift them deeper.
    Level& lv = levels_[l];
    for (int x = 0; x < degree_; ++x) {
        if (!lv.coset_rep[x]) continue;
        for (const Perm& s : lv.gens) {
            const Perm& ux = *lv.coset_rep[x];
            int y = s.apply(x + 1) - 1;
            Perm schreier = ux * s * lv.coset_rep[y]->inverse();
            if (schreier.is_identity()) continue;
            auto [res, lvl] = sift(std::move(schreier), l + 1);
            if (!res.is_identity()) extend_level(lvl, res);
        }
    }
}

bool PermGroup::contains(const Perm& p) const {
    if (p.degree() != degree_) return false;
    auto [res, lvl] = sift(p, 0);
    (void)lvl;
    return res.is_identity();
}

std::vector<Perm> PermGroup::elements(std::uint64_t cap) const {
    if (order_ > cap)
        throw enumeration_limit_error("group order " + order_.get_str() +
                                      " exceeds enumeration cap");
    std::vector<Perm> out;
    out.reserve(order_.get_ui());
    std::vector<Perm> stack;
    // element = u_k * ... * u_1 with u_i a coset representative at level i
    auto rec = [&](auto&& self, size_t l, const Perm& acc) -> void {
        if (l == 0) {
            out.push_back(acc);
            return;
        }
        const Level& lv = levels_[l - 1];
        for (int x = 0; x < degree_; ++x)
            if (lv.coset_rep[x]) self(self, l - 1, acc * *lv.coset_rep[x]);
    };
    rec(rec, levels_.size(), Perm::identity(degree_));
    return out;
}

int PermGroup::generator_index(std::uint64_t cap) const {
    if (trivial()) throw std::invalid_argument("generator index of the trivial group");
    if (!transitive()) throw std::invalid_argument("generator index of an intransitive group");
    std::vector<Perm> elems = elements(cap);
    std::vector<std::pair<int, const Perm*>> by_index;
    by_index.reserve(elems.size());
    std::set<int> indices;
    for (const Perm& p : elems) {
        if (p.is_identity()) continue;
        int idx = p.index();
        by_index.emplace_back(idx, &p);
        indices.insert(idx);
    }
    std::sort(by_index.begin(), by_index.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    size_t taken = 0;
    std::vector<Perm> gens;
    for (int e : indices) {
        while (taken < by_index.size() && by_index[taken].first <= e)
            gens.push_back(*by_index[taken++].second);
        PermGroup h = PermGroup::close(degree_, gens);
        if (h.order() == order_) return e;
    }
    throw std::logic_error("generator index search exhausted the group");
}

std::vector<CycleType> PermGroup::cycle_types(std::uint64_t cap) const {
    std::set<CycleType> types;
    for (const Perm& p : elements(cap)) types.insert(p.cycle_type());
    return {types.begin(), types.end()};
}

PermGroup direct_product(const PermGroup& g, const PermGroup& h) {
    const int m = g.degree(), n = h.degree();
    if (m == 0 || n == 0) throw std::invalid_argument("direct product of empty-degree group");
    // pair (i, j) -> (i-1)*n + j, 1-based
    auto lift_left = [&](const Perm& p) {
        std::vector<int> img(m * n);
        for (int i = 1; i <= m; ++i)
            for (int j = 1; j <= n; ++j) img[(i - 1) * n + j - 1] = (p.apply(i) - 1) * n + j;
        return Perm::from_images(img);
    };
    auto lift_right = [&](const Perm& p) {
        std::vector<int> img(m * n);
        for (int i = 1; i <= m; ++i)
            for (int j = 1; j <= n; ++j) img[(i - 1) * n + j - 1] = (i - 1) * n + p.apply(j);
        return Perm::from_images(img);
    };
    std::vector<Perm> gens;
    for (const Perm& p : g.generators()) gens.push_back(lift_left(p));
    for (const Perm& p : h.generators()) gens.push_back(lift_right(p));
    return PermGroup::close(m * n, gens);
}

namespace {

// S_n generators acting on n blocks of size k, as a degree k*n permutation.
std::vector<Perm> block_sn_generators(int k, int n) {
    std::vector<Perm> out;
    auto block_perm = [&](const std::vector<int>& block_img) {
        std::vector<int> img(k * n);
        for (int b = 1; b <= n; ++b)
            for (int j = 1; j <= k; ++j)
                img[(b - 1) * k + j - 1] = (block_img[b - 1] - 1) * k + j;
        return Perm::from_images(img);
    };
    if (n >= 2) {
        std::vector<int> swap01(n);
        for (int i = 0; i < n; ++i) swap01[i] = i + 1;
        std::swap(swap01[0], swap01[1]);
        out.push_back(block_perm(swap01));
        if (n > 2) {
            std::vector<int> cyc(n);
            for (int i = 0; i < n; ++i) cyc[i] = (i + 1) % n + 1;
            out.push_back(block_perm(cyc));
        }
    }
    return out;
}

}  // namespace

PermGroup wreath_product_sn(const PermGroup& g, int n) {
    if (n < 2) throw std::invalid_argument("wreath product needs n >= 2");
    const int k = g.degree();
    if (k == 0) throw std::invalid_argument("wreath product of empty-degree group");
    std::vector<Perm> gens;
    for (const Perm& p : g.generators()) {
        // act on the first block only
        std::vector<int> img(k * n);
        for (int j = 1; j <= k; ++j) img[j - 1] = p.apply(j);
        for (int x = k + 1; x <= k * n; ++x) img[x - 1] = x;
        gens.push_back(Perm::from_images(img));
    }
    for (const Perm& p : block_sn_generators(k, n)) gens.push_back(p);
    return PermGroup::close(k * n, gens);
}

std::string GroupName::to_string() const {
    switch (kind) {
        case Symmetric: return "S" + std::to_string(n);
        case Alternating: return "A" + std::to_string(n);
        case Dihedral: return "D" + std::to_string(n);
        case CyclicRegular: return "C" + std::to_string(n);
        case C2WrSn: return "C2wrS" + std::to_string(n);
        case C2WrSnEven: return "C2wrS" + std::to_string(n) + "even";
        case PSL25: return "PSL2_5";
        case PSL32: return "PSL3_2";
        case AGL32: return "AGL3_2";
    }
    return "?";
}

namespace {

Perm nat_cycle(int n) {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = (i + 1) % n + 1;
    return Perm::from_images(img);
}

// Permutations of F_2^3 induced by an invertible matrix (on nonzero vectors
// for the linear groups, on all 8 vectors with translations for AGL).
// Vector v = (v2,v1,v0) is labeled by its value 4*v2 + 2*v1 + v0.
Perm gl32_perm(const std::array<std::array<int, 3>, 3>& mat, bool affine, int shift) {
    const int npts = affine ? 8 : 7;
    std::vector<int> img(npts);
    for (int code = affine ? 0 : 1; code < 8; ++code) {
        int v[3] = {(code >> 2) & 1, (code >> 1) & 1, code & 1};
        int w[3];
        for (int r = 0; r < 3; ++r)
            w[r] = (mat[r][0] * v[0] + mat[r][1] * v[1] + mat[r][2] * v[2]) & 1;
        int wcode = (w[0] << 2) | (w[1] << 1) | w[2];
        if (affine) wcode ^= shift;
        int from = affine ? code + 1 : code;
        int to = affine ? wcode + 1 : wcode;
        img[from - 1] = to;
    }
    return Perm::from_images(img);
}

constexpr std::array<std::array<int, 3>, 3> kCoordCycle{{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}};
constexpr std::array<std::array<int, 3>, 3> kTransvection{{{1, 1, 0}, {0, 1, 0}, {0, 0, 1}}};
constexpr std::array<std::array<int, 3>, 3> kIdentity3{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};

}  // namespace

PermGroup named_group(const GroupName& name) {
    using K = GroupName::Kind;
    const int n = name.n;
    switch (name.kind) {
        case K::Symmetric: {
            if (n < 2) throw std::invalid_argument("Symmetric(n) needs n >= 2");
            std::vector<Perm> gens{Perm::from_cycles(n, {{1, 2}})};
            if (n > 2) gens.push_back(nat_cycle(n));
            return PermGroup::close(n, gens);
        }
        case K::Alternating: {
            if (n < 3) throw std::invalid_argument("Alternating(n) needs n >= 3");
            std::vector<Perm> gens{Perm::from_cycles(n, {{1, 2, 3}})};
            if (n > 3) {
                if (n % 2 == 1)
                    gens.push_back(nat_cycle(n));
                else {
                    std::vector<int> cyc(n - 1);
                    for (int i = 0; i < n - 1; ++i) cyc[i] = i + 2;
                    gens.push_back(Perm::from_cycles(n, {cyc}));
                }
            }
            return PermGroup::close(n, gens);
        }
        case K::Dihedral: {
            if (n < 3) throw std::invalid_argument("Dihedral(n) needs n >= 3");
            std::vector<int> refl(n);
            refl[0] = 1;
            for (int i = 2; i <= n; ++i) refl[i - 1] = n + 2 - i;
            return PermGroup::close(n, {nat_cycle(n), Perm::from_images(refl)});
        }
        case K::CyclicRegular: {
            if (n < 2) throw std::invalid_argument("CyclicRegular(n) needs n >= 2");
            return PermGroup::close(n, {nat_cycle(n)});
        }
        case K::C2WrSn: {
            if (n < 2) throw std::invalid_argument("C2WrSn(n) needs n >= 2");
            return wreath_product_sn(named_group({K::Symmetric, 2}), n);
        }
        case K::C2WrSnEven: {
            if (n < 2) throw std::invalid_argument("C2WrSnEven(n) needs n >= 2");
            // even part: double transpositions from the socle plus the block S_n
            // (block permutations move pairs, so they are even already)
            std::vector<Perm> gens{Perm::from_cycles(2 * n, {{1, 2}, {3, 4}})};
            for (const Perm& p : block_sn_generators(2, n)) gens.push_back(p);
            return PermGroup::close(2 * n, gens);
        }
        case K::PSL25: {
            // action on P^1(F_5): labels 1..5 = 0..4, label 6 = infinity;
            // generators z -> z+1 and z -> -1/z
            Perm add1 = Perm::from_cycles(6, {{1, 2, 3, 4, 5}});
            Perm inv = Perm::from_cycles(6, {{1, 6}, {2, 5}});
            return PermGroup::close(6, {add1, inv});
        }
        case K::PSL32: {
            Perm a = gl32_perm(kCoordCycle, false, 0);
            Perm b = gl32_perm(kTransvection, false, 0);
            return PermGroup::close(7, {a, b});
        }
        case K::AGL32: {
            Perm a = gl32_perm(kCoordCycle, true, 0);
            Perm b = gl32_perm(kTransvection, true, 0);
            Perm t = gl32_perm(kIdentity3, true, 1);  // translation by e_0
            return PermGroup::close(8, {a, b, t});
        }
    }
    throw std::invalid_argument("unknown group name");
}

PermGroup four_cycle_wreath_subgroup(int n) {
    if (n < 2) throw std::invalid_argument("four_cycle_wreath_subgroup needs n >= 2");
    // blocks {2i-1, 2i}; for each adjacent block pair the 4-cycle
    // (2i-1, 2i+1, 2i, 2i+2) projects to the block transposition (i, i+1)
    std::vector<Perm> gens;
    for (int i = 1; i < n; ++i)
        gens.push_back(Perm::from_cycles(2 * n, {{2 * i - 1, 2 * i + 1, 2 * i, 2 * i + 2}}));
    return PermGroup::close(2 * n, gens);
}

GroupName parse_group_name(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    auto lower = s;
    for (char& c : lower) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (lower == "psl2_5" || lower == "psl25") return {GroupName::PSL25, 0};
    if (lower == "psl3_2" || lower == "psl32") return {GroupName::PSL32, 0};
    if (lower == "agl3_2" || lower == "agl32") return {GroupName::AGL32, 0};
    auto starts = [&](const std::string& p) { return lower.rfind(p, 0) == 0; };
    try {
        if (starts("c2wrs")) {
            std::string rest = lower.substr(5);
            bool even = false;
            if (rest.size() >= 4 && rest.substr(rest.size() - 4) == "even") {
                even = true;
                rest = rest.substr(0, rest.size() - 4);
            }
            return {even ? GroupName::C2WrSnEven : GroupName::C2WrSn, std::stoi(rest)};
        }
        if (starts("s")) return {GroupName::Symmetric, std::stoi(lower.substr(1))};
        if (starts("a")) return {GroupName::Alternating, std::stoi(lower.substr(1))};
        if (starts("d")) return {GroupName::Dihedral, std::stoi(lower.substr(1))};
        if (starts("c")) return {GroupName::CyclicRegular, std::stoi(lower.substr(1))};
    } catch (const std::exception&) {
        // fall through to the common error below
    }
    throw std::invalid_argument("unrecognized group name: " + text);
}

}  // namespace kfd
