#include "homm/pattern.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <numeric>
#include <stdexcept>

namespace homm {

namespace {

std::vector<int> decode_mask(std::uint32_t mask) {
    std::vector<int> out;
    for (int i = 0; i < 32; ++i)
        if (mask & (1u << i)) out.push_back(i);
    return out;
}

PatternSpace make_space(int k) {
    if (k < 2 || k > 5) throw std::invalid_argument("pattern order must be 2..5");
    PatternSpace ps;
    ps.k = k;
    ps.vertex_full_mask = (1u << k) - 1;

    for (std::uint32_t m = 0; m <= ps.vertex_full_mask; ++m)
        if (std::popcount(m) >= 2) ps.mask_by_ordinal.push_back(m);
    std::sort(ps.mask_by_ordinal.begin(), ps.mask_by_ordinal.end(),
              [](std::uint32_t a, std::uint32_t b) {
                  if (std::popcount(a) != std::popcount(b))
                      return std::popcount(a) < std::popcount(b);
                  return decode_mask(a) < decode_mask(b);
              });
    for (std::size_t o = 0; o < ps.mask_by_ordinal.size(); ++o)
        ps.ordinal_of_mask[ps.mask_by_ordinal[o]] = static_cast<std::uint8_t>(o);

    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        std::array<std::uint8_t, 32> map{};
        for (std::uint32_t m = 0; m <= ps.vertex_full_mask; ++m) {
            std::uint32_t img = 0;
            for (int i = 0; i < k; ++i)
                if (m & (1u << i)) img |= 1u << perm[i];
            map[m] = static_cast<std::uint8_t>(img);
        }
        ps.perm_mask.push_back(map);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return ps;
}

// Lexicographic comparison of the ascending ordinal lists encoded by two
// ordinal-space keys. The first differing ordinal decides; a strict-prefix
// list sorts first.
int ordinal_key_compare(std::uint32_t oa, std::uint32_t ob) {
    const std::uint32_t x = oa ^ ob;
    if (!x) return 0;
    const int d = std::countr_zero(x);
    if (oa & (1u << d)) return (ob >> d) ? -1 : 1;
    return (oa >> d) ? 1 : -1;
}

}  // namespace

std::uint32_t PatternSpace::to_ordinal_key(PatternKey key) const {
    std::uint32_t okey = 0;
    while (key) {
        okey |= 1u << ordinal_of_mask[std::countr_zero(key)];
        key &= key - 1;
    }
    return okey;
}

PatternKey PatternSpace::from_ordinal_key(std::uint32_t okey) const {
    PatternKey key = 0;
    while (okey) {
        key |= 1u << mask_by_ordinal[std::countr_zero(okey)];
        okey &= okey - 1;
    }
    return key;
}

PatternKey PatternSpace::apply(std::size_t p, PatternKey key) const {
    const auto& map = perm_mask[p];
    PatternKey img = 0;
    while (key) {
        img |= 1u << map[std::countr_zero(key)];
        key &= key - 1;
    }
    return img;
}

const PatternSpace& pattern_space(int k) {
    static const PatternSpace s2 = make_space(2);
    static const PatternSpace s3 = make_space(3);
    static const PatternSpace s4 = make_space(4);
    static const PatternSpace s5 = make_space(5);
    switch (k) {
        case 2: return s2;
        case 3: return s3;
        case 4: return s4;
        case 5: return s5;
        default: throw std::invalid_argument("pattern order must be 2..5");
    }
}

int pattern_key_compare(PatternKey a, PatternKey b, const PatternSpace& ps) {
    return ordinal_key_compare(ps.to_ordinal_key(a), ps.to_ordinal_key(b));
}

bool pattern_spanning_connected(PatternKey key, const PatternSpace& ps) {
    if (!key) return false;
    std::uint32_t cover = 0;
    for (PatternKey t = key; t; t &= t - 1) cover |= static_cast<std::uint32_t>(std::countr_zero(t));
    if (cover != ps.vertex_full_mask) return false;

    std::uint32_t comp = cover & ~(cover - 1);  // lowest covered vertex
    for (;;) {
        std::uint32_t grown = comp;
        for (PatternKey t = key; t; t &= t - 1) {
            const std::uint32_t edge = static_cast<std::uint32_t>(std::countr_zero(t));
            if (edge & grown) grown |= edge;
        }
        if (grown == comp) break;
        comp = grown;
    }
    return comp == cover;
}

CanonicalPattern canonicalize(int k, PatternKey key) {
    const auto& ps = pattern_space(k);
    PatternKey best = key;
    std::uint32_t best_o = ps.to_ordinal_key(key);
    for (std::size_t p = 1; p < ps.permutation_count(); ++p) {
        const PatternKey img = ps.apply(p, key);
        const std::uint32_t io = ps.to_ordinal_key(img);
        if (ordinal_key_compare(io, best_o) < 0) {
            best = img;
            best_o = io;
        }
    }
    return {static_cast<std::uint8_t>(k), best};
}

CanonicalPattern canonicalize(const SubHypergraph& sub) {
    const int k = static_cast<int>(sub.vertices.size());
    if (k < 3 || k > 5) throw std::invalid_argument("canonicalize supports orders 3..5");
    PatternKey key = 0;
    for (const auto& e : sub.edges) {
        std::uint32_t mask = 0;
        for (VertexId v : e) {
            const auto pos = std::lower_bound(sub.vertices.begin(), sub.vertices.end(), v) -
                             sub.vertices.begin();
            mask |= 1u << pos;
        }
        key |= 1u << mask;
    }
    return canonicalize(k, key);
}

namespace {

// Visit the canonical representative (ordinal-space key) of every orbit,
// in ascending scan order.
template <class F>
void scan_orbits(const PatternSpace& ps, bool connected_only, F&& emit) {
    const std::size_t nperm = ps.permutation_count();
    std::vector<std::array<std::uint8_t, 32>> perm_o(nperm);
    for (std::size_t p = 0; p < nperm; ++p)
        for (std::size_t o = 0; o < ps.edge_slot_count(); ++o)
            perm_o[p][o] = ps.ordinal_of_mask[ps.perm_mask[p][ps.mask_by_ordinal[o]]];

    const std::uint64_t limit = std::uint64_t{1} << ps.edge_slot_count();
    for (std::uint64_t okey64 = 1; okey64 < limit; ++okey64) {
        const std::uint32_t okey = static_cast<std::uint32_t>(okey64);
        if (connected_only) {
            std::uint32_t cover = 0;
            for (std::uint32_t t = okey; t; t &= t - 1)
                cover |= ps.mask_by_ordinal[std::countr_zero(t)];
            if (cover != ps.vertex_full_mask) continue;
            std::uint32_t comp = 1;  // vertex 0 is always covered here
            for (;;) {
                std::uint32_t grown = comp;
                for (std::uint32_t t = okey; t; t &= t - 1) {
                    const std::uint32_t edge = ps.mask_by_ordinal[std::countr_zero(t)];
                    if (edge & grown) grown |= edge;
                }
                if (grown == comp) break;
                comp = grown;
            }
            if (comp != cover) continue;
        }
        bool canonical = true;
        for (std::size_t p = 1; p < nperm && canonical; ++p) {
            std::uint32_t img = 0;
            for (std::uint32_t t = okey; t; t &= t - 1)
                img |= 1u << perm_o[p][std::countr_zero(t)];
            if (ordinal_key_compare(img, okey) < 0) canonical = false;
        }
        if (canonical) emit(okey);
    }
}

}  // namespace

std::vector<CanonicalPattern> enumerate_patterns(int k) {
    if (k < 3 || k > 5) throw std::invalid_argument("enumerate_patterns supports orders 3..5");
    const auto& ps = pattern_space(k);
    std::vector<CanonicalPattern> out;
    scan_orbits(ps, true, [&](std::uint32_t okey) {
        out.push_back({static_cast<std::uint8_t>(k), ps.from_ordinal_key(okey)});
    });
    std::sort(out.begin(), out.end());
    return out;
}

const std::vector<CanonicalPattern>& patterns_for_order(int k) {
    if (k == 3 || k == 4) return pattern_table(k).patterns();
    if (k == 5) {
        static const std::vector<CanonicalPattern> p5 = enumerate_patterns(5);
        return p5;
    }
    throw std::invalid_argument("pattern order must be 3..5");
}

PatternTable build_pattern_table(int k) {
    if (k != 3 && k != 4)
        throw std::invalid_argument("relabeling tables are built for orders 3 and 4 only");
    PatternTable t;
    t.order_ = k;
    t.patterns_ = enumerate_patterns(k);

    const auto& ps = pattern_space(k);
    std::unordered_map<PatternKey, int> seen;
    for (std::size_t id = 0; id < t.patterns_.size(); ++id) {
        for (std::size_t p = 0; p < ps.permutation_count(); ++p) {
            const PatternKey img = ps.apply(p, t.patterns_[id].key);
            auto [it, inserted] = seen.emplace(img, static_cast<int>(id));
            if (!inserted && it->second != static_cast<int>(id))
                throw std::logic_error("relabeling table maps one key to two classes");
            t.index_.emplace(img, static_cast<int>(id));
        }
    }
    t.distinct_keys_ = seen.size();
    return t;
}

const PatternTable& pattern_table(int k) {
    static const PatternTable t3 = build_pattern_table(3);
    static const PatternTable t4 = build_pattern_table(4);
    if (k == 3) return t3;
    if (k == 4) return t4;
    throw std::invalid_argument("relabeling tables exist for orders 3 and 4 only");
}

CanonicalPattern classify(const SubHypergraph& sub) {
    const int k = static_cast<int>(sub.vertices.size());
    if (k < 3 || k > 5) throw std::invalid_argument("classify supports orders 3..5");
    PatternKey key = 0;
    for (const auto& e : sub.edges) {
        std::uint32_t mask = 0;
        for (VertexId v : e) {
            const auto pos = std::lower_bound(sub.vertices.begin(), sub.vertices.end(), v) -
                             sub.vertices.begin();
            mask |= 1u << pos;
        }
        key |= 1u << mask;
    }
    if (k <= 4) {
        const int id = pattern_table(k).classify_key(key);
        if (id < 0) throw std::invalid_argument("sub-hypergraph is not connected");
        return pattern_table(k).patterns()[id];
    }
    if (!pattern_spanning_connected(key, pattern_space(5)))
        throw std::invalid_argument("sub-hypergraph is not connected");
    return canonicalize(5, key);
}

std::vector<std::vector<int>> CanonicalPattern::edge_lists() const {
    const auto& ps = pattern_space(order);
    std::vector<std::vector<int>> out;
    for (std::uint32_t mask : ps.mask_by_ordinal)
        if (key & (1u << mask)) out.push_back(decode_mask(mask));
    return out;
}

std::string CanonicalPattern::encode() const {
    std::string s = "[";
    const auto lists = edge_lists();
    for (std::size_t i = 0; i < lists.size(); ++i) {
        if (i) s += ',';
        s += '[';
        for (std::size_t j = 0; j < lists[i].size(); ++j) {
            if (j) s += ',';
            s += std::to_string(lists[i][j]);
        }
        s += ']';
    }
    s += ']';
    return s;
}

CanonicalPattern CanonicalPattern::parse(const std::string& text) {
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto expect = [&](char c) {
        skip_ws();
        if (i >= text.size() || text[i] != c)
            throw std::invalid_argument("malformed pattern encoding: " + text);
        ++i;
    };

    std::vector<std::vector<int>> edges;
    expect('[');
    skip_ws();
    while (i < text.size() && text[i] != ']') {
        expect('[');
        std::vector<int> edge;
        skip_ws();
        while (i < text.size() && text[i] != ']') {
            skip_ws();
            if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
                throw std::invalid_argument("malformed pattern encoding: " + text);
            int v = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                v = v * 10 + (text[i++] - '0');
            edge.push_back(v);
            skip_ws();
            if (i < text.size() && text[i] == ',') ++i;
        }
        expect(']');
        edges.push_back(std::move(edge));
        skip_ws();
        if (i < text.size() && text[i] == ',') ++i;
        skip_ws();
    }
    expect(']');

    int maxv = -1;
    for (const auto& e : edges)
        for (int v : e) maxv = std::max(maxv, v);
    const int k = maxv + 1;
    if (k < 3 || k > 5 || edges.empty())
        throw std::invalid_argument("pattern encoding must cover 3..5 labels: " + text);

    PatternKey key = 0;
    for (const auto& e : edges) {
        std::uint32_t mask = 0;
        for (int v : e) mask |= 1u << v;
        if (std::popcount(mask) < 2 || std::popcount(mask) != static_cast<int>(e.size()))
            throw std::invalid_argument("pattern edge must list >=2 distinct labels: " + text);
        key |= 1u << mask;
    }
    if (!pattern_spanning_connected(key, pattern_space(k)))
        throw std::invalid_argument("pattern encoding is not connected: " + text);
    if (canonicalize(k, key).key != key)
        throw std::invalid_argument("pattern encoding is not canonical: " + text);
    return {static_cast<std::uint8_t>(k), key};
}

int CanonicalPattern::max_edge_size() const {
    int best = 0;
    for (PatternKey t = key; t; t &= t - 1)
        best = std::max(best, std::popcount(static_cast<std::uint32_t>(std::countr_zero(t))));
    return best;
}

int CanonicalPattern::max_size_edge_count() const {
    const int m = max_edge_size();
    int count = 0;
    for (PatternKey t = key; t; t &= t - 1)
        if (std::popcount(static_cast<std::uint32_t>(std::countr_zero(t))) == m) ++count;
    return count;
}

bool CanonicalPattern::operator<(const CanonicalPattern& o) const {
    if (order != o.order) return order < o.order;
    return pattern_key_compare(key, o.key, pattern_space(order)) < 0;
}

namespace detail {

std::size_t count_pattern_orbits(int k, bool connected_only) {
    std::size_t count = 0;
    scan_orbits(pattern_space(k), connected_only, [&](std::uint32_t) { ++count; });
    return count;
}

}  // namespace detail

}  // namespace homm
