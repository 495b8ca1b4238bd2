#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "homm/census.hpp"
#include "homm/significance.hpp"
#include "homm/synthetic.hpp"

using namespace homm;

namespace {

Hypergraph make(std::size_t n, std::vector<Hyperedge> edges) {
    return Hypergraph::from_edges(n, std::move(edges));
}

std::string state_key(const Hypergraph& h) {
    std::string s;
    for (const auto& e : h.edges()) {
        for (VertexId v : e) s += std::to_string(v) + ",";
        s += ";";
    }
    return s;
}

CanonicalPattern pat(const std::string& enc) { return CanonicalPattern::parse(enc); }

}  // namespace

TEST_CASE("a single-edge hypergraph randomizes to itself") {
    const Hypergraph h = make(3, {{0, 1, 2}});
    const Hypergraph r = configuration_sample(h, 5, 100);
    CHECK(r.edges() == h.edges());
}

TEST_CASE("replicas preserve degree and size sequences exactly") {
    GenSpec spec{40, {{2, 35}, {3, 25}, {4, 10}}, 0.4, 2};
    const Hypergraph h = generate_hypergraph(spec).hypergraph;
    const NullEnsemble ens = sample_null_ensemble(h, 10, 99);
    CHECK(ens.replicas.size() == 10);
    for (const auto& r : ens.replicas) {
        CHECK(r.vertex_count() == h.vertex_count());
        CHECK(r.edge_count() == h.edge_count());
        CHECK(r.degree_sequence() == h.degree_sequence());
        CHECK(r.size_histogram() == h.size_histogram());
    }
    // and the ensemble actually moves away from the original
    int changed = 0;
    for (const auto& r : ens.replicas)
        if (r.edges() != h.edges()) ++changed;
    CHECK(changed >= 8);
}

TEST_CASE("swap chain is uniform over its reachable states") {
    // Small instance whose state space we can enumerate explicitly.
    const Hypergraph h = make(6, {{0, 1}, {2, 3}, {4, 5}, {0, 2, 4}, {1, 3, 5}});

    // Reachable states by BFS over single valid swaps (oracle-side).
    auto neighbors = [](const std::vector<Hyperedge>& edges) {
        std::vector<std::vector<Hyperedge>> out;
        for (std::size_t i = 0; i < edges.size(); ++i)
            for (std::size_t j = 0; j < edges.size(); ++j) {
                if (i == j) continue;
                for (std::size_t a = 0; a < edges[i].size(); ++a)
                    for (std::size_t b = 0; b < edges[j].size(); ++b) {
                        const VertexId v = edges[i][a], w = edges[j][b];
                        if (v == w) continue;
                        if (std::find(edges[j].begin(), edges[j].end(), v) != edges[j].end())
                            continue;
                        if (std::find(edges[i].begin(), edges[i].end(), w) != edges[i].end())
                            continue;
                        auto next = edges;
                        next[i][a] = w;
                        next[j][b] = v;
                        std::sort(next[i].begin(), next[i].end());
                        std::sort(next[j].begin(), next[j].end());
                        std::set<Hyperedge> uniq(next.begin(), next.end());
                        if (uniq.size() != next.size()) continue;
                        std::sort(next.begin(), next.end());
                        out.push_back(std::move(next));
                    }
            }
        return out;
    };

    std::set<std::vector<Hyperedge>> states;
    std::vector<std::vector<Hyperedge>> queue = {h.edges()};
    states.insert(h.edges());
    while (!queue.empty()) {
        auto cur = queue.back();
        queue.pop_back();
        for (auto& nxt : neighbors(cur))
            if (states.insert(nxt).second) queue.push_back(nxt);
    }
    REQUIRE(states.size() > 1);

    const int replicas = 10000;
    std::map<std::string, int> freq;
    for (int r = 0; r < replicas; ++r) {
        const Hypergraph sample = configuration_sample(h, 10'000 + r, 300);
        ++freq[state_key(sample)];
    }
    CHECK(freq.size() == states.size());

    const double p = 1.0 / static_cast<double>(states.size());
    const double expected = replicas * p;
    const double sigma = std::sqrt(replicas * p * (1 - p));
    for (const auto& [key, observed] : freq)
        CHECK(std::abs(observed - expected) <= 5.0 * sigma);
}

TEST_CASE("abundance formula and normalization") {
    const CanonicalPattern a = pat("[[0,1],[0,2]]");
    CensusCounts real{{a, 10.0}};
    std::vector<CensusCounts> nulls = {{}};

    const SignificanceProfile p = abundance_profile(3, real, nulls, 4.0);
    CHECK(p.normalized);
    double norm = 0;
    for (double v : p.values) norm += v * v;
    CHECK(std::abs(std::sqrt(norm) - 1.0) < 1e-12);

    // unnormalized Delta for the one nonzero pattern is 10/14; everything
    // else is 0, so the normalized vector has a single 1.0
    const auto it = std::find(p.patterns.begin(), p.patterns.end(), a);
    REQUIRE(it != p.patterns.end());
    CHECK(p.values[it - p.patterns.begin()] == doctest::Approx(1.0));

    // raw abundance check without normalization effects: two equal entries
    CensusCounts real2{{a, 10.0}, {pat("[[0,1,2]]"), 10.0}};
    const SignificanceProfile p2 = abundance_profile(3, real2, nulls, 4.0);
    const double expect = (10.0 / 14.0) / std::sqrt(2 * (10.0 / 14.0) * (10.0 / 14.0));
    const auto jt = std::find(p2.patterns.begin(), p2.patterns.end(), a);
    CHECK(p2.values[jt - p2.patterns.begin()] == doctest::Approx(expect));
}

TEST_CASE("all-zero abundances stay unnormalized and flagged") {
    CensusCounts real{{pat("[[0,1,2]]"), 5.0}};
    std::vector<CensusCounts> nulls = {real};
    const SignificanceProfile p = abundance_profile(3, real, nulls, 4.0);
    CHECK_FALSE(p.normalized);
    for (double v : p.values) CHECK(v == 0.0);

    CHECK_THROWS_AS(abundance_profile(3, real, {}, 4.0), std::invalid_argument);
}

TEST_CASE("with epsilon 0 the abundance is scale-invariant") {
    const CanonicalPattern a = pat("[[0,1],[0,2]]");
    const CanonicalPattern b = pat("[[0,1,2]]");
    CensusCounts real{{a, 12.0}, {b, 3.0}};
    std::vector<CensusCounts> nulls = {{{a, 6.0}, {b, 9.0}}};
    const SignificanceProfile p1 = abundance_profile(3, real, nulls, 0.0);

    CensusCounts real_scaled, null_scaled;
    for (auto& [k, v] : real) real_scaled[k] = 7 * v;
    for (auto& [k, v] : nulls[0]) null_scaled[k] = 7 * v;
    const SignificanceProfile p7 = abundance_profile(3, real_scaled, {null_scaled}, 0.0);
    for (std::size_t i = 0; i < p1.values.size(); ++i)
        CHECK(p1.values[i] == doctest::Approx(p7.values[i]));
}

TEST_CASE("profile metrics on identical, negated and degenerate profiles") {
    CensusCounts real{{pat("[[0,1],[0,2]]"), 20.0}, {pat("[[0,1,2]]"), 2.0}};
    std::vector<CensusCounts> nulls = {{{pat("[[0,1],[0,2]]"), 5.0}, {pat("[[0,1,2]]"), 10.0}}};
    const SignificanceProfile p = abundance_profile(3, real, nulls, 4.0);

    const ProfileMetrics same = profile_metrics(p, p);
    REQUIRE(same.rho.has_value());
    CHECK(*same.rho == doctest::Approx(1.0));
    CHECK(same.maxae == 0.0);
    CHECK(same.mae == 0.0);

    SignificanceProfile neg = p;
    for (double& v : neg.values) v = -v;
    const ProfileMetrics opposite = profile_metrics(p, neg);
    REQUIRE(opposite.rho.has_value());
    CHECK(*opposite.rho == doctest::Approx(-1.0));
    CHECK(opposite.maxae >= opposite.mae);
    CHECK(opposite.mae >= 0.0);

    SignificanceProfile flat = p;
    std::fill(flat.values.begin(), flat.values.end(), 0.25);
    CHECK_FALSE(profile_metrics(flat, p).rho.has_value());
}

TEST_CASE("correlation matrix: symmetry, unit diagonal, negation") {
    CensusCounts real{{pat("[[0,1],[0,2]]"), 20.0}, {pat("[[0,1,2]]"), 2.0}};
    std::vector<CensusCounts> nulls = {{{pat("[[0,1],[0,2]]"), 5.0}, {pat("[[0,1,2]]"), 10.0}}};
    const SignificanceProfile p = abundance_profile(3, real, nulls, 4.0);
    SignificanceProfile neg = p;
    for (double& v : neg.values) v = -v;

    const CorrelationMatrix twin = profile_correlation_matrix({{"a", p}, {"b", p}});
    CHECK(twin.rho[0][0] == 1.0);
    CHECK(twin.rho[1][1] == 1.0);
    CHECK(twin.rho[0][1] == doctest::Approx(1.0));
    CHECK(twin.rho[1][0] == doctest::Approx(1.0));

    const CorrelationMatrix anti = profile_correlation_matrix({{"a", p}, {"b", neg}});
    CHECK(anti.rho[0][1] == doctest::Approx(-1.0));

    CHECK_THROWS_AS(profile_correlation_matrix({{"a", p}}), std::invalid_argument);
}

TEST_CASE("nested-heavy and pairwise-heavy corpora separate in the matrix") {
    std::vector<std::pair<std::string, SignificanceProfile>> profiles;
    for (int i = 0; i < 3; ++i) {
        GenSpec spec{40, {{3, 18}, {4, 22}}, 1.0, 100 + static_cast<std::uint64_t>(i)};
        const Hypergraph h = generate_hypergraph(spec).hypergraph;
        std::vector<MotifCensus> nulls;
        for (const auto& r : sample_null_ensemble(h, 5, 7 + i).replicas)
            nulls.push_back(count_exact_4(r));
        profiles.emplace_back("nested" + std::to_string(i),
                              abundance_profile(count_exact_4(h), nulls, 4.0));
    }
    for (int i = 0; i < 3; ++i) {
        GenSpec spec{40, {{2, 90}}, 0.0, 200 + static_cast<std::uint64_t>(i)};
        const Hypergraph h = generate_hypergraph(spec).hypergraph;
        std::vector<MotifCensus> nulls;
        for (const auto& r : sample_null_ensemble(h, 5, 17 + i).replicas)
            nulls.push_back(count_exact_4(r));
        profiles.emplace_back("pairwise" + std::to_string(i),
                              abundance_profile(count_exact_4(h), nulls, 4.0));
    }

    const CorrelationMatrix m = profile_correlation_matrix(profiles);
    double within = 0, cross = 0;
    int nw = 0, nc = 0;
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j) {
            const bool same_group = (i < 3) == (j < 3);
            (same_group ? within : cross) += m.rho[i][j];
            ++(same_group ? nw : nc);
        }
    CHECK(within / nw > cross / nc);
}
