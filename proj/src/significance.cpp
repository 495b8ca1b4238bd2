#include "homm/significance.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "homm/rng.hpp"

namespace homm {

namespace {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

Hypergraph configuration_sample(const Hypergraph& h, std::uint64_t seed,
                                std::uint64_t swap_attempts) {
    std::vector<Hyperedge> edges = h.edges();
    const std::size_t m = edges.size();
    if (m < 2)
        return Hypergraph::from_edges(h.vertex_count(), std::move(edges),
                                      std::vector<std::string>(h.labels()));

    std::unordered_set<Hyperedge, HyperedgeHash, HyperedgeEq> present(edges.begin(), edges.end());
    std::mt19937_64 rng(seed);
    Hyperedge ne1, ne2;
    for (std::uint64_t attempt = 0; attempt < swap_attempts; ++attempt) {
        const std::size_t i = bounded(rng, m);
        std::size_t j = bounded(rng, m - 1);
        if (j >= i) ++j;
        const Hyperedge& e1 = edges[i];
        const Hyperedge& e2 = edges[j];
        const VertexId v = e1[bounded(rng, e1.size())];
        const VertexId w = e2[bounded(rng, e2.size())];
        if (v == w) continue;
        if (std::binary_search(e2.begin(), e2.end(), v)) continue;  // duplicate member
        if (std::binary_search(e1.begin(), e1.end(), w)) continue;

        ne1 = e1;
        *std::find(ne1.begin(), ne1.end(), v) = w;
        std::sort(ne1.begin(), ne1.end());
        ne2 = e2;
        *std::find(ne2.begin(), ne2.end(), w) = v;
        std::sort(ne2.begin(), ne2.end());

        if (ne1 == ne2) continue;
        // Collisions with edges that remain after the swap are duplicates.
        if (present.count(ne1) && !(ne1 == e2)) continue;
        if (present.count(ne2) && !(ne2 == e1)) continue;

        present.erase(e1);
        present.erase(e2);
        edges[i] = ne1;
        edges[j] = ne2;
        present.insert(ne1);
        present.insert(ne2);
    }
    return Hypergraph::from_edges(h.vertex_count(), std::move(edges),
                                  std::vector<std::string>(h.labels()));
}

NullEnsemble sample_null_ensemble(const Hypergraph& h, int n, std::uint64_t seed,
                                  int swap_multiplier) {
    if (n < 1) throw std::invalid_argument("null ensemble size must be >= 1");
    NullEnsemble ens;
    ens.seed = seed;
    ens.swap_attempts = static_cast<std::uint64_t>(swap_multiplier) * h.edge_count();
    ens.replicas.reserve(n);
    for (int i = 0; i < n; ++i)
        ens.replicas.push_back(
            configuration_sample(h, derive_seed(seed, "null", static_cast<std::uint64_t>(i)),
                                 ens.swap_attempts));
    return ens;
}

CensusCounts to_counts(const MotifCensus& census) {
    CensusCounts out;
    for (const auto& [p, c] : census.counts) out.emplace(p, static_cast<double>(c));
    return out;
}

namespace {

double value_or_zero(const CensusCounts& counts, const CanonicalPattern& p) {
    auto it = counts.find(p);
    return it == counts.end() ? 0.0 : it->second;
}

}  // namespace

SignificanceProfile abundance_profile(int order, const CensusCounts& real,
                                      const std::vector<CensusCounts>& nulls, double epsilon) {
    std::vector<CanonicalPattern> patterns;
    if (order <= 4) {
        patterns = patterns_for_order(order);
    } else {
        std::set<CanonicalPattern> seen;
        for (const auto& [p, c] : real) seen.insert(p);
        for (const auto& nc : nulls)
            for (const auto& [p, c] : nc) seen.insert(p);
        patterns.assign(seen.begin(), seen.end());
    }
    return abundance_profile(order, real, nulls, epsilon, std::move(patterns));
}

SignificanceProfile abundance_profile(int order, const CensusCounts& real,
                                      const std::vector<CensusCounts>& nulls, double epsilon,
                                      std::vector<CanonicalPattern> patterns) {
    if (nulls.empty()) throw std::invalid_argument("abundance profile needs >= 1 null census");

    SignificanceProfile profile;
    profile.order = order;
    profile.epsilon = epsilon;
    profile.patterns = std::move(patterns);

    profile.values.reserve(profile.patterns.size());
    for (const auto& p : profile.patterns) {
        const double n_real = value_or_zero(real, p);
        double n_null = 0.0;
        for (const auto& nc : nulls) n_null += value_or_zero(nc, p);
        n_null /= static_cast<double>(nulls.size());
        const double denom = n_real + n_null + epsilon;
        profile.values.push_back(denom == 0.0 ? 0.0 : (n_real - n_null) / denom);
    }

    double norm = 0.0;
    for (double v : profile.values) norm += v * v;
    norm = std::sqrt(norm);
    if (norm > 0.0) {
        for (double& v : profile.values) v /= norm;
        profile.normalized = true;
    }
    return profile;
}

SignificanceProfile abundance_profile(const MotifCensus& real,
                                      const std::vector<MotifCensus>& nulls, double epsilon) {
    std::vector<CensusCounts> null_counts;
    null_counts.reserve(nulls.size());
    for (const auto& n : nulls) {
        if (n.order != real.order)
            throw std::invalid_argument("abundance profile requires censuses of one order");
        null_counts.push_back(to_counts(n));
    }
    return abundance_profile(real.order, to_counts(real), null_counts, epsilon);
}

ProfileMetrics profile_metrics(const SignificanceProfile& estimated,
                               const SignificanceProfile& exact) {
    if (estimated.order != exact.order || estimated.patterns != exact.patterns)
        throw std::invalid_argument("profile metrics require identical pattern indexing");

    const std::size_t n = estimated.values.size();
    ProfileMetrics m;
    double mean_a = 0.0, mean_b = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double d = std::abs(estimated.values[i] - exact.values[i]);
        m.maxae = std::max(m.maxae, d);
        m.mae += d;
        mean_a += estimated.values[i];
        mean_b += exact.values[i];
    }
    m.mae /= static_cast<double>(n);
    mean_a /= static_cast<double>(n);
    mean_b /= static_cast<double>(n);

    double var_a = 0.0, var_b = 0.0, cov = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double da = estimated.values[i] - mean_a;
        const double db = exact.values[i] - mean_b;
        var_a += da * da;
        var_b += db * db;
        cov += da * db;
    }
    if (var_a > 0.0 && var_b > 0.0) m.rho = cov / std::sqrt(var_a * var_b);
    return m;
}

CorrelationMatrix profile_correlation_matrix(
    const std::vector<std::pair<std::string, SignificanceProfile>>& profiles) {
    if (profiles.size() < 2)
        throw std::invalid_argument("correlation matrix needs >= 2 profiles");
    for (const auto& [name, p] : profiles)
        if (p.order != profiles.front().second.order ||
            p.patterns != profiles.front().second.patterns)
            throw std::invalid_argument("correlation matrix requires one order and indexing");

    const std::size_t n = profiles.size();
    CorrelationMatrix m;
    m.names.reserve(n);
    for (const auto& [name, p] : profiles) m.names.push_back(name);
    m.rho.assign(n, std::vector<double>(n, 1.0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const ProfileMetrics pm = profile_metrics(profiles[i].second, profiles[j].second);
            const double r = pm.rho.value_or(std::nan(""));
            m.rho[i][j] = r;
            m.rho[j][i] = r;
        }
    }
    return m;
}

void write_profiles_csv(const std::vector<std::pair<std::string, SignificanceProfile>>& profiles,
                        std::ostream& out, const MetaLines& extra_meta) {
    if (profiles.empty()) return;
    const auto& ref = profiles.front().second;
    for (const auto& [name, p] : profiles)
        if (p.patterns != ref.patterns)
            throw std::invalid_argument("profile CSV requires identical pattern indexing");

    out << "# order: " << ref.order << '\n';
    out << "# epsilon: " << format_double(ref.epsilon) << '\n';
    for (const auto& [name, p] : profiles)
        out << "# normalized " << name << ": " << (p.normalized ? "true" : "false") << '\n';
    for (const auto& [k, v] : extra_meta) out << "# " << k << ": " << v << '\n';

    out << "pattern";
    for (const auto& [name, p] : profiles) out << ',' << name;
    out << '\n';
    for (std::size_t i = 0; i < ref.patterns.size(); ++i) {
        out << '"' << ref.patterns[i].encode() << '"';
        for (const auto& [name, p] : profiles) out << ',' << format_double(p.values[i]);
        out << '\n';
    }
}

void write_profiles_json(const std::vector<std::pair<std::string, SignificanceProfile>>& profiles,
                         std::ostream& out, const MetaLines& extra_meta) {
    if (profiles.empty()) return;
    nlohmann::json meta;
    meta["order"] = profiles.front().second.order;
    meta["epsilon"] = profiles.front().second.epsilon;
    for (const auto& [k, v] : extra_meta) meta[k] = v;

    nlohmann::json cols = nlohmann::json::object();
    for (const auto& [name, p] : profiles) {
        nlohmann::json values = nlohmann::json::object();
        for (std::size_t i = 0; i < p.patterns.size(); ++i)
            values[p.patterns[i].encode()] = p.values[i];
        cols[name] = {{"normalized", p.normalized}, {"values", values}};
    }

    nlohmann::json doc;
    doc["meta"] = meta;
    doc["profiles"] = cols;
    out << doc.dump(2) << '\n';
}

void write_matrix_csv(const CorrelationMatrix& m, std::ostream& out, const MetaLines& extra_meta) {
    for (const auto& [k, v] : extra_meta) out << "# " << k << ": " << v << '\n';
    out << "name";
    for (const auto& n : m.names) out << ',' << n;
    out << '\n';
    for (std::size_t i = 0; i < m.names.size(); ++i) {
        out << m.names[i];
        for (double v : m.rho[i]) out << ',' << format_double(v);
        out << '\n';
    }
}

void write_matrix_json(const CorrelationMatrix& m, std::ostream& out,
                       const MetaLines& extra_meta) {
    nlohmann::json meta;
    for (const auto& [k, v] : extra_meta) meta[k] = v;
    nlohmann::json doc;
    doc["meta"] = meta;
    doc["names"] = m.names;
    doc["rho"] = m.rho;
    out << doc.dump(2) << '\n';
}

}  // namespace homm
