#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "degdev/graph.hpp"
#include "degdev/rational.hpp"

namespace degdev {

// --- constructors -----------------------------------------------------------

// CS(n,k): clique on 0..k-1, stable set k..n-1, every clique-stable edge.
inline Graph complete_split(int n, int k) {
    if (n < 0 || k < 0 || k > n) throw std::invalid_argument("complete_split: k out of range");
    std::vector<VertexPair> edges;
    for (int u = 0; u < k; ++u) {
        for (int v = u + 1; v < k; ++v) edges.emplace_back(u, v);
        for (int v = k; v < n; ++v) edges.emplace_back(u, v);
    }
    return Graph::from_edges(n, edges);
}

struct AttachmentPattern {
    enum class Mode { balanced, concentrated, explicit_anchors };
    Mode mode = Mode::balanced;
    std::vector<int> anchors;  // explicit_anchors: one clique index per stable vertex

    static AttachmentPattern balanced() { return {}; }
    static AttachmentPattern concentrated() { return {Mode::concentrated, {}}; }
    static AttachmentPattern explicit_to(std::vector<int> anchors) {
        return {Mode::explicit_anchors, std::move(anchors)};
    }
};

// S1(n,k): clique on 0..k-1; each stable vertex k..n-1 is a pendant attached
// to one clique vertex chosen by the attachment pattern.
inline Graph pendant_split(int n, int k, const AttachmentPattern& attachment = AttachmentPattern::balanced()) {
    if (k < 1 || k > n - 1) throw std::invalid_argument("pendant_split: k out of range");
    const int q = n - k;
    std::vector<VertexPair> edges;
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v) edges.emplace_back(u, v);
    for (int j = 0; j < q; ++j) {
        int anchor;
        switch (attachment.mode) {
            case AttachmentPattern::Mode::balanced: anchor = j % k; break;
            case AttachmentPattern::Mode::concentrated: anchor = 0; break;
            default:
                if (static_cast<int>(attachment.anchors.size()) != q)
                    throw std::invalid_argument("pendant_split: need one anchor per stable vertex");
                anchor = attachment.anchors[j];
                if (anchor < 0 || anchor >= k)
                    throw std::invalid_argument("pendant_split: anchor outside clique");
        }
        edges.emplace_back(anchor, k + j);
    }
    return Graph::from_edges(n, edges);
}

inline Graph make_path(int n) {
    if (n < 1) throw std::invalid_argument("make_path: n must be >= 1");
    std::vector<VertexPair> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph::from_edges(n, edges);
}

inline Graph make_cycle(int n) {
    if (n < 3) throw std::invalid_argument("make_cycle: n must be >= 3");
    std::vector<VertexPair> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    edges.emplace_back(0, n - 1);
    return Graph::from_edges(n, edges);
}

// --- closed forms -----------------------------------------------------------

// s(CS(n,k)) = (2/n) k (n-k) (n-1-k). The published statement carries an n/2
// prefactor instead; direct computation on any concrete CS(n,k) fixes 2/n.
inline Rational s_complete_split(int n, int k) {
    if (n < 1 || k < 0 || k > n) throw std::invalid_argument("s_complete_split: k out of range");
    return Rational(2LL * k * (n - k) * (n - 1 - k), n);
}

// As printed in the source theorem, for the discrepancy report.
inline Rational published_s_complete_split(int n, int k) {
    return Rational(static_cast<long long>(n) * k * (n - k) * (n - 1 - k), 2);
}

// The balanced S1(n,k) closed form is valid when every clique vertex sits at
// or above the average degree; below that the absolute values stop telescoping.
inline bool pendant_split_form_valid(int n, int k) {
    if (k < 1 || k > n - 1) return false;
    const long long q = n - k;
    const long long two_m = static_cast<long long>(k) * (k - 1) + 2 * q;
    const long long min_clique_degree = (k - 1) + q / k;
    return static_cast<long long>(n) * min_clique_degree >= two_m;
}

// s(S1(n,k)) = (2/n) (k^2 - 3k + n) (n-k) for balanced attachment. The
// published form has the opposite sign inside the first factor, which is
// negative on every valid input; the corrected sign matches computation.
inline Rational s_pendant_split(int n, int k) {
    if (k < 1 || k > n - 1) throw std::invalid_argument("s_pendant_split: k out of range");
    if (!pendant_split_form_valid(n, k))
        throw std::domain_error("s_pendant_split: closed form invalid, clique vertex below average degree");
    return Rational(2LL * (static_cast<long long>(k) * k - 3 * k + n) * (n - k), n);
}

inline Rational published_s_pendant_split(int n, int k) {
    return Rational(2LL * (3 * k - static_cast<long long>(k) * k - n) * (n - k), n);
}

// --- optimal clique sizes ---------------------------------------------------

// Argmax of s_complete_split(n,.) over 1 <= k <= n-1, by direct evaluation.
inline std::vector<int> optimal_k_complete_split(int n) {
    if (n < 3) throw std::invalid_argument("optimal_k_complete_split: n must be >= 3");
    std::vector<int> best_k;
    Rational best(-1);
    for (int k = 1; k <= n - 1; ++k) {
        Rational v = s_complete_split(n, k);
        if (v > best) {
            best = v;
            best_k = {k};
        } else if (v == best) {
            best_k.push_back(k);
        }
    }
    return best_k;
}

// The published case table for the complete-split optimum.
inline std::vector<int> published_optimal_k_complete_split(int n) {
    if (n % 3 == 0) return {n / 3};
    if (n % 3 == 1) return {(n - 1) / 3};
    return {(n - 2) / 3, (n + 1) / 3};
}

struct PendantOptimum {
    std::vector<int> maximizers;  // evaluated argmax over 2 <= k <= n-2
    std::vector<int> published;   // the published case table
    Rational value;
    bool agrees;
};

// Argmax of s_pendant_split(n,.) over the interior range 1 < k < n-1 the
// source lemma quantifies over, with the published table alongside. The two
// disagree for some n (e.g. n=5, n=8); evaluation is the ground truth.
inline PendantOptimum optimal_k_pendant_split(int n) {
    if (n < 4) throw std::invalid_argument("optimal_k_pendant_split: n must be >= 4");
    PendantOptimum out;
    out.value = Rational(-1);
    for (int k = 2; k <= n - 2; ++k) {
        if (!pendant_split_form_valid(n, k)) continue;
        Rational v = s_pendant_split(n, k);
        if (v > out.value) {
            out.value = v;
            out.maximizers = {k};
        } else if (v == out.value) {
            out.maximizers.push_back(k);
        }
    }
    if (n % 3 == 0) out.published = {2 * n / 3};
    else if (n % 3 == 1) out.published = {2 * (n - 1) / 3};
    else if (n == 5) out.published = {1, 2};
    else out.published = {2 * (n + 1) / 3};
    out.agrees = out.maximizers == out.published;
    return out;
}

// --- family comparison ------------------------------------------------------

struct FamilyComparison {
    Rational lambda;     // max over CS(n,k), 1 <= k <= n-2
    Rational mu;         // max over balanced S1(n,k), 1 < k < n-1
    Rational difference;
    int lambda_witness_k;
    int mu_witness_k;
};

inline FamilyComparison compare_family_maxima(int n) {
    if (n < 4) throw std::invalid_argument("compare_family_maxima: n must be >= 4");
    FamilyComparison c{Rational(-1), Rational(-1), Rational(0), -1, -1};
    for (int k = 1; k <= n - 2; ++k) {
        Rational v = s_complete_split(n, k);
        if (v > c.lambda) {
            c.lambda = v;
            c.lambda_witness_k = k;
        }
    }
    for (int k = 2; k <= n - 2; ++k) {
        if (!pendant_split_form_valid(n, k)) continue;
        Rational v = s_pendant_split(n, k);
        if (v > c.mu) {
            c.mu = v;
            c.mu_witness_k = k;
        }
    }
    c.difference = c.lambda - c.mu;
    return c;
}

// The published lambda - mu case formulas, for the discrepancy report.
inline Rational published_family_difference(int n) {
    if (n % 3 == 0) return Rational(2LL * n, 9);
    if (n % 3 == 1) return Rational(2LL * ((n + 2LL) * (n + 2) - 18), 9LL * n);
    return Rational(2LL * (n + 4) * (n - 2), 9LL * n);
}

// --- discrepancy report -----------------------------------------------------

struct DiscrepancyRow {
    std::string context;
    int n;
    std::optional<int> k;
    std::string paper_value;
    std::string computed_value;
};

inline std::string discrepancy_csv(const std::vector<DiscrepancyRow>& rows) {
    std::string out = "context,n,k,paper_value,computed_value\n";
    for (const auto& r : rows) {
        out += r.context + "," + std::to_string(r.n) + ",";
        if (r.k) out += std::to_string(*r.k);
        out += "," + r.paper_value + "," + r.computed_value + "\n";
    }
    return out;
}

namespace detail {
inline std::string int_set_string(const std::vector<int>& ks) {
    std::string s;
    for (std::size_t i = 0; i < ks.size(); ++i) {
        if (i) s += "|";
        s += std::to_string(ks[i]);
    }
    return s;
}
}  // namespace detail

// Cross-checks every published closed form against direct evaluation on a
// representative range and returns one row per comparison that matters:
// every formula mismatch, every argmax-table mismatch, and the family-maxima
// difference for all n in range (agreements included, so the report shows
// where the published formulas do and do not hold).
inline std::vector<DiscrepancyRow> closed_form_discrepancies(int n_max = 12) {
    std::vector<DiscrepancyRow> rows;
    for (int n = 3; n <= n_max; ++n)
        for (int k = 1; k <= n - 1; ++k) {
            Rational printed = published_s_complete_split(n, k);
            Rational computed = s_complete_split(n, k);
            if (printed != computed)
                rows.push_back({"complete_split_closed_form", n, k,
                                to_fraction_string(printed), to_fraction_string(computed)});
        }
    for (int n = 4; n <= n_max; ++n)
        for (int k = 2; k <= n - 2; ++k) {
            if (!pendant_split_form_valid(n, k)) continue;
            Rational printed = published_s_pendant_split(n, k);
            Rational computed = s_pendant_split(n, k);
            if (printed != computed)
                rows.push_back({"pendant_split_closed_form", n, k,
                                to_fraction_string(printed), to_fraction_string(computed)});
        }
    for (int n = 4; n <= n_max; ++n) {
        PendantOptimum opt = optimal_k_pendant_split(n);
        if (!opt.agrees)
            rows.push_back({"pendant_split_optimal_k", n, std::nullopt,
                            detail::int_set_string(opt.published),
                            detail::int_set_string(opt.maximizers)});
    }
    for (int n = 4; n <= n_max; ++n) {
        FamilyComparison c = compare_family_maxima(n);
        rows.push_back({"family_maxima_difference", n, std::nullopt,
                        to_fraction_string(published_family_difference(n)),
                        to_fraction_string(c.difference)});
    }
    return rows;
}

}  // namespace degdev
