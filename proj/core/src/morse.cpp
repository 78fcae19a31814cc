#include "veronese/morse.hpp"

#include <algorithm>
#include <map>

namespace veronese {

namespace {

bool is_facet_of(const Face& alpha, const Face& beta) {
    if (alpha.size() + 1 != beta.size()) return false;
    return std::includes(beta.begin(), beta.end(), alpha.begin(), alpha.end());
}

void validate_field(const VectorField& field, const FaceSet& faces) {
    std::map<Face, int> covered;
    for (const auto& [alpha, beta] : field.pairs) {
        if (alpha.empty())
            throw std::invalid_argument("morse: the empty face cannot be paired");
        if (!is_facet_of(alpha, beta))
            throw std::invalid_argument("morse: pair is not a facet/cofacet pair");
        if (!faces.contains(alpha) || !faces.contains(beta))
            throw std::invalid_argument("morse: pair uses faces outside the complex");
        if (++covered[alpha] > 1 || ++covered[beta] > 1)
            throw std::invalid_argument("morse: pairing conflict, face covered twice");
    }
}

MorseReport report_from_field(const VectorField& field, const FaceSet& faces,
                              bool acyclic) {
    std::map<Face, char> covered;
    for (const auto& [alpha, beta] : field.pairs) {
        covered[alpha] = 1;
        covered[beta] = 1;
    }
    MorseReport report;
    report.acyclic = acyclic;
    for (Int k = 1; k <= faces.max_card(); ++k) {
        for (const Face& f : faces.of_card(k)) {
            if (covered.count(f)) continue;
            const Int q = k - 1;
            if (q >= static_cast<Int>(report.counts.size()))
                report.counts.resize(static_cast<std::size_t>(q) + 1, 0);
            ++report.counts[static_cast<std::size_t>(q)];
            report.critical.push_back(f);
        }
    }
    return report;
}

}  // namespace

Int MorseReport::count_at(Int q) const {
    if (q < 0 || q >= static_cast<Int>(counts.size())) return 0;
    return counts[static_cast<std::size_t>(q)];
}

VectorField vertex_matching(const FaceSet& faces, Int v) {
    if (!faces.has_vertex(v))
        throw std::invalid_argument("morse: matching center is not a vertex");
    VectorField field;
    for (Int k = 1; k <= faces.max_card(); ++k) {
        for (const Face& f : faces.of_card(k)) {
            if (std::binary_search(f.begin(), f.end(), v)) continue;
            Face up = face_union(f, v);
            if (faces.contains(up)) field.pairs.emplace_back(f, std::move(up));
        }
    }
    return field;
}

bool check_acyclic(const VectorField& field, const FaceSet& faces) {
    validate_field(field, faces);
    const std::size_t n = field.pairs.size();
    std::map<Face, std::size_t> alpha_of;  // lower face -> pair index
    for (std::size_t i = 0; i < n; ++i) alpha_of[field.pairs[i].first] = i;

    std::vector<std::vector<std::size_t>> adj(n);
    Face facet;
    for (std::size_t i = 0; i < n; ++i) {
        const Face& beta = field.pairs[i].second;
        for (std::size_t k = 0; k < beta.size(); ++k) {
            facet.assign(beta.begin(), beta.end());
            facet.erase(facet.begin() + static_cast<std::ptrdiff_t>(k));
            if (facet == field.pairs[i].first) continue;
            auto it = alpha_of.find(facet);
            if (it != alpha_of.end()) adj[i].push_back(it->second);
        }
    }

    // iterative three-color DFS; V-paths can be long, so no recursion
    std::vector<char> color(n, 0);
    std::vector<std::pair<std::size_t, std::size_t>> stack;
    for (std::size_t root = 0; root < n; ++root) {
        if (color[root] != 0) continue;
        stack.emplace_back(root, 0);
        color[root] = 1;
        while (!stack.empty()) {
            auto& [node, next] = stack.back();
            if (next < adj[node].size()) {
                const std::size_t child = adj[node][next++];
                if (color[child] == 1) return false;  // closed V-path
                if (color[child] == 0) {
                    color[child] = 1;
                    stack.emplace_back(child, 0);
                }
            } else {
                color[node] = 2;
                stack.pop_back();
            }
        }
    }
    return true;
}

MorseBound morse_bound(const FaceSet& faces, Int q) {
    if (q < 0) throw std::invalid_argument("morse: dimension must be >= 0");
    const std::vector<Int> verts = faces.vertices();
    if (verts.empty()) throw std::invalid_argument("morse: complex has no vertices");
    MorseBound best{-1, 0};
    for (Int v : verts) {
        const Int count = anti_star(faces, v).count_at(q);
        if (best.value < 0 || count < best.value) best = MorseBound{count, v};
    }
    return best;
}

MorseReport augmented_matching(const FaceSet& faces, Int v,
                               const std::vector<std::pair<Face, Face>>& extra_pairs) {
    VectorField field = vertex_matching(faces, v);
    field.pairs.insert(field.pairs.end(), extra_pairs.begin(), extra_pairs.end());
    const bool acyclic = check_acyclic(field, faces);  // validates pairing too
    return report_from_field(field, faces, acyclic);
}

}  // namespace veronese
