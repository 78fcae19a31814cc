#include "veronese/faces.hpp"

#include <algorithm>

namespace veronese {

Int FaceVector::at_card(Int k) const {
    if (k < 0 || k >= static_cast<Int>(counts.size())) return 0;
    return counts[static_cast<std::size_t>(k)];
}

FaceSet make_face_set(std::vector<std::vector<Face>> grouped) {
    FaceSet fs;
    fs.by_card_ = std::move(grouped);
    return fs;
}

FaceSet FaceSet::from_faces(std::vector<Face> faces) {
    std::size_t max_card = 0;
    for (auto& f : faces) {
        if (!std::is_sorted(f.begin(), f.end()) ||
            std::adjacent_find(f.begin(), f.end()) != f.end())
            throw std::invalid_argument("faces: indices must be strictly increasing");
        max_card = std::max(max_card, f.size());
    }
    std::vector<std::vector<Face>> grouped(max_card + 1);
    for (auto& f : faces) grouped[f.size()].push_back(std::move(f));
    grouped[0] = {Face{}};  // the empty face is always represented
    for (auto& level : grouped) {
        std::sort(level.begin(), level.end());
        level.erase(std::unique(level.begin(), level.end()), level.end());
    }
    return make_face_set(std::move(grouped));
}

const std::vector<Face>& FaceSet::of_card(Int k) const {
    static const std::vector<Face> empty;
    if (k < 0 || k > max_card()) return empty;
    return by_card_[static_cast<std::size_t>(k)];
}

std::size_t FaceSet::total() const {
    std::size_t n = 0;
    for (const auto& level : by_card_) n += level.size();
    return n;
}

bool FaceSet::contains(const Face& f) const {
    const Int k = static_cast<Int>(f.size());
    if (k > max_card()) return false;
    const auto& level = by_card_[static_cast<std::size_t>(k)];
    return std::binary_search(level.begin(), level.end(), f);
}

bool FaceSet::has_vertex(Int v) const {
    return contains(Face{v});
}

FaceVector FaceSet::face_vector() const {
    FaceVector fv;
    fv.counts.reserve(by_card_.size());
    for (const auto& level : by_card_) fv.counts.push_back(static_cast<Int>(level.size()));
    return fv;
}

std::vector<Int> FaceSet::vertices() const {
    std::vector<Int> out;
    for (const auto& f : of_card(1)) out.push_back(f[0]);
    return out;
}

Face face_union(const Face& sigma, Int v) {
    Face out;
    out.reserve(sigma.size() + 1);
    auto it = std::lower_bound(sigma.begin(), sigma.end(), v);
    out.insert(out.end(), sigma.begin(), it);
    if (it == sigma.end() || *it != v) out.push_back(v);
    out.insert(out.end(), it, sigma.end());
    return out;
}

bool is_cone_over(const FaceSet& faces, Int v) {
    if (!faces.has_vertex(v))
        throw std::invalid_argument("faces: cone apex is not a vertex");
    // Faces containing v are closed under inserting v, so only the rest matter.
    for (Int k = 0; k <= faces.max_card(); ++k) {
        for (const Face& f : faces.of_card(k)) {
            if (std::binary_search(f.begin(), f.end(), v)) continue;
            if (!faces.contains(face_union(f, v))) return false;
        }
    }
    return true;
}

Int AntiStar::count_at(Int q) const {
    if (q < 0 || q >= static_cast<Int>(counts.size())) return 0;
    return counts[static_cast<std::size_t>(q)];
}

AntiStar anti_star(const FaceSet& faces, Int v) {
    if (!faces.has_vertex(v))
        throw std::invalid_argument("faces: anti-star center is not a vertex");
    AntiStar result;
    for (Int k = 0; k <= faces.max_card(); ++k) {
        for (const Face& f : faces.of_card(k)) {
            if (std::binary_search(f.begin(), f.end(), v)) continue;
            if (faces.contains(face_union(f, v))) continue;
            const Int q = static_cast<Int>(f.size()) - 1;  // never -1: {v} is a face
            if (q >= static_cast<Int>(result.counts.size()))
                result.counts.resize(static_cast<std::size_t>(q) + 1, 0);
            ++result.counts[static_cast<std::size_t>(q)];
            result.faces.push_back(f);
        }
    }
    return result;
}

}  // namespace veronese
