#include "nichols/block.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

namespace nichols {

Block::Block(int n_letters, Multidegree md) : n_letters_(n_letters), md_(std::move(md)) {
    if (static_cast<int>(md_.size()) != n_letters) throw InputError("multidegree size mismatch");
    degree_ = std::accumulate(md_.begin(), md_.end(), 0);
    Word w;
    for (int letter = 1; letter <= n_letters; ++letter)
        w.insert(w.end(), md_[letter - 1], letter);
    // sorted start + next_permutation enumerates the distinct arrangements in
    // lexicographic order
    do {
        basis_.push_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    for (size_t i = 0; i < basis_.size(); ++i) index_[basis_[i]] = static_cast<int>(i);
}

int Block::index_of(const Word& w) const {
    auto it = index_.find(w);
    if (it == index_.end()) throw InputError("word does not belong to block " + word_str(w));
    return it->second;
}

std::vector<Scalar> Block::coordinates(const TensorElement& x) const {
    std::vector<Scalar> coords(basis_.size(), Scalar(0));
    for (const auto& [w, c] : x.terms()) coords[index_of(w)] = c;
    return coords;
}

TensorElement Block::from_coordinates(const std::vector<Scalar>& coords) const {
    if (coords.size() != basis_.size()) throw InputError("coordinate size mismatch");
    TensorElement x;
    for (size_t i = 0; i < coords.size(); ++i) x.add_term(basis_[i], coords[i]);
    return x;
}

std::shared_ptr<const Block> block(int n_letters, const Multidegree& md) {
    static std::mutex mutex;
    static std::map<std::pair<int, Multidegree>, std::shared_ptr<const Block>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto key = std::make_pair(n_letters, md);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto b = std::make_shared<const Block>(n_letters, md);
    cache[key] = b;
    return b;
}

std::vector<Multidegree> multidegrees_of(int n_letters, int degree) {
    std::vector<Multidegree> result;
    Multidegree md(n_letters, 0);
    // lexicographic enumeration of compositions of `degree` into N parts
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == n_letters - 1) {
            md[pos] = remaining;
            result.push_back(md);
            return;
        }
        for (int k = 0; k <= remaining; ++k) {
            md[pos] = k;
            self(self, pos + 1, remaining - k);
        }
    };
    rec(rec, 0, degree);
    return result;
}

} // namespace nichols
