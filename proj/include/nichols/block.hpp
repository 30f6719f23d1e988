#pragma once

#include <map>
#include <memory>
#include <vector>

#include "nichols/tensor.hpp"

namespace nichols {

/// Multidegree sector of the degree-n tensor component: the lexicographically
/// ordered list of all distinct words with a fixed letter multiset.
class Block {
public:
    Block(int n_letters, Multidegree md);

    int n_letters() const { return n_letters_; }
    int degree() const { return degree_; }
    const Multidegree& md() const { return md_; }
    const std::vector<Word>& basis() const { return basis_; }
    int dim() const { return static_cast<int>(basis_.size()); }

    /// Index of a word in the basis; throws when the word is foreign.
    int index_of(const Word& w) const;

    /// Coordinates of an element supported on this block.
    std::vector<Scalar> coordinates(const TensorElement& x) const;
    TensorElement from_coordinates(const std::vector<Scalar>& coords) const;

private:
    int n_letters_;
    int degree_;
    Multidegree md_;
    std::vector<Word> basis_;
    std::map<Word, int> index_;
};

/// Shared per-(N, multidegree) block cache, safe for concurrent lookups.
std::shared_ptr<const Block> block(int n_letters, const Multidegree& md);

/// All multidegrees of total degree n over N letters, lexicographically sorted.
std::vector<Multidegree> multidegrees_of(int n_letters, int degree);

} // namespace nichols
