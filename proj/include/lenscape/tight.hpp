// Tight contact structures on L(p,q) in chain-rotation coordinates:
// r_i ranges over |r_i| <= a_i - 2 with r_i = a_i (mod 2), one vector per
// structure; the layered decomposition into basic-slice blocks follows the
// exact coefficient-decrement walk from [a1,...,an] down to [1].
#pragma once

#include <string>
#include <vector>

#include "lenscape/numbers.hpp"

namespace lenscape {

using RotationVector = std::vector<Int>;

bool rotation_valid(const std::vector<Int>& cf, const RotationVector& r);
void require_rotation_valid(const std::vector<Int>& cf, const RotationVector& r);

// number of tight structures: prod(a_i - 1)
Int tight_count(const std::vector<Int>& cf);

// all valid vectors, lexicographic in (r_1,...,r_n)
std::vector<RotationVector> enumerate_tight(const std::vector<Int>& cf);

enum class TightClass { UniversallyTight, VirtuallyOvertwisted };
TightClass classify(const std::vector<Int>& cf, const RotationVector& r);

// orbits of r -> -r; each orbit sorted, orbits sorted by representative
std::vector<std::vector<RotationVector>> contactomorphism_classes(const std::vector<Int>& cf);

// boundary slope of a layer, stored as the coprime pair (-q, p), value -p/q
struct Slope {
    Int q; // positive
    Int p; // positive
    Fraction value() const { return {-p, q}; }
    friend bool operator==(const Slope& a, const Slope& b) { return a.q == b.q && a.p == b.p; }
};

struct Block {
    size_t coeff_index; // 0-based position in the expansion
    Int slice_count;    // a_i - 2
    Int contribution;   // meridian coordinate mu_i, the per-slice magnitude
};

// one basic slice: the layer between consecutive slopes
struct SliceInterval {
    size_t lo;          // index into slopes
    size_t hi;          // = lo + 1
    size_t block_index; // which Block owns it
};

struct BlockDecomposition {
    std::vector<Int> cf;
    std::vector<Block> blocks;          // per coefficient, in expansion order
    std::vector<Slope> slopes;          // from (-q, p) down to (-1, 1)
    std::vector<SliceInterval> slices;  // bottom to top; slices.size() = sum(a_i - 2)
};

// coefficient-decrement walk: at each step the last coefficient drops by one,
// trailing 1s contract ([..., b, 1] = [..., b-1]); slopes are recorded after
// every step. Blocks attach to coefficients from the last to the first.
BlockDecomposition honda_blocks(const LensSpace& l);

// signs "+++|+-" (one group per block, bars between blocks, empty blocks show
// as empty groups) -> rotation vector of block excesses
RotationVector signs_to_rotation(const BlockDecomposition& d, const std::string& signs);

// canonical sign string for r: pluses first inside every block
std::string rotation_to_signs(const BlockDecomposition& d, const RotationVector& r);

} // namespace lenscape
