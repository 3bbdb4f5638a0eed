#pragma once

#include <utility>
#include <vector>

#include "eqca/cell.hpp"
#include "eqca/numbers.hpp"

namespace eqca::codec {

/// Cantor pairing, a bijection N^2 -> N:  pair(n,p) = (n+p)(n+p+1)/2 + n.
Nat pair(const Nat& n, const Nat& p);

/// Inverse of pair.
std::pair<Nat, Nat> unpair(const Nat& k);

/// Successor pairing, a bijection N^2 -> N \ {0}:  n;p = pair(n,p) + 1.
Nat succ_pair(const Nat& n, const Nat& p);

/// Inverse of succ_pair; rejects 0.
std::pair<Nat, Nat> unsucc_pair(const Nat& k);

/// Bijection Z -> N: x >= 0 -> 2x, x < 0 -> -2x-1.
Nat fold_int(const Int& x);

/// Inverse of fold_int.
Int unfold_int(const Nat& k);

/// Bijection Z^d -> N: right-nested pairing of the folded components,
/// pair(fold(x1), pair(fold(x2), ... fold(xd))). For d = 1 this is fold_int.
Nat coord_index(const CellCoord& c);

/// Inverse of coord_index for a given dimension d.
CellCoord coord_unindex(const Nat& k, std::size_t d);

/// Right fold of the successor pairing over a finite sequence:
/// [] -> 0, [j1..jl] -> j1;(j2;(...;(jl;0))). Injective; never 0 for a
/// nonempty sequence. Throws if the estimated result size exceeds the
/// representable budget (sequence indices double in bit size per element).
Nat seq_encode(const std::vector<Nat>& js);

/// Inverse of seq_encode.
std::vector<Nat> seq_decode(const Nat& k);

/// Upper estimate of the bit size of seq_encode on a sequence of `len`
/// entries of at most `entry_bits` bits each. Saturates at 2^62.
double seq_encode_bits_estimate(std::size_t len, double entry_bits);

/// Hard cap on seq_encode result size, in bits.
inline constexpr double kMaxEncodedBits = 1.5e8;

}  // namespace eqca::codec
