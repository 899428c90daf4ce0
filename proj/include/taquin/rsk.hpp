#pragma once

#include "taquin/growth.hpp"

namespace taquin {

/// The four standardisation disciplines.  rsk and dual_rsk_prime accept
/// arbitrary multiplicities; dual_rsk and rsk_prime accept only 0-1 fillings.
enum class RskVariant { rsk, dual_rsk_prime, dual_rsk, rsk_prime };

const char* to_string(RskVariant v);
RskVariant parse_variant(std::string_view s);

StepMode p_mode(RskVariant v);  // right border step mode
StepMode q_mode(RskVariant v);  // top border step mode

/// Greene chain kinds read off a variant's corner labels: the partition side
/// and its transpose side.
ChainKind greene_kind(RskVariant v);
ChainKind greene_kind_transpose(RskVariant v);

/// Variant whose corner labels encode the given chain statistic.
RskVariant variant_for_kind(ChainKind kind);

/// Variant whose chain modes are the transposes of v's.
RskVariant conjugate(RskVariant v);

bool variant_legal(const Filling& f, RskVariant v);

/// Expands rows and columns by their masses and lays the entries out in the
/// variant's chains; the result is a permutation-matrix filling.
Filling standardize(const Filling& f, RskVariant v);

/// Standardisation that keeps the first column unexpanded.
Filling partial_standardize(const Filling& f, RskVariant v);

struct RskPair {
    PartitionChain p, q;
    auto operator<=>(const RskPair&) const = default;
};

/// Border chains of the standardised growth diagram, compressed to the
/// original rows and columns.
RskPair rsk_correspond(const Filling& f, RskVariant v);

/// Inverse of rsk_correspond.
Filling rsk_invert(const PartitionChain& p, const PartitionChain& q, RskVariant v);

/// Final shape of the filling under the variant (last partition of both
/// border chains).
Partition shape_of(const Filling& f, RskVariant v);

/// Unit-step chain refining c: strip cells enter by ascending column
/// (hstrip) or ascending row (vstrip).
PartitionChain expand_chain(const PartitionChain& c);

/// Keeps the partitions at the given cumulative unit counts.
PartitionChain compress_chain(const PartitionChain& cells, const std::vector<int>& masses,
                              StepMode mode);

} // namespace taquin
