#pragma once

#include "taquin/chain.hpp"

namespace taquin {

/// One square of the two-row jeu de taquin diagram: given the bottom-left,
/// top-left and top-right partitions, produce the bottom-right one.
Partition jdt_local(const Partition& mu_prev, const Partition& lam_i,
                    const Partition& lam_next, StepMode mode);

/// Inverse square completion: recover the top-left partition.
Partition jdt_local_inverse(const Partition& mu_prev, const Partition& mu_i,
                            const Partition& lam_next, StepMode mode);

/// Deletes the first step and relabels; the result is one partition shorter.
PartitionChain jdt_chain(const PartitionChain& c);

/// jdt with the final partition appended back; length preserved, invertible.
PartitionChain promotion(const PartitionChain& c);
PartitionChain promotion_inverse(const PartitionChain& c);

/// Entry n-i is the final partition after i applications of jdt.
PartitionChain evacuation(const PartitionChain& c);

} // namespace taquin
