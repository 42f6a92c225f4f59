#pragma once

namespace klr {

/// Sign and orientation choices the defining relations do not pin down.
/// The identity suite fixes them; the verifier records the active values.
struct EngineConfig {
    // Polynomial representation: the (x_k + x_{k+1}) factor of an adjacent-color
    // crossing attaches to the order whose bottom colors ascend (i < j).
    bool factorOnAscending = true;
    int mergeSign = +1;
    int splitSign = +1;
    // Use the reversed dot staircase (0,1,...,a-1) in the idempotent.
    bool deltaReversed = false;
};

EngineConfig& engineConfig();

}  // namespace klr
