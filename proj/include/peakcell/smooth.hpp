#pragma once

#include <span>

#include "peakcell/diagram.hpp"
#include "peakcell/series.hpp"

namespace peakcell {

/// Applies one peak-smoothing step. Every interior cell strictly above
/// the average of its two neighbors is replaced by that average and
/// colored black; all other cells (ties included) are copied and
/// colored white. Endpoints are always copied. All neighbor reads come
/// from `previous`, so the update is synchronous.
///
/// The mask records which branch was taken, never a float comparison
/// made after the fact.
StepResult smooth_step(std::span<const double> previous, int step_index = 1);

/// Runs exactly `steps` smoothing steps (no early exit) and collects
/// every layer and mask row. Layers settle once a step changes
/// nothing; the remaining rows are stored as-is, all white.
Diagram iterate(const Series& source, std::size_t steps);

/// True iff one smoothing step would leave the sequence unchanged,
/// i.e. every interior value sits at or below its neighbors' average.
bool is_fixed_point(std::span<const double> values);

} // namespace peakcell
