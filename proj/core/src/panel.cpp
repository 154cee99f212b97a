#include "fpdea/panel.hpp"

#include <cmath>

namespace fpdea {

void DmuPanel::validate() const {
    if (n_dmus == 0) throw InvalidPanel("panel has no DMUs");
    if (n_inputs == 0 || n_outputs == 0)
        throw InvalidPanel("panel needs at least one input and one output");
    if (inputs.size() != n_dmus * n_inputs || outputs.size() != n_dmus * n_outputs)
        throw InvalidPanel("panel matrix sizes disagree with declared dimensions");
    if (labels.size() != n_dmus)
        throw InvalidPanel("panel label count disagrees with DMU count");
    for (double v : inputs)
        if (!std::isfinite(v) || v < 0.0)
            throw InvalidPanel("inputs must be finite and nonnegative");
    for (double v : outputs)
        if (!std::isfinite(v) || v < 0.0)
            throw InvalidPanel("outputs must be finite and nonnegative");
}

}  // namespace fpdea
