#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fpdea/errors.hpp"

namespace fpdea {

// Observed data for N decision-making units, M inputs, S outputs.
// Matrices are row-major per DMU.
struct DmuPanel {
    DmuPanel(std::size_t n_dmus, std::size_t n_inputs, std::size_t n_outputs)
        : n_dmus(n_dmus),
          n_inputs(n_inputs),
          n_outputs(n_outputs),
          inputs(n_dmus * n_inputs, 0.0),
          outputs(n_dmus * n_outputs, 0.0),
          labels(n_dmus) {
        for (std::size_t n = 0; n < n_dmus; ++n)
            labels[n] = "dmu" + std::to_string(n + 1);
    }

    std::size_t n_dmus;
    std::size_t n_inputs;
    std::size_t n_outputs;
    std::vector<double> inputs;    // N x M
    std::vector<double> outputs;   // N x S
    std::vector<std::string> labels;

    double input(std::size_t n, std::size_t m) const { return inputs[n * n_inputs + m]; }
    double& input(std::size_t n, std::size_t m) { return inputs[n * n_inputs + m]; }
    double output(std::size_t n, std::size_t s) const { return outputs[n * n_outputs + s]; }
    double& output(std::size_t n, std::size_t s) { return outputs[n * n_outputs + s]; }

    // Shape, nonnegativity and finiteness. Per-DMU positivity is checked at
    // scoring time so a bad evaluated DMU reports as DegenerateDmu.
    void validate() const;
};

enum class Technology { Crs, Vrs, Fdh };
enum class Orientation { Input };

}  // namespace fpdea
