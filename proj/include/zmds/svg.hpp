#pragma once

#include "zmds/mds.hpp"
#include "zmds/pattern.hpp"

#include <optional>
#include <string>
#include <vector>

namespace zmds::svg {

/// Fixed axonometric view of a 3-d locus, angles in degrees.
struct View {
    double azimuth = -37.5;
    double elevation = 30.0;
};

/// Scatter of the first three embedding coordinates projected with `view`,
/// points colored by object order i. Embeddings with fewer than three
/// columns are drawn as a planar scatter (n = 2) or against i (n = 1).
std::string render_locus(const Embedding& e, const View& view, const std::string& title);

struct Panel {
    std::string title;
    std::optional<Embedding> embedding;  // empty: panel reports a failure
    std::string failure;
};

/// Grid of locus panels, three per row.
std::string render_locus_grid(const std::vector<Panel>& panels, const View& view);

/// One stacked trace per component p = 1..fits.size() (or p_max if no fits),
/// with the fitted sinusoid overlaid when available.
std::string render_traces(const Embedding& e, std::size_t p_max,
                          const std::vector<SinusoidFit>& fits);

/// A_p, omega_p and phi_p against p, with the fitted laws overlaid.
std::string render_parameters(const std::vector<SinusoidFit>& fits,
                              const std::optional<PowerLawFit>& power,
                              const std::optional<LinearFit>& linear);

}  // namespace zmds::svg
