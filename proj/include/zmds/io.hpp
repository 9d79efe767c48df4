#pragma once

#include "zmds/mds.hpp"
#include "zmds/pattern.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace zmds::io {

/// Shortest decimal that round-trips to the same double.
std::string format_double(double v);

/// `i,c1,...,cn`, 1-based i.
void write_embedding_csv(const Embedding& e, std::ostream& out);
/// Reads the format written by write_embedding_csv. Eigenvalues are left
/// empty and the metric is unknown (Euclidean placeholder).
Embedding read_embedding_csv(std::istream& in);

/// `p,lambda` for the full spectrum.
void write_eigenvalues_csv(const Eigen::VectorXd& eigenvalues, std::ostream& out);
/// `n,stress`.
void write_stress_csv(const std::vector<std::pair<std::size_t, double>>& curve, std::ostream& out);
/// `d,d_embedded`.
void write_shepard_csv(const std::vector<std::pair<double, double>>& pairs, std::ostream& out);
/// `p,A,omega,phi,r2`.
void write_fits_csv(const std::vector<SinusoidFit>& fits, std::ostream& out);
/// `law,param1,param2,r2` with one row for the power law (exponent,
/// prefactor) and one for the linear law (slope, intercept). A law that
/// could not be fitted is written with NA fields.
void write_laws_csv(const std::optional<PowerLawFit>& power, const std::optional<LinearFit>& linear,
                    std::ostream& out);

/// Hex SHA-256 of a file's bytes.
std::string sha256_file(const std::string& path);

}  // namespace zmds::io
