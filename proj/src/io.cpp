#include "zmds/io.hpp"

#include "zmds/errors.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <istream>
#include <memory>
#include <ostream>
#include <sstream>

#include <openssl/evp.h>

namespace zmds::io {

std::string format_double(double v) {
    std::array<char, 64> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), res.ptr);
}

void write_embedding_csv(const Embedding& e, std::ostream& out) {
    out << 'i';
    for (Eigen::Index c = 0; c < e.coordinates.cols(); ++c) out << ",c" << c + 1;
    out << '\n';
    for (Eigen::Index i = 0; i < e.coordinates.rows(); ++i) {
        out << i + 1;
        for (Eigen::Index c = 0; c < e.coordinates.cols(); ++c)
            out << ',' << format_double(e.coordinates(i, c));
        out << '\n';
    }
}

Embedding read_embedding_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw EmptyInputError("embedding file is empty");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t cols = 0;
    {
        std::istringstream hs(line);
        std::string cell;
        std::getline(hs, cell, ',');
        if (cell != "i") throw ParseError("embedding header must start with 'i'", 1);
        while (std::getline(hs, cell, ',')) ++cols;
    }
    if (cols == 0) throw ParseError("embedding header has no coordinate columns", 1);

    std::vector<double> values;
    std::size_t rows = 0;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string cell;
        std::getline(ls, cell, ',');
        std::size_t got = 0;
        while (std::getline(ls, cell, ',')) {
            double v = 0.0;
            const auto res = std::from_chars(cell.data(), cell.data() + cell.size(), v);
            if (res.ec != std::errc() || res.ptr != cell.data() + cell.size())
                throw ParseError("bad coordinate '" + cell + "'", lineno);
            values.push_back(v);
            ++got;
        }
        if (got != cols) throw ParseError("wrong number of coordinates", lineno);
        ++rows;
    }
    if (rows == 0) throw EmptyInputError("embedding file has no rows");

    Embedding e;
    e.coordinates.resize(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            e.coordinates(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
                values[r * cols + c];
    e.n = cols;
    return e;
}

void write_eigenvalues_csv(const Eigen::VectorXd& eigenvalues, std::ostream& out) {
    out << "p,lambda\n";
    for (Eigen::Index p = 0; p < eigenvalues.size(); ++p)
        out << p + 1 << ',' << format_double(eigenvalues(p)) << '\n';
}

void write_stress_csv(const std::vector<std::pair<std::size_t, double>>& curve, std::ostream& out) {
    out << "n,stress\n";
    for (const auto& [n, s] : curve) out << n << ',' << format_double(s) << '\n';
}

void write_shepard_csv(const std::vector<std::pair<double, double>>& pairs, std::ostream& out) {
    out << "d,d_embedded\n";
    for (const auto& [d, de] : pairs) out << format_double(d) << ',' << format_double(de) << '\n';
}

void write_fits_csv(const std::vector<SinusoidFit>& fits, std::ostream& out) {
    out << "p,A,omega,phi,r2\n";
    for (const auto& f : fits)
        out << f.p << ',' << format_double(f.A) << ',' << format_double(f.omega) << ','
            << format_double(f.phi) << ',' << format_double(f.r2) << '\n';
}

void write_laws_csv(const std::optional<PowerLawFit>& power, const std::optional<LinearFit>& linear,
                    std::ostream& out) {
    out << "law,param1,param2,r2\n";
    if (power)
        out << "power_law," << format_double(power->exponent) << ','
            << format_double(power->prefactor) << ',' << format_double(power->r2) << '\n';
    else
        out << "power_law,NA,NA,NA\n";
    if (linear)
        out << "linear," << format_double(linear->slope) << ',' << format_double(linear->intercept)
            << ',' << format_double(linear->r2) << '\n';
    else
        out << "linear,NA,NA,NA\n";
}

std::string sha256_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'", 0);
    std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
    if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1)
        throw Error("SHA-256 initialisation failed");
    std::array<char, 1 << 16> buf{};
    while (in) {
        in.read(buf.data(), buf.size());
        const auto got = in.gcount();
        if (got > 0) EVP_DigestUpdate(ctx.get(), buf.data(), static_cast<std::size_t>(got));
    }
    std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
    unsigned int len = 0;
    EVP_DigestFinal_ex(ctx.get(), md.data(), &len);
    std::ostringstream hex;
    hex << std::hex << std::setfill('0');
    for (unsigned int k = 0; k < len; ++k) hex << std::setw(2) << static_cast<int>(md[k]);
    return hex.str();
}

}  // namespace zmds::io
