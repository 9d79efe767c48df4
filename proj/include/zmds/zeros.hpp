#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace zmds {

/// Imaginary parts t_k of consecutive nontrivial zeros 1/2 + i t_k,
/// strictly increasing and positive.
class ZeroList {
public:
    ZeroList() = default;
    /// Throws MonotonicityError / DomainError if the invariants do not hold.
    explicit ZeroList(std::vector<double> values, std::string source_path = {});

    std::span<const double> values() const noexcept { return values_; }
    std::size_t size() const noexcept { return values_.size(); }
    bool empty() const noexcept { return values_.empty(); }
    double operator[](std::size_t k) const { return values_[k]; }
    const std::string& source_path() const noexcept { return source_path_; }

    /// The first `count` ordinates (or all, if fewer).
    ZeroList prefix(std::size_t count) const;

    /// 1-based source line of ordinate k (k + 1 when not parsed from text).
    std::size_t line_of(std::size_t k) const { return k < lines_.size() ? lines_[k] : k + 1; }

private:
    friend ZeroList parse_zeros(std::istream& in, std::string source_path);

    std::vector<double> values_;
    std::string source_path_;
    std::vector<std::size_t> lines_;
};

enum class Approach { A1, A2 };

std::string_view to_string(Approach a);
/// Accepts "a1" / "a2" (any case).
Approach parse_approach(std::string_view s);

/// N x m row-major matrix of windowed zero vectors.
class ObjectSet {
public:
    ObjectSet(std::vector<double> data, std::size_t rows, std::size_t m, Approach approach);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t m() const noexcept { return m_; }
    Approach approach() const noexcept { return approach_; }
    std::span<const double> row(std::size_t i) const { return {data_.data() + i * m_, m_}; }
    std::span<const double> data() const noexcept { return data_; }

    /// Build an arbitrary object set (no windowing invariants), e.g. for
    /// synthetic point clouds.
    static ObjectSet from_rows(const std::vector<std::vector<double>>& rows);

private:
    std::vector<double> data_;
    std::size_t rows_;
    std::size_t m_;
    Approach approach_;
};

/// One decimal literal per non-empty line, '#' comments, LF or CRLF.
ZeroList parse_zeros(std::istream& in, std::string source_path = {});
ZeroList parse_zeros(std::string_view text);
/// Reads a zero list from disk; a missing file raises ParseError at line 0.
ZeroList load_zeros(const std::string& path);

/// Writes one ordinate per line with `digits` significant digits.
void serialize_zeros(const ZeroList& zeros, std::ostream& out, int digits = 17);

/// Approach A1: disjoint windows of length m, trailing partial window dropped.
ObjectSet window_disjoint(const ZeroList& zeros, std::size_t m,
                          std::optional<std::size_t> limit = std::nullopt);
/// Approach A2: sliding windows of length m, stride 1.
ObjectSet window_sliding(const ZeroList& zeros, std::size_t m,
                         std::optional<std::size_t> limit = std::nullopt);
ObjectSet make_windows(const ZeroList& zeros, std::size_t m, Approach approach,
                       std::optional<std::size_t> limit = std::nullopt);

}  // namespace zmds
