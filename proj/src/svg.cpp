#include "zmds/svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

namespace zmds::svg {

namespace {

std::string num(double v) {
    std::array<char, 32> buf{};
    std::snprintf(buf.data(), buf.size(), "%.2f", v);
    return buf.data();
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '&': out += "&amp;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

// Viridis-like ramp sampled at five anchors.
std::string color_at(double t) {
    static constexpr std::array<std::array<double, 3>, 5> anchors{{{68, 1, 84},
                                                                  {59, 82, 139},
                                                                  {33, 145, 140},
                                                                  {94, 201, 98},
                                                                  {253, 231, 37}}};
    t = std::clamp(t, 0.0, 1.0) * (anchors.size() - 1);
    const auto k = std::min<std::size_t>(static_cast<std::size_t>(t), anchors.size() - 2);
    const double f = t - static_cast<double>(k);
    std::array<char, 8> buf{};
    const auto c = [&](int ch) {
        return static_cast<int>(std::lround(anchors[k][ch] + f * (anchors[k + 1][ch] - anchors[k][ch])));
    };
    std::snprintf(buf.data(), buf.size(), "#%02x%02x%02x", c(0), c(1), c(2));
    return buf.data();
}

class Canvas {
public:
    Canvas(double width, double height) {
        out_ << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
             << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width) << "\" height=\""
             << num(height) << "\" viewBox=\"0 0 " << num(width) << ' ' << num(height) << "\">\n"
             << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    }

    void line(double x1, double y1, double x2, double y2, const std::string& stroke,
              double width = 1.0, bool dashed = false) {
        out_ << "<line x1=\"" << num(x1) << "\" y1=\"" << num(y1) << "\" x2=\"" << num(x2)
             << "\" y2=\"" << num(y2) << "\" stroke=\"" << stroke << "\" stroke-width=\""
             << num(width) << '"' << (dashed ? " stroke-dasharray=\"4 3\"" : "") << "/>\n";
    }

    void rect(double x, double y, double w, double h, const std::string& stroke,
              const std::string& fill = "none") {
        out_ << "<rect x=\"" << num(x) << "\" y=\"" << num(y) << "\" width=\"" << num(w)
             << "\" height=\"" << num(h) << "\" stroke=\"" << stroke << "\" fill=\"" << fill
             << "\"/>\n";
    }

    void circle(double x, double y, double r, const std::string& fill) {
        out_ << "<circle cx=\"" << num(x) << "\" cy=\"" << num(y) << "\" r=\"" << num(r)
             << "\" fill=\"" << fill << "\"/>\n";
    }

    void polyline(const std::vector<std::pair<double, double>>& pts, const std::string& stroke,
                  double width = 1.0, bool dashed = false) {
        out_ << "<polyline fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\"" << num(width)
             << '"' << (dashed ? " stroke-dasharray=\"4 3\"" : "") << " points=\"";
        for (const auto& [x, y] : pts) out_ << num(x) << ',' << num(y) << ' ';
        out_ << "\"/>\n";
    }

    void text(double x, double y, const std::string& s, double size = 12.0,
              const std::string& anchor = "start") {
        out_ << "<text x=\"" << num(x) << "\" y=\"" << num(y) << "\" font-family=\"sans-serif\" "
             << "font-size=\"" << num(size) << "\" text-anchor=\"" << anchor << "\">" << escape(s)
             << "</text>\n";
    }

    std::string finish() {
        out_ << "</svg>\n";
        return out_.str();
    }

private:
    std::ostringstream out_;
};

struct Box {
    double x, y, w, h;
};

// Linear map of [lo, hi] onto [a, b], tolerating a degenerate range.
double map(double v, double lo, double hi, double a, double b) {
    if (hi <= lo) return 0.5 * (a + b);
    return a + (v - lo) / (hi - lo) * (b - a);
}

std::string short_num(double v) {
    std::array<char, 32> buf{};
    if (v == std::round(v) && std::abs(v) < 1e6)
        std::snprintf(buf.data(), buf.size(), "%.0f", v);
    else
        std::snprintf(buf.data(), buf.size(), "%.3g", v);
    return buf.data();
}

void colorbar(Canvas& c, const Box& b, std::size_t n) {
    constexpr int kSteps = 32;
    const double step = b.h / kSteps;
    for (int s = 0; s < kSteps; ++s)
        c.rect(b.x, b.y + b.h - (s + 1) * step, b.w, step + 0.5, "none",
               color_at((s + 0.5) / kSteps));
    c.rect(b.x, b.y, b.w, b.h, "#333333");
    c.text(b.x + b.w + 4, b.y + b.h, "1", 10);
    c.text(b.x + b.w + 4, b.y + 10, std::to_string(n), 10);
}

void draw_locus(Canvas& c, const Box& b, const Embedding& e, const View& view,
                const std::string& title) {
    c.rect(b.x, b.y, b.w, b.h, "#cccccc");
    c.text(b.x + b.w / 2, b.y + 16, title, 13, "middle");
    const Eigen::Index n = e.coordinates.rows();
    const Eigen::Index dims = std::min<Eigen::Index>(e.coordinates.cols(), 3);
    if (n == 0 || dims == 0) return;

    std::vector<std::pair<double, double>> pts(static_cast<std::size_t>(n));
    const double az = view.azimuth * std::numbers::pi / 180.0;
    const double el = view.elevation * std::numbers::pi / 180.0;
    for (Eigen::Index i = 0; i < n; ++i) {
        const double x = e.coordinates(i, 0);
        const double y = dims > 1 ? e.coordinates(i, 1) : 0.0;
        const double z = dims > 2 ? e.coordinates(i, 2) : 0.0;
        if (dims == 1) {
            pts[static_cast<std::size_t>(i)] = {static_cast<double>(i + 1), x};
        } else if (dims == 2) {
            pts[static_cast<std::size_t>(i)] = {x, y};
        } else {
            const double sx = x * std::cos(az) - y * std::sin(az);
            const double sy = (x * std::sin(az) + y * std::cos(az)) * std::sin(el) + z * std::cos(el);
            pts[static_cast<std::size_t>(i)] = {sx, sy};
        }
    }
    double xmin = pts[0].first, xmax = xmin, ymin = pts[0].second, ymax = ymin;
    for (const auto& [x, y] : pts) {
        xmin = std::min(xmin, x);
        xmax = std::max(xmax, x);
        ymin = std::min(ymin, y);
        ymax = std::max(ymax, y);
    }
    const Box plot{b.x + 20, b.y + 28, b.w - 70, b.h - 48};
    // Equal scaling on both screen axes keeps the projection undistorted.
    double span = std::max(xmax - xmin, ymax - ymin);
    if (dims == 1 || span <= 0.0) span = 1.0;
    const double scale = dims == 1 ? 1.0 : std::min(plot.w, plot.h) / span;
    const double cx = 0.5 * (xmin + xmax);
    const double cy = 0.5 * (ymin + ymax);
    const double radius = n > 2000 ? 1.0 : 1.8;
    for (Eigen::Index i = 0; i < n; ++i) {
        const auto& [x, y] = pts[static_cast<std::size_t>(i)];
        double px = 0.0;
        double py = 0.0;
        if (dims == 1) {
            px = map(x, xmin, xmax, plot.x, plot.x + plot.w);
            py = map(y, ymin, ymax, plot.y + plot.h, plot.y);
        } else {
            px = plot.x + plot.w / 2 + (x - cx) * scale;
            py = plot.y + plot.h / 2 - (y - cy) * scale;
        }
        c.circle(px, py, radius, color_at(n > 1 ? static_cast<double>(i) / (n - 1) : 0.0));
    }
    colorbar(c, {b.x + b.w - 40, b.y + 40, 10, b.h - 70}, static_cast<std::size_t>(n));
}

struct Axes {
    Box box;
    double xmin, xmax, ymin, ymax;
    bool logx = false;
    bool logy = false;

    double px(double v) const {
        return logx ? map(std::log10(v), std::log10(xmin), std::log10(xmax), box.x, box.x + box.w)
                    : map(v, xmin, xmax, box.x, box.x + box.w);
    }
    double py(double v) const {
        return logy ? map(std::log10(v), std::log10(ymin), std::log10(ymax), box.y + box.h, box.y)
                    : map(v, ymin, ymax, box.y + box.h, box.y);
    }
};

void draw_axes(Canvas& c, const Axes& a, const std::string& xlabel, const std::string& ylabel,
               bool xticks = true) {
    c.rect(a.box.x, a.box.y, a.box.w, a.box.h, "#333333");
    c.text(a.box.x + a.box.w / 2, a.box.y + a.box.h + 30, xlabel, 12, "middle");
    c.text(a.box.x - 8, a.box.y - 8, ylabel, 12, "start");
    if (xticks) {
        c.text(a.box.x, a.box.y + a.box.h + 14, short_num(a.xmin), 10, "middle");
        c.text(a.box.x + a.box.w, a.box.y + a.box.h + 14, short_num(a.xmax), 10, "middle");
    }
    c.text(a.box.x - 4, a.box.y + a.box.h, short_num(a.ymin), 10, "end");
    c.text(a.box.x - 4, a.box.y + 10, short_num(a.ymax), 10, "end");
}

std::pair<double, double> padded(double lo, double hi) {
    if (hi <= lo) return {lo - 1.0, hi + 1.0};
    const double pad = 0.05 * (hi - lo);
    return {lo - pad, hi + pad};
}

}  // namespace

std::string render_locus(const Embedding& e, const View& view, const std::string& title) {
    Canvas c(640, 560);
    draw_locus(c, {10, 10, 620, 540}, e, view, title);
    return c.finish();
}

std::string render_locus_grid(const std::vector<Panel>& panels, const View& view) {
    constexpr double kW = 420;
    constexpr double kH = 380;
    const std::size_t cols = 3;
    const std::size_t rows = std::max<std::size_t>(1, (panels.size() + cols - 1) / cols);
    Canvas c(cols * kW + 20, static_cast<double>(rows) * kH + 20);
    for (std::size_t k = 0; k < panels.size(); ++k) {
        const Box b{10 + static_cast<double>(k % cols) * kW, 10 + static_cast<double>(k / cols) * kH,
                    kW - 10, kH - 10};
        if (panels[k].embedding) {
            draw_locus(c, b, *panels[k].embedding, view, panels[k].title);
        } else {
            c.rect(b.x, b.y, b.w, b.h, "#cc0000");
            c.text(b.x + b.w / 2, b.y + 16, panels[k].title, 13, "middle");
            c.text(b.x + 10, b.y + b.h / 2, panels[k].failure, 10);
        }
    }
    return c.finish();
}

std::string render_traces(const Embedding& e, std::size_t p_max,
                          const std::vector<SinusoidFit>& fits) {
    const std::size_t count = std::min<std::size_t>(p_max, static_cast<std::size_t>(e.coordinates.cols()));
    constexpr double kRowH = 90;
    Canvas c(980, 40 + kRowH * static_cast<double>(std::max<std::size_t>(count, 1)) + 30);
    c.text(490, 22, "MDS components versus object index i", 14, "middle");
    const Eigen::Index n = e.coordinates.rows();
    for (std::size_t p = 0; p < count; ++p) {
        const auto col = e.coordinates.col(static_cast<Eigen::Index>(p));
        const auto [ymin, ymax] = padded(col.minCoeff(), col.maxCoeff());
        const Axes a{{80, 40 + kRowH * static_cast<double>(p), 860, kRowH - 28},
                     1.0, static_cast<double>(std::max<Eigen::Index>(n, 2)), ymin, ymax};
        const bool last = p + 1 == count;
        draw_axes(c, a, last ? "i" : "", "p = " + std::to_string(p + 1), last);
        std::vector<std::pair<double, double>> pts;
        pts.reserve(static_cast<std::size_t>(n));
        for (Eigen::Index i = 0; i < n; ++i)
            pts.emplace_back(a.px(static_cast<double>(i + 1)), a.py(col(i)));
        c.polyline(pts, "#1f4e9c", 1.0);
        if (p < fits.size()) {
            const auto& f = fits[p];
            std::vector<std::pair<double, double>> model;
            model.reserve(static_cast<std::size_t>(n));
            for (Eigen::Index i = 0; i < n; ++i) {
                const double v = f.offset + f.A * std::sin(f.omega * static_cast<double>(i + 1) + f.phi);
                model.emplace_back(a.px(static_cast<double>(i + 1)), a.py(std::clamp(v, ymin, ymax)));
            }
            c.polyline(model, "#d62728", 1.0, true);
            c.text(a.box.x + a.box.w - 4, a.box.y + 12, "r2 = " + short_num(f.r2), 10, "end");
        }
    }
    return c.finish();
}

std::string render_parameters(const std::vector<SinusoidFit>& fits,
                              const std::optional<PowerLawFit>& power,
                              const std::optional<LinearFit>& linear) {
    Canvas c(1020, 360);
    c.text(510, 22, "Sinusoid parameters versus component p", 14, "middle");
    if (fits.empty()) return c.finish();

    const double pmax = static_cast<double>(fits.back().p);
    double amin = fits[0].A, amax = fits[0].A, wmin = fits[0].omega, wmax = fits[0].omega;
    for (const auto& f : fits) {
        amin = std::min(amin, f.A);
        amax = std::max(amax, f.A);
        wmin = std::min(wmin, f.omega);
        wmax = std::max(wmax, f.omega);
    }
    const bool log_ok = amin > 0.0 && fits.front().p >= 1;

    // A_p on log-log axes.
    Axes amp{{60, 60, 260, 240}, 0.9, std::max(pmax * 1.1, 1.2), amin / 1.2, amax * 1.2, log_ok, log_ok};
    if (!log_ok) amp = {{60, 60, 260, 240}, 0.0, pmax + 1.0, padded(amin, amax).first, padded(amin, amax).second};
    draw_axes(c, amp, "p", "A_p");
    for (const auto& f : fits) c.circle(amp.px(static_cast<double>(f.p)), amp.py(f.A), 3.5, "#1f4e9c");
    if (power && log_ok) {
        std::vector<std::pair<double, double>> line;
        for (double p = amp.xmin; p <= amp.xmax * 1.0001; p *= 1.05)
            line.emplace_back(amp.px(p), amp.py(std::clamp(power->prefactor * std::pow(p, power->exponent),
                                                            amp.ymin, amp.ymax)));
        c.polyline(line, "#d62728", 1.0, true);
        c.text(amp.box.x + amp.box.w - 4, amp.box.y + 14,
               "exponent " + short_num(power->exponent) + ", r2 " + short_num(power->r2), 10, "end");
    }

    const auto [wlo, whi] = padded(wmin, wmax);
    const Axes om{{400, 60, 260, 240}, 0.0, pmax + 1.0, std::min(0.0, wlo), whi};
    draw_axes(c, om, "p", "omega_p");
    for (const auto& f : fits) c.circle(om.px(static_cast<double>(f.p)), om.py(f.omega), 3.5, "#1f4e9c");
    if (linear) {
        const auto y = [&](double p) { return std::clamp(linear->intercept + linear->slope * p, om.ymin, om.ymax); };
        c.line(om.px(om.xmin), om.py(y(om.xmin)), om.px(om.xmax), om.py(y(om.xmax)), "#d62728", 1.0, true);
        c.text(om.box.x + 4, om.box.y + 14,
               "slope " + short_num(linear->slope) + ", r2 " + short_num(linear->r2), 10, "start");
    }

    const Axes ph{{740, 60, 260, 240}, 0.0, pmax + 1.0, -std::numbers::pi, std::numbers::pi};
    draw_axes(c, ph, "p", "phi_p");
    for (const auto& f : fits) c.circle(ph.px(static_cast<double>(f.p)), ph.py(f.phi), 3.5, "#1f4e9c");
    return c.finish();
}

}  // namespace zmds::svg
