#include "arithseq/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace arithseq {

namespace {

constexpr double kWidth = 880, kHeight = 560;
constexpr double kLeft = 70, kRight = 20, kTop = 36, kBottom = 52;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string fmt_tick(double v) {
    char buf[40];
    if (v == 0.0) return "0";
    if (std::abs(v) >= 10000 || std::abs(v) < 0.01)
        std::snprintf(buf, sizeof buf, "%.2g", v);
    else if (v == std::floor(v))
        std::snprintf(buf, sizeof buf, "%.0f", v);
    else
        std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

std::vector<double> nice_ticks(double lo, double hi, int target = 6) {
    const double span = hi - lo;
    double step = std::pow(10.0, std::floor(std::log10(span / target)));
    for (double mult : {1.0, 2.0, 5.0, 10.0}) {
        if (span / (step * mult) <= target) {
            step *= mult;
            break;
        }
    }
    std::vector<double> ticks;
    for (double v = std::ceil(lo / step) * step; v <= hi + step * 1e-9; v += step)
        ticks.push_back(std::abs(v) < step * 1e-9 ? 0.0 : v);
    return ticks;
}

}  // namespace

void SvgPlot::add_scatter(std::vector<double> x, std::vector<double> y, std::string color) {
    series_.push_back({std::move(x), std::move(y), std::move(color), false});
}

void SvgPlot::add_line(std::vector<double> x, std::vector<double> y, std::string color) {
    series_.push_back({std::move(x), std::move(y), std::move(color), true});
}

void SvgPlot::write(const std::filesystem::path& path) const {
    double xmin = 0, xmax = 1, ymin = 0, ymax = 1;
    bool first = true;
    for (const auto& s : series_) {
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            if (first) {
                xmin = xmax = s.x[i];
                ymin = ymax = s.y[i];
                first = false;
            }
            xmin = std::min(xmin, s.x[i]);
            xmax = std::max(xmax, s.x[i]);
            ymin = std::min(ymin, s.y[i]);
            ymax = std::max(ymax, s.y[i]);
        }
    }
    if (xmax == xmin) xmax = xmin + 1;
    if (ymax == ymin) ymax = ymin + 1;
    const double xpad = (xmax - xmin) * 0.03, ypad = (ymax - ymin) * 0.05;
    xmin -= xpad;
    xmax += xpad;
    ymin -= ypad;
    ymax += ypad;

    const auto px = [&](double v) {
        return kLeft + (v - xmin) / (xmax - xmin) * (kWidth - kLeft - kRight);
    };
    const auto py = [&](double v) {
        return kHeight - kBottom - (v - ymin) / (ymax - ymin) * (kHeight - kTop - kBottom);
    };

    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open for writing: " + path.string());
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << kWidth << " " << kHeight
       << "\" font-family=\"sans-serif\" font-size=\"13\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "<text x=\"" << kWidth / 2 << "\" y=\"20\" text-anchor=\"middle\" font-size=\"15\">"
       << title_ << "</text>\n";

    for (double t : nice_ticks(xmin, xmax)) {
        const double x = px(t);
        os << "<line x1=\"" << fmt(x) << "\" y1=\"" << fmt(kHeight - kBottom) << "\" x2=\""
           << fmt(x) << "\" y2=\"" << fmt(kTop) << "\" stroke=\"#ddd\"/>\n";
        os << "<text x=\"" << fmt(x) << "\" y=\"" << fmt(kHeight - kBottom + 18)
           << "\" text-anchor=\"middle\">" << fmt_tick(t) << "</text>\n";
    }
    for (double t : nice_ticks(ymin, ymax)) {
        const double y = py(t);
        os << "<line x1=\"" << fmt(kLeft) << "\" y1=\"" << fmt(y) << "\" x2=\""
           << fmt(kWidth - kRight) << "\" y2=\"" << fmt(y) << "\" stroke=\"#ddd\"/>\n";
        os << "<text x=\"" << fmt(kLeft - 6) << "\" y=\"" << fmt(y + 4)
           << "\" text-anchor=\"end\">" << fmt_tick(t) << "</text>\n";
    }
    os << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << kWidth - kLeft - kRight
       << "\" height=\"" << kHeight - kTop - kBottom
       << "\" fill=\"none\" stroke=\"black\"/>\n";
    os << "<text x=\"" << kWidth / 2 << "\" y=\"" << kHeight - 10 << "\" text-anchor=\"middle\">"
       << xlabel_ << "</text>\n";
    os << "<text x=\"16\" y=\"" << kHeight / 2
       << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 " << kHeight / 2 << ")\">"
       << ylabel_ << "</text>\n";

    for (const auto& s : series_) {
        if (s.line) {
            os << "<path fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"1\" d=\"";
            for (std::size_t i = 0; i < s.x.size(); ++i)
                os << (i == 0 ? 'M' : 'L') << fmt(px(s.x[i])) << ' ' << fmt(py(s.y[i]));
            os << "\"/>\n";
        } else {
            for (std::size_t i = 0; i < s.x.size(); ++i)
                os << "<circle cx=\"" << fmt(px(s.x[i])) << "\" cy=\"" << fmt(py(s.y[i]))
                   << "\" r=\"1.8\" fill=\"" << s.color << "\"/>\n";
        }
    }
    os << "</svg>\n";
    if (!os) throw std::runtime_error("write failed: " + path.string());
}

}  // namespace arithseq
