#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace arithseq {

/// Minimal self-contained SVG plotter: inline axes and ticks, no external
/// assets. Output is deterministic for identical inputs.
class SvgPlot {
public:
    SvgPlot(std::string title, std::string xlabel, std::string ylabel)
        : title_(std::move(title)), xlabel_(std::move(xlabel)), ylabel_(std::move(ylabel)) {}

    void add_scatter(std::vector<double> x, std::vector<double> y, std::string color);
    void add_line(std::vector<double> x, std::vector<double> y, std::string color);

    void write(const std::filesystem::path& path) const;

private:
    struct Series {
        std::vector<double> x, y;
        std::string color;
        bool line = false;
    };
    std::string title_, xlabel_, ylabel_;
    std::vector<Series> series_;
};

}  // namespace arithseq
