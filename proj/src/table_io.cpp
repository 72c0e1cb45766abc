#include "ssk/table_io.hpp"

#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <system_error>

#include <json.hpp>

namespace ssk::table_io {

using kernel::cplx;

namespace {

// shortest round-trip decimal form
std::string fmt(double v) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    if (res.ec != std::errc())
        throw std::runtime_error("table_io: number formatting failed");
    return std::string(buf, res.ptr);
}

std::string header_row(int n, bool with_class) {
    std::ostringstream out;
    for (int j = 1; j <= n; ++j) out << "m_" << j << '\t';
    out << "re\tim";
    if (with_class) out << "\tclass";
    out << '\n';
    return out.str();
}

std::string class_label(const sig::UnipotentClass& c) {
    if (c.is_tail()) return "tail";
    return "Z(" + std::to_string(c.j) + ")";
}

std::string tsv_impl(const kernel::CoefficientTable& table, const int* alpha) {
    std::ostringstream out;
    out << header_row(table.params.n, alpha != nullptr);
    for (const auto& [m, c] : table.entries) {
        for (int i = 0; i < m.n(); ++i) out << m[i] << '\t';
        out << fmt(c.real()) << '\t' << fmt(c.imag());
        if (alpha) out << '\t' << class_label(sig::classify_unipotent(m, *alpha));
        out << '\n';
    }
    return out.str();
}

nlohmann::json json_impl(const kernel::CoefficientTable& table, const int* alpha) {
    nlohmann::json root;
    root["schema"] = 1;
    root["n"] = table.params.n;
    root["sigma"] = {{"re", table.params.sigma.real()}, {"im", table.params.sigma.imag()}};
    root["tau"] = {{"re", table.params.tau.real()}, {"im", table.params.tau.imag()}};
    root["cutoff"] = table.cutoff;
    if (alpha) root["alpha"] = *alpha;
    auto entries = nlohmann::json::array();
    for (const auto& [m, c] : table.entries) {
        nlohmann::json e;
        e["m"] = m.labels();
        e["re"] = c.real();
        e["im"] = c.imag();
        if (alpha) e["class"] = class_label(sig::classify_unipotent(m, *alpha));
        entries.push_back(std::move(e));
    }
    root["entries"] = std::move(entries);
    return root;
}

const char* fill_for(kernel::PositivityClass c) {
    switch (c) {
        case kernel::PositivityClass::PositiveDefinite: return "#2166ac";
        case kernel::PositivityClass::NegativeDefinite: return "#b2182b";
        case kernel::PositivityClass::Indefinite: return "#f7f7f7";
        case kernel::PositivityClass::SemiDefinite: return "#5aae61";
        case kernel::PositivityClass::OnIntegerLocus: return "#999999";
    }
    return "#000000";
}

int cell_count(double lo, double hi, double step) {
    int count = static_cast<int>(std::lround((hi - lo) / step));
    if (count < 1 || lo + count * step > hi + 1e-9)
        throw std::invalid_argument("posmap: range is not a whole number of steps");
    return count;
}

} // namespace

std::string to_tsv(const kernel::CoefficientTable& table) { return tsv_impl(table, nullptr); }

std::string to_json(const kernel::CoefficientTable& table) {
    return json_impl(table, nullptr).dump(2) + "\n";
}

std::string blowup_to_tsv(const kernel::CoefficientTable& table, int alpha) {
    return tsv_impl(table, &alpha);
}

std::string blowup_to_json(const kernel::CoefficientTable& table, int alpha) {
    return json_impl(table, &alpha).dump(2) + "\n";
}

std::string tail_report_tsv(int n, int alpha, long M) {
    std::ostringstream out;
    for (int j = 1; j <= n; ++j) out << "m_" << j << '\t';
    out << "class\n";
    for (const auto& m : sig::all_signatures(n, M)) {
        if (!sig::classify_unipotent(m, alpha).is_tail()) continue;
        for (int i = 0; i < m.n(); ++i) out << m[i] << '\t';
        out << "tail\n";
    }
    return out.str();
}

std::string posmap_tsv(const PosmapGrid& grid) {
    int ns = cell_count(grid.sigma_min, grid.sigma_max, grid.step);
    int nt = cell_count(grid.tau_min, grid.tau_max, grid.step);
    std::ostringstream out;
    out << "sigma\ttau\tclass\n";
    for (int i = 0; i < ns; ++i) {
        double s = grid.sigma_min + (i + 0.5) * grid.step;
        for (int j = 0; j < nt; ++j) {
            double t = grid.tau_min + (j + 0.5) * grid.step;
            auto c = kernel::classify_positivity({grid.n, cplx(s, 0.0), cplx(t, 0.0)});
            out << fmt(s) << '\t' << fmt(t) << '\t' << kernel::to_string(c) << '\n';
        }
    }
    return out.str();
}

std::string posmap_svg(const PosmapGrid& grid) {
    constexpr int px = 12;
    int ns = cell_count(grid.sigma_min, grid.sigma_max, grid.step);
    int nt = cell_count(grid.tau_min, grid.tau_max, grid.step);
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << ns * px
        << "\" height=\"" << nt * px << "\" viewBox=\"0 0 " << ns * px << ' ' << nt * px
        << "\">\n";
    for (int i = 0; i < ns; ++i) {
        double s = grid.sigma_min + (i + 0.5) * grid.step;
        for (int j = 0; j < nt; ++j) {
            double t = grid.tau_min + (j + 0.5) * grid.step;
            auto c = kernel::classify_positivity({grid.n, cplx(s, 0.0), cplx(t, 0.0)});
            out << "<rect x=\"" << i * px << "\" y=\"" << (nt - 1 - j) * px
                << "\" width=\"" << px << "\" height=\"" << px << "\" fill=\""
                << fill_for(c) << "\"/>\n";
        }
    }
    out << "</svg>\n";
    return out.str();
}

} // namespace ssk::table_io
