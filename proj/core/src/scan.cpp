#include "veronese/scan.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdio>
#include <sstream>

#include "parallel.hpp"

namespace veronese {

ScanResult scan_slice(const Lattice& lat, Int j, Int p, const CellOptions& options) {
    if (j < 1) throw std::invalid_argument("scan: slice index must be >= 1");
    if (p < 0) throw std::invalid_argument("scan: homological index must be >= 0");

    const std::vector<MultiDegree> degrees = degrees_of_total(lat.m() + 1, lat.d() * j);
    const std::vector<Int> p_list{p};

    ScanResult result;
    result.j = j;
    result.p = p;
    result.rows.resize(degrees.size());
    std::vector<CellEval> evals(degrees.size());
    detail::parallel_for_index(degrees.size(), options.threads, [&](std::size_t i) {
        evals[i] = evaluate_degree(lat, degrees[i], p_list, options)[0];
    });

    for (std::size_t i = 0; i < degrees.size(); ++i) {
        ScanRow& row = result.rows[i];
        row.b = degrees[i];
        row.j = j;
        row.p = p;
        row.value = evals[i].value;
        row.classification = evals[i].classification;
        row.provenance = evals[i].provenance;
        if (evals[i].mismatch) ++result.mismatches;
        if (evals[i].infeasible) ++result.infeasible;
    }
    return result;
}

namespace {

std::string csv_header(Int m) {
    std::ostringstream os;
    for (Int t = 0; t <= m; ++t) os << 'b' << t << ',';
    os << "j,p,value,classification,provenance";
    return os.str();
}

std::string fixed2(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

}  // namespace

std::string scan_to_csv(const Lattice& lat, const ScanResult& scan) {
    std::ostringstream os;
    os << csv_header(lat.m()) << '\n';
    for (const ScanRow& row : scan.rows) {
        for (Int c : row.b.coords) os << c << ',';
        os << row.j << ',' << row.p << ',';
        if (row.value) os << *row.value;
        os << ',' << to_string(row.classification) << ',' << row.provenance << '\n';
    }
    return os.str();
}

std::string scan_to_json(const Lattice& lat, const ScanResult& scan) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const ScanRow& row : scan.rows) {
        nlohmann::ordered_json obj;
        for (Int t = 0; t <= lat.m(); ++t)
            obj["b" + std::to_string(t)] = row.b.coords[static_cast<std::size_t>(t)];
        obj["j"] = row.j;
        obj["p"] = row.p;
        if (row.value)
            obj["value"] = *row.value;
        else
            obj["value"] = nullptr;
        obj["classification"] = to_string(row.classification);
        obj["provenance"] = row.provenance;
        rows.push_back(std::move(obj));
    }
    return rows.dump(2) + "\n";
}

std::string scan_to_svg(const Lattice& lat, const ScanResult& scan) {
    if (lat.m() != 2)
        throw std::invalid_argument("scan: SVG rendering is defined for m = 2 slices");

    const double unit = 36.0;
    const double margin = 48.0;
    const double sqrt3_2 = std::sqrt(3.0) / 2.0;
    const Int s = lat.d() * scan.j;
    const double width = 2 * margin + unit * static_cast<double>(s);
    const double height = 2 * margin + unit * static_cast<double>(s) * sqrt3_2;

    const auto px = [&](double b1, double b2) { return margin + unit * (b1 + 0.5 * b2); };
    const auto py = [&](double b2) { return height - margin - unit * b2 * sqrt3_2; };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fixed2(width)
       << "\" height=\"" << fixed2(height) << "\" viewBox=\"0 0 " << fixed2(width) << ' '
       << fixed2(height) << "\">\n";
    os << "  <rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";

    // slice boundary triangle: corners b = (s,0,0), (0,s,0), (0,0,s)
    os << "  <path d=\"M " << fixed2(px(0, 0)) << ' ' << fixed2(py(0)) << " L "
       << fixed2(px(static_cast<double>(s), 0)) << ' ' << fixed2(py(0)) << " L "
       << fixed2(px(0, static_cast<double>(s))) << ' '
       << fixed2(py(static_cast<double>(s)))
       << " Z\" fill=\"none\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";

    // bound lines: for coordinate t fixed at c, endpoints put the rest on one axis
    const auto emit_line = [&](Int t, Int c, const char* kind, const char* color) {
        if (c < 0 || c > s) return;
        double p1b1 = 0, p1b2 = 0, p2b1 = 0, p2b2 = 0;
        const double cd = static_cast<double>(c);
        const double rest = static_cast<double>(s - c);
        if (t == 0) {
            p1b1 = rest; p1b2 = 0;
            p2b1 = 0;    p2b2 = rest;
        } else if (t == 1) {
            p1b1 = cd; p1b2 = 0;
            p2b1 = cd; p2b2 = rest;
        } else {
            p1b1 = rest; p1b2 = cd;
            p2b1 = 0;    p2b2 = cd;
        }
        os << "  <line class=\"bound-" << kind << "\" data-bound=\"" << kind
           << "\" data-coord=\"" << t << "\" data-value=\"" << c << "\" x1=\""
           << fixed2(px(p1b1, p1b2)) << "\" y1=\"" << fixed2(py(p1b2)) << "\" x2=\""
           << fixed2(px(p2b1, p2b2)) << "\" y2=\"" << fixed2(py(p2b2)) << "\" stroke=\""
           << color << "\" stroke-width=\"2\"/>\n";
    };

    const Int a_j = compute_A(lat, scan.j);
    for (Int t = 0; t <= 2; ++t) emit_line(t, a_j, "upper", "#ff8c00");
    if (scan.j >= l_tilde_threshold(lat)) {
        const Int lt = compute_l_tilde(lat, scan.j);
        if (lt >= 0)
            for (Int t = 0; t <= 2; ++t) emit_line(t, lt, "lower", "#2e8b57");
    }

    for (const ScanRow& row : scan.rows) {
        const double b1 = static_cast<double>(row.b[1]);
        const double b2 = static_cast<double>(row.b[2]);
        const char* color = "#9467bd";  // unknown
        if (row.classification == CellClass::vanish_upper ||
            row.classification == CellClass::vanish_lower)
            color = "#000000";
        else if (row.classification == CellClass::theorem ||
                 row.classification == CellClass::oracle)
            color = "#d62728";
        os << "  <circle class=\"cell\" data-b0=\"" << row.b[0] << "\" data-b1=\"" << row.b[1]
           << "\" data-b2=\"" << row.b[2] << "\" data-status=\""
           << to_string(row.classification) << "\"";
        if (row.value) os << " data-value=\"" << *row.value << "\"";
        os << " cx=\"" << fixed2(px(b1, b2)) << "\" cy=\"" << fixed2(py(b2))
           << "\" r=\"4.00\" fill=\"" << color << "\"/>\n";
        if (row.value && *row.value > 0) {
            os << "  <text x=\"" << fixed2(px(b1, b2) + 6.0) << "\" y=\""
               << fixed2(py(b2) - 6.0) << "\" font-size=\"11\" fill=\"#d62728\">"
               << *row.value << "</text>\n";
        }
    }
    os << "</svg>\n";
    return os.str();
}

std::string bounds_to_csv(const BoundsTable& table) {
    std::ostringstream os;
    os << "j,A,l_tilde\n";
    for (const auto& row : table.rows) {
        os << row.j << ',' << row.A << ',';
        if (row.l_tilde) os << *row.l_tilde;
        os << '\n';
    }
    return os.str();
}

std::string bounds_to_text(const BoundsTable& table) {
    std::ostringstream os;
    os << "d = " << table.d << ", m = " << table.m
       << "  (lower bound defined for j >= " << table.j_threshold << ")\n";
    const auto cell = [](const std::string& s) {
        std::string out = s;
        while (out.size() < 6) out.insert(out.begin(), ' ');
        return out;
    };
    std::ostringstream js, ls, as;
    js << "j     ";
    ls << "l~_j  ";
    as << "A_j   ";
    for (const auto& row : table.rows) {
        js << cell(std::to_string(row.j));
        ls << cell(row.l_tilde ? std::to_string(*row.l_tilde) : "-");
        as << cell(std::to_string(row.A));
    }
    os << js.str() << '\n' << ls.str() << '\n' << as.str() << '\n';
    return os.str();
}

}  // namespace veronese
