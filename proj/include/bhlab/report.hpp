#pragma once

// Constants tables with CSV / JSON serialization. Floating point is printed
// with 17 significant digits so files round-trip.

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "bhlab/constants.hpp"
#include "bhlab/core.hpp"

namespace bhlab {

struct ConstantsRow {
    int m = 1;
    double t = 1.0;
    Field field = Field::Complex;
    double exponent = 0.0;
    double c_recursive = 1.0;
    double c_closed = 1.0;
};

struct ConstantsReport {
    std::vector<ConstantsRow> rows;
    double tolerance = 1e-10;
    std::string build{kVersion};

    std::string to_csv() const {
        std::ostringstream out;
        out << "m,t,field,exponent,C_recursive,C_closed\n";
        for (const auto& r : rows)
            out << r.m << ',' << format17(r.t) << ',' << to_string(r.field) << ','
                << format17(r.exponent) << ',' << format17(r.c_recursive) << ','
                << format17(r.c_closed) << '\n';
        return out.str();
    }

    nlohmann::json to_json() const {
        nlohmann::json rows_json = nlohmann::json::array();
        for (const auto& r : rows)
            rows_json.push_back({{"m", r.m},
                                 {"t", r.t},
                                 {"field", std::string(to_string(r.field))},
                                 {"exponent", r.exponent},
                                 {"C_recursive", r.c_recursive},
                                 {"C_closed", r.c_closed}});
        return {{"metadata", {{"tolerance", tolerance}, {"build", build}}},
                {"rows", std::move(rows_json)}};
    }
};

inline ConstantsReport make_constants_report(const std::vector<int>& ms,
                                             const std::vector<double>& ts, Field field) {
    ConstantsReport rep;
    for (int m : ms)
        for (double t : ts)
            rep.rows.push_back({m, t, field, bh_exponent(m, t), c_constant_recursive(m, t, field),
                                c_constant_closed(m, t, field)});
    return rep;
}

} // namespace bhlab
