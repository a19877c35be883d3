#pragma once

#include <complex>
#include <cstdio>
#include <string>
#include <vector>

#include <json.hpp>

#include "charid/packet.hpp"

namespace charid {

using json = nlohmann::ordered_json;

inline std::string float_str(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

/// {order N, terms: [[exponent, numerator, denominator], ...]} with terms in
/// canonical (ascending exponent) order.
inline json cyc_to_json(const Cyclotomic& value) {
    json j;
    j["order"] = value.order();
    json terms = json::array();
    for (const auto& [k, q] : value.terms())
        terms.push_back(json::array({k, numer(q).str(), denom(q).str()}));
    j["terms"] = std::move(terms);
    std::complex<double> z = value.to_complex();
    j["float"] = json::array({z.real(), z.imag()});
    return j;
}

inline json weight_to_json(const Weight& w) {
    json arr = json::array();
    for (const auto& x : w.fc) arr.push_back(rational_str(x));
    return arr;
}

inline json point_to_json(const TorusPoint& g) {
    json arr = json::array();
    for (const auto& x : g.c) arr.push_back(rational_str(x));
    return arr;
}

inline json report_to_json(const PacketReport& r) {
    json j;
    j["pair"] = r.pair_name;
    j["lambda"] = weight_to_json(r.lambda);
    j["point"] = point_to_json(r.point);
    j["packet_size"] = r.packet_size;
    j["q"] = r.q;
    j["route"] = route_name(r.route);
    if (r.error) {
        j["error"] = *r.error;
    } else {
        j["order"] = checked_lcm(r.lhs.order(), r.rhs.order(), Cyclotomic::kMaxOrder);
        j["lhs"] = cyc_to_json(r.lhs);
        j["rhs"] = cyc_to_json(r.rhs);
        j["equal"] = r.equal;
    }
    return j;
}

inline std::string csv_escape(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

inline std::string report_csv_header() {
    return "pair,lambda,point,packet_size,q,route,order,equal,lhs,rhs,lhs_re,lhs_im,rhs_re,rhs_im,error";
}

inline std::string report_to_csv_row(const PacketReport& r) {
    std::string row = csv_escape(r.pair_name) + "," + csv_escape(r.lambda.str()) + "," +
                      csv_escape(r.point.str()) + "," + std::to_string(r.packet_size) + "," +
                      std::to_string(r.q) + "," + route_name(r.route) + ",";
    if (r.error) {
        row += ",,,,,,,," + csv_escape(*r.error);
    } else {
        std::complex<double> lf = r.lhs.to_complex(), rf = r.rhs.to_complex();
        row += std::to_string(checked_lcm(r.lhs.order(), r.rhs.order(), Cyclotomic::kMaxOrder)) + ",";
        row += std::string(r.equal ? "true" : "false") + ",";
        row += csv_escape(r.lhs.str()) + "," + csv_escape(r.rhs.str()) + ",";
        row += float_str(lf.real()) + "," + float_str(lf.imag()) + ",";
        row += float_str(rf.real()) + "," + float_str(rf.imag()) + ",";
    }
    return row;
}

inline json summary_to_json(const SweepSummary& s) {
    json j;
    j["total"] = s.total;
    j["equal"] = s.equal;
    j["unequal"] = s.unequal;
    j["errors"] = s.errors;
    return j;
}

}  // namespace charid
