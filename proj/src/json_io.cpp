#include "kq/json_io.hpp"

#include <sstream>

namespace kq {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json to_json(const ShiftedIndec& x) {
    ordered_json j;
    switch (x.indec.fam) {
        case Fam::Preprojective:
            j["family"] = "P";
            j["t"] = x.indec.index;
            break;
        case Fam::Preinjective:
            j["family"] = "I";
            j["t"] = x.indec.index;
            break;
        case Fam::Regular:
            j["family"] = "R";
            j["t"] = 0;
            j["tube"] = x.indec.tube.str();
            j["len"] = x.indec.len;
            break;
    }
    j["shift"] = x.shift;
    return j;
}

ordered_json to_json(const DObject& x) {
    ordered_json arr = ordered_json::array();
    for (const auto& [s, mult] : x.summands())
        for (int i = 0; i < mult; ++i) arr.push_back(to_json(s));
    return arr;
}

ordered_json to_json(const Quintuple& q) {
    ordered_json j;
    j["n"] = q.n;
    j["phi1"] = q.phi1;
    j["phi0"] = q.phi0;
    j["m1"] = q.m1;
    j["m0"] = q.m0;
    return j;
}

namespace {

[[noreturn]] void bad_field(const std::string& field) {
    throw std::invalid_argument("bad or missing field: " + field);
}

template <typename T>
T require(const json& j, const std::string& field) {
    if (!j.is_object() || !j.contains(field)) bad_field(field);
    try {
        return j.at(field).get<T>();
    } catch (const json::exception&) {
        bad_field(field);
    }
}

}  // namespace

ShiftedIndec shifted_indec_from_json(const json& j) {
    auto family = require<std::string>(j, "family");
    int shift = j.contains("shift") ? require<int>(j, "shift") : 0;
    if (family == "P") return ShiftedIndec{Indec::preprojective(require<int>(j, "t")), shift};
    if (family == "I") return ShiftedIndec{Indec::preinjective(require<int>(j, "t")), shift};
    if (family == "R") {
        auto tube = require<std::string>(j, "tube");
        int len = require<int>(j, "len");
        TubeLabel label = tube == "inf" ? TubeLabel::infinity() : TubeLabel{std::stoi(tube)};
        return ShiftedIndec{Indec::regular(label, len), shift};
    }
    bad_field("family");
}

DObject dobject_from_json(const json& j) {
    DObject out;
    if (j.is_array()) {
        for (const auto& item : j) out.add(shifted_indec_from_json(item), 1);
    } else {
        out.add(shifted_indec_from_json(j), 1);
    }
    return out;
}

Quintuple quintuple_from_json(const json& j) {
    return Quintuple{require<long long>(j, "n"), require<double>(j, "phi1"),
                     require<double>(j, "phi0"), require<double>(j, "m1"),
                     require<double>(j, "m0")};
}

namespace {

std::string dot_id(const ShiftedIndec& x) {
    std::string s = x.str();
    for (char& c : s) {
        if (c == ' ' || c == '^' || c == '(' || c == ')' || c == ',' || c == '-') c = '_';
    }
    return s;
}

}  // namespace

std::string ar_quiver_dot(const WindowConfig& w) {
    std::ostringstream out;
    out << "digraph ar_quiver {\n  rankdir=LR;\n";
    for (int k = -w.max_shift; k <= w.max_shift; ++k) {
        for (int t = 0; t <= w.max_pp_index; ++t) {
            ShiftedIndec x{Indec::preprojective(t), k};
            out << "  " << dot_id(x) << " [label=\"" << x.str() << "\"];\n";
        }
        for (int s = 0; s <= w.max_pi_index; ++s) {
            ShiftedIndec x{Indec::preinjective(s), k};
            out << "  " << dot_id(x) << " [label=\"" << x.str() << "\"];\n";
        }
        // irreducible maps P_t -> P_{t+1} and I_{s+1} -> I_s (two each)
        for (int t = 0; t < w.max_pp_index; ++t) {
            ShiftedIndec a{Indec::preprojective(t), k}, b{Indec::preprojective(t + 1), k};
            out << "  " << dot_id(a) << " -> " << dot_id(b) << " [label=2];\n";
        }
        for (int s = 0; s < w.max_pi_index; ++s) {
            ShiftedIndec a{Indec::preinjective(s + 1), k}, b{Indec::preinjective(s), k};
            out << "  " << dot_id(a) << " -> " << dot_id(b) << " [label=2];\n";
        }
    }
    out << "}\n";
    return out.str();
}

}  // namespace kq
