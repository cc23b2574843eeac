#include <stmd/io/csv.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace stmd::io {
namespace {

[[noreturn]] void fail(const std::string& path, const std::string& why) {
    throw std::runtime_error("csv: " + path + ": " + why);
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) fail(path, "cannot open for writing");
    return out;
}

std::ifstream open_in(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(path, "cannot open");
    return in;
}

// %.17g keeps doubles round-trippable and the files byte-deterministic.
std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur.push_back(c);
        }
    }
    fields.push_back(cur);
    return fields;
}

}  // namespace

void write_ground_truth(const std::string& path, const scene::GroundTruthTrack& track) {
    auto out = open_out(path);
    out << "frame_index,t_ms,x,y,present\n";
    for (const auto& e : track) {
        out << e.frame_index << ',' << fmt(e.t_ms) << ',' << fmt(e.x) << ',' << fmt(e.y) << ','
            << (e.present ? 1 : 0) << '\n';
    }
    if (!out) fail(path, "write failed");
}

scene::GroundTruthTrack read_ground_truth(const std::string& path) {
    auto in = open_in(path);
    scene::GroundTruthTrack track;
    std::string line;
    if (!std::getline(in, line)) fail(path, "missing header");
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto f = split_fields(line);
        if (f.size() != 5) fail(path, "expected 5 fields: " + line);
        scene::GroundTruthEntry e;
        e.frame_index = std::stol(f[0]);
        e.t_ms = std::stod(f[1]);
        e.x = std::stod(f[2]);
        e.y = std::stod(f[3]);
        e.present = std::stoi(f[4]) != 0;
        track.push_back(e);
    }
    return track;
}

void write_detections(const std::string& path, const std::vector<eval::Detection>& detections) {
    auto out = open_out(path);
    out << "frame,x,y,score\n";
    for (const auto& d : detections) {
        out << d.frame_index << ',' << d.x << ',' << d.y << ',' << fmt(d.score) << '\n';
    }
    if (!out) fail(path, "write failed");
}

std::vector<eval::Detection> read_detections(const std::string& path) {
    auto in = open_in(path);
    std::vector<eval::Detection> dets;
    std::string line;
    if (!std::getline(in, line)) fail(path, "missing header");
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto f = split_fields(line);
        if (f.size() != 4) fail(path, "expected 4 fields: " + line);
        eval::Detection d;
        d.frame_index = std::stol(f[0]);
        d.x = std::stoi(f[1]);
        d.y = std::stoi(f[2]);
        d.score = std::stod(f[3]);
        dets.push_back(d);
    }
    return dets;
}

void write_roc(const std::string& path, const std::vector<eval::RocPoint>& roc) {
    auto out = open_out(path);
    out << "gamma,dr,fa\n";
    for (const auto& p : roc) {
        out << fmt(p.gamma) << ',' << fmt(p.detection_rate) << ',' << fmt(p.false_alarms) << '\n';
    }
    if (!out) fail(path, "write failed");
}

std::vector<eval::RocPoint> read_roc(const std::string& path) {
    auto in = open_in(path);
    std::vector<eval::RocPoint> roc;
    std::string line;
    if (!std::getline(in, line)) fail(path, "missing header");
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto f = split_fields(line);
        if (f.size() != 3) fail(path, "expected 3 fields: " + line);
        roc.push_back({std::stod(f[0]), std::stod(f[1]), std::stod(f[2])});
    }
    return roc;
}

}  // namespace stmd::io
