/// CSV writers/readers for ground truth, detections and ROC tables.
#pragma once

#include <stmd/detect.hpp>
#include <stmd/roc.hpp>
#include <stmd/scene.hpp>

#include <string>
#include <vector>

namespace stmd::io {

// gt.csv: frame_index,t_ms,x,y,present
void write_ground_truth(const std::string& path, const scene::GroundTruthTrack& track);
scene::GroundTruthTrack read_ground_truth(const std::string& path);

// detections.csv: frame,x,y,score
void write_detections(const std::string& path, const std::vector<eval::Detection>& detections);
std::vector<eval::Detection> read_detections(const std::string& path);

// roc.csv: gamma,dr,fa
void write_roc(const std::string& path, const std::vector<eval::RocPoint>& roc);
std::vector<eval::RocPoint> read_roc(const std::string& path);

}  // namespace stmd::io
