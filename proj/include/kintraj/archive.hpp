#pragma once

// Trajectory archive document: step count, exponent schedule, both
// matrices, the solved coefficient tables and a content hash. Re-loading
// an archive and re-verifying it must reproduce the hash byte for byte.

#include "kintraj/serialize.hpp"
#include "kintraj/trajectory.hpp"

#include <string>

namespace kintraj {

Json pair_to_archive(const TrajectoryPair& pair);

// Throws std::runtime_error when the stored content hash does not match
// the recomputed one.
TrajectoryPair pair_from_archive(const Json& doc);

std::string archive_content_hash(const TrajectoryPair& pair);

void write_archive(const TrajectoryPair& pair, const std::string& path);
TrajectoryPair read_archive(const std::string& path);

}  // namespace kintraj
