// Copyright (c) 2026 fpgen contributors
// SPDX-License-Identifier: Apache-2.0

#include "fp/io.hpp"

#include <fstream>
#include <sstream>

#include "fp/error.hpp"
#include "json.hpp"

namespace fp {

namespace {

using nlohmann::ordered_json;

ordered_json vertices_to_json(const Polygon& poly) {
  ordered_json arr = ordered_json::array();
  for (const Point& p : poly.vertices) {
    arr.push_back(ordered_json::array({p.x, p.y}));
  }
  return arr;
}

int read_coord(const nlohmann::json& j, const std::string& where, int hi) {
  if (!j.is_number_integer()) {
    throw ParseError(where + ": coordinate must be an integer");
  }
  const int v = j.get<int>();
  if (v < 0 || v > hi) {
    throw ParseError(where + ": coordinate " + std::to_string(v) +
                     " outside [0," + std::to_string(hi) + "]");
  }
  return v;
}

std::vector<Point> read_vertices(const nlohmann::json& j,
                                 const std::string& where, int hi) {
  if (!j.is_array()) throw ParseError(where + ": expected an array");
  std::vector<Point> out;
  out.reserve(j.size());
  for (size_t i = 0; i < j.size(); ++i) {
    const auto& v = j[i];
    const std::string at = where + "[" + std::to_string(i) + "]";
    if (!v.is_array() || v.size() != 2) {
      throw ParseError(at + ": expected [x, y]");
    }
    out.push_back({read_coord(v[0], at, hi), read_coord(v[1], at, hi)});
  }
  return out;
}

const nlohmann::json& require(const nlohmann::json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) {
    throw ParseError(std::string("document missing \"") + key + "\" key");
  }
  return *it;
}

}  // namespace

std::string serialize(const Floorplan& fp) {
  ordered_json doc;
  doc["grid_bits"] = fp.grid_bits;
  doc["room_types"] = fp.types.labels();
  ordered_json boundary;
  boundary["vertices"] = vertices_to_json(fp.boundary);
  boundary["door"] = ordered_json::array({0, 1});
  doc["boundary"] = boundary;
  ordered_json rooms = ordered_json::array();
  for (const Room& room : fp.rooms) {
    ordered_json r;
    r["type"] = fp.types.label(room.box.type);
    r["vertices"] = vertices_to_json(room.polygon);
    rooms.push_back(r);
  }
  doc["rooms"] = rooms;
  return doc.dump(2) + "\n";
}

Floorplan deserialize(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid document: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("document root must be an object");

  Floorplan fp;
  const auto& bits = require(doc, "grid_bits");
  if (!bits.is_number_integer()) throw ParseError("grid_bits: must be an integer");
  fp.grid_bits = bits.get<int>();
  if (!valid_grid_bits(fp.grid_bits)) {
    throw ParseError("grid_bits: unsupported value " + std::to_string(fp.grid_bits));
  }
  const int hi = grid_max(fp.grid_bits);

  const auto& types = require(doc, "room_types");
  if (!types.is_array() || types.empty()) {
    throw ParseError("room_types: expected a nonempty label array");
  }
  std::vector<std::string> labels;
  for (const auto& t : types) {
    if (!t.is_string()) throw ParseError("room_types: labels must be strings");
    labels.push_back(t.get<std::string>());
  }
  try {
    fp.types = RoomTypeTable(labels);
  } catch (const DomainError& e) {
    throw ParseError(std::string("room_types: ") + e.what());
  }

  const auto& boundary = require(doc, "boundary");
  if (!boundary.is_object()) throw ParseError("boundary: expected an object");
  Polygon b;
  b.vertices = read_vertices(require(boundary, "vertices"), "boundary.vertices", hi);
  const auto& door = require(boundary, "door");
  if (!door.is_array() || door.size() != 2 || !door[0].is_number_integer() ||
      !door[1].is_number_integer()) {
    throw ParseError("boundary.door: expected [i0, i1]");
  }
  try {
    fp.boundary = encode_front_door(b, door[0].get<int>(), door[1].get<int>());
  } catch (const DomainError& e) {
    throw ParseError(std::string("boundary.door: ") + e.what());
  }

  const auto& rooms = require(doc, "rooms");
  if (!rooms.is_array()) throw ParseError("rooms: expected an array");
  for (size_t i = 0; i < rooms.size(); ++i) {
    const std::string at = "rooms[" + std::to_string(i) + "]";
    const auto& r = rooms[i];
    if (!r.is_object()) throw ParseError(at + ": expected an object");
    const auto& type = require(r, "type");
    if (!type.is_string()) throw ParseError(at + ".type: expected a label string");
    const int type_id = fp.types.find(type.get<std::string>());
    if (type_id < 0) {
      throw ParseError(at + ".type: unknown label \"" + type.get<std::string>() + "\"");
    }
    Room room;
    room.polygon.vertices = read_vertices(require(r, "vertices"), at + ".vertices", hi);
    if (room.polygon.size() < kMinPolygonVertices) {
      throw ParseError(at + ".vertices: fewer than 3 vertices");
    }
    // Boxes are derived data: recomputed here, never trusted from the file.
    room.box = box_from_polygon(room.polygon, type_id);
    fp.rooms.push_back(std::move(room));
  }

  return fp;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path());
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << text;
  if (!out) throw IoError("write failed for " + path.string());
}

Floorplan load_floorplan(const std::filesystem::path& path) {
  try {
    return deserialize(read_text_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void save_floorplan(const Floorplan& fp, const std::filesystem::path& path) {
  write_text_file(path, serialize(fp));
}

}  // namespace fp
