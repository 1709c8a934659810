#pragma once

#include <llg/deformation.hpp>

#include <string>

namespace llg {

// File formats (JSON with polynomials as grammar strings):
//   frame:      { "n": 3, "frame": [[poly,...],...], "inverse": [[...]] }
//               ("inverse" optional when det is a nonzero constant)
//   connection: { "n": 3, "gamma": [ {"i":1,"k":1,"j":2,"val": poly}, ... ] }
//   constants:  { "n": 3, "c": [ {"i":3,"j":1,"k":2,"val":"1"}, ... ] }  (j < k)
//   gauge jet:  { "n": 3, "order": 4, "coeffs": [ [[poly,...],...], ... ] }
//               (coeffs[m] multiplies t^(m+1); t^0 is the implied identity)

Frame parse_frame_json(const std::string& text);
std::string frame_to_json(const Frame& f);

Connection parse_connection_json(const std::string& text);
std::string connection_to_json(const Connection& c);

StructureConstants parse_constants_json(const std::string& text);
std::string constants_to_json(const StructureConstants& g);

GaugeJet parse_jet_json(const std::string& text);
std::string jet_to_json(const GaugeJet& j);

std::string read_file(const std::string& path);

}  // namespace llg
