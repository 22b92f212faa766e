// Element file format: a JSON document with `vertices` (array of [x,y,z])
// and `faces` (array of 0-based vertex-index loops, counterclockwise seen
// from outside).

#ifndef WGDR_ELEMENT_IO_HPP
#define WGDR_ELEMENT_IO_HPP

#include <string>

#include "wgdr/geometry.hpp"

namespace wgdr {

/// Parse an element from JSON text. Throws Error on malformed documents and
/// the geometry errors on invalid elements.
PolyElement parse_element_json(const std::string& text);

/// Load from a file path.
PolyElement load_element(const std::string& path);

/// Serialize vertices and face loops (frames are rebuilt on load).
std::string element_to_json(const PolyElement& el);

void save_element(const PolyElement& el, const std::string& path);

}  // namespace wgdr

#endif
