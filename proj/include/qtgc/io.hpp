#pragma once

#include <map>
#include <string>

#include "qtgc/center.hpp"
#include "qtgc/gqc.hpp"
#include "qtgc/ydmod.hpp"

namespace qtgc {

// A complete textual instance: the structure tuple plus optional named
// modules and center objects. The concrete syntax is a JSON document; every
// matrix block is a flat array of scalar grammar strings in input-major
// order (entry index = input * output_dim + output). See
// docs/instance-format.md for the schema.
struct InstanceDocument {
    QuasiTuraevCoalgebra coalgebra;
    std::map<std::string, YDModule> yd_modules;
    std::map<std::string, CenterObject> center_objects;
};

// Parses and shape-checks a document. Scalars go through the scalar grammar;
// missing associator/antipode inverses are computed and verified. Throws
// ParseError (with location), ShapeError (with block and index) or
// FieldMismatch.
InstanceDocument load_instance(const std::string& text);
InstanceDocument load_instance_file(const std::string& path);

// Canonical serialization: sorted keys, canonical scalar spelling. Feeding
// the output back through load_instance reproduces the document byte for
// byte.
std::string save_instance(const InstanceDocument& doc);
void save_instance_file(const InstanceDocument& doc, const std::string& path);

// Stable content digest of the canonical serialization.
std::string instance_digest(const InstanceDocument& doc);

} // namespace qtgc
