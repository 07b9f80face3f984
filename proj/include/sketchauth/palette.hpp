// Copyright 2026 The Sketchauth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SKETCHAUTH_PALETTE_HPP
#define SKETCHAUTH_PALETTE_HPP

#include <string>
#include <string_view>
#include <vector>

#include "sketchauth/geometry.hpp"

namespace sketchauth {

struct PaletteObject {
  std::string id;
  std::string name;
  // Reference drawing on the default 240x320 canvas, sampled like stylus
  // input (a point every few pixels).
  Sketch glyph;
};

class ObjectPalette {
 public:
  explicit ObjectPalette(std::vector<PaletteObject> objects);

  const std::vector<PaletteObject>& objects() const { return objects_; }
  size_t size() const { return objects_.size(); }

  // nullptr when the id is unknown.
  const PaletteObject* Find(std::string_view id) const;

 private:
  std::vector<PaletteObject> objects_;
};

// The shipped palette of everyday shapes and symbols.
const ObjectPalette& BuiltinPalette();

}  // namespace sketchauth

#endif  // SKETCHAUTH_PALETTE_HPP
