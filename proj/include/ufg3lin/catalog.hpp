// Built-in groups with their irreducible representation tables, plus the
// group file format (JSON document with name, order, mult and an optional
// irreps block).
//
// Canonical element orders are fixed so test vectors stay stable:
//   Zn : 0, 1, ..., n-1
//   S3 : e, (12), (13), (23), (123), (132)
//   D4 : e, r, r^2, r^3, s, sr, sr^2, sr^3      (s r s = r^-1)
//   Q8 : 1, -1, i, -i, j, -j, k, -k

#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ufg3lin/group.hpp"
#include "ufg3lin/rep.hpp"

namespace ufg3lin {

struct GroupBundle {
  std::unique_ptr<Group> group;
  std::unique_ptr<IrrepCatalog> catalog;  // null when no irreps are known
};

std::vector<std::string> builtin_names();
GroupBundle builtin_group(const std::string& name);

// Group file I/O. load_group validates the table and any irreps block.
GroupBundle load_group(const std::string& json_text);
GroupBundle load_group_file(const std::string& path);
std::string group_to_json(const Group& g, const IrrepCatalog* cat);

// Resolves a --group argument: builtin name first, then a file path.
GroupBundle resolve_group(const std::string& name_or_path);

}  // namespace ufg3lin
