#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vkc/cochain.hpp"
#include "vkc/complex.hpp"
#include "vkc/group.hpp"

namespace vkc {

/// A parsed complex file: the complex, its named subcomplexes in file
/// order, and the optional `base` vertex.
struct ComplexFile {
  TwoComplex complex;
  std::vector<std::pair<std::string, Subcomplex>> subcomplexes;
  std::optional<VertexId> base;

  /// Throws InvalidArgument for unknown names.
  const Subcomplex& sub(std::string_view name) const;
};

/// Line-oriented format:
///
///     # comment
///     vertex a b
///     edge e a b          (reverse is e')
///     cell D e ~f         (~f or f' for the reverse)
///     sub U e / a / D     (edges / vertices / cells; closure is taken)
///     base a
///
/// Errors are ParseError with "line L, column C"; a structurally invalid
/// result (e.g. an open cell boundary) is ValidationError.
ComplexFile parse_complex(std::string_view text);
ComplexFile load_complex(const std::filesystem::path& path);
std::string emit_complex(const ComplexFile& file);

/// `cyclic N`, `symmetric N`, or `table` followed by the element names and
/// one row per element. The identity is the element whose row is the header.
FiniteGroup parse_group(std::string_view text);
/// Zn, Sn, an inline group text ("symmetric 3"), or a path to a group file.
FiniteGroup resolve_group(std::string_view ref);
/// "default" or a comma-separated list of group references.
std::vector<FiniteGroup> parse_battery(std::string_view list);

/// `cocycle GROUPREF` then `E VALUE` per edge pair. A reversed edge name
/// (e' or ~e) stores the inverse on the declared orientation.
Cocycle parse_cocycle(const TwoComplex& x, std::string_view text, BaseSet base);
std::string emit_cocycle(const TwoComplex& x, const Cocycle& u, std::string_view group_ref);

}  // namespace vkc
