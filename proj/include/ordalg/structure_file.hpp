#ifndef ORDALG_STRUCTURE_FILE_HPP_
#define ORDALG_STRUCTURE_FILE_HPP_

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ordalg/congruence.hpp"
#include "ordalg/poset.hpp"

namespace ordalg {

  // Line-oriented text form of a structure; '#' starts a comment.
  //
  //   elements: 0 a b c 1
  //   covers: 0<a a<c c<1 0<b b<1
  //   op *:
  //   . 0 a b c 1
  //   0 1 1 1 1 1
  //   ...
  //   constants: one=1 zero=0
  //
  // "elements" comes first; the other sections are optional. Table headers
  // may list the elements in any order, and "?" marks an undefined cell.
  struct StructureFile {
    std::vector<std::string>                         elements;
    std::vector<std::pair<std::string, std::string>> covers;
    // Tables are indexed by position in elements.
    std::vector<NamedOp>                             ops;
    std::vector<std::pair<std::string, std::string>> constants;

    friend bool operator==(StructureFile const&, StructureFile const&) = default;

    NamedOp const* op(std::string_view name) const;
  };

  // Throws ParseError (kinds Parse, UnknownElement, RaggedTable,
  // DuplicateName).
  StructureFile parse_structure(std::string_view text);

  // Canonical text: tables in element order, single spaces, sections in the
  // order shown above. parse_structure(render_structure(s)) == s.
  std::string render_structure(StructureFile const& s);

  // Throws as make_poset.
  Poset to_poset(StructureFile const& s);

  // Covers are the transitive reduction of p.
  StructureFile from_poset(Poset const&                                     p,
                           std::vector<NamedOp>                             ops       = {},
                           std::vector<std::pair<std::string, std::string>> constants = {});

}  // namespace ordalg

#endif  // ORDALG_STRUCTURE_FILE_HPP_
