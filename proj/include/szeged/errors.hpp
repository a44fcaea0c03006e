#pragma once

#include <stdexcept>
#include <string>

namespace szeged {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// graph construction and traversal
struct LoopEdge : Error { using Error::Error; };
struct DuplicateEdge : Error { using Error::Error; };
struct VertexOutOfRange : Error { using Error::Error; };
struct EdgeOutOfRange : Error { using Error::Error; };
struct Disconnected : Error { using Error::Error; };

// partitions and quotients
struct PartitionNotCovering : Error { using Error::Error; };
struct IncompleteGrouping : Error { using Error::Error; };
struct InvalidCPartition : Error { using Error::Error; };
struct NotACut : Error { using Error::Error; };
struct UnsupportedKind : Error { using Error::Error; };
struct InvalidWeights : Error { using Error::Error; };

// molecule generators
struct NotATree : Error { using Error::Error; };
struct DisconnectedCells : Error { using Error::Error; };
struct DuplicateCell : Error { using Error::Error; };
struct NotCatacondensed : Error { using Error::Error; };
struct CellsNotTree : Error { using Error::Error; };
struct NTooSmall : Error { using Error::Error; };

// text formats
struct ParseError : Error { using Error::Error; };

}  // namespace szeged
