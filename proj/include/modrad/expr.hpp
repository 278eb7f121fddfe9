#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "modrad/constructions.hpp"

namespace modrad {
namespace expr {

// Zn(4), prod(Zn(2),Zn(3)), idealization(Zn(4),cyc(Zn(4),[])),
// loc(Zn(12),[5]), Zmod(2,4), cyc(Zn(12),[4]), ideal(Zn(12),[4]),
// sub(Zmod(6),[2]), sub(prod(Zmod(2),Zmod(3)),[(1,0)])
struct Node;
using NodePtr = std::shared_ptr<Node>;

struct Node {
  std::string head;
  std::vector<NodePtr> kids;
  std::vector<long> nums;                 // flat integer arguments
  std::vector<std::vector<long>> elems;   // bracketed list; tuples keep arity > 1
  size_t pos = 0;                         // source offset, for error reporting
};

NodePtr parse_object(const std::string& text);
std::string print_node(const Node& node);

enum class ValueKind { Ring, Module, Ideal, Submodule };

struct Value {
  ValueKind kind;
  RingPtr ring;                        // rings, and the scalar ring elsewhere
  ModulePtr module;
  std::optional<Ideal> ideal;
  std::optional<Submodule> sub;
  std::optional<Idealization> ext;     // set when the ring came from idealization
  std::optional<Localization> loc;     // set when the ring came from loc
  std::vector<int> part_sizes;         // component carriers of a product module
  std::string text;                    // canonical printed form
};

Value eval_object(const Node& node);
Value eval_object(const std::string& text);

}  // namespace expr
}  // namespace modrad
