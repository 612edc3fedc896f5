#pragma once

#include <vector>

namespace dcirc {

// Incremental PQ-tree over leaves 1..n (Booth-Lueker templates). Parent
// lookup goes through a union-find over child blocks so Q-node merges stay cheap.
class PQTree {
 public:
  explicit PQTree(int n_leaves);

  // Restrict to orders where the leaves of s are consecutive. Returns false if
  // impossible; the tree must not be used afterwards.
  bool reduce(const std::vector<int>& s);

  // Leaves in one admissible order.
  std::vector<int> frontier() const;
  int n_leaves() const { return n_; }
  bool broken() const { return broken_; }

 private:
  enum Type : unsigned char { leaf, pnode, qnode };
  enum Label : unsigned char { empty, full, partial };

  // one cache line per node
  struct Node {
    Type type = leaf;
    // per-reduction scratch (label through pert_size)
    Label label = empty;
    bool visited = false;
    unsigned char full_end = 0;  // partial Q-nodes: slot of end[] holding the full side
    int pb = -1;                 // block id of the parent (-1 at the root)
    int sib[2] = {-1, -1};
    int end[2] = {-1, -1};
    int nchildren = 0;
    int block = -1;  // block owned by this internal node
    int pending = 0;
    int count = 0;
    int up = -1;   // parent recorded while bubbling
    int rep = -1;  // node standing in for this one after a template
    // pertinent children recorded while bubbling, as a list threaded through pert_next
    int pert_head = -1, pert_tail = -1, pert_next = -1, pert_size = 0;
  };
  static_assert(sizeof(Node) == 64);

  int n_;
  int root_;
  bool broken_ = false;
  std::vector<Node> t_;
  std::vector<int> dsu_;
  std::vector<int> owner_;
  std::vector<int> dsz_;
  std::vector<int> touched_;
  std::vector<int> queue_, order_, ready_, fulls_, partials_;  // reused by reduce
  std::vector<int> side_[2], seq_;                             // reused by template_q

  int new_node(Type type);
  int find(int b);
  int parent(int x);
  void unite_into(int child_q, int parent_q);
  int next_sib(int x, int prev) const;

  void set_label(int x, Label l);
  void replace(int old_node, int new_node);
  void remove_child(int p, int c);
  void append_child(int p, int c, int side);
  int group(const std::vector<int>& kids);
  void splice_partial(int x, int y, int empty_nb);
  void set_ptr(int node, int from, int to);
  int rep(int x) const;

  bool template_p(int x, bool is_root, std::vector<int>& fulls, std::vector<int>& partials);
  bool template_q(int x, bool is_root, std::vector<int>& fulls, std::vector<int>& partials);
  void reset();
};

}  // namespace dcirc
