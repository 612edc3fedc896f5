#include "dcirc/pq_tree.hpp"

#include <algorithm>
#include <stdexcept>

namespace dcirc {

PQTree::PQTree(int n_leaves) : n_(n_leaves), root_(-1) {
  if (n_leaves < 0) throw std::invalid_argument("negative leaf count");
  t_.reserve(2 * static_cast<std::size_t>(n_leaves) + 1);
  for (int i = 0; i < n_leaves; ++i) new_node(leaf);
  if (n_leaves == 1) root_ = 0;
  if (n_leaves >= 2) {
    root_ = new_node(pnode);
    for (int i = 0; i < n_leaves; ++i) append_child(root_, i, 1);
  }
}

int PQTree::new_node(Type type) {
  int id = static_cast<int>(t_.size());
  t_.emplace_back();
  t_[id].type = type;
  if (type != leaf) {
    int b = static_cast<int>(dsu_.size());
    dsu_.push_back(b);
    owner_.push_back(id);
    dsz_.push_back(1);
    t_[id].block = b;
  }
  return id;
}

int PQTree::find(int b) {
  int r = b;
  while (dsu_[r] != r) r = dsu_[r];
  while (dsu_[b] != r) {
    int nx = dsu_[b];
    dsu_[b] = r;
    b = nx;
  }
  return r;
}

int PQTree::parent(int x) {
  if (t_[x].pb < 0) return -1;
  return owner_[find(t_[x].pb)];
}

void PQTree::unite_into(int child_q, int parent_q) {
  int a = find(t_[child_q].block);
  int b = find(t_[parent_q].block);
  if (a == b) return;
  if (dsz_[a] > dsz_[b]) std::swap(a, b);
  dsu_[a] = b;
  dsz_[b] += dsz_[a];
  owner_[b] = parent_q;
}

int PQTree::next_sib(int x, int prev) const {
  const Node& n = t_[x];
  return n.sib[0] == prev ? n.sib[1] : n.sib[0];
}

void PQTree::set_ptr(int node, int from, int to) {
  Node& n = t_[node];
  if (n.sib[0] == from)
    n.sib[0] = to;
  else if (n.sib[1] == from)
    n.sib[1] = to;
}

int PQTree::rep(int x) const {
  while (t_[x].rep >= 0) x = t_[x].rep;
  return x;
}

void PQTree::set_label(int x, Label l) {
  t_[x].label = l;
  touched_.push_back(x);
}

void PQTree::replace(int old_node, int nw) {
  Node& o = t_[old_node];
  int p = parent(old_node);
  for (int k = 0; k < 2; ++k)
    if (o.sib[k] >= 0) set_ptr(o.sib[k], old_node, nw);
  if (p >= 0)
    for (int k = 0; k < 2; ++k)
      if (t_[p].end[k] == old_node) t_[p].end[k] = nw;
  t_[nw].sib[0] = o.sib[0];
  t_[nw].sib[1] = o.sib[1];
  t_[nw].pb = o.pb;
  o.sib[0] = o.sib[1] = -1;
  o.pb = -1;
  if (root_ == old_node) root_ = nw;
}

void PQTree::remove_child(int p, int c) {
  Node& n = t_[c];
  int a = n.sib[0], b = n.sib[1];
  if (a >= 0) set_ptr(a, c, b);
  if (b >= 0) set_ptr(b, c, a);
  for (int k = 0; k < 2; ++k)
    if (t_[p].end[k] == c) t_[p].end[k] = a >= 0 ? a : b;
  --t_[p].nchildren;
  n.sib[0] = n.sib[1] = -1;
  n.pb = -1;
}

void PQTree::append_child(int p, int c, int side) {
  Node& pn = t_[p];
  int e = pn.end[side];
  t_[c].pb = pn.block;
  if (e < 0) {
    pn.end[0] = pn.end[1] = c;
    t_[c].sib[0] = t_[c].sib[1] = -1;
  } else {
    set_ptr(e, -1, c);
    t_[c].sib[0] = e;
    t_[c].sib[1] = -1;
    pn.end[side] = c;
  }
  ++pn.nchildren;
}

int PQTree::group(const std::vector<int>& kids) {
  if (kids.size() == 1) return kids[0];
  int g = new_node(pnode);
  for (int c : kids) append_child(g, c, 1);
  set_label(g, full);
  return g;
}

// Replace partial Q child y of Q-node x by y's children, with y's empty side
// toward empty_nb (a sibling of y, or -1 for the boundary of x).
void PQTree::splice_partial(int x, int y, int empty_nb) {
  Node& yn = t_[y];
  int full_nb = yn.sib[0] == empty_nb ? yn.sib[1] : yn.sib[0];
  int yf = yn.end[yn.full_end];
  int ye = yn.end[1 - yn.full_end];
  if (full_nb >= 0)
    set_ptr(full_nb, y, yf);
  else
    for (int k = 0; k < 2; ++k)
      if (t_[x].end[k] == y) {
        t_[x].end[k] = yf;
        break;
      }
  if (empty_nb >= 0)
    set_ptr(empty_nb, y, ye);
  else
    for (int k = 0; k < 2; ++k)
      if (t_[x].end[k] == y) {
        t_[x].end[k] = ye;
        break;
      }
  set_ptr(yf, -1, full_nb);
  set_ptr(ye, -1, empty_nb);
  t_[x].nchildren += yn.nchildren - 1;
  unite_into(y, x);
  yn.sib[0] = yn.sib[1] = -1;
  yn.pb = -1;
  yn.nchildren = 0;
  yn.end[0] = yn.end[1] = -1;
}

bool PQTree::template_p(int x, bool is_root, std::vector<int>& fulls, std::vector<int>& partials) {
  const int nf = static_cast<int>(fulls.size());
  const int np = static_cast<int>(partials.size());
  if (nf == t_[x].nchildren) {
    set_label(x, full);
    return true;
  }
  if (np > (is_root ? 2 : 1)) return false;
  for (int c : fulls) remove_child(x, c);
  if (is_root) {
    if (np == 0) {
      if (nf >= 1) append_child(x, group(fulls), 0);
      return true;
    }
    int y1 = partials[0];
    remove_child(x, y1);
    if (nf >= 1) append_child(y1, group(fulls), t_[y1].full_end);
    if (np == 2) {
      int y2 = partials[1];
      remove_child(x, y2);
      int s1 = t_[y1].full_end;
      int e1 = t_[y1].end[s1];
      int f2 = t_[y2].end[t_[y2].full_end];
      int o2 = t_[y2].end[1 - t_[y2].full_end];
      set_ptr(e1, -1, f2);
      set_ptr(f2, -1, e1);
      t_[y1].end[s1] = o2;
      t_[y1].nchildren += t_[y2].nchildren;
      unite_into(y2, y1);
      t_[y2].nchildren = 0;
    }
    if (t_[x].nchildren == 0) {
      replace(x, y1);
    } else {
      append_child(x, y1, 1);
    }
    return true;
  }
  if (np == 0) {
    int f = group(fulls);
    int z = new_node(qnode);
    int e;
    if (t_[x].nchildren >= 2) {
      replace(x, z);
      e = x;
    } else {
      e = t_[x].end[0];
      remove_child(x, e);
      replace(x, z);
    }
    append_child(z, e, 0);
    append_child(z, f, 1);
    t_[z].full_end = 1;
    set_label(z, partial);
    t_[x].rep = z;
    return true;
  }
  int y = partials[0];
  remove_child(x, y);
  if (nf >= 1) append_child(y, group(fulls), t_[y].full_end);
  replace(x, y);
  int empty_side = 1 - t_[y].full_end;
  if (t_[x].nchildren >= 2) {
    append_child(y, x, empty_side);
  } else if (t_[x].nchildren == 1) {
    int e = t_[x].end[0];
    remove_child(x, e);
    append_child(y, e, empty_side);
  }
  t_[x].rep = y;
  return true;
}

bool PQTree::template_q(int x, bool is_root, std::vector<int>& fulls, std::vector<int>& partials) {
  const int nf = static_cast<int>(fulls.size());
  const int np = static_cast<int>(partials.size());
  const int m = nf + np;
  if (nf == t_[x].nchildren) {
    set_label(x, full);
    return true;
  }
  if (np > 2) return false;
  int c0 = nf ? fulls[0] : partials[0];
  // Collect the maximal run of pertinent children through c0.
  std::vector<int>* side = side_;
  int out[2];
  for (int d = 0; d < 2; ++d) {
    side[d].clear();
    int prev = c0, cur = t_[c0].sib[d];
    while (cur >= 0 && t_[cur].label != empty) {
      side[d].push_back(cur);
      int nx = next_sib(cur, prev);
      prev = cur;
      cur = nx;
    }
    out[d] = cur;
  }
  std::vector<int>& seq = seq_;
  seq.assign(side[0].rbegin(), side[0].rend());
  seq.push_back(c0);
  seq.insert(seq.end(), side[1].begin(), side[1].end());
  if (static_cast<int>(seq.size()) != m) return false;
  auto is_full = [&](int c) { return t_[c].label == full; };
  for (int i = 1; i + 1 < m; ++i)
    if (!is_full(seq[i])) return false;
  int out_a = out[0], out_b = out[1];
  if (is_root) {
    if (m < 2) return true;
    if (!is_full(seq[0])) splice_partial(x, seq[0], out_a);
    if (!is_full(seq[m - 1])) splice_partial(x, seq[m - 1], out_b);
    return true;
  }
  bool front = out_a < 0 && (m == 1 || is_full(seq[0]));
  bool back = out_b < 0 && (m == 1 || is_full(seq[m - 1]));
  int boundary;
  if (front) {
    boundary = seq[0];
  } else if (back) {
    std::reverse(seq.begin(), seq.end());
    std::swap(out_a, out_b);
    boundary = seq[0];
  } else {
    return false;
  }
  int slot = t_[x].end[0] == boundary ? 0 : 1;
  if (!is_full(seq[m - 1])) splice_partial(x, seq[m - 1], out_b);
  t_[x].full_end = slot;
  set_label(x, partial);
  return true;
}

void PQTree::reset() {
  for (int x : touched_) {
    Node& n = t_[x];
    n.label = empty;
    n.visited = false;
    n.pending = 0;
    n.count = 0;
    n.up = -1;
    n.rep = -1;
    n.pert_head = n.pert_tail = n.pert_next = -1;
    n.pert_size = 0;
  }
  touched_.clear();
}

bool PQTree::reduce(const std::vector<int>& s) {
  if (broken_) return false;
  const int k = static_cast<int>(s.size());
  if (k <= 1 || k >= n_) return true;
  // Bubble up until every chain from s has merged into one.
  std::vector<int>& queue = queue_;
  queue.clear();
  for (int c : s) {
    int x = c - 1;
    t_[x].visited = true;
    touched_.push_back(x);
    queue.push_back(x);
  }
  int active = k;
  std::size_t head = 0;
  while (head < queue.size() && active > 1) {
    int x = queue[head++];
    int p = parent(x);
    t_[x].up = p;
    if (p < 0) continue;
    Node& pn = t_[p];
    (pn.pert_tail < 0 ? pn.pert_head : t_[pn.pert_tail].pert_next) = x;
    pn.pert_tail = x;
    ++pn.pert_size;
    if (!t_[p].visited) {
      t_[p].visited = true;
      touched_.push_back(p);
      queue.push_back(p);
    } else {
      --active;
    }
  }
  // Leaf counts bottom-up; the first node covering all of s is the pertinent root.
  std::vector<int>& order = order_;
  std::vector<int>& ready = ready_;
  order.clear();
  ready.clear();
  for (int x : queue) t_[x].pending = t_[x].pert_size;
  for (int c : s) {
    t_[c - 1].count = 1;
    ready.push_back(c - 1);
  }
  int lca = -1;
  for (std::size_t i = 0; i < ready.size(); ++i) {
    int x = ready[i];
    order.push_back(x);
    if (t_[x].count == k) {
      lca = x;
      break;
    }
    int p = t_[x].up;
    if (p < 0) break;
    t_[p].count += t_[x].count;
    if (--t_[p].pending == 0) ready.push_back(p);
  }
  if (lca < 0) {
    reset();
    broken_ = true;
    throw std::logic_error("PQ-tree: pertinent root not found");
  }
  std::vector<int>& fulls = fulls_;
  std::vector<int>& partials = partials_;
  for (int x : order) {
    if (t_[x].type == leaf) {
      set_label(x, full);
      continue;
    }
    fulls.clear();
    partials.clear();
    for (int c = t_[x].pert_head; c >= 0; c = t_[c].pert_next) {
      int r = rep(c);
      if (t_[r].label == full)
        fulls.push_back(r);
      else if (t_[r].label == partial)
        partials.push_back(r);
    }
    bool ok = t_[x].type == pnode ? template_p(x, x == lca, fulls, partials)
                                  : template_q(x, x == lca, fulls, partials);
    if (!ok) {
      reset();
      broken_ = true;
      return false;
    }
  }
  reset();
  return true;
}

std::vector<int> PQTree::frontier() const {
  std::vector<int> out;
  if (root_ < 0) return out;
  out.reserve(n_);
  std::vector<int> stack{root_};
  std::vector<int> kids;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    if (t_[x].type == leaf) {
      out.push_back(x + 1);
      continue;
    }
    kids.clear();
    int prev = -1, cur = t_[x].end[0];
    while (cur >= 0) {
      kids.push_back(cur);
      int nx = next_sib(cur, prev);
      prev = cur;
      cur = nx;
    }
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);
  }
  return out;
}

}  // namespace dcirc
