//
// Copyright 2026 moltok contributors
// SPDX-License-Identifier: Apache-2.0
//

#include "moltok/motif.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <queue>
#include <sstream>

#include "moltok/canonical.hpp"
#include "moltok/errors.hpp"
#include "moltok/rings.hpp"
#include "moltok/smiles.hpp"

namespace moltok {

int Motif::slot_count() const {
  int n = 0;
  for (const Atom& a : graph.atoms())
    if (a.is_placeholder())
      ++n;
  return n;
}

int Motif::atom_count() const {
  return graph.atom_count() - slot_count();
}

std::vector<int> Motif::slot_atoms() const {
  std::vector<std::pair<int, int>> found;  // (slot number, atom index)
  for (int i = 0; i < graph.atom_count(); ++i)
    if (graph.atom(i).is_placeholder())
      found.emplace_back(graph.atom(i).map, i);
  std::sort(found.begin(), found.end());
  std::vector<int> out;
  out.reserve(found.size());
  for (const auto& [slot, idx] : found) {
    (void)slot;
    out.push_back(idx);
  }
  return out;
}

std::vector<std::pair<int, BondOrder>> Motif::attachment_slots() const {
  std::vector<std::pair<int, BondOrder>> out;
  for (int star : slot_atoms()) {
    const auto& adj = graph.neighbors(star);
    out.emplace_back(adj.front().first, graph.bond(adj.front().second).order);
  }
  return out;
}

namespace {

// Extracts one motif: the induced fragment over `comp_atoms` plus a "*"
// placeholder per stub, re-normalizing stereo that referenced cut
// neighbors.
Motif make_motif(const MolGraph& mol, const std::vector<int>& comp_atoms,
                 const std::vector<char>& bond_internal,
                 const std::vector<std::pair<int, int>>& stubs) {
  Motif motif;
  std::vector<int> new_index(static_cast<std::size_t>(mol.atom_count()), -1);
  for (int old : comp_atoms)
    new_index[static_cast<std::size_t>(old)] =
        motif.graph.add_atom(mol.atom(old));

  std::map<int, int> star_of_bond;  // old cut-bond index -> star atom index
  std::vector<int> internal_bonds;
  for (int b = 0; b < mol.bond_count(); ++b) {
    const Bond& bond = mol.bond(b);
    if (new_index[static_cast<std::size_t>(bond.a)] == -1 ||
        new_index[static_cast<std::size_t>(bond.b)] == -1)
      continue;
    if (!bond_internal[static_cast<std::size_t>(b)])
      continue;
    motif.graph.add_bond(new_index[static_cast<std::size_t>(bond.a)],
                         new_index[static_cast<std::size_t>(bond.b)],
                         bond.order);
    internal_bonds.push_back(b);
  }
  for (std::size_t slot = 0; slot < stubs.size(); ++slot) {
    auto [anchor_old, cut_bond] = stubs[slot];
    Atom star;
    star.element = "*";
    star.map = static_cast<int>(slot);
    int star_idx = motif.graph.add_atom(star);
    motif.graph.add_bond(new_index[static_cast<std::size_t>(anchor_old)],
                         star_idx, mol.bond(cut_bond).order);
    star_of_bond[cut_bond] = star_idx;
  }

  auto map_ref = [&](int endpoint_old, int ref_old) {
    if (new_index[static_cast<std::size_t>(ref_old)] != -1)
      return new_index[static_cast<std::size_t>(ref_old)];
    int cut = mol.bond_between(endpoint_old, ref_old);
    auto it = star_of_bond.find(cut);
    return it == star_of_bond.end() ? -1 : it->second;
  };

  // copy double-bond stereo, re-aiming refs that crossed a cut
  for (std::size_t k = 0; k < internal_bonds.size(); ++k) {
    const Bond& src = mol.bond(internal_bonds[k]);
    if (src.stereo == BondStereo::None)
      continue;
    Bond& dst = motif.graph.bond(static_cast<int>(k));
    int ra = map_ref(src.a, src.stereo_ref_a);
    int rb = map_ref(src.b, src.stereo_ref_b);
    if (ra == -1 || rb == -1)
      continue;
    dst.stereo = src.stereo;
    dst.stereo_ref_a = ra;
    dst.stereo_ref_b = rb;
  }

  // re-normalize tetrahedral parity against the new atom numbering
  for (int old : comp_atoms) {
    int ni = new_index[static_cast<std::size_t>(old)];
    if (motif.graph.atom(ni).chirality == Chirality::None)
      continue;
    std::vector<int> old_refs = mol.stereo_reference_list(old);
    std::vector<int> mapped;
    mapped.reserve(old_refs.size());
    for (int r : old_refs)
      mapped.push_back(r == kImplicitNeighbor ? kImplicitNeighbor
                                              : map_ref(old, r));
    std::vector<int> new_refs = motif.graph.stereo_reference_list(ni);
    if (permutation_is_odd(mapped, new_refs))
      motif.graph.atom(ni).chirality =
          flipped(motif.graph.atom(ni).chirality);
  }
  return motif;
}

struct QuotientNode {
  std::vector<int> atoms;  // ascending original indices
};

}  // namespace

MotifTree fragment(const MolGraph& mol_input, Diagnostics* diag) {
  if (mol_input.empty())
    throw EmptyMoleculeError("cannot fragment an empty molecule");
  for (const Atom& a : mol_input.atoms())
    if (a.is_placeholder())
      throw InvalidArgumentError("cannot fragment a graph with placeholders");
  MolGraph mol = normalize_stereo(mol_input);
  if (!mol.connected())
    throw InvalidArgumentError("cannot fragment a disconnected molecule");
  mol_input.report_valence_issues(diag);

  std::vector<int> ranks = canonical_ranks(mol);
  RingPerception rings = perceive_rings(mol);

  int n = mol.atom_count();
  std::vector<char> internal(static_cast<std::size_t>(mol.bond_count()), 0);
  for (int b = 0; b < mol.bond_count(); ++b)
    internal[static_cast<std::size_t>(b)] =
        rings.bond_in_ring[static_cast<std::size_t>(b)] ||
        mol.bond(b).order != BondOrder::Single;

  // connected components over ring / non-single bonds
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  std::vector<QuotientNode> comps;
  for (int start = 0; start < n; ++start) {
    if (comp[static_cast<std::size_t>(start)] != -1)
      continue;
    int id = static_cast<int>(comps.size());
    comps.emplace_back();
    std::queue<int> todo;
    todo.push(start);
    comp[static_cast<std::size_t>(start)] = id;
    while (!todo.empty()) {
      int u = todo.front();
      todo.pop();
      comps[static_cast<std::size_t>(id)].atoms.push_back(u);
      for (const auto& [v, bond_idx] : mol.neighbors(u)) {
        if (!internal[static_cast<std::size_t>(bond_idx)])
          continue;
        if (comp[static_cast<std::size_t>(v)] == -1) {
          comp[static_cast<std::size_t>(v)] = id;
          todo.push(v);
        }
      }
    }
    std::sort(comps[static_cast<std::size_t>(id)].atoms.begin(),
              comps[static_cast<std::size_t>(id)].atoms.end());
  }

  // fragmented bonds and the quotient graph (a tree by construction)
  std::vector<std::vector<std::pair<int, int>>> quotient(comps.size());
  for (int b = 0; b < mol.bond_count(); ++b) {
    if (internal[static_cast<std::size_t>(b)])
      continue;
    int ca = comp[static_cast<std::size_t>(mol.bond(b).a)];
    int cb = comp[static_cast<std::size_t>(mol.bond(b).b)];
    if (ca == cb)
      throw InvalidArgumentError("fragmentation produced a non-tree quotient");
    quotient[static_cast<std::size_t>(ca)].emplace_back(b, cb);
    quotient[static_cast<std::size_t>(cb)].emplace_back(b, ca);
  }

  int rank_zero_atom = -1;
  for (int i = 0; i < n; ++i)
    if (ranks[static_cast<std::size_t>(i)] == 0)
      rank_zero_atom = i;
  int root_comp = comp[static_cast<std::size_t>(rank_zero_atom)];

  // orient the quotient tree
  std::vector<int> parent_comp(comps.size(), -1);
  std::vector<int> parent_bond(comps.size(), -1);
  std::vector<char> seen(comps.size(), 0);
  std::queue<int> order;
  order.push(root_comp);
  seen[static_cast<std::size_t>(root_comp)] = 1;
  while (!order.empty()) {
    int c = order.front();
    order.pop();
    for (const auto& [b, other] : quotient[static_cast<std::size_t>(c)]) {
      if (seen[static_cast<std::size_t>(other)])
        continue;
      seen[static_cast<std::size_t>(other)] = 1;
      parent_comp[static_cast<std::size_t>(other)] = c;
      parent_bond[static_cast<std::size_t>(other)] = b;
      order.push(other);
    }
  }

  // post-order construction: child ordering needs the children's subtree
  // token strings, which only depend on their own subtrees
  struct Built {
    Motif motif;
    std::string subtree;
    std::vector<int> child_comps;  // ordered
    std::vector<int> child_bonds;
  };
  std::vector<Built> built(comps.size());
  std::vector<char> done(comps.size(), 0);

  struct Frame {
    int comp;
    std::size_t next = 0;
    std::vector<std::pair<int, int>> kids;  // (frag bond, child comp)
  };
  std::vector<Frame> stack;
  auto child_edges = [&](int c) {
    std::vector<std::pair<int, int>> kids;
    for (const auto& [b, other] : quotient[static_cast<std::size_t>(c)])
      if (parent_comp[static_cast<std::size_t>(other)] == c &&
          parent_bond[static_cast<std::size_t>(other)] == b)
        kids.emplace_back(b, other);
    return kids;
  };
  stack.push_back({root_comp, 0, child_edges(root_comp)});
  while (!stack.empty()) {
    Frame& f = stack.back();
    if (f.next < f.kids.size()) {
      int child = f.kids[f.next++].second;
      stack.push_back({child, 0, child_edges(child)});
      continue;
    }
    int c = f.comp;
    // children sorted by canonical rank of the attachment atom inside
    // this motif; several children on one atom tie-break by subtree text
    std::vector<std::pair<int, int>> kids = f.kids;
    auto anchor_in = [&](int bond_idx, int c_id) {
      const Bond& b = mol.bond(bond_idx);
      return comp[static_cast<std::size_t>(b.a)] == c_id ? b.a : b.b;
    };
    std::sort(kids.begin(), kids.end(), [&](const auto& x, const auto& y) {
      int rx = ranks[static_cast<std::size_t>(anchor_in(x.first, c))];
      int ry = ranks[static_cast<std::size_t>(anchor_in(y.first, c))];
      if (rx != ry)
        return rx < ry;
      return built[static_cast<std::size_t>(x.second)].subtree <
             built[static_cast<std::size_t>(y.second)].subtree;
    });

    std::vector<std::pair<int, int>> stubs;  // (anchor old atom, cut bond)
    if (parent_comp[static_cast<std::size_t>(c)] != -1) {
      int pb = parent_bond[static_cast<std::size_t>(c)];
      stubs.emplace_back(anchor_in(pb, c), pb);
    }
    for (const auto& [b, child] : kids) {
      (void)child;
      stubs.emplace_back(anchor_in(b, c), b);
    }

    Built& out = built[static_cast<std::size_t>(c)];
    out.motif = make_motif(mol, comps[static_cast<std::size_t>(c)].atoms,
                           internal, stubs);
    std::ostringstream subtree;
    subtree << canonical_motif_key(out.motif);
    for (const auto& [b, child] : kids) {
      (void)b;
      out.child_comps.push_back(child);
      out.child_bonds.push_back(b);
      subtree << ' ' << built[static_cast<std::size_t>(child)].subtree;
    }
    out.subtree = subtree.str();
    done[static_cast<std::size_t>(c)] = 1;
    stack.pop_back();
  }

  // assemble nodes in DFS preorder
  MotifTree tree;
  tree.root = 0;
  std::vector<int> node_of_comp(comps.size(), -1);
  struct EmitFrame {
    int comp;
    std::size_t next = 0;
  };
  std::vector<EmitFrame> emit;
  auto add_node = [&](int c, bool is_root) {
    Motif m = built[static_cast<std::size_t>(c)].motif;
    m.height_zero = is_root;
    tree.nodes.push_back(std::move(m));
    tree.children.emplace_back();
    node_of_comp[static_cast<std::size_t>(c)] = static_cast<int>(tree.nodes.size()) - 1;
    return node_of_comp[static_cast<std::size_t>(c)];
  };
  add_node(root_comp, true);
  emit.push_back({root_comp, 0});
  while (!emit.empty()) {
    EmitFrame& f = emit.back();
    const Built& b = built[static_cast<std::size_t>(f.comp)];
    if (f.next >= b.child_comps.size()) {
      emit.pop_back();
      continue;
    }
    std::size_t ordinal = f.next++;
    int child_comp = b.child_comps[ordinal];
    int parent_node = node_of_comp[static_cast<std::size_t>(f.comp)];
    bool parent_is_root = f.comp == root_comp;
    // slot index within the parent's slot list: children follow the
    // parent stub on non-root motifs
    int slot = static_cast<int>(ordinal) + (parent_is_root ? 0 : 1);
    int child_node = add_node(child_comp, false);
    MotifTreeEdge edge;
    edge.parent = parent_node;
    edge.parent_slot = slot;
    edge.child = child_node;
    edge.order = mol.bond(b.child_bonds[ordinal]).order;
    tree.edges.push_back(edge);
    tree.children[static_cast<std::size_t>(parent_node)].push_back(child_node);
    emit.push_back({child_comp, 0});
  }
  return tree;
}

TokenSequence linearize(const MotifTree& tree, TraversalOrder order) {
  TokenSequence seq;
  seq.order = order;
  if (tree.nodes.empty())
    return seq;
  if (order == TraversalOrder::DFS) {
    struct Frame {
      int node;
      std::size_t next = 0;
    };
    std::vector<Frame> stack;
    seq.tokens.push_back(tree.nodes[static_cast<std::size_t>(tree.root)]);
    stack.push_back({tree.root, 0});
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto& kids = tree.children[static_cast<std::size_t>(f.node)];
      if (f.next >= kids.size()) {
        stack.pop_back();
        continue;
      }
      int child = kids[f.next++];
      seq.tokens.push_back(tree.nodes[static_cast<std::size_t>(child)]);
      stack.push_back({child, 0});
    }
  } else {
    std::queue<int> todo;
    todo.push(tree.root);
    while (!todo.empty()) {
      int node = todo.front();
      todo.pop();
      seq.tokens.push_back(tree.nodes[static_cast<std::size_t>(node)]);
      for (int child : tree.children[static_cast<std::size_t>(node)])
        todo.push(child);
    }
  }
  return seq;
}

TokenSequence tokenize(const MolGraph& mol, TraversalOrder order,
                       Diagnostics* diag) {
  return linearize(fragment(mol, diag), order);
}

namespace {

// Appends a token's graph to the assembly; returns its slot star indices
// in slot order, shifted into assembly coordinates. A pure offset keeps
// relative atom order, so stored parities carry over unchanged. Later
// join bonds change adjacency, so the reference lists that parities are
// read against are snapshotted here.
std::vector<int> place_token(MolGraph& g, const Motif& token,
                             std::map<int, std::vector<int>>& parity_refs) {
  int offset = g.atom_count();
  for (const Atom& a : token.graph.atoms())
    g.add_atom(a);
  for (const Bond& b : token.graph.bonds()) {
    int idx = g.add_bond(b.a + offset, b.b + offset, b.order);
    Bond& nb = g.bond(idx);
    nb.stereo = b.stereo;
    if (b.stereo != BondStereo::None) {
      nb.stereo_ref_a = b.stereo_ref_a + offset;
      nb.stereo_ref_b = b.stereo_ref_b + offset;
    }
  }
  for (int i = 0; i < token.graph.atom_count(); ++i)
    if (token.graph.atom(i).chirality != Chirality::None)
      parity_refs.emplace(i + offset, g.stereo_reference_list(i + offset));
  std::vector<int> stars;
  for (int star : token.slot_atoms())
    stars.push_back(star + offset);
  return stars;
}

}  // namespace

MolGraph detokenize(const TokenSequence& seq, Diagnostics* diag) {
  if (seq.tokens.empty())
    throw EmptySequenceError("cannot detokenize an empty token sequence");

  MolGraph g;
  std::map<int, int> joined;  // consumed star -> partner anchor (assembly ids)
  std::map<int, std::vector<int>> parity_refs;  // chiral atom -> refs at placement

  struct Frame {
    std::vector<int> stars;
    std::size_t next = 0;
  };
  std::vector<Frame> stack;   // DFS
  std::deque<int> slot_queue;  // BFS
  bool dfs = seq.order == TraversalOrder::DFS;

  std::vector<int> first_stars = place_token(g, seq.tokens.front(), parity_refs);
  if (dfs)
    stack.push_back({first_stars, 0});
  else
    slot_queue.insert(slot_queue.end(), first_stars.begin(), first_stars.end());

  std::size_t dropped = 0;
  for (std::size_t t = 1; t < seq.tokens.size(); ++t) {
    const Motif& token = seq.tokens[t];
    int open_star = -1;
    if (dfs) {
      while (!stack.empty() && stack.back().next >= stack.back().stars.size())
        stack.pop_back();
      if (!stack.empty())
        open_star = stack.back().stars[stack.back().next];
    } else if (!slot_queue.empty()) {
      open_star = slot_queue.front();
    }
    if (open_star == -1) {
      dropped = seq.tokens.size() - t;
      break;
    }
    if (token.slot_count() == 0) {
      warn(diag, WarningKind::SkippedToken,
           "token " + std::to_string(t) + " has no attachment slot; skipped");
      continue;
    }

    std::vector<int> stars = place_token(g, token, parity_refs);
    int child_star = stars.front();
    int anchor_p = g.neighbors(open_star).front().first;
    int anchor_c = g.neighbors(child_star).front().first;
    BondOrder order =
        g.bond(g.neighbors(open_star).front().second).order;
    g.add_bond(anchor_p, anchor_c, order);
    joined[open_star] = anchor_c;
    joined[child_star] = anchor_p;

    if (dfs) {
      ++stack.back().next;
      stack.push_back({{stars.begin() + 1, stars.end()}, 0});
    } else {
      slot_queue.pop_front();
      slot_queue.insert(slot_queue.end(), stars.begin() + 1, stars.end());
    }
  }
  if (dropped > 0)
    warn(diag, WarningKind::ExcessTokens,
         std::to_string(dropped) + " trailing token(s) had no open slot and were dropped");

  // Remove stars: joined ones are already bridged by real bonds, open
  // ones turn into one hydrogen on their anchor.
  std::vector<int> new_index(static_cast<std::size_t>(g.atom_count()), -1);
  MolGraph out;
  for (int i = 0; i < g.atom_count(); ++i) {
    if (g.atom(i).is_placeholder())
      continue;
    new_index[static_cast<std::size_t>(i)] = out.add_atom(g.atom(i));
  }
  for (int i = 0; i < g.atom_count(); ++i) {
    if (!g.atom(i).is_placeholder() || joined.count(i) != 0)
      continue;
    int anchor = g.neighbors(i).front().first;
    out.atom(new_index[static_cast<std::size_t>(anchor)]).hydrogens += 1;
  }

  // resolves an assembly atom reference to the final graph, following a
  // star to the atom that replaced it (-1 if it was hydrogen-capped)
  auto resolve = [&](int assembly_idx) {
    if (assembly_idx == kImplicitNeighbor)
      return kImplicitNeighbor;
    int idx = assembly_idx;
    if (g.atom(idx).is_placeholder()) {
      auto it = joined.find(idx);
      if (it == joined.end())
        return -1;
      idx = it->second;
    }
    return new_index[static_cast<std::size_t>(idx)];
  };

  for (int b = 0; b < g.bond_count(); ++b) {
    const Bond& bond = g.bond(b);
    if (g.atom(bond.a).is_placeholder() || g.atom(bond.b).is_placeholder())
      continue;
    int na = new_index[static_cast<std::size_t>(bond.a)];
    int nb = new_index[static_cast<std::size_t>(bond.b)];
    int idx = out.add_bond(na, nb, bond.order);
    if (bond.stereo == BondStereo::None)
      continue;
    int ra = resolve(bond.stereo_ref_a);
    int rb = resolve(bond.stereo_ref_b);
    BondStereo label = bond.stereo;
    // a capped reference flips to the remaining substituent on that side
    auto substitute = [&](int endpoint_new, int partner_new, int ref) {
      if (ref != -1)
        return ref;
      for (const auto& [nbr, nbr_bond] : out.neighbors(endpoint_new)) {
        if (nbr == partner_new ||
            out.bond(nbr_bond).order != BondOrder::Single)
          continue;
        label = flipped(label);
        return nbr;
      }
      return -1;
    };
    ra = substitute(na, nb, ra);
    rb = substitute(nb, na, rb);
    if (ra == -1 || rb == -1) {
      warn(diag, WarningKind::DroppedStereo,
           "double-bond stereo dropped during detokenization");
      continue;
    }
    Bond& dst = out.bond(idx);
    dst.stereo = label;
    dst.stereo_ref_a = ra;
    dst.stereo_ref_b = rb;
  }

  // tetrahedral parity against the final numbering
  for (int i = 0; i < g.atom_count(); ++i) {
    if (g.atom(i).is_placeholder() || g.atom(i).chirality == Chirality::None)
      continue;
    int ni = new_index[static_cast<std::size_t>(i)];
    if (!out.chirality_supported(ni)) {
      out.atom(ni).chirality = Chirality::None;
      warn(diag, WarningKind::DroppedChirality,
           "chirality dropped during detokenization");
      continue;
    }
    const std::vector<int>& old_refs = parity_refs.at(i);
    std::vector<int> mapped;
    bool ok = true;
    for (int r : old_refs) {
      int m = resolve(r);
      // a capped star becomes the implicit hydrogen
      if (r != kImplicitNeighbor && m == -1)
        m = kImplicitNeighbor;
      if (m == kImplicitNeighbor &&
          std::find(mapped.begin(), mapped.end(), kImplicitNeighbor) !=
              mapped.end()) {
        ok = false;  // two implicit entries cannot be ordered
        break;
      }
      mapped.push_back(m);
    }
    std::vector<int> new_refs = out.stereo_reference_list(ni);
    if (!ok || mapped.size() != new_refs.size()) {
      out.atom(ni).chirality = Chirality::None;
      warn(diag, WarningKind::DroppedChirality,
           "chirality dropped during detokenization");
      continue;
    }
    if (permutation_is_odd(mapped, new_refs))
      out.atom(ni).chirality = flipped(out.atom(ni).chirality);
  }

  return out;
}

std::string canonical_motif_key(const Motif& motif) {
  return canonical_form(motif.graph);
}

Motif motif_from_key(const std::string& key) {
  ParseOptions options;
  options.allow_placeholders = true;
  Motif motif;
  try {
    motif.graph = parse_smiles(key, nullptr, options);
  } catch (const Error& e) {
    throw FormatError("bad motif key '" + key + "': " + e.what());
  }
  int stars = 0;
  std::vector<char> slot_seen;
  for (int i = 0; i < motif.graph.atom_count(); ++i) {
    const Atom& a = motif.graph.atom(i);
    if (!a.is_placeholder()) {
      if (a.map >= 0)
        throw FormatError("bad motif key '" + key + "': map on a real atom");
      continue;
    }
    ++stars;
    if (motif.graph.degree(i) != 1)
      throw FormatError("bad motif key '" + key +
                        "': slot atom must have exactly one bond");
    if (a.map < 0)
      throw FormatError("bad motif key '" + key + "': slot without number");
    if (a.map >= static_cast<int>(slot_seen.size()))
      slot_seen.resize(static_cast<std::size_t>(a.map) + 1, 0);
    if (slot_seen[static_cast<std::size_t>(a.map)])
      throw FormatError("bad motif key '" + key + "': duplicate slot number");
    slot_seen[static_cast<std::size_t>(a.map)] = 1;
  }
  if (stars == motif.graph.atom_count())
    throw FormatError("bad motif key '" + key + "': no real atoms");
  if (static_cast<int>(slot_seen.size()) != stars)
    throw FormatError("bad motif key '" + key +
                      "': slot numbers must be 0..k-1");
  return motif;
}

std::string sequence_to_line(const TokenSequence& seq) {
  std::ostringstream os;
  for (std::size_t i = 0; i < seq.tokens.size(); ++i) {
    if (i > 0)
      os << ' ';
    os << canonical_motif_key(seq.tokens[i]);
  }
  return os.str();
}

TokenSequence sequence_from_line(const std::string& line,
                                 TraversalOrder order) {
  TokenSequence seq;
  seq.order = order;
  std::istringstream is(line);
  std::string key;
  while (is >> key)
    seq.tokens.push_back(motif_from_key(key));
  if (seq.tokens.empty())
    throw EmptySequenceError("no tokens on line");
  if (!seq.tokens.empty())
    seq.tokens.front().height_zero = true;
  return seq;
}

}  // namespace moltok
