//! Compacted trie over integer strings.
//!
//! The trie never copies symbol data: stored strings live behind a
//! [`StringStore`] and edge labels are `(string id, start, length)`
//! references into them. Leaves are distinguished by string id instead of
//! materialized delimiter symbols, so equal strings coexist as separate
//! leaves and a string that is a prefix of another hangs off the interior
//! node at its end depth.
//!
//! Construction inserts the strings in lexicographically sorted order, each
//! as the new rightmost leaf: the attachment depth comes from an LCE query
//! against the previously inserted string, and the walk up the rightmost
//! path is amortized linear because every edge it crosses is final. Sorting
//! uses LCE-accelerated comparisons, so the whole build costs
//! `O(L log L)` comparisons plus `O(L)` structural work.
//!
//! Child lookup inside [`CompactedTrie::prefix_search`] uses a sorted array
//! with binary search above a small degree (linear scan below), giving
//! `O(log sigma)` per explicit child step.

use crate::index2d::QueryWork;
use std::cmp::Ordering;

/// Random access plus pairwise LCE over a set of strings, identified by
/// dense ids `0..string_count()`.
pub trait StringStore {
    fn string_count(&self) -> usize;
    fn string_len(&self, sid: usize) -> usize;
    /// Symbol at 0-based `pos` of string `sid`.
    fn symbol(&self, sid: usize, pos: usize) -> u64;
    /// Length of the longest common prefix of `a[a_pos..]` and `b[b_pos..]`.
    /// May overshoot past the string ends; the trie caps it.
    fn lce(&self, a: usize, a_pos: usize, b: usize, b_pos: usize) -> usize;
}

/// Read-only random access to a query string.
pub trait SymbolSeq {
    fn seq_len(&self) -> usize;
    fn symbol_at(&self, i: usize) -> u64;
}

impl SymbolSeq for [u64] {
    fn seq_len(&self) -> usize {
        self.len()
    }
    fn symbol_at(&self, i: usize) -> u64 {
        self[i]
    }
}

/// Owned string set with scan-based LCE. Handy for tests and small inputs;
/// the index structures use oracle-backed stores instead.
pub struct OwnedStrings(pub Vec<Vec<u64>>);

impl StringStore for OwnedStrings {
    fn string_count(&self) -> usize {
        self.0.len()
    }
    fn string_len(&self, sid: usize) -> usize {
        self.0[sid].len()
    }
    fn symbol(&self, sid: usize, pos: usize) -> u64 {
        self.0[sid][pos]
    }
    fn lce(&self, a: usize, a_pos: usize, b: usize, b_pos: usize) -> usize {
        let (s, t) = (&self.0[a], &self.0[b]);
        let mut l = 0;
        while a_pos + l < s.len() && b_pos + l < t.len() && s[a_pos + l] == t[b_pos + l] {
            l += 1;
        }
        l
    }
}

pub type NodeId = u32;

const NONE: u32 = u32::MAX;
const ROOT: NodeId = 0;

/// Endpoint of a prefix search. `edge_offset == 0` means the locus is the
/// explicit `node` itself; otherwise the locus sits `edge_offset` symbols
/// into the edge above `node`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Locus {
    pub node: NodeId,
    pub edge_offset: u32,
}

#[derive(Clone, Copy)]
struct Node {
    depth: u32,
    edge_sid: u32,
    edge_start: u32,
    edge_len: u32,
    term_start: u32,
    term_len: u32,
    child_start: u32,
    child_len: u32,
    leaf_lo: u32,
    leaf_hi: u32,
}

/// Edge-compressed trie with pre-order leaf numbering.
pub struct CompactedTrie {
    nodes: Vec<Node>,
    child_syms: Vec<u64>,
    child_nodes: Vec<u32>,
    term_nodes: Vec<u32>,
    /// Pre-order leaf number (1-based) minus one -> string id.
    leaf_sids: Vec<u32>,
    /// String id -> pre-order leaf number (1-based).
    leaf_num_by_sid: Vec<u32>,
}

#[derive(Clone, Copy)]
struct BuildNode {
    parent: u32,
    depth: u32,
    edge_sid: u32,
    edge_start: u32,
    edge_len: u32,
    first_sym: u64,
    first_child: u32,
    last_child: u32,
    prev_sib: u32,
    next_sib: u32,
    leaf_sid: u32,
}

impl BuildNode {
    fn blank() -> Self {
        BuildNode {
            parent: NONE,
            depth: 0,
            edge_sid: NONE,
            edge_start: 0,
            edge_len: 0,
            first_sym: 0,
            first_child: NONE,
            last_child: NONE,
            prev_sib: NONE,
            next_sib: NONE,
            leaf_sid: NONE,
        }
    }
}

struct Builder {
    nodes: Vec<BuildNode>,
}

impl Builder {
    fn new() -> Self {
        Builder {
            nodes: vec![BuildNode::blank()],
        }
    }

    fn append_child(&mut self, v: u32, c: u32) {
        let last = self.nodes[v as usize].last_child;
        if last == NONE {
            self.nodes[v as usize].first_child = c;
        } else {
            self.nodes[last as usize].next_sib = c;
            self.nodes[c as usize].prev_sib = last;
        }
        self.nodes[v as usize].last_child = c;
    }

    /// `new` takes over `old`'s position in `v`'s child list.
    fn replace_child(&mut self, v: u32, old: u32, new: u32) {
        let prev = self.nodes[old as usize].prev_sib;
        let next = self.nodes[old as usize].next_sib;
        self.nodes[new as usize].prev_sib = prev;
        self.nodes[new as usize].next_sib = next;
        if prev == NONE {
            self.nodes[v as usize].first_child = new;
        } else {
            self.nodes[prev as usize].next_sib = new;
        }
        if next == NONE {
            self.nodes[v as usize].last_child = new;
        } else {
            self.nodes[next as usize].prev_sib = new;
        }
        self.nodes[old as usize].prev_sib = NONE;
        self.nodes[old as usize].next_sib = NONE;
    }

    fn attach_leaf<S: StringStore>(&mut self, v: u32, sid: u32, d: usize, store: &S) -> u32 {
        let len = store.string_len(sid as usize);
        let id = self.nodes.len() as u32;
        let mut node = BuildNode::blank();
        node.parent = v;
        node.depth = len as u32;
        node.edge_sid = sid;
        node.edge_start = d as u32;
        node.leaf_sid = sid;
        if len > d {
            node.edge_len = (len - d) as u32;
            node.first_sym = store.symbol(sid as usize, d);
        }
        self.nodes.push(node);
        self.append_child(v, id);
        id
    }

    /// Inserts `sid` as the new rightmost leaf, attaching at depth `d` on
    /// the path to the previous rightmost leaf.
    fn insert_after<S: StringStore>(
        &mut self,
        prev_leaf: u32,
        sid: u32,
        d: usize,
        store: &S,
    ) -> u32 {
        let mut cur = prev_leaf;
        let mut p = self.nodes[cur as usize].parent;
        while self.nodes[p as usize].depth as usize > d {
            cur = p;
            p = self.nodes[cur as usize].parent;
        }
        let attach = if self.nodes[p as usize].depth as usize == d {
            p
        } else if self.nodes[cur as usize].depth as usize == d {
            // Only the previous leaf can end exactly at depth d: the new
            // string extends it (or repeats it), so an explicit node takes
            // over the leaf's edge and the leaf stays below on its
            // terminator.
            debug_assert_eq!(cur, prev_leaf);
            debug_assert!(self.nodes[cur as usize].edge_len > 0);
            let cn = self.nodes[cur as usize];
            let u = self.nodes.len() as u32;
            let mut node = BuildNode::blank();
            node.parent = p;
            node.depth = cn.depth;
            node.edge_sid = cn.edge_sid;
            node.edge_start = cn.edge_start;
            node.edge_len = cn.edge_len;
            node.first_sym = cn.first_sym;
            self.nodes.push(node);
            self.replace_child(p, cur, u);
            let c = &mut self.nodes[cur as usize];
            c.parent = u;
            c.edge_len = 0;
            self.append_child(u, cur);
            u
        } else {
            // depth(p) < d < depth(cur): split cur's incoming edge.
            let cn = self.nodes[cur as usize];
            let keep = d as u32 - self.nodes[p as usize].depth;
            debug_assert!(keep > 0 && keep < cn.edge_len);
            let u = self.nodes.len() as u32;
            let mut node = BuildNode::blank();
            node.parent = p;
            node.depth = d as u32;
            node.edge_sid = cn.edge_sid;
            node.edge_start = cn.edge_start;
            node.edge_len = keep;
            node.first_sym = cn.first_sym;
            self.nodes.push(node);
            self.replace_child(p, cur, u);
            let new_start = cn.edge_start + keep;
            let c = &mut self.nodes[cur as usize];
            c.parent = u;
            c.edge_start = new_start;
            c.edge_len = cn.edge_len - keep;
            c.first_sym = store.symbol(cn.edge_sid as usize, new_start as usize);
            self.append_child(u, cur);
            u
        };
        self.attach_leaf(attach, sid, d, store)
    }

    fn freeze(self, string_count: usize) -> CompactedTrie {
        let n = self.nodes.len();
        // Pre-order ids via an explicit stack (paths can be long).
        let mut order: Vec<u32> = Vec::with_capacity(n);
        let mut frozen_id: Vec<u32> = vec![NONE; n];
        let mut stack: Vec<u32> = vec![ROOT];
        let mut kids: Vec<u32> = Vec::new();
        while let Some(b) = stack.pop() {
            frozen_id[b as usize] = order.len() as u32;
            order.push(b);
            kids.clear();
            let mut c = self.nodes[b as usize].first_child;
            while c != NONE {
                kids.push(c);
                c = self.nodes[c as usize].next_sib;
            }
            for &k in kids.iter().rev() {
                stack.push(k);
            }
        }
        debug_assert_eq!(order.len(), n);

        let mut nodes: Vec<Node> = Vec::with_capacity(n);
        let mut child_syms: Vec<u64> = Vec::new();
        let mut child_nodes: Vec<u32> = Vec::new();
        let mut term_nodes: Vec<u32> = Vec::new();
        let mut leaf_sids: Vec<u32> = Vec::new();
        for &b in &order {
            let bn = &self.nodes[b as usize];
            let term_start = term_nodes.len() as u32;
            let child_start = child_syms.len() as u32;
            let mut c = bn.first_child;
            while c != NONE {
                let cn = &self.nodes[c as usize];
                if cn.edge_len == 0 {
                    // Terminator leaves sort before every symbol and were
                    // appended first.
                    debug_assert_eq!(child_syms.len() as u32, child_start);
                    term_nodes.push(frozen_id[c as usize]);
                } else {
                    debug_assert!(
                        child_syms.len() == child_start as usize
                            || *child_syms.last().unwrap() < cn.first_sym
                    );
                    child_syms.push(cn.first_sym);
                    child_nodes.push(frozen_id[c as usize]);
                }
                c = cn.next_sib;
            }
            let is_leaf = bn.first_child == NONE && bn.leaf_sid != NONE;
            let leaf_lo = if is_leaf {
                leaf_sids.push(bn.leaf_sid);
                leaf_sids.len() as u32
            } else {
                0
            };
            nodes.push(Node {
                depth: bn.depth,
                edge_sid: bn.edge_sid,
                edge_start: bn.edge_start,
                edge_len: bn.edge_len,
                term_start,
                term_len: term_nodes.len() as u32 - term_start,
                child_start,
                child_len: child_syms.len() as u32 - child_start,
                leaf_lo,
                leaf_hi: leaf_lo,
            });
        }
        // Leaf ranges: children have larger pre-order ids, so a reverse scan
        // sees every subtree before its root.
        for f in (0..n).rev() {
            let node = nodes[f];
            if node.term_len == 0 && node.child_len == 0 {
                if node.leaf_lo == 0 {
                    // Childless root of an empty trie: empty range.
                    nodes[f].leaf_lo = 1;
                    nodes[f].leaf_hi = 0;
                }
                continue;
            }
            let mut lo = u32::MAX;
            let mut hi = 0;
            for t in 0..node.term_len {
                let c = term_nodes[(node.term_start + t) as usize] as usize;
                lo = lo.min(nodes[c].leaf_lo);
                hi = hi.max(nodes[c].leaf_hi);
            }
            for t in 0..node.child_len {
                let c = child_nodes[(node.child_start + t) as usize] as usize;
                lo = lo.min(nodes[c].leaf_lo);
                hi = hi.max(nodes[c].leaf_hi);
            }
            nodes[f].leaf_lo = lo;
            nodes[f].leaf_hi = hi;
        }
        let mut leaf_num_by_sid = vec![NONE; string_count];
        for (i, &sid) in leaf_sids.iter().enumerate() {
            leaf_num_by_sid[sid as usize] = i as u32 + 1;
        }
        CompactedTrie {
            nodes,
            child_syms,
            child_nodes,
            term_nodes,
            leaf_sids,
            leaf_num_by_sid,
        }
    }
}

impl CompactedTrie {
    /// Builds the trie over all strings of `store`.
    pub fn build<S: StringStore>(store: &S) -> CompactedTrie {
        let count = store.string_count();
        let mut order: Vec<u32> = (0..count as u32).collect();
        order.sort_unstable_by(|&a, &b| compare_strings(store, a, b));
        let mut builder = Builder::new();
        let mut prev: Option<u32> = None;
        let mut prev_sid = 0u32;
        for &sid in &order {
            let leaf = match prev {
                None => builder.attach_leaf(ROOT, sid, 0, store),
                Some(prev_leaf) => {
                    let d = store
                        .lce(prev_sid as usize, 0, sid as usize, 0)
                        .min(store.string_len(prev_sid as usize))
                        .min(store.string_len(sid as usize));
                    builder.insert_after(prev_leaf, sid, d, store)
                }
            };
            prev = Some(leaf);
            prev_sid = sid;
        }
        builder.freeze(count)
    }

    pub fn root(&self) -> NodeId {
        ROOT
    }

    pub fn leaf_count(&self) -> usize {
        self.leaf_sids.len()
    }

    /// All explicit nodes, including the root and the leaves.
    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    /// Total child-table slots (branch edges plus terminator edges).
    pub fn child_slot_count(&self) -> usize {
        self.child_syms.len() + self.term_nodes.len()
    }

    pub fn depth(&self, node: NodeId) -> usize {
        self.nodes[node as usize].depth as usize
    }

    /// Incoming edge label of `node` as `(string id, start, len)`.
    pub fn edge_label(&self, node: NodeId) -> (u32, u32, u32) {
        let n = &self.nodes[node as usize];
        (n.edge_sid, n.edge_start, n.edge_len)
    }

    pub fn node_is_leaf(&self, node: NodeId) -> bool {
        let n = &self.nodes[node as usize];
        n.term_len == 0 && n.child_len == 0 && n.leaf_lo == n.leaf_hi && n.leaf_lo > 0
    }

    /// String id stored at a leaf node.
    pub fn leaf_sid(&self, node: NodeId) -> u32 {
        debug_assert!(self.node_is_leaf(node));
        self.leaf_sids[self.nodes[node as usize].leaf_lo as usize - 1]
    }

    /// Pre-order leaf number (1-based) of the leaf storing string `sid`.
    pub fn leaf_number_of_sid(&self, sid: usize) -> usize {
        let num = self.leaf_num_by_sid[sid];
        debug_assert!(num != NONE);
        num as usize
    }

    pub fn term_children(&self, node: NodeId) -> &[u32] {
        let n = &self.nodes[node as usize];
        &self.term_nodes[n.term_start as usize..(n.term_start + n.term_len) as usize]
    }

    pub fn real_children(&self, node: NodeId) -> impl Iterator<Item = (u64, NodeId)> + '_ {
        let n = &self.nodes[node as usize];
        let (s, e) = (n.child_start as usize, (n.child_start + n.child_len) as usize);
        self.child_syms[s..e]
            .iter()
            .copied()
            .zip(self.child_nodes[s..e].iter().copied())
    }

    fn child_by_symbol(&self, node: NodeId, sym: u64) -> Option<NodeId> {
        let n = &self.nodes[node as usize];
        let s = n.child_start as usize;
        let syms = &self.child_syms[s..s + n.child_len as usize];
        if syms.len() <= 8 {
            syms.iter()
                .position(|&x| x == sym)
                .map(|i| self.child_nodes[s + i])
        } else {
            syms.binary_search(&sym).ok().map(|i| self.child_nodes[s + i])
        }
    }

    /// Walks the query down from the root. Returns the locus spelling the
    /// whole query when the query is a prefix of at least one stored string,
    /// `None` otherwise. `O(|query|)` symbol comparisons plus one child
    /// lookup per explicit step.
    pub fn prefix_search<S: StringStore, Q: SymbolSeq + ?Sized>(
        &self,
        store: &S,
        query: &Q,
        work: &mut QueryWork,
    ) -> Option<Locus> {
        let qlen = query.seq_len();
        if qlen == 0 {
            return Some(Locus {
                node: ROOT,
                edge_offset: 0,
            });
        }
        let mut node = ROOT;
        let mut consumed = 0usize;
        loop {
            work.trie_steps += 1;
            work.symbol_cmps += 1;
            let child = self.child_by_symbol(node, query.symbol_at(consumed))?;
            let cn = &self.nodes[child as usize];
            let take = (cn.edge_len as usize).min(qlen - consumed);
            for t in 1..take {
                work.symbol_cmps += 1;
                if store.symbol(cn.edge_sid as usize, (cn.edge_start as usize) + t)
                    != query.symbol_at(consumed + t)
                {
                    return None;
                }
            }
            consumed += take;
            if consumed == qlen {
                let edge_offset = if take < cn.edge_len as usize { take as u32 } else { 0 };
                return Some(Locus {
                    node: child,
                    edge_offset,
                });
            }
            node = child;
        }
    }

    /// Inclusive pre-order leaf interval `[lo, hi]` below the locus (for an
    /// implicit locus, below the explicit node under it). `lo > hi` only for
    /// the root of an empty trie.
    pub fn leaf_range(&self, locus: Locus) -> (usize, usize) {
        let n = &self.nodes[locus.node as usize];
        (n.leaf_lo as usize, n.leaf_hi as usize)
    }

    /// String ids of all leaves below the locus, in pre-order.
    pub fn leaves_under(&self, locus: Locus) -> &[u32] {
        let (lo, hi) = self.leaf_range(locus);
        if lo > hi {
            return &[];
        }
        &self.leaf_sids[lo - 1..hi]
    }
}

fn compare_strings<S: StringStore>(store: &S, a: u32, b: u32) -> Ordering {
    let (a, b) = (a as usize, b as usize);
    let (la, lb) = (store.string_len(a), store.string_len(b));
    let l = store.lce(a, 0, b, 0).min(la).min(lb);
    if l < la && l < lb {
        store.symbol(a, l).cmp(&store.symbol(b, l))
    } else {
        // A proper prefix sorts first (its terminator is smaller than any
        // symbol); equal strings tie-break by id for determinism.
        la.cmp(&lb).then(a.cmp(&b))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;
    use std::collections::BTreeMap;

    fn work() -> QueryWork {
        QueryWork::default()
    }

    fn strs(v: &[&[u8]]) -> OwnedStrings {
        OwnedStrings(v.iter().map(|s| s.iter().map(|&b| b as u64).collect()).collect())
    }

    fn q(s: &[u8]) -> Vec<u64> {
        s.iter().map(|&b| b as u64).collect()
    }

    #[test]
    fn three_string_example() {
        let store = strs(&[b"ab", b"abc", b"b"]);
        let t = CompactedTrie::build(&store);
        assert_eq!(t.leaf_count(), 3);
        // One internal non-root node; total explicit = root + 1 + 3 leaves.
        assert_eq!(t.node_count(), 5);

        let locus = t.prefix_search(&store, q(b"ab").as_slice(), &mut work()).unwrap();
        assert_eq!(locus.edge_offset, 0);
        assert_eq!(t.depth(locus.node), 2);
        assert_eq!(t.leaf_range(locus), (1, 2));
        assert_eq!(t.leaves_under(locus), &[0, 1]);

        let root = t.prefix_search(&store, q(b"").as_slice(), &mut work()).unwrap();
        assert_eq!(t.leaf_range(root), (1, 3));

        assert!(t.prefix_search(&store, q(b"ba").as_slice(), &mut work()).is_none());
    }

    #[test]
    fn single_string() {
        let store = strs(&[b"xyz"]);
        let t = CompactedTrie::build(&store);
        assert_eq!(t.node_count(), 2);
        assert_eq!(t.leaf_count(), 1);
        let locus = t.prefix_search(&store, q(b"xy").as_slice(), &mut work()).unwrap();
        assert_eq!(locus.edge_offset, 2);
        assert_eq!(t.leaf_range(locus), (1, 1));
    }

    #[test]
    fn chained_prefixes() {
        let store = strs(&[b"a", b"aa", b"aaa"]);
        let t = CompactedTrie::build(&store);
        // Path of explicit nodes, each carrying one terminator leaf.
        assert_eq!(t.leaf_count(), 3);
        for (query, lo, hi) in [(&b"a"[..], 1, 3), (b"aa", 2, 3), (b"aaa", 3, 3)] {
            let locus = t.prefix_search(&store, q(query).as_slice(), &mut work()).unwrap();
            assert_eq!(t.leaf_range(locus), (lo, hi), "query {query:?}");
        }
    }

    #[test]
    fn leaf_locus_yields_own_payload() {
        let store = strs(&[b"ab", b"abc", b"b"]);
        let t = CompactedTrie::build(&store);
        let locus = t.prefix_search(&store, q(b"abc").as_slice(), &mut work()).unwrap();
        assert!(t.node_is_leaf(locus.node));
        assert_eq!(t.leaves_under(locus), &[1]);
    }

    #[test]
    fn duplicates_get_distinct_leaves() {
        let store = strs(&[b"ab", b"ab", b"ab"]);
        let t = CompactedTrie::build(&store);
        assert_eq!(t.leaf_count(), 3);
        let locus = t.prefix_search(&store, q(b"ab").as_slice(), &mut work()).unwrap();
        assert_eq!(t.leaf_range(locus), (1, 3));
        // Ties broke by string id.
        assert_eq!(t.leaves_under(locus), &[0, 1, 2]);
    }

    #[test]
    fn empty_string_leaf() {
        let store = strs(&[b"", b"a"]);
        let t = CompactedTrie::build(&store);
        assert_eq!(t.leaf_count(), 2);
        let root = t.prefix_search(&store, q(b"").as_slice(), &mut work()).unwrap();
        assert_eq!(t.leaf_range(root), (1, 2));
        assert_eq!(t.leaf_number_of_sid(0), 1);
        assert_eq!(t.leaf_number_of_sid(1), 2);
    }

    /// Uncompacted reference trie: per-node child map plus the multiset of
    /// string ids ending at the node. The compacted trie must expand to
    /// exactly this shape.
    #[derive(Default, Debug, PartialEq, Eq)]
    struct CanonNode {
        ends: Vec<u32>,
        children: BTreeMap<u64, CanonNode>,
    }

    fn canon_insert(root: &mut CanonNode, s: &[u64], sid: u32) {
        let mut node = root;
        for &sym in s {
            node = node.children.entry(sym).or_default();
        }
        node.ends.push(sid);
        node.ends.sort_unstable();
    }

    fn canon_of_store(store: &OwnedStrings) -> CanonNode {
        let mut root = CanonNode::default();
        for (sid, s) in store.0.iter().enumerate() {
            canon_insert(&mut root, s, sid as u32);
        }
        root
    }

    fn expand(trie: &CompactedTrie, store: &OwnedStrings, node: NodeId, out: &mut CanonNode) {
        for &t in trie.term_children(node) {
            out.ends.push(trie.leaf_sid(t));
        }
        if trie.node_is_leaf(node) && node != trie.root() {
            // A leaf reached through a real edge contributes its own end.
        }
        out.ends.sort_unstable();
        for (_, child) in trie.real_children(node) {
            let (sid, start, len) = trie.edge_label(child);
            let mut cur = out;
            for p in 0..len {
                let sym = store.symbol(sid as usize, (start + p) as usize);
                cur = cur.children.entry(sym).or_default();
            }
            if trie.node_is_leaf(child) {
                cur.ends.push(trie.leaf_sid(child));
                cur.ends.sort_unstable();
            } else {
                expand(trie, store, child, cur);
            }
        }
    }

    fn assert_matches_naive(store: &OwnedStrings) {
        let trie = CompactedTrie::build(store);
        let mut got = CanonNode::default();
        expand(&trie, store, trie.root(), &mut got);
        let expected = canon_of_store(store);
        assert_eq!(got, expected);

        // Compaction invariant: every non-root internal node branches.
        for node in 0..trie.node_count() as u32 {
            if node != trie.root() && !trie.node_is_leaf(node) {
                let degree = trie.term_children(node).len() + trie.real_children(node).count();
                assert!(degree >= 2, "non-branching internal node {node}");
            }
        }
        // Space: non-root explicit nodes <= 2L - 1.
        if trie.leaf_count() > 0 {
            assert!(trie.node_count() - 1 <= 2 * trie.leaf_count() - 1);
        }
    }

    #[test]
    fn equivalent_to_naive_insertion_trie() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for round in 0..60 {
            let sigma = *[1u64, 2, 3, 26].choose(&mut rng).unwrap();
            let mut total = 0usize;
            let mut strings = Vec::new();
            while total < 400 && strings.len() < 40 {
                let len = rng.random_range(0..=24);
                total += len;
                strings.push((0..len).map(|_| rng.random_range(0..sigma)).collect::<Vec<u64>>());
            }
            let store = OwnedStrings(strings);
            assert_matches_naive(&store);
            let _ = round;
        }
    }

    #[test]
    fn prefix_search_agrees_with_bruteforce() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..20 {
            let strings: Vec<Vec<u64>> = (0..rng.random_range(1..=10))
                .map(|_| (0..rng.random_range(0..=6)).map(|_| rng.random_range(0..2u64)).collect())
                .collect();
            let store = OwnedStrings(strings.clone());
            let trie = CompactedTrie::build(&store);
            // Every candidate query over the alphabet, up to length 7.
            let mut queries: Vec<Vec<u64>> = vec![vec![]];
            for len in 1..=7usize {
                for code in 0..(1u32 << len) {
                    queries.push((0..len).map(|b| ((code >> b) & 1) as u64).collect());
                }
            }
            for query in &queries {
                let expect: Vec<u32> = strings
                    .iter()
                    .enumerate()
                    .filter(|(_, s)| s.len() >= query.len() && s[..query.len()] == query[..])
                    .map(|(i, _)| i as u32)
                    .collect();
                match trie.prefix_search(&store, query.as_slice(), &mut work()) {
                    None => assert!(expect.is_empty(), "query {query:?}"),
                    Some(locus) => {
                        let mut got: Vec<u32> = trie.leaves_under(locus).to_vec();
                        got.sort_unstable();
                        assert_eq!(got, expect, "query {query:?} strings {strings:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn child_ranges_partition_parent() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        let strings: Vec<Vec<u64>> = (0..30)
            .map(|_| (0..rng.random_range(0..=10)).map(|_| rng.random_range(0..3u64)).collect())
            .collect();
        let store = OwnedStrings(strings);
        let trie = CompactedTrie::build(&store);
        let root_locus = Locus { node: trie.root(), edge_offset: 0 };
        assert_eq!(trie.leaf_range(root_locus), (1, trie.leaf_count()));
        for node in 0..trie.node_count() as u32 {
            if trie.node_is_leaf(node) {
                continue;
            }
            let (lo, hi) = trie.leaf_range(Locus { node, edge_offset: 0 });
            let mut sum = 0;
            let mut cursor = lo;
            for &t in trie.term_children(node) {
                let (clo, chi) = trie.leaf_range(Locus { node: t, edge_offset: 0 });
                assert_eq!(clo, cursor);
                cursor = chi + 1;
                sum += chi - clo + 1;
            }
            for (_, c) in trie.real_children(node) {
                let (clo, chi) = trie.leaf_range(Locus { node: c, edge_offset: 0 });
                assert_eq!(clo, cursor, "sibling ranges must be adjacent");
                cursor = chi + 1;
                sum += chi - clo + 1;
            }
            if node == trie.root() && trie.leaf_count() == 0 {
                continue;
            }
            assert_eq!(sum, hi - lo + 1);
        }
    }
}
