//! Exhaustive backtracking over rotation systems (with edge signatures in the
//! non-orientable case), implemented as incremental edge insertion with face
//! tracing and Euler-genus pruning.
//!
//! Edges are inserted in a connectivity-preserving order. Inserting an edge
//! whose chosen corners lie on two distinct faces merges them (Euler genus
//! +2); inserting into a single face either splits it (+0) or adds a crosscap
//! (+1, negative-signature case). Pruning on the running Euler genus is exact
//! because deleting an edge never increases the Euler genus of a scheme.

use std::time::{Duration, Instant};

use super::scheme::{rev, RotationState};
use crate::graph::SimpleGraph;

/// Wall-clock budget for one embedding decision.
#[derive(Clone, Copy, Debug)]
pub struct Budget {
    deadline: Option<Instant>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget { deadline: None }
    }

    pub fn from_seconds(seconds: f64) -> Self {
        Budget {
            deadline: Some(Instant::now() + Duration::from_secs_f64(seconds)),
        }
    }

    /// The default 60 s decision budget.
    pub fn default_decision() -> Self {
        Budget::from_seconds(60.0)
    }

    fn expired(&self) -> bool {
        self.deadline.is_some_and(|d| Instant::now() >= d)
    }
}

/// The search ran out of budget; reported as "unknown", never as a verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Timeout;

impl std::fmt::Display for Timeout {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "embedding search timed out")
    }
}

impl std::error::Error for Timeout {}

#[derive(Clone, Copy, Debug)]
enum Step {
    /// Edge whose later endpoint is new: joins `new_vertex` to the embedded
    /// part through `anchor`. Signature forced positive (spanning-tree edge).
    Pendant { edge: usize, anchor: usize },
    /// Edge between two embedded vertices; corners and signature are free.
    Chord { edge: usize },
}

/// True iff `g` (connected) embeds in the orientable surface with the given
/// number of handles.
pub fn embeds_in_orientable(
    g: &SimpleGraph,
    genus_target: u32,
    budget: &Budget,
) -> Result<bool, Timeout> {
    assert!(g.is_connected(), "embedding search needs a connected graph");
    let mut engine = Engine::new(g, 2 * genus_target as i64, false, *budget);
    engine.run()
}

/// True iff `g` (connected) embeds in the non-orientable surface with the
/// given number of crosscaps (>= 1). An all-positive scheme counts only
/// through the orientable criterion crosscap <= 2 genus + 1.
pub fn embeds_in_nonorientable(
    g: &SimpleGraph,
    crosscap_target: u32,
    budget: &Budget,
) -> Result<bool, Timeout> {
    assert!(crosscap_target >= 1);
    assert!(g.is_connected(), "embedding search needs a connected graph");
    let mut engine = Engine::new(g, crosscap_target as i64, true, *budget);
    engine.run()
}

struct Engine {
    state: RotationState,
    plan: Vec<Step>,
    root: usize,
    signed: bool,
    /// Maximum allowed Euler genus: 2 * genus for the orientable search, the
    /// crosscap target for the signed one.
    eg_limit: i64,
    negatives: usize,
    nodes: u64,
    budget: Budget,
    /// Stamped scratch for face traces, one slot per (dart, side) state.
    stamp: Vec<u32>,
    current_stamp: u32,
    gap_marks: Vec<u32>,
}

impl Engine {
    fn new(g: &SimpleGraph, eg_limit: i64, signed: bool, budget: Budget) -> Self {
        let (plan, root) = build_plan(g);
        let states = g.edge_count() * 4;
        Engine {
            state: RotationState::new(g.vertex_count(), g.edges()),
            plan,
            root,
            signed,
            eg_limit,
            negatives: 0,
            nodes: 0,
            budget: Budget {
                deadline: budget.deadline,
            },
            stamp: vec![0; states],
            current_stamp: 0,
            gap_marks: Vec::new(),
        }
    }

    fn run(&mut self) -> Result<bool, Timeout> {
        self.search(0, 0, 1)
    }

    /// `faces` counts the faces of the current partial embedding (1 for the
    /// empty one so the arithmetic below stays uniform).
    fn search(&mut self, depth: usize, eg: i64, faces: i64) -> Result<bool, Timeout> {
        if depth == self.plan.len() {
            let ok = if !self.signed {
                true
            } else if self.negatives > 0 {
                eg <= self.eg_limit
            } else {
                eg + 1 <= self.eg_limit
            };
            return Ok(ok);
        }
        self.nodes += 1;
        if self.nodes & 1023 == 0 && self.budget.expired() {
            return Err(Timeout);
        }
        match self.plan[depth] {
            Step::Pendant { edge, anchor } => {
                let (u, _v) = self.state.edges()[edge];
                let anchor_is_tail = u == anchor;
                let deg = self.state.placed_degree(anchor);
                let gaps: Vec<usize> = if deg == 0 {
                    vec![0]
                } else if anchor == self.root && deg == 2 {
                    // A 2-dart rotation is reflection-symmetric, so the two
                    // gap choices for the third dart are mirror images.
                    vec![0]
                } else {
                    (0..deg).collect()
                };
                for gap in gaps {
                    let (gt, gh) = if anchor_is_tail { (gap, 0) } else { (0, gap) };
                    self.state.place_edge(edge, gt, gh, 1);
                    debug_assert_eq!(self.count_faces(), faces);
                    if self.search(depth + 1, eg, faces)? {
                        self.state.unplace_edge(edge);
                        return Ok(true);
                    }
                    self.state.unplace_edge(edge);
                }
                Ok(false)
            }
            Step::Chord { edge } => {
                let (mut u, mut v) = self.state.edges()[edge];
                let mut u_is_tail = true;
                if self.state.placed_degree(v) < self.state.placed_degree(u) {
                    std::mem::swap(&mut u, &mut v);
                    u_is_tail = false;
                }
                let deg_u = self.state.placed_degree(u);
                let deg_v = self.state.placed_degree(v);
                let signs: &[i8] = if self.signed { &[1, -1] } else { &[1] };
                for gap_u in 0..deg_u {
                    let mark = self.mark_gaps_on_face(u, gap_u, v);
                    for gap_v in 0..deg_v {
                        let same_face = self.gap_marks[gap_v] == mark;
                        if !same_face && eg + 2 > self.eg_limit {
                            continue;
                        }
                        for &sign in signs {
                            let (gt, gh) = if u_is_tail {
                                (gap_u, gap_v)
                            } else {
                                (gap_v, gap_u)
                            };
                            self.state.place_edge(edge, gt, gh, sign);
                            if sign < 0 {
                                self.negatives += 1;
                            }
                            let new_faces = self.count_faces();
                            let new_eg = eg + 1 + faces - new_faces;
                            debug_assert!(if same_face {
                                new_faces == faces || new_faces == faces + 1
                            } else {
                                new_faces == faces - 1
                            });
                            let keep = new_eg <= self.eg_limit
                                && self.search(depth + 1, new_eg, new_faces)?;
                            if sign < 0 {
                                self.negatives -= 1;
                            }
                            self.state.unplace_edge(edge);
                            if keep {
                                return Ok(true);
                            }
                        }
                    }
                }
                Ok(false)
            }
        }
    }

    fn next_stamp(&mut self) -> u32 {
        self.current_stamp += 1;
        if self.current_stamp == u32::MAX {
            self.stamp.fill(0);
            self.current_stamp = 1;
        }
        self.current_stamp
    }

    fn count_faces(&mut self) -> i64 {
        let stamp = self.next_stamp();
        let mut faces = 0;
        for e in 0..self.state.edges().len() {
            if !self.state.is_placed(e) {
                continue;
            }
            for dart in [2 * e as u32, 2 * e as u32 + 1] {
                for side in 0..2u32 {
                    let start = dart << 1 | side;
                    if self.stamp[start as usize] == stamp {
                        continue;
                    }
                    faces += 1;
                    let mut s = start;
                    loop {
                        self.stamp[s as usize] = stamp;
                        let mirror = rev(s >> 1) << 1 | (s & 1 ^ 1);
                        self.stamp[mirror as usize] = stamp;
                        s = self.state.successor(s);
                        if s == start {
                            break;
                        }
                    }
                }
            }
        }
        faces
    }

    /// Walks the face through corner (u, gap_u) and stamps every gap of `v`
    /// it passes (in either trace direction) into `gap_marks`, returning the
    /// stamp value used.
    fn mark_gaps_on_face(&mut self, u: usize, gap_u: usize, v: usize) -> u32 {
        let stamp = self.next_stamp();
        self.gap_marks.clear();
        self.gap_marks
            .resize(self.state.placed_degree(v), stamp.wrapping_sub(1));
        // The positive-side state whose transition uses corner (u, gap_u).
        let start = rev(self.state.rotation(u)[gap_u]) << 1;
        let mut s = start;
        loop {
            for state in [s, rev(s >> 1) << 1 | (s & 1 ^ 1)] {
                let (vertex, gap) = self.state.corner_used(state);
                if vertex == v {
                    self.gap_marks[gap] = stamp;
                }
            }
            s = self.state.successor(s);
            if s == start {
                break;
            }
        }
        stamp
    }
}

/// Insertion order: the maximum-degree vertex's star first (its rotation is
/// enumerated up to cyclic rotation and reflection), then remaining vertices
/// by a descending-degree breadth-first order, each contributing its edges
/// back to already-embedded vertices.
fn build_plan(g: &SimpleGraph) -> (Vec<Step>, usize) {
    let n = g.vertex_count();
    if n == 0 {
        return (Vec::new(), 0);
    }
    let root = (0..n).max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v))).unwrap();
    let mut order_index = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut push = |v: usize, order: &mut Vec<usize>, order_index: &mut Vec<usize>| {
        order_index[v] = order.len();
        order.push(v);
    };
    push(root, &mut order, &mut order_index);
    let sorted_neighbors = |v: usize| {
        let mut nbrs: Vec<usize> = g.neighbors(v).to_vec();
        nbrs.sort_by_key(|&w| (std::cmp::Reverse(g.degree(w)), w));
        nbrs
    };
    for w in sorted_neighbors(root) {
        if order_index[w] == usize::MAX {
            push(w, &mut order, &mut order_index);
        }
    }
    let mut head = 1;
    while head < order.len() {
        let v = order[head];
        head += 1;
        for w in sorted_neighbors(v) {
            if order_index[w] == usize::MAX {
                push(w, &mut order, &mut order_index);
            }
        }
    }
    assert_eq!(order.len(), n, "embedding search needs a connected graph");

    let edge_index: std::collections::HashMap<(usize, usize), usize> = g
        .edges()
        .iter()
        .enumerate()
        .map(|(i, &e)| (e, i))
        .collect();
    let index_of = |a: usize, b: usize| edge_index[&(a.min(b), a.max(b))];

    let mut plan = Vec::with_capacity(g.edge_count());
    // Root star: each root neighbor joins through the root.
    for &w in order.iter().skip(1) {
        if g.has_edge(root, w) {
            plan.push(Step::Pendant {
                edge: index_of(root, w),
                anchor: root,
            });
        }
    }
    // Every other edge is planned at its later endpoint.
    for &v in order.iter().skip(1) {
        let mut earlier: Vec<usize> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&u| order_index[u] < order_index[v] && u != root)
            .collect();
        earlier.sort_by_key(|&u| order_index[u]);
        let connected_via_root = g.has_edge(root, v);
        let mut connected = connected_via_root;
        for u in earlier {
            if !connected {
                plan.push(Step::Pendant {
                    edge: index_of(u, v),
                    anchor: u,
                });
                connected = true;
            } else {
                plan.push(Step::Chord {
                    edge: index_of(u, v),
                });
            }
        }
    }
    debug_assert_eq!(plan.len(), g.edge_count());
    (plan, root)
}
