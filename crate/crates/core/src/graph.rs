//! The graph of symplectic resolutions of a fixed orbit closure.
//!
//! Nodes are the resolutions (flag types); edges come from swapping two
//! adjacent distinct flag jumps (classified as MET or isomorphism in
//! codimension 2 by the `p_j = p_{j-1} + 1` criterion, with the MET center
//! computed explicitly) and, in even orthogonal algebras with a maximal
//! isotropic step, from flipping the component sign (a family of type-D
//! flops, always an isomorphism in codimension 2). The graph of any orbit
//! with at least one polarization is connected, which is the combinatorial
//! shadow of the theorem that any two symplectic resolutions are linked by
//! a chain of METs in codimension 2.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::Error;
use crate::orbit::{EdgeClass, NilpotentOrbit};
use crate::partition::{ord, pai_parameter, spaltenstein, Epsilon, Partition};
use crate::polarization::{polarizations, FlagType, Resolution};

/// The move an edge realizes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Move {
    /// Adjacent transposition at 1-based flag position `j` (within the
    /// half for isotropic flags).
    Swap { j: usize },
    /// Type-D sign flip between the two maximal-isotropic components.
    SignFlip,
}

/// An undirected edge between two resolutions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphEdge {
    pub a: usize,
    pub b: usize,
    pub class: EdgeClass,
    pub mv: Move,
}

/// All resolutions of one orbit closure with classified edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResolutionGraph {
    pub orbit: NilpotentOrbit,
    pub nodes: Vec<Resolution>,
    pub edges: Vec<GraphEdge>,
}

impl ResolutionGraph {
    pub fn node_index(&self, label: &str) -> Option<usize> {
        self.nodes.iter().position(|n| n.label == label)
    }

    /// Sorted adjacency lists (neighbor, edge index).
    fn adjacency(&self) -> Vec<Vec<(usize, usize)>> {
        let mut adj = alloc::vec![Vec::new(); self.nodes.len()];
        for (ei, e) in self.edges.iter().enumerate() {
            adj[e.a].push((e.b, ei));
            adj[e.b].push((e.a, ei));
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    pub fn is_connected(&self) -> bool {
        if self.nodes.is_empty() {
            return false;
        }
        let adj = self.adjacency();
        let mut seen = alloc::vec![false; self.nodes.len()];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        while let Some(v) = queue.pop_front() {
            for &(w, _) in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    pub fn edge_between(&self, a: &str, b: &str) -> Option<&GraphEdge> {
        let (i, j) = (self.node_index(a)?, self.node_index(b)?);
        self.edges
            .iter()
            .find(|e| (e.a == i && e.b == j) || (e.a == j && e.b == i))
    }
}

/// A path in the resolution graph: the visited nodes and the traversed
/// edges, in order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphPath {
    pub nodes: Vec<usize>,
    pub edges: Vec<GraphEdge>,
}

impl GraphPath {
    pub fn reversed(&self) -> GraphPath {
        GraphPath {
            nodes: self.nodes.iter().rev().copied().collect(),
            edges: self.edges.iter().rev().cloned().collect(),
        }
    }
}

/// Classifies the swap of the adjacent jumps `p_{j-1} < p_j` of a type-A
/// flag (1-based `j`): a MET when `p_j = p_{j-1} + 1`, with center given
/// by [`met_center_a`] at `r = p_{j-1}`, otherwise an isomorphism in
/// codimension 2.
pub fn classify_swap_a(d: &Partition, flag: &FlagType, j: usize) -> Result<EdgeClass, Error> {
    let FlagType::Linear { parts } = flag else {
        return Err(Error::Precondition(String::from("type-A flag expected")));
    };
    if j < 2 || j > parts.len() {
        return Err(Error::Precondition(format!(
            "swap position {} out of range",
            j
        )));
    }
    if ord(parts).as_ref() != Ok(d) {
        return Err(Error::Precondition(format!(
            "flag {:?} is not a polarization of {}",
            parts, d
        )));
    }
    let (lo, hi) = (parts[j - 2], parts[j - 1]);
    if lo >= hi {
        return Err(Error::Precondition(format!(
            "swap must be oriented ascending, got p_{} = {} >= p_{} = {}",
            j - 1,
            lo,
            j,
            hi
        )));
    }
    if hi == lo + 1 {
        Ok(EdgeClass::Met {
            center: met_center_a(d, lo)?,
        })
    } else {
        Ok(EdgeClass::IsoCodim2)
    }
}

/// The MET center for a type-A swap at `r`: decrement `d_r`, increment
/// `d_{r+2}` (reading 0 past the end), re-sort.
pub fn met_center_a(d: &Partition, r: usize) -> Result<Partition, Error> {
    if d.part(r) == 0 {
        return Err(Error::Precondition(format!("d_{} is zero", r)));
    }
    let len = d.len().max(r + 2);
    let mut parts: Vec<usize> = (1..=len).map(|i| d.part(i)).collect();
    parts[r - 1] -= 1;
    parts[r + 1] += 1;
    Partition::from_parts(parts)
}

/// Classifies the swap of the adjacent half jumps `p_{j-1} < p_j` of an
/// isotropic flag (1-based `j` within the half; the mirror positions
/// follow along). MET when `p_j = p_{j-1} + 1`, centered at
/// [`met_center_bcd`] of `e = ord(expanded flag)` at `r = p_{j-1}`.
pub fn classify_swap_bcd(
    orbit: &NilpotentOrbit,
    flag: &FlagType,
    j: usize,
) -> Result<EdgeClass, Error> {
    let eps = orbit
        .algebra()
        .epsilon()
        .ok_or_else(|| Error::Precondition(String::from("so/sp orbit expected")))?;
    let FlagType::Isotropic { half, .. } = flag else {
        return Err(Error::Precondition(String::from("isotropic flag expected")));
    };
    if j < 2 || j > half.len() {
        return Err(Error::Precondition(format!(
            "swap position {} out of range",
            j
        )));
    }
    let e = ord(&flag.expanded())?;
    if spaltenstein(&e, eps).as_ref() != Ok(orbit.jordan_type()) {
        return Err(Error::Precondition(format!(
            "flag {} is not a polarization of {}",
            flag, orbit
        )));
    }
    let (lo, hi) = (half[j - 2], half[j - 1]);
    if lo >= hi {
        return Err(Error::Precondition(format!(
            "swap must be oriented ascending, got p_{} = {} >= p_{} = {}",
            j - 1,
            lo,
            j,
            hi
        )));
    }
    if hi == lo + 1 {
        Ok(EdgeClass::Met {
            center: met_center_bcd(&e, lo, eps)?,
        })
    } else {
        Ok(EdgeClass::IsoCodim2)
    }
}

/// The MET center for an isotropic swap: move 2 from `e_r` to `e_{r+2}`
/// (reading 0 past the end), re-sort — the result stays in the same
/// `Pai(n, q)` — and apply the Spaltenstein map.
pub fn met_center_bcd(e: &Partition, r: usize, eps: Epsilon) -> Result<Partition, Error> {
    if e.part(r) < 2 {
        return Err(Error::Precondition(format!("e_{} is below 2", r)));
    }
    let q = pai_parameter(e, eps).ok_or(Error::NotInPai)?;
    let len = e.len().max(r + 2);
    let mut parts: Vec<usize> = (1..=len).map(|i| e.part(i)).collect();
    parts[r - 1] -= 2;
    parts[r + 1] += 2;
    let shifted = Partition::from_parts(parts)?;
    if pai_parameter(&shifted, eps) != Some(q) {
        return Err(Error::Inconsistency(format!(
            "shifted partition {} left Pai(n, {})",
            shifted, q
        )));
    }
    spaltenstein(&shifted, eps)
}

/// Builds the full resolution graph of an orbit closure.
///
/// Errors with [`Error::NoPolarizations`] when the orbit has none.
pub fn build_graph(orbit: &NilpotentOrbit) -> Result<ResolutionGraph, Error> {
    let flags = polarizations(orbit)?;
    if flags.is_empty() {
        return Err(Error::NoPolarizations);
    }
    let nodes: Vec<Resolution> = flags
        .iter()
        .map(|f| Resolution::new(orbit.clone(), f.clone()))
        .collect();
    let index: BTreeMap<&FlagType, usize> = flags.iter().enumerate().map(|(i, f)| (f, i)).collect();
    let mut edges = Vec::new();
    for (i, flag) in flags.iter().enumerate() {
        match flag {
            FlagType::Linear { parts } => {
                for j in 2..=parts.len() {
                    if parts[j - 2] == parts[j - 1] {
                        continue;
                    }
                    let mut swapped = parts.clone();
                    swapped.swap(j - 2, j - 1);
                    let target = FlagType::Linear { parts: swapped };
                    let t = *index.get(&target).ok_or_else(|| {
                        Error::Inconsistency(String::from("swap target missing from node set"))
                    })?;
                    if i < t {
                        let ascending = if parts[j - 2] < parts[j - 1] {
                            flag
                        } else {
                            &target
                        };
                        let class = classify_swap_a(orbit.jordan_type(), ascending, j)?;
                        edges.push(GraphEdge {
                            a: i,
                            b: t,
                            class,
                            mv: Move::Swap { j },
                        });
                    }
                }
            }
            FlagType::Isotropic { half, middle, sign } => {
                for j in 2..=half.len() {
                    if half[j - 2] == half[j - 1] {
                        continue;
                    }
                    let mut swapped = half.clone();
                    swapped.swap(j - 2, j - 1);
                    let target = FlagType::Isotropic {
                        half: swapped,
                        middle: *middle,
                        sign: *sign,
                    };
                    let t = *index.get(&target).ok_or_else(|| {
                        Error::Inconsistency(String::from("swap target missing from node set"))
                    })?;
                    if i < t {
                        let ascending = if half[j - 2] < half[j - 1] {
                            flag
                        } else {
                            &target
                        };
                        let class = classify_swap_bcd(orbit, ascending, j)?;
                        edges.push(GraphEdge {
                            a: i,
                            b: t,
                            class,
                            mv: Move::Swap { j },
                        });
                    }
                }
                // The type-D flop family between the two components.
                if flag.sign() == Some(crate::polarization::Sign::Plus) {
                    let target = flag.with_flipped_sign().expect("signed flag");
                    let t = *index.get(&target).ok_or_else(|| {
                        Error::Inconsistency(String::from("sign partner missing from node set"))
                    })?;
                    edges.push(GraphEdge {
                        a: i.min(t),
                        b: i.max(t),
                        class: EdgeClass::IsoCodim2,
                        mv: Move::SignFlip,
                    });
                }
            }
        }
    }
    Ok(ResolutionGraph {
        orbit: orbit.clone(),
        nodes,
        edges,
    })
}

/// Shortest path between two node labels (BFS; ties broken by node order,
/// which is the lexicographic enumeration order).
pub fn connect(graph: &ResolutionGraph, from: &str, to: &str) -> Result<GraphPath, Error> {
    let start = graph
        .node_index(from)
        .ok_or_else(|| Error::UnknownNode(String::from(from)))?;
    let goal = graph
        .node_index(to)
        .ok_or_else(|| Error::UnknownNode(String::from(to)))?;
    if start == goal {
        return Ok(GraphPath {
            nodes: alloc::vec![start],
            edges: Vec::new(),
        });
    }
    let adj = graph.adjacency();
    let mut prev: Vec<Option<(usize, usize)>> = alloc::vec![None; graph.nodes.len()];
    let mut seen = alloc::vec![false; graph.nodes.len()];
    let mut queue = VecDeque::from([start]);
    seen[start] = true;
    'bfs: while let Some(v) = queue.pop_front() {
        for &(w, ei) in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                prev[w] = Some((v, ei));
                if w == goal {
                    break 'bfs;
                }
                queue.push_back(w);
            }
        }
    }
    if !seen[goal] {
        // Unreachable for well-formed graphs: they are connected.
        return Err(Error::Inconsistency(String::from("graph is disconnected")));
    }
    let mut nodes = alloc::vec![goal];
    let mut edges = Vec::new();
    let mut at = goal;
    while let Some((p, ei)) = prev[at] {
        edges.push(graph.edges[ei].clone());
        nodes.push(p);
        at = p;
    }
    nodes.reverse();
    edges.reverse();
    Ok(GraphPath { nodes, edges })
}

/// The multiset of MET centers along a path, reduced modulo 2: a center
/// crossed an even number of times is not really a center of the composite
/// map. Returned sorted.
pub fn net_centers(path: &GraphPath) -> Vec<Partition> {
    let mut counts: BTreeMap<&Partition, usize> = BTreeMap::new();
    for e in &path.edges {
        if let EdgeClass::Met { center } = &e.class {
            *counts.entry(center).or_insert(0) += 1;
        }
    }
    counts
        .into_iter()
        .filter(|(_, c)| c % 2 == 1)
        .map(|(p, _)| p.clone())
        .collect()
}
