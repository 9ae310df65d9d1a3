use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Combinatorial type of a stable genus-0 curve: a tree of components
/// (vertices) with the marked points `1..=n` attached as legs.
///
/// Values are always canonical. Vertex 0 carries leg 1, the remaining
/// vertices are numbered in preorder with children visited by smallest leg
/// label below them, so two trees compare equal exactly when they are
/// isomorphic as leg-labeled trees.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct DualTree {
    vertex_count: usize,
    // (parent, child), sorted by child
    edges: Vec<(usize, usize)>,
    // legs[i] is the vertex holding leg i + 1
    legs: Vec<usize>,
}

struct Node {
    legs: Vec<usize>,
    children: Vec<Node>,
    min_leg: usize,
}

impl DualTree {
    /// Builds a tree from arbitrary vertex numbering. `legs[i]` is the vertex
    /// holding leg `i + 1`.
    pub fn new(vertex_count: usize, edges: &[(usize, usize)], legs: &[usize]) -> Result<Self> {
        let bad = |msg: String| Err(Error::InvalidArgument(msg));
        if vertex_count == 0 {
            return bad("a dual tree needs at least one vertex".into());
        }
        if legs.len() < 3 {
            return bad(format!("n must be >= 3, got {} legs", legs.len()));
        }
        if edges.len() + 1 != vertex_count {
            return bad(format!(
                "{} edges on {vertex_count} vertices cannot form a tree",
                edges.len()
            ));
        }
        let mut adj = vec![Vec::new(); vertex_count];
        for &(a, b) in edges {
            if a >= vertex_count || b >= vertex_count || a == b {
                return bad(format!("invalid edge ({a}, {b})"));
            }
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut leg_lists = vec![Vec::new(); vertex_count];
        for (i, &v) in legs.iter().enumerate() {
            if v >= vertex_count {
                return bad(format!("leg {} on missing vertex {v}", i + 1));
            }
            leg_lists[v].push(i + 1);
        }
        for v in 0..vertex_count {
            let valence = adj[v].len() + leg_lists[v].len();
            if valence < 3 {
                return bad(format!("vertex {v} has valence {valence} < 3"));
            }
        }

        let root = legs[0];
        let mut seen = vec![false; vertex_count];
        let node = build(root, &adj, &leg_lists, &mut seen);
        if seen.iter().any(|s| !s) {
            return bad("edges do not connect all vertices".into());
        }

        let mut tree = DualTree {
            vertex_count,
            edges: Vec::with_capacity(edges.len()),
            legs: vec![0; legs.len()],
        };
        let mut next = 0;
        tree.number(&node, None, &mut next);
        tree.edges.sort_by_key(|&(_, c)| c);
        Ok(tree)
    }

    fn number(&mut self, node: &Node, parent: Option<usize>, next: &mut usize) {
        let id = *next;
        *next += 1;
        if let Some(p) = parent {
            self.edges.push((p, id));
        }
        for &l in &node.legs {
            self.legs[l - 1] = id;
        }
        for child in &node.children {
            self.number(child, Some(id), next);
        }
    }

    /// Number of marked points.
    pub fn n(&self) -> usize {
        self.legs.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// `k(ρ)`: the number of intersection points.
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// `legs()[i]` is the vertex carrying leg `i + 1`.
    pub fn legs(&self) -> &[usize] {
        &self.legs
    }

    /// Special points on each component: incident edges plus legs.
    pub fn valences(&self) -> Vec<usize> {
        let mut val = vec![0; self.vertex_count];
        for &(a, b) in &self.edges {
            val[a] += 1;
            val[b] += 1;
        }
        for &v in &self.legs {
            val[v] += 1;
        }
        val
    }

    /// Canonical text form, e.g. `(1 2 ((3 4) 5))`: a vertex lists its legs
    /// and child subtrees ordered by smallest leg label, rooted at leg 1.
    pub fn serialization(&self) -> String {
        let mut out = String::new();
        self.write_vertex(0, &mut out);
        out
    }

    fn write_vertex(&self, v: usize, out: &mut String) {
        // (min leg, item) pairs; a child's min leg is its first leg in preorder
        let mut items: Vec<(usize, Option<usize>)> = self
            .legs
            .iter()
            .enumerate()
            .filter(|&(_, &w)| w == v)
            .map(|(i, _)| (i + 1, None))
            .collect();
        for &(p, c) in &self.edges {
            if p == v {
                items.push((self.min_leg_below(c), Some(c)));
            }
        }
        items.sort_unstable();
        out.push('(');
        for (idx, (label, child)) in items.into_iter().enumerate() {
            if idx > 0 {
                out.push(' ');
            }
            match child {
                None => out.push_str(&label.to_string()),
                Some(c) => self.write_vertex(c, out),
            }
        }
        out.push(')');
    }

    fn min_leg_below(&self, v: usize) -> usize {
        // preorder numbering puts every descendant of v in v..v+size
        let mut end = v + 1;
        while end < self.vertex_count && self.parent(end).is_some_and(|p| p >= v) {
            end += 1;
        }
        self.legs
            .iter()
            .enumerate()
            .filter(|&(_, &w)| (v..end).contains(&w))
            .map(|(i, _)| i + 1)
            .min()
            .expect("every subtree carries a leg")
    }

    fn parent(&self, v: usize) -> Option<usize> {
        self.edges.iter().find(|&&(_, c)| c == v).map(|&(p, _)| p)
    }
}

fn build(v: usize, adj: &[Vec<usize>], legs: &[Vec<usize>], seen: &mut [bool]) -> Node {
    seen[v] = true;
    let mut children: Vec<Node> = Vec::new();
    for &w in &adj[v] {
        if !seen[w] {
            children.push(build(w, adj, legs, seen));
        }
    }
    children.sort_by_key(|c| c.min_leg);
    let own = legs[v].iter().copied().min().unwrap_or(usize::MAX);
    let min_leg = children.iter().map(|c| c.min_leg).fold(own, usize::min);
    Node { legs: legs[v].clone(), children, min_leg }
}

impl fmt::Display for DualTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.serialization())
    }
}

/// Parses the form produced by [`DualTree::serialization`]; any vertex
/// numbering or item order is accepted and canonicalized.
impl FromStr for DualTree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidArgument(format!("malformed dual tree `{s}`"));
        let mut stack: Vec<usize> = Vec::new();
        let mut edges = Vec::new();
        let mut leg_at: Vec<(usize, usize)> = Vec::new();
        let mut vertices = 0;
        let mut closed_root = false;
        let mut chars = s.trim().chars().peekable();
        while let Some(ch) = chars.next() {
            match ch {
                '(' => {
                    if closed_root {
                        return Err(bad());
                    }
                    if let Some(&p) = stack.last() {
                        edges.push((p, vertices));
                    } else if vertices > 0 {
                        return Err(bad());
                    }
                    stack.push(vertices);
                    vertices += 1;
                }
                ')' => {
                    stack.pop().ok_or_else(bad)?;
                    closed_root = stack.is_empty();
                }
                c if c.is_ascii_digit() => {
                    let mut num = c.to_string();
                    while let Some(d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                        num.push(*d);
                        chars.next();
                    }
                    let v = *stack.last().ok_or_else(bad)?;
                    leg_at.push((num.parse().map_err(|_| bad())?, v));
                }
                c if c.is_whitespace() => {}
                _ => return Err(bad()),
            }
        }
        if !closed_root {
            return Err(bad());
        }
        leg_at.sort_unstable();
        let n = leg_at.len();
        if leg_at.iter().enumerate().any(|(i, &(l, _))| l != i + 1) {
            return Err(Error::InvalidArgument(format!("legs of `{s}` are not exactly 1..={n}")));
        }
        let legs: Vec<usize> = leg_at.into_iter().map(|(_, v)| v).collect();
        DualTree::new(vertices, &edges, &legs)
    }
}
