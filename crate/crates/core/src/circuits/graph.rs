use std::fmt::Write as _;

use crate::error::{Error, Result};

use super::{compose_reductions, identity_reduction, registry, MapId, Reduction};

/// The eight maps shown to be mutually reducible.
pub const CORE_MAPS: [MapId; 8] = [
    MapId::Phi,
    MapId::Psi,
    MapId::PhiLr,
    MapId::Zeta,
    MapId::XiN,
    MapId::Chi,
    MapId::Rho1,
    MapId::Rho2,
];

const N: usize = MapId::ALL.len();

fn idx(m: MapId) -> usize {
    MapId::ALL.iter().position(|&x| x == m).expect("every map is listed")
}

/// Maps as nodes, reductions as edges weighted by their cost. A path composes by
/// multiplying costs, so the cheapest composite is a shortest path under products.
pub struct ReductionGraph {
    edges: Vec<Reduction>,
    cost: [[Option<usize>; N]; N],
    next: [[Option<usize>; N]; N],
}

impl ReductionGraph {
    pub fn new(edges: Vec<Reduction>) -> Self {
        let mut cost = [[None; N]; N];
        let mut next = [[None; N]; N];
        for (i, row) in cost.iter_mut().enumerate() {
            row[i] = Some(1);
        }
        for (e, r) in edges.iter().enumerate() {
            let (s, b) = (idx(r.source), idx(r.base));
            if s != b && cost[s][b].is_none_or(|c| r.declared_cost < c) {
                cost[s][b] = Some(r.declared_cost);
                next[s][b] = Some(e);
            }
        }
        // next[s][t] holds the first edge of the cheapest path.
        for m in 0..N {
            for s in 0..N {
                for t in 0..N {
                    if let (Some(a), Some(b)) = (cost[s][m], cost[m][t]) {
                        if s != t && cost[s][t].is_none_or(|c| a * b < c) {
                            cost[s][t] = Some(a * b);
                            next[s][t] = next[s][m];
                        }
                    }
                }
            }
        }
        ReductionGraph { edges, cost, next }
    }

    pub fn standard() -> Self {
        ReductionGraph::new(registry())
    }

    pub fn edges(&self) -> &[Reduction] {
        &self.edges
    }

    /// Least number of `to` calls needed to compute `from`.
    pub fn min_cost(&self, from: MapId, to: MapId) -> Option<usize> {
        self.cost[idx(from)][idx(to)]
    }

    /// Edges of the cheapest path from `from` to `to`.
    pub fn path(&self, from: MapId, to: MapId) -> Result<Vec<&Reduction>> {
        let unreachable = || Error::Unreachable { from: from.to_string(), to: to.to_string() };
        self.min_cost(from, to).ok_or_else(unreachable)?;
        let mut out = Vec::new();
        let mut at = idx(from);
        while at != idx(to) {
            let e = &self.edges[self.next[at][idx(to)].ok_or_else(unreachable)?];
            at = idx(e.base);
            out.push(e);
        }
        Ok(out)
    }

    /// The cheapest composite reduction `from ↪ to`.
    pub fn reduce(&self, from: MapId, to: MapId) -> Result<Reduction> {
        let mut path = self.path(from, to)?.into_iter();
        let Some(head) = path.next() else { return Ok(identity_reduction(from)) };
        path.try_fold(head.clone(), |acc, r| compose_reductions(&acc, r))
    }

    /// The largest minimal cost over ordered pairs of distinct maps in `maps`.
    pub fn max_min_cost(&self, maps: &[MapId]) -> Option<(MapId, MapId, usize)> {
        let mut best = None;
        for &s in maps {
            for &t in maps {
                if s == t {
                    continue;
                }
                let c = self.min_cost(s, t)?;
                if best.is_none_or(|(_, _, b)| c > b) {
                    best = Some((s, t, c));
                }
            }
        }
        best
    }

    /// Graphviz rendering; restricted reductions are dashed.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph reductions {\n");
        for m in MapId::ALL {
            let _ = writeln!(s, "  \"{m}\";");
        }
        for r in &self.edges {
            let style = if r.restricted { ", style=dashed" } else { "" };
            let _ = writeln!(
                s,
                "  \"{}\" -> \"{}\" [label=\"{} ({})\"{style}];",
                r.source, r.base, r.name, r.declared_cost
            );
        }
        s.push_str("}\n");
        s
    }
}
