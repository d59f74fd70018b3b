use std::collections::BTreeMap;

use serde::Serialize;

use super::{precondition, require_minimum_dominating, standard_partition, ConstructionError, StandardPartition};
use crate::graph::{Graph, OrderedVertexList};
use crate::solvers;
use crate::vertex_set::VertexSet;

/// An independent set together with the cell each member represents.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct PartialIsr {
    members: VertexSet,
    /// vertex -> cell index
    index_map: BTreeMap<usize, usize>,
}

impl PartialIsr {
    /// Builds a partial ISR from `(cell index, vertex)` pairs. Nothing is
    /// validated here; use [`check`](Self::check).
    pub fn from_picks(picks: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut isr = PartialIsr::default();
        for (cell, v) in picks {
            isr.members.insert(v);
            isr.index_map.insert(v, cell);
        }
        isr
    }

    pub fn members(&self) -> VertexSet {
        self.members
    }

    pub fn len(&self) -> usize {
        self.index_map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.index_map.is_empty()
    }

    pub fn cell_of(&self, v: usize) -> Option<usize> {
        self.index_map.get(&v).copied()
    }

    /// `i(R)`: the represented cell indices, increasing.
    pub fn indices(&self) -> Vec<usize> {
        let mut idx: Vec<usize> = self.index_map.values().copied().collect();
        idx.sort_unstable();
        idx
    }

    pub fn representative(&self, cell: usize) -> Option<usize> {
        self.index_map.iter().find_map(|(&v, &c)| (c == cell).then_some(v))
    }

    /// `(cell, vertex)` pairs ordered by cell.
    pub fn picks(&self) -> Vec<(usize, usize)> {
        let mut p: Vec<(usize, usize)> = self.index_map.iter().map(|(&v, &c)| (c, v)).collect();
        p.sort_unstable();
        p
    }

    /// Members independent, each member inside its cell, one member per cell.
    pub fn check(&self, g: &Graph, cells: &[VertexSet]) -> Result<(), String> {
        let keys: VertexSet = self.index_map.keys().collect();
        if keys != self.members {
            return Err(format!("members {} disagree with index map {keys}", self.members));
        }
        if !g.is_independent(self.members) {
            return Err(format!("{} is not independent", self.members));
        }
        let mut used = vec![false; cells.len()];
        for (&v, &c) in &self.index_map {
            let cell = cells.get(c).ok_or_else(|| format!("cell index {c} out of range"))?;
            if !cell.contains(v) {
                return Err(format!("vertex {v} is not in cell {c} = {cell}"));
            }
            if std::mem::replace(&mut used[c], true) {
                return Err(format!("cell {c} is represented twice"));
            }
        }
        Ok(())
    }
}

/// Two partial ISRs whose index sets partition the cell indices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IsrPair {
    pub r1: PartialIsr,
    pub r2: PartialIsr,
}

impl IsrPair {
    pub fn check(&self, g: &Graph, cells: &[VertexSet]) -> Result<(), String> {
        self.r1.check(g, cells).map_err(|e| format!("R1: {e}"))?;
        self.r2.check(g, cells).map_err(|e| format!("R2: {e}"))?;
        if self.r1.members.intersects(self.r2.members) {
            return Err("R1 and R2 share vertices".into());
        }
        let mut all: Vec<usize> = self.r1.indices();
        all.extend(self.r2.indices());
        all.sort_unstable();
        if all != (0..cells.len()).collect::<Vec<_>>() {
            return Err(format!(
                "i(R1) and i(R2) do not partition the {} cells: {all:?}",
                cells.len()
            ));
        }
        Ok(())
    }

    pub fn union(&self) -> VertexSet {
        self.r1.members | self.r2.members
    }
}

/// Result of checking the domination condition `γ(G[V_S]) >= 2|S| - 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum HaxellOutcome {
    Ok,
    /// First failing index set (in increasing bitmask order over the cell
    /// indices) and the domination number of the union of its cells.
    Violated {
        indices: Vec<usize>,
        gamma: usize,
    },
}

/// Checks the condition over every nonempty `S ⊆ [k]`; when it holds the
/// family has a full ISR.
pub fn haxell_condition(g: &Graph, cells: &[VertexSet]) -> HaxellOutcome {
    let k = cells.len();
    assert!(k < 32, "too many cells to enumerate index sets");
    for mask in 1u32..(1 << k) {
        let union = (0..k)
            .filter(|i| mask >> i & 1 == 1)
            .fold(VertexSet::EMPTY, |acc, i| acc | cells[i]);
        let gamma = solvers::min_dominating_set(g, union, union).map_or(0, |d| d.len());
        if gamma + 1 < 2 * mask.count_ones() as usize {
            return HaxellOutcome::Violated {
                indices: (0..k).filter(|i| mask >> i & 1 == 1).collect(),
                gamma,
            };
        }
    }
    HaxellOutcome::Ok
}

fn isr_rec(g: &Graph, cells: &[VertexSet], i: usize, blocked: VertexSet, picks: &mut Vec<(usize, usize)>) -> bool {
    if i == cells.len() {
        return true;
    }
    if cells[i..].iter().any(|&c| (c - blocked).is_empty()) {
        return false;
    }
    for v in cells[i] - blocked {
        picks.push((i, v));
        if isr_rec(g, cells, i + 1, blocked | g.neighbors(v).with(v), picks) {
            return true;
        }
        picks.pop();
    }
    false
}

/// A full ISR of `cells`, found by backtracking over cells in index order.
pub fn find_isr(g: &Graph, cells: &[VertexSet]) -> Option<PartialIsr> {
    let mut picks = Vec::with_capacity(cells.len());
    isr_rec(g, cells, 0, VertexSet::EMPTY, &mut picks).then(|| PartialIsr::from_picks(picks))
}

/// Every full ISR of `cells`, in lexicographic order of the picks.
pub fn enumerate_isrs(g: &Graph, cells: &[VertexSet]) -> Vec<PartialIsr> {
    fn rec(
        g: &Graph,
        cells: &[VertexSet],
        i: usize,
        blocked: VertexSet,
        picks: &mut Vec<(usize, usize)>,
        out: &mut Vec<PartialIsr>,
    ) {
        if i == cells.len() {
            out.push(PartialIsr::from_picks(picks.iter().copied()));
            return;
        }
        if cells[i..].iter().any(|&c| (c - blocked).is_empty()) {
            return;
        }
        for v in cells[i] - blocked {
            picks.push((i, v));
            rec(g, cells, i + 1, blocked | g.neighbors(v).with(v), picks, out);
            picks.pop();
        }
    }
    let mut out = Vec::new();
    rec(g, cells, 0, VertexSet::EMPTY, &mut Vec::new(), &mut out);
    out
}

/// A partial ISR representing as many cells as possible.
pub fn max_partial_isr(g: &Graph, cells: &[VertexSet]) -> PartialIsr {
    fn rec(
        g: &Graph,
        cells: &[VertexSet],
        i: usize,
        blocked: VertexSet,
        picks: &mut Vec<(usize, usize)>,
        best: &mut Option<Vec<(usize, usize)>>,
    ) {
        if let Some(b) = best {
            let open = cells[i..].iter().filter(|&&c| !(c - blocked).is_empty()).count();
            if picks.len() + open <= b.len() {
                return;
            }
        }
        if i == cells.len() {
            *best = Some(picks.clone());
            return;
        }
        for v in cells[i] - blocked {
            picks.push((i, v));
            rec(g, cells, i + 1, blocked | g.neighbors(v).with(v), picks, best);
            picks.pop();
        }
        rec(g, cells, i + 1, blocked, picks, best);
    }
    let mut best = None;
    rec(g, cells, 0, VertexSet::EMPTY, &mut Vec::new(), &mut best);
    PartialIsr::from_picks(best.unwrap_or_default())
}

/// Two partial ISRs of `cells` that split the cell indices between them,
/// if any exist. Equivalent to a full ISR of the doubled family.
pub fn find_isr_pair(g: &Graph, cells: &[VertexSet]) -> Option<IsrPair> {
    fn rec(
        g: &Graph,
        cells: &[VertexSet],
        i: usize,
        blocked: [VertexSet; 2],
        picks: &mut [Vec<(usize, usize)>; 2],
    ) -> bool {
        if i == cells.len() {
            return true;
        }
        let open = |c: VertexSet| !(c - blocked[0]).is_empty() || !(c - blocked[1]).is_empty();
        if !cells[i..].iter().all(|&c| open(c)) {
            return false;
        }
        for v in cells[i] {
            for side in 0..2 {
                if blocked[side].contains(v) {
                    continue;
                }
                // Sides are interchangeable until one of them is used.
                if side == 1 && picks[0].is_empty() && picks[1].is_empty() {
                    continue;
                }
                let mut next = blocked;
                next[side] |= g.neighbors(v).with(v);
                next[1 - side].insert(v);
                picks[side].push((i, v));
                if rec(g, cells, i + 1, next, picks) {
                    return true;
                }
                picks[side].pop();
            }
        }
        false
    }
    let mut picks = [Vec::new(), Vec::new()];
    rec(g, cells, 0, [VertexSet::EMPTY; 2], &mut picks).then(|| {
        let [p1, p2] = picks;
        IsrPair {
            r1: PartialIsr::from_picks(p1),
            r2: PartialIsr::from_picks(p2),
        }
    })
}

/// The standard partition of `(V - D) - N(F)` subject to `ordering` of
/// `D - F`, after checking that `D` is a minimum dominating set, `F` a
/// maximal independent subset of `D` and `ordering` an ordering of `D - F`.
pub fn two_isr_partition(
    g: &Graph,
    d_set: VertexSet,
    f_set: VertexSet,
    ordering: &OrderedVertexList,
) -> Result<StandardPartition, ConstructionError> {
    require_minimum_dominating(g, d_set)?;
    if !f_set.is_subset(d_set) {
        return Err(precondition(format!("F = {f_set} is not contained in D = {d_set}")));
    }
    if !g.is_independent(f_set) {
        return Err(precondition(format!("F = {f_set} is not independent")));
    }
    if let Some(v) = (d_set - g.closed_neighborhood(f_set)).first() {
        return Err(precondition(format!(
            "F = {f_set} is not maximal in D: {v} can be added"
        )));
    }
    if ordering.to_set() != d_set - f_set {
        return Err(precondition("ordering does not enumerate D - F"));
    }
    let universe = g.vertices() - d_set - g.open_neighborhood(f_set);
    standard_partition(g, ordering, universe)
}

/// Two partial ISRs `R1`, `R2` of the standard partition of `G - D - N(F)`
/// with `i(R1) ∩ i(R2) = ∅` and `i(R1) ∪ i(R2) = [n]`.
pub fn two_partial_isrs(
    g: &Graph,
    d_set: VertexSet,
    f_set: VertexSet,
    ordering: &OrderedVertexList,
) -> Result<IsrPair, ConstructionError> {
    let partition = two_isr_partition(g, d_set, f_set, ordering)?;
    let pair = find_isr_pair(g, &partition.cells).ok_or_else(|| {
        super::contradiction(format!(
            "no pair of partial ISRs covers the cells {:?} (D = {d_set}, F = {f_set})",
            partition.cells
        ))
    })?;
    pair.check(g, &partition.cells).map_err(super::contradiction)?;
    Ok(pair)
}
