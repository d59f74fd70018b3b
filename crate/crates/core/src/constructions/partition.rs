use serde::Serialize;

use super::ConstructionError;
use crate::graph::{Graph, OrderedVertexList};
use crate::vertex_set::VertexSet;

/// Greedy cells `V_i = N_Y(x_i) \ (V_1 ∪ .. ∪ V_{i-1})` of a set `Y`, relative
/// to an ordering `(x_1, .., x_k)` of a set `X` that dominates `Y`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StandardPartition {
    pub reps: Vec<usize>,
    pub cells: Vec<VertexSet>,
    pub universe: VertexSet,
}

/// Builds the standard partition of `y` with respect to the ordering `x`.
pub fn standard_partition(
    g: &Graph,
    x: &OrderedVertexList,
    y: VertexSet,
) -> Result<StandardPartition, ConstructionError> {
    g.check_set(y)?;
    let xs = x.to_set();
    g.check_set(xs)?;
    if xs.intersects(y) {
        return Err(ConstructionError::NotDisjoint(xs & y));
    }
    if let Some(vertex) = (y - g.open_neighborhood(xs)).first() {
        return Err(ConstructionError::NotDominated { vertex });
    }
    let mut taken = VertexSet::EMPTY;
    let cells = x
        .as_slice()
        .iter()
        .map(|&xi| {
            let cell = (g.neighbors(xi) & y) - taken;
            taken |= cell;
            cell
        })
        .collect();
    Ok(StandardPartition {
        reps: x.as_slice().to_vec(),
        cells,
        universe: y,
    })
}

impl StandardPartition {
    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Index of the cell containing `v`.
    pub fn cell_of(&self, v: usize) -> Option<usize> {
        self.cells.iter().position(|c| c.contains(v))
    }

    /// Union of the cells with the given indices.
    pub fn union_of(&self, indices: impl IntoIterator<Item = usize>) -> VertexSet {
        indices.into_iter().fold(VertexSet::EMPTY, |acc, i| acc | self.cells[i])
    }

    /// Recomputes the cells from `reps` and `universe` and compares.
    pub fn check(&self, g: &Graph) -> Result<(), String> {
        let mut union = VertexSet::EMPTY;
        for (i, (&rep, &cell)) in self.reps.iter().zip(&self.cells).enumerate() {
            let expected = (g.neighbors(rep) & self.universe) - union;
            if cell != expected {
                return Err(format!("cell {i} is {cell}, expected {expected}"));
            }
            union |= cell;
        }
        if union != self.universe {
            return Err(format!("cells cover {union}, universe is {}", self.universe));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn order(v: &[usize], n: usize) -> OrderedVertexList {
        OrderedVertexList::new(v.to_vec(), n).unwrap()
    }

    #[test]
    fn path_partitions_depend_on_order() {
        let p4 = Graph::path(4);
        let y = VertexSet::from([0, 3]);
        let sp = standard_partition(&p4, &order(&[1, 2], 4), y).unwrap();
        assert_eq!(sp.cells, vec![VertexSet::from([0]), VertexSet::from([3])]);
        let sp = standard_partition(&p4, &order(&[2, 1], 4), y).unwrap();
        assert_eq!(sp.cells, vec![VertexSet::from([3]), VertexSet::from([0])]);
        assert_eq!(sp.check(&p4), Ok(()));
    }

    #[test]
    fn single_cell_is_the_neighbourhood() {
        let g = Graph::star(4);
        let sp = standard_partition(&g, &order(&[0], 5), g.neighbors(0)).unwrap();
        assert_eq!(sp.cells, vec![g.neighbors(0)]);
    }

    #[test]
    fn rejects_undominated_and_overlapping_input() {
        let p4 = Graph::path(4);
        assert_eq!(
            standard_partition(&p4, &order(&[1], 4), VertexSet::from([0, 3])),
            Err(ConstructionError::NotDominated { vertex: 3 })
        );
        assert!(matches!(
            standard_partition(&p4, &order(&[1], 4), VertexSet::from([1, 2])),
            Err(ConstructionError::NotDisjoint(_))
        ));
    }

    #[test]
    fn check_detects_tampering() {
        let c = Graph::cycle(6);
        let mut sp = standard_partition(&c, &order(&[0, 3], 6), VertexSet::from([1, 2, 4, 5])).unwrap();
        assert_eq!(sp.check(&c), Ok(()));
        sp.cells.swap(0, 1);
        assert!(sp.check(&c).is_err());
    }
}
