//! The tournament process (synchronous neighbourhood maximum on integer ranks)
//! and the tournament expansion of a 3-color trajectory on a tree.

use alloc::vec::Vec;

use crate::{Coloring, DynamicsKind, Graph, Irrotationality, OneForm, Result};

/// Ranks `rk_t` on a graph. Stepping is pointwise nondecreasing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TournamentState<'g> {
    graph: &'g Graph,
    ranks: Vec<i64>,
}

impl<'g> TournamentState<'g> {
    pub fn new(graph: &'g Graph, ranks: Vec<i64>) -> Result<Self> {
        if ranks.len() != graph.n() {
            return Err(crate::Error::LengthMismatch { expected: graph.n(), got: ranks.len() });
        }
        Ok(TournamentState { graph, ranks })
    }

    pub fn ranks(&self) -> &[i64] {
        &self.ranks
    }

    /// `rk_{t+1}(x) = max { rk_t(y) : y ∈ N(x) ∪ {x} }`.
    pub fn step(&self) -> TournamentState<'g> {
        let ranks = (0..self.graph.n())
            .map(|x| {
                self.graph.neighbors(x).iter().map(|&y| self.ranks[y]).fold(self.ranks[x], i64::max)
            })
            .collect();
        TournamentState { graph: self.graph, ranks }
    }
}

/// Initial ranking of the tournament expansion based at `base`: the path integral
/// of `dX_0` from `base`. Only defined on trees.
pub fn expansion_ranking(
    tree: &Graph,
    coloring: &Coloring,
    kind: DynamicsKind,
    base: usize,
) -> Result<Vec<i64>> {
    tree.require_tree()?;
    tree.check_vertex(base)?;
    let form = OneForm::new(tree, coloring, kind)?;
    match form.irrotationality(tree)? {
        Irrotationality::Irrotational { potential } => {
            let shift = potential[base];
            Ok(potential.into_iter().map(|p| p - shift).collect())
        }
        Irrotationality::Violated { .. } => unreachable!("forms on trees are irrotational"),
    }
}

/// `rk_t(base)` of the tournament expansion; equals `ne_t(base)`.
pub fn tournament_expansion_on_tree(
    tree: &Graph,
    coloring: &Coloring,
    kind: DynamicsKind,
    base: usize,
    t: usize,
) -> Result<i64> {
    let mut state = TournamentState::new(tree, expansion_ranking(tree, coloring, kind, base)?)?;
    for _ in 0..t {
        state = state.step();
    }
    Ok(state.ranks[base])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Error;

    #[test]
    fn tournament_examples() {
        let g = Graph::path(3);
        let s = TournamentState::new(&g, alloc::vec![0, 5, 0]).unwrap();
        assert_eq!(s.step().ranks(), &[5, 5, 5]);
        let c = TournamentState::new(&g, alloc::vec![4, 4, 4]).unwrap();
        assert_eq!(c.step(), c);
    }

    #[test]
    fn rank_is_ball_maximum() {
        let g = Graph::path(7);
        let r0 = alloc::vec![3, -1, 0, 2, 9, -4, 1];
        let mut s = TournamentState::new(&g, r0.clone()).unwrap();
        for t in 0..8usize {
            for x in 0..7usize {
                let ball = (x.saturating_sub(t)..=(x + t).min(6)).map(|y| r0[y]).max().unwrap();
                assert_eq!(s.ranks()[x], ball);
            }
            s = s.step();
        }
    }

    #[test]
    fn star_all_zero() {
        let g = Graph::star(5);
        let x = Coloring::monochromatic(3, 6, 0).unwrap();
        for t in 0..5 {
            assert_eq!(tournament_expansion_on_tree(&g, &x, DynamicsKind::Cca, 0, t), Ok(0));
        }
    }

    #[test]
    fn requires_tree() {
        let g = Graph::cycle(3);
        let x = Coloring::monochromatic(3, 3, 0).unwrap();
        assert_eq!(
            tournament_expansion_on_tree(&g, &x, DynamicsKind::Cca, 0, 1),
            Err(Error::NotATree)
        );
    }
}
