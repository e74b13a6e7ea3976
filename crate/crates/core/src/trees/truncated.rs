use alloc::vec::Vec;

use super::{draw_tree_seed, TreeFamily, MAX_SURVIVAL_ATTEMPTS};
use crate::ensembles::RngStream;
use crate::rate::ColorDensities;
use crate::{Coloring, DynamicsKind, Error, Graph, Result, Trajectory};

/// Largest truncation [`materialize_truncated_tree`] will build.
pub const MATERIALIZE_LIMIT: u64 = 1 << 24;

/// A finite truncation with vertices in BFS order; vertex 0 is the root.
#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedTree {
    pub graph: Graph,
    pub coloring: Coloring,
    pub levels: Vec<usize>,
    /// `parent[0] == 0`.
    pub parent: Vec<usize>,
}

/// Builds the truncation at `depth` with the same vertex keys, and hence the same
/// colors, as a depth-first traversal started from an identical `rng`.
pub fn materialize_truncated_tree(
    family: &TreeFamily,
    densities: &ColorDensities,
    depth: usize,
    rng: &mut RngStream,
) -> Result<TruncatedTree> {
    family.validate()?;
    for _ in 0..MAX_SURVIVAL_ATTEMPTS {
        let seed = draw_tree_seed(rng);
        let root = family.root(seed, densities);
        let mut nodes = alloc::vec![root];
        let mut levels = alloc::vec![0usize];
        let mut parent = alloc::vec![0usize];
        let mut head = 0;
        while head < nodes.len() {
            let (node, level) = (nodes[head], levels[head]);
            if level < depth {
                let children = family.child_count(&node, level);
                if nodes.len() as u64 + children > MATERIALIZE_LIMIT {
                    return Err(Error::NodeBudgetExceeded {
                        limit: MATERIALIZE_LIMIT,
                        visited: nodes.len() as u64 + children,
                        partial_level_max: Vec::new(),
                    });
                }
                for i in 0..children {
                    nodes.push(family.child(&node, level, i, densities));
                    levels.push(level + 1);
                    parent.push(head);
                }
            }
            head += 1;
        }
        if levels.last() != Some(&depth) {
            continue;
        }
        let edges: Vec<(usize, usize)> = (1..nodes.len()).map(|v| (parent[v], v)).collect();
        let graph = Graph::from_edges(nodes.len(), &edges)?;
        let coloring = Coloring::new(3, nodes.iter().map(|n| n.color).collect())?;
        return Ok(TruncatedTree { graph, coloring, levels, parent });
    }
    Err(Error::Extinct { depth, attempts: MAX_SURVIVAL_ATTEMPTS })
}

/// `ne_t(root)` for `t = 0..=t_max`, by running the dynamics on the truncation
/// at `depth`. Requires `t_max ≤ depth`: up to that time the root cannot feel the
/// cut.
pub fn simulate_on_truncated_tree(
    family: &TreeFamily,
    kind: DynamicsKind,
    densities: &ColorDensities,
    depth: usize,
    t_max: usize,
    rng: &mut RngStream,
) -> Result<Vec<u64>> {
    if t_max > depth {
        return Err(Error::LocalityViolation { t_max, depth });
    }
    let tree = materialize_truncated_tree(family, densities, depth, rng)?;
    Ok(root_excitations(&tree, kind, t_max))
}

pub(crate) fn root_excitations(tree: &TruncatedTree, kind: DynamicsKind, t_max: usize) -> Vec<u64> {
    let mut traj = Trajectory::new(&tree.graph, tree.coloring.clone(), kind).expect("coloring matches tree");
    let mut out = Vec::with_capacity(t_max + 1);
    out.push(0);
    for _ in 0..t_max {
        traj.step();
        out.push(traj.excitations()[0]);
    }
    out
}
