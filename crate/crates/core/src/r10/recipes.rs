//! Explicit firing sequences for two useful chip additions.

use super::{neighbors, FiringMove, MoveKind, R10Error, NODES};

/// An A and a B firing at every node; adds 2 real chips everywhere.
pub fn recipe_add_two_everywhere() -> Vec<FiringMove> {
    (0..NODES).flat_map(|node| [MoveKind::A, MoveKind::B].map(|kind| FiringMove { node, kind })).collect()
}

/// Adds 6 real chips at `node` and nothing elsewhere: three A and one −B at
/// the node, A and B at each neighbour, −A and B at each of the other two
/// nodes. This is column `node` of `6K̄⁻¹` read as firing counts.
pub fn recipe_add_six(node: usize) -> Result<Vec<FiringMove>, R10Error> {
    if node >= NODES {
        return Err(R10Error::InvalidNode(node));
    }
    let at = |node, kind| FiringMove { node, kind };
    let mut moves = vec![at(node, MoveKind::A); 3];
    moves.push(at(node, MoveKind::NegB));
    let adjacent = neighbors(node);
    for other in (0..NODES).filter(|&k| k != node) {
        if adjacent.contains(&other) {
            moves.extend([at(other, MoveKind::A), at(other, MoveKind::B)]);
        } else {
            moves.extend([at(other, MoveKind::NegA), at(other, MoveKind::B)]);
        }
    }
    Ok(moves)
}
